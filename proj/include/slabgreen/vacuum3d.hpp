#pragma once

#include <complex>

#include <Eigen/Dense>

#include "slabgreen/emission.hpp"

namespace slabgreen {

using Vec3 = Eigen::Vector3d;

/// Free-space dyadic Green tensor G̅₀(ω, r_A, r_B), units 1/length.
struct DyadicGreen {
  Eigen::Matrix3cd components;
  double omega = 0.0;
  Vec3 r_a;
  Vec3 r_b;
};

/// g₀ = e^{i(ω/c)|r_A−r_B|} / (4π|r_A−r_B|). ω = 0 gives the static
/// Coulomb kernel. Throws SingularityError at coincident points.
std::complex<double> scalar_green_g0(double omega, const Vec3& r_a, const Vec3& r_b,
                                     double c = 1.0);

/// G̅₀ = (𝟙 + (c²/ω²) ∇∇) g₀ with r = r_A − r_B, using analytic second
/// derivatives of g₀. The real part diverges at r_A = r_B, so coincident
/// points throw SingularityError; use im_green_coincident there.
DyadicGreen green_tensor_vacuum(double omega, const Vec3& r_a, const Vec3& r_b,
                                double c = 1.0);

/// lim_{r_B→r_A} Im G̅₀ = (ω/(6πc)) 𝟙.
Eigen::Matrix3d im_green_coincident(double omega, double c = 1.0);

/// Γ₀ = ω₀³|d|²/(3πħε₀c³).
double vacuum_decay_3d(const EmissionParams& params);

/// Γ₀ through the golden-rule contraction (2ω₀²/(ħε₀c²)) d·Im G̅₀·d with
/// d = |d|·direction. `direction` is normalised internally.
double vacuum_decay_3d_from_green(const EmissionParams& params,
                                  const Vec3& direction = Vec3::UnitZ());

}  // namespace slabgreen
