#pragma once

#include <complex>

#include "slabgreen/quadrature.hpp"
#include "slabgreen/slab_green.hpp"

namespace slabgreen {

/// Both sides of the 1D Green identity for a lossy slab,
///
///   k² ∫ ε_i G(x, x_A) G*(x, x_B) dx = Im G(x_A, x_B) + F(x_A, x_B),
///
/// with the integral restricted to [−ℓ, ℓ] where ε_i ≠ 0.
struct IdentityReport {
  Complex lhs;                     ///< quadrature of the absorption integral
  double im_g = 0.0;               ///< Im G(x_A, x_B)
  Complex f;                       ///< boundary term F(x_A, x_B), closed form
  Complex residual_corrected;      ///< lhs − im_g − f
  Complex residual_uncorrected;    ///< lhs − im_g
  double quadrature_estimate_error = 0.0;
};

/// b(x_B, x_A) = G*(x,x_B)∂xG(x,x_A)|_{x=−L} − G*(x,x_B)∂xG(x,x_A)|_{x=L},
/// evaluated with the left and right branches and analytic derivatives.
/// Both points must lie right of the slab; throws DomainError unless
/// L > max(ℓ, x_A, x_B).
Complex boundary_term_b(double x_B, double x_A, const WaveContext& ctx, double L);

/// Closed-form boundary term
///
///   F = −(1/4k)[(|A|²+|D|²) e^{ik(x_A−x_B)} + e^{−ik(x_A−x_B)}
///               + 2 Re{D e^{−ik(2ℓ−x_A−x_B)}}],
///
/// real when x_A = x_B. Requires x_A, x_B ≥ ℓ.
Complex boundary_term_F(double x_A, double x_B, const WaveContext& ctx);

/// Adaptive quadrature of the left-hand side over [−ℓ, ℓ]. Initial panels
/// are at most a tenth of the in-medium wavelength wide.
QuadratureResult lhs_quadrature(double x_A, double x_B, const WaveContext& ctx, double tol);

IdentityReport identity_report(double x_A, double x_B, const WaveContext& ctx, double tol);

/// Acceptance bound on the corrected residual: max(tol, 1e−10·|lhs|).
double identity_bound(const IdentityReport& report, double tol);

}  // namespace slabgreen
