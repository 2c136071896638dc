#pragma once

#include <complex>

#include "slabgreen/dielectric.hpp"

namespace slabgreen {

/// Homogeneous slab occupying [−ℓ, ℓ].
class SlabGeometry {
 public:
  /// Throws DomainError unless ℓ is finite and > 0.
  explicit SlabGeometry(double half_length);

  double half_length() const noexcept { return half_length_; }

 private:
  double half_length_;
};

/// Fabry–Pérot amplitudes of the slab for a source on its right.
///
///   Y = (n+1)² − (n−1)² e^{4iknℓ}
///   A = 4n e^{2iknℓ} / Y              transmitted to the left
///   B = 2(n+1) e^{ik(n−1)ℓ} / Y       left-going inside
///   C = 2(n−1) e^{ik(3n−1)ℓ} / Y      right-going inside
///   D = (n²−1)(e^{4iknℓ} − 1) / Y     reflected back to the right
struct SlabCoefficients {
  Complex A, B, C, D, Y;

  /// |A|² + |D|²; equals 1 for a lossless slab and is < 1 with absorption.
  double power_sum() const noexcept { return std::norm(A) + std::norm(D); }
};

/// Throws DomainError for k ≤ 0 or Im n < 0, NearResonanceError when
/// |Y| < 1e−12·|n+1|².
SlabCoefficients coefficients(const SlabGeometry& geometry, const RefractiveIndex& n, double k);

/// One (geometry, material, frequency) evaluation point. k = ω/c with the
/// speed of light in the caller's unit system (c = 1 in natural units).
class WaveContext {
 public:
  WaveContext(const SlabGeometry& geometry, Complex epsilon, double omega,
              double speed_of_light = 1.0);
  WaveContext(const SlabGeometry& geometry, const DielectricModel& model, double omega,
              double speed_of_light = 1.0);

  const SlabGeometry& geometry() const noexcept { return geometry_; }
  double half_length() const noexcept { return geometry_.half_length(); }
  double omega() const noexcept { return omega_; }
  double speed_of_light() const noexcept { return c_; }
  double k() const noexcept { return k_; }
  Complex epsilon() const noexcept { return epsilon_; }
  const RefractiveIndex& index() const noexcept { return n_; }
  Complex n() const noexcept { return n_.value(); }
  const SlabCoefficients& coefficients() const noexcept { return coeffs_; }

 private:
  SlabGeometry geometry_;
  double omega_;
  double c_;
  double k_;
  Complex epsilon_;
  RefractiveIndex n_;
  SlabCoefficients coeffs_;
};

enum class Region { left, inside, right };

const char* to_string(Region r) noexcept;

/// Region of an observer: x < −ℓ left, |x| ≤ ℓ inside, x > ℓ right.
Region classify(double x, double half_length) noexcept;

struct GreenEval {
  Complex value;
  Region observer_region;
  Region source_region;
};

/// Value and ∂x of one analytic branch of G(·, x_S).
struct BranchValue {
  Complex value;
  Complex derivative;
};

/// Evaluates the closed form of one region's branch at x, for x_S > ℓ,
/// regardless of which region x actually lies in. Used to check interface
/// continuity and to evaluate boundary terms.
BranchValue green_branch(Region branch, double x, double x_source, const WaveContext& ctx);

/// G(x, x_S) solving [−∂x² − k²ε(x)] G = δ(x − x_S) with outgoing waves at
/// ±∞. Sources left of the slab are handled by mirror symmetry.
/// Throws UnsupportedSourceError when |x_S| ≤ ℓ.
GreenEval green(double x, double x_source, const WaveContext& ctx);

/// ∂x G(x, x_S). At x = x_S the right-sided derivative is returned.
Complex green_derivative(double x, double x_source, const WaveContext& ctx);

/// (i/2k) e^{ik|x−x'|}.
Complex green_vacuum_1d(double x, double x_prime, double k);

/// |(−G(x+h) − G(x−h) + 2G(x))/h² − k²ε(x)G(x)|.
/// Throws StencilError when x lies within 2h of x_S or of ±ℓ.
double helmholtz_residual(double x, double x_source, const WaveContext& ctx, double h);

/// Largest violation of continuity of G and ∂xG at x = ±ℓ, for x_S > ℓ.
double interface_mismatch(const WaveContext& ctx, double x_source);

}  // namespace slabgreen
