#include "slabgreen/identity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "slabgreen/errors.hpp"

namespace slabgreen {
namespace {

constexpr Complex I{0.0, 1.0};

void require_right(double x, double l, const char* what) {
  if (!(x >= l) || !std::isfinite(x)) {
    throw UnsupportedSourceError(std::string(what) + " must lie right of the slab (x >= l)");
  }
}

}  // namespace

Complex boundary_term_b(double x_B, double x_A, const WaveContext& ctx, double L) {
  const double l = ctx.half_length();
  if (!(x_A > l) || !(x_B > l)) {
    throw UnsupportedSourceError("boundary_term_b: x_A and x_B must satisfy x > l");
  }
  if (!(L > std::max({l, x_A, x_B})) || !std::isfinite(L)) {
    throw DomainError("boundary_term_b: L must exceed max(l, x_A, x_B)");
  }
  const auto left_B = green_branch(Region::left, -L, x_B, ctx);
  const auto left_A = green_branch(Region::left, -L, x_A, ctx);
  const auto right_B = green_branch(Region::right, L, x_B, ctx);
  const auto right_A = green_branch(Region::right, L, x_A, ctx);
  return std::conj(left_B.value) * left_A.derivative -
         std::conj(right_B.value) * right_A.derivative;
}

Complex boundary_term_F(double x_A, double x_B, const WaveContext& ctx) {
  const double l = ctx.half_length();
  require_right(x_A, l, "boundary_term_F: x_A");
  require_right(x_B, l, "boundary_term_F: x_B");
  const double k = ctx.k();
  const auto& c = ctx.coefficients();
  const double reflected = (c.D * std::exp(-I * k * (2.0 * l - x_A - x_B))).real();
  if (x_A == x_B) {
    return {-(1.0 + c.power_sum() + 2.0 * reflected) / (4.0 * k), 0.0};
  }
  const Complex phase = std::exp(I * k * (x_A - x_B));
  return -(c.power_sum() * phase + std::conj(phase) + 2.0 * reflected) / (4.0 * k);
}

QuadratureResult lhs_quadrature(double x_A, double x_B, const WaveContext& ctx, double tol) {
  const double l = ctx.half_length();
  require_right(x_A, l, "lhs_quadrature: x_A");
  require_right(x_B, l, "lhs_quadrature: x_B");
  if (!(tol > 0.0)) throw DomainError("lhs_quadrature: tol must be > 0");

  const double k = ctx.k();
  const double eps_i = ctx.epsilon().imag();
  if (eps_i == 0.0) return {};

  // The closed forms are continuous at x_S = l, so a source on the surface
  // is evaluated as the limit from the right.
  const double xa = x_A > l ? x_A : std::nextafter(l, INFINITY);
  const double xb = x_B > l ? x_B : std::nextafter(l, INFINITY);
  auto integrand = [&](double x) {
    const Complex ga = green_branch(Region::inside, x, xa, ctx).value;
    const Complex gb = green_branch(Region::inside, x, xb, ctx).value;
    return k * k * eps_i * ga * std::conj(gb);
  };

  QuadratureOptions opts;
  opts.tolerance = tol;
  const double wavelength = 2.0 * std::numbers::pi / (k * std::abs(ctx.n()));
  opts.max_panel_width = wavelength / 10.0;
  return integrate_adaptive(integrand, -l, l, opts);
}

IdentityReport identity_report(double x_A, double x_B, const WaveContext& ctx, double tol) {
  IdentityReport r;
  const auto q = lhs_quadrature(x_A, x_B, ctx, tol);
  r.lhs = q.value;
  r.quadrature_estimate_error = q.error_estimate;
  const double l = ctx.half_length();
  const double xa = x_A > l ? x_A : std::nextafter(l, INFINITY);
  const double xb = x_B > l ? x_B : std::nextafter(l, INFINITY);
  r.im_g = green(xa, xb, ctx).value.imag();
  r.f = boundary_term_F(x_A, x_B, ctx);
  r.residual_uncorrected = r.lhs - r.im_g;
  r.residual_corrected = r.residual_uncorrected - r.f;
  return r;
}

double identity_bound(const IdentityReport& report, double tol) {
  return std::max(tol, 1e-10 * std::abs(report.lhs));
}

}  // namespace slabgreen
