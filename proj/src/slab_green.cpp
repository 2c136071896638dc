#include "slabgreen/slab_green.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slabgreen/errors.hpp"

namespace slabgreen {
namespace {

constexpr Complex I{0.0, 1.0};

// Mirror images of right-side sources flip the one-sided derivative at x = x_S.
enum class Coincidence { right_sided, left_sided };

BranchValue branch_right_source(Region branch, double x, double xs, const WaveContext& ctx,
                                Coincidence side) {
  const double k = ctx.k();
  const double l = ctx.half_length();
  const Complex n = ctx.n();
  const auto& c = ctx.coefficients();
  const Complex pre = I / (2.0 * k);

  switch (branch) {
    case Region::left: {
      const Complex v = pre * c.A * std::exp(-I * k * (2.0 * l + x - xs));
      return {v, -I * k * v};
    }
    case Region::inside: {
      const Complex down = c.B * std::exp(-I * k * (n * x - xs));
      const Complex up = c.C * std::exp(I * k * (n * x + xs));
      return {pre * (down + up), pre * I * k * n * (up - down)};
    }
    case Region::right:
    default: {
      const Complex refl = c.D * std::exp(-I * k * (2.0 * l - x - xs));
      const Complex direct = std::exp(I * k * std::abs(x - xs));
      double sign = x > xs ? 1.0 : -1.0;
      if (x == xs) sign = side == Coincidence::right_sided ? 1.0 : -1.0;
      return {pre * (refl + direct), pre * I * k * (refl + sign * direct)};
    }
  }
}

void require_exterior_source(double xs, double l) {
  if (!(std::abs(xs) > l) || !std::isfinite(xs)) {
    throw UnsupportedSourceError("source position x_S = " + std::to_string(xs) +
                                 " must lie outside the slab (|x_S| > " + std::to_string(l) +
                                 ")");
  }
}

// Evaluates G and ∂xG for any exterior source, mapping x_S < −ℓ onto the
// right-side closed form through G(x, x_S) = G(−x, −x_S).
BranchValue evaluate(double x, double xs, const WaveContext& ctx) {
  const double l = ctx.half_length();
  require_exterior_source(xs, l);
  if (xs > l) {
    return branch_right_source(classify(x, l), x, xs, ctx, Coincidence::right_sided);
  }
  // Right-sided in x is left-sided in the mirrored coordinate.
  const auto m = branch_right_source(classify(-x, l), -x, -xs, ctx, Coincidence::left_sided);
  return {m.value, -m.derivative};
}

}  // namespace

SlabGeometry::SlabGeometry(double half_length) : half_length_(half_length) {
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw DomainError("slab half_length must be finite and > 0");
  }
}

SlabCoefficients coefficients(const SlabGeometry& geometry, const RefractiveIndex& index,
                              double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("coefficients: k must be finite and > 0");
  const Complex n = index.value();
  if (n.imag() < 0.0) throw DomainError("coefficients: Im n must be >= 0");
  const double l = geometry.half_length();

  const Complex e2 = std::exp(2.0 * I * k * n * l);
  const Complex e4 = e2 * e2;
  const Complex np1 = n + 1.0;
  const Complex nm1 = n - 1.0;

  SlabCoefficients c;
  c.Y = np1 * np1 - nm1 * nm1 * e4;
  if (std::abs(c.Y) < 1e-12 * std::norm(np1)) {
    throw NearResonanceError("slab coefficients: |Y| vanishes (lossless Fabry-Perot resonance)");
  }
  c.A = 4.0 * n * e2 / c.Y;
  c.B = 2.0 * np1 * std::exp(I * k * nm1 * l) / c.Y;
  c.C = 2.0 * nm1 * std::exp(I * k * (3.0 * n - 1.0) * l) / c.Y;
  c.D = (n * n - 1.0) * (e4 - 1.0) / c.Y;
  return c;
}

WaveContext::WaveContext(const SlabGeometry& geometry, Complex epsilon, double omega,
                         double speed_of_light)
    : geometry_(geometry),
      omega_(omega),
      c_(speed_of_light),
      k_(omega / speed_of_light),
      epsilon_(epsilon),
      n_(RefractiveIndex::from_permittivity(epsilon)),
      coeffs_{} {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be finite and > 0");
  if (!(speed_of_light > 0.0) || !std::isfinite(speed_of_light)) {
    throw DomainError("speed of light must be finite and > 0");
  }
  if (!(k_ > 0.0) || !std::isfinite(k_)) throw DomainError("k = omega/c must be finite and > 0");
  coeffs_ = slabgreen::coefficients(geometry_, n_, k_);
}

WaveContext::WaveContext(const SlabGeometry& geometry, const DielectricModel& model,
                         double omega, double speed_of_light)
    : WaveContext(geometry, permittivity(model, omega), omega, speed_of_light) {}

const char* to_string(Region r) noexcept {
  switch (r) {
    case Region::left: return "left";
    case Region::inside: return "inside";
    case Region::right: return "right";
  }
  return "?";
}

Region classify(double x, double half_length) noexcept {
  if (x < -half_length) return Region::left;
  if (x > half_length) return Region::right;
  return Region::inside;
}

BranchValue green_branch(Region branch, double x, double x_source, const WaveContext& ctx) {
  if (!(x_source > ctx.half_length())) {
    throw UnsupportedSourceError("green_branch: closed forms are derived for x_S > l only");
  }
  return branch_right_source(branch, x, x_source, ctx, Coincidence::right_sided);
}

GreenEval green(double x, double x_source, const WaveContext& ctx) {
  const double l = ctx.half_length();
  const auto v = evaluate(x, x_source, ctx);
  return {v.value, classify(x, l), classify(x_source, l)};
}

Complex green_derivative(double x, double x_source, const WaveContext& ctx) {
  return evaluate(x, x_source, ctx).derivative;
}

Complex green_vacuum_1d(double x, double x_prime, double k) {
  if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("green_vacuum_1d: k must be > 0");
  return I / (2.0 * k) * std::exp(I * k * std::abs(x - x_prime));
}

double helmholtz_residual(double x, double x_source, const WaveContext& ctx, double h) {
  if (!(h > 0.0)) throw DomainError("helmholtz_residual: h must be > 0");
  const double l = ctx.half_length();
  require_exterior_source(x_source, l);
  const double gap = std::min({std::abs(x - x_source), std::abs(x - l), std::abs(x + l)});
  if (gap < 2.0 * h) {
    throw StencilError("helmholtz_residual: stencil at x = " + std::to_string(x) +
                       " crosses a discontinuity of dG/dx");
  }
  const Complex g0 = green(x, x_source, ctx).value;
  const Complex gp = green(x + h, x_source, ctx).value;
  const Complex gm = green(x - h, x_source, ctx).value;
  const Complex eps = classify(x, l) == Region::inside ? ctx.epsilon() : Complex{1.0, 0.0};
  const double k = ctx.k();
  return std::abs((2.0 * g0 - gp - gm) / (h * h) - k * k * eps * g0);
}

double interface_mismatch(const WaveContext& ctx, double x_source) {
  const double l = ctx.half_length();
  if (!(x_source > l)) {
    throw UnsupportedSourceError("interface_mismatch: requires x_S > l");
  }
  double worst = 0.0;
  for (const auto& [x, outside] : {std::pair{l, Region::right}, std::pair{-l, Region::left}}) {
    const auto in = green_branch(Region::inside, x, x_source, ctx);
    const auto out = green_branch(outside, x, x_source, ctx);
    worst = std::max({worst, std::abs(in.value - out.value),
                      std::abs(in.derivative - out.derivative)});
  }
  return worst;
}

}  // namespace slabgreen
