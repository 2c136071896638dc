#include <doctest.h>

#include <array>
#include <cmath>
#include <random>

#include "slabgreen/errors.hpp"
#include "slabgreen/identity.hpp"

using namespace slabgreen;

namespace {

constexpr Complex I{0.0, 1.0};

WaveContext lossy() { return WaveContext(SlabGeometry(1.0), Complex(3.75, 2.0), 1.0); }

// Test-only oracle: the integrand is a sum of four exponentials e^{αx}, so
// the absorption integral has a closed form independent of the quadrature.
Complex exact_lhs(double xa, double xb, const WaveContext& ctx) {
  const double k = ctx.k(), l = ctx.half_length();
  const Complex n = ctx.n(), nb = std::conj(n);
  const auto& c = ctx.coefficients();
  auto integral = [l](Complex alpha) {
    if (std::abs(alpha) < 1e-300) return Complex(2.0 * l);
    return (std::exp(alpha * l) - std::exp(-alpha * l)) / alpha;
  };
  // G_in(x,xa) = (i/2k)[B e^{ikxa} e^{−iknx} + C e^{ikxa} e^{iknx}]
  const std::array<std::pair<Complex, Complex>, 2> ga = {
      std::pair{c.B * std::exp(I * k * xa), -I * k * n},
      std::pair{c.C * std::exp(I * k * xa), I * k * n}};
  const std::array<std::pair<Complex, Complex>, 2> gb = {
      std::pair{std::conj(c.B * std::exp(I * k * xb)), I * k * nb},
      std::pair{std::conj(c.C * std::exp(I * k * xb)), -I * k * nb}};
  Complex sum{};
  for (const auto& [ca, aa] : ga) {
    for (const auto& [cb, ab] : gb) sum += ca * cb * integral(aa + ab);
  }
  return k * k * ctx.epsilon().imag() * sum / (4.0 * k * k);
}

// Test-only: b with central finite differences instead of analytic ∂x.
Complex fd_b(double xb, double xa, const WaveContext& ctx, double L) {
  const double h = 1e-5;
  auto d = [&](double x) {
    return (green(x + h, xa, ctx).value - green(x - h, xa, ctx).value) / (2.0 * h);
  };
  return std::conj(green(-L, xb, ctx).value) * d(-L) - std::conj(green(L, xb, ctx).value) * d(L);
}

}  // namespace

TEST_CASE("quadrature matches the analytic integral and high-precision reference") {
  const auto ctx = lossy();
  // 40-digit adaptive quadrature of the same integrand.
  const std::array<std::tuple<double, double, Complex>, 3> ref = {
      std::tuple{2.0, 2.0, Complex(0.18890993601772168, 0.0)},
      std::tuple{2.0, 3.0, Complex(0.10206847403177776, -0.15896222990082898)},
      std::tuple{1.5, 4.0, Complex(-0.15134398915397746, -0.11305733445106713)}};
  for (const auto& [xa, xb, expected] : ref) {
    const auto q = lhs_quadrature(xa, xb, ctx, 1e-12);
    CHECK(std::abs(q.value - expected) <= 1e-13);
    CHECK(std::abs(exact_lhs(xa, xb, ctx) - expected) <= 1e-13);
    CHECK(q.error_estimate <= 1e-12);
  }
}

TEST_CASE("initial panels resolve the in-medium wavelength") {
  const WaveContext ctx(SlabGeometry(3.0), Complex(16.0, 1.0), 2.0);
  const auto q = lhs_quadrature(4.0, 4.0, ctx, 1e-8);
  const double wavelength = 2.0 * 3.141592653589793 / (2.0 * ctx.n().real());
  CHECK(q.panels >= static_cast<std::size_t>(6.0 / (wavelength / 10.0)));
  CHECK(std::abs(q.value - exact_lhs(4.0, 4.0, ctx)) <= 1e-8);
}

TEST_CASE("vacuum identity") {
  const WaveContext vac(SlabGeometry(1.0), Complex(1.0, 0.0), 1.0);
  const auto rep = identity_report(2.0, 2.0, vac, 1e-8);
  CHECK(rep.lhs == Complex(0.0, 0.0));
  CHECK(rep.im_g == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(rep.f == Complex(-0.5, 0.0));
  CHECK(std::abs(rep.residual_corrected) <= 1e-16);
  CHECK(std::abs(boundary_term_b(2.0, 2.0, vac, 10.0) - Complex(0.0, -0.5)) <= 1e-15);
}

TEST_CASE("boundary term b: L-independence, antisymmetry and finite differences") {
  const auto ctx = lossy();
  const Complex b5 = boundary_term_b(2.0, 2.0, ctx, 5.0);
  const Complex b50 = boundary_term_b(2.0, 2.0, ctx, 50.0);
  CHECK(std::abs(b5 - b50) <= 1e-10 * std::abs(b5));

  for (auto [xa, xb] : {std::pair{2.0, 3.0}, std::pair{1.2, 6.5}, std::pair{4.0, 4.0}}) {
    const double L = 10.0;
    const Complex b_ba = boundary_term_b(xb, xa, ctx, L);
    const Complex b_ab = boundary_term_b(xa, xb, ctx, L);
    CHECK(std::abs(std::conj(b_ab) + b_ba) <= 1e-12 * std::abs(b_ba));
    // F = (1/2i)[b(x_B,x_A) − b*(x_A,x_B)]
    const Complex f = (b_ba - std::conj(b_ab)) / (2.0 * I);
    CHECK(std::abs(f - boundary_term_F(xa, xb, ctx)) <= 1e-12 * std::abs(f));
    CHECK(std::abs(fd_b(xb, xa, ctx, L) - b_ba) <= 1e-8);
  }
  CHECK_THROWS_AS(boundary_term_b(2.0, 2.0, ctx, 1.5), DomainError);
  CHECK_THROWS_AS(boundary_term_b(2.0, 0.5, ctx, 5.0), UnsupportedSourceError);
}

TEST_CASE("boundary term F closed forms") {
  const WaveContext vac(SlabGeometry(1.0), Complex(1.0, 0.0), 1.0);
  CHECK(boundary_term_F(2.0, 2.0, vac) == Complex(-0.5, 0.0));

  const auto ctx = lossy();
  const auto& c = ctx.coefficients();
  for (double xs : {1.0, 1.4, 2.0, 7.3}) {
    const Complex f = boundary_term_F(xs, xs, ctx);
    const double expected =
        -(1.0 + c.power_sum() + 2.0 * (c.D * std::exp(-2.0 * I * (1.0 - xs))).real()) / 4.0;
    CHECK(f.real() == doctest::Approx(expected).epsilon(1e-14));
    CHECK(std::abs(f.imag()) <= 1e-14);
  }
  CHECK_THROWS_AS(boundary_term_F(0.5, 2.0, ctx), UnsupportedSourceError);
}

TEST_CASE("corrected identity holds and the uncorrected one misses exactly F") {
  const auto ctx = lossy();
  const auto rep = identity_report(2.0, 2.0, ctx, 1e-8);
  CHECK(std::abs(rep.residual_corrected) <= 1e-8);
  CHECK(std::abs(rep.residual_uncorrected - rep.f) <= 1e-8);
  CHECK(std::abs(rep.f) >= 0.1);
  CHECK(rep.quadrature_estimate_error <= 1e-8);
}

TEST_CASE("sweep of 20 point pairs keeps the corrected residual under tol") {
  const auto ctx = lossy();
  const double tol = 1e-8;
  for (int i = 0; i < 20; ++i) {
    const double xa = 1.0 + 0.37 * i, xb = 1.0 + 0.21 * (19 - i);
    const auto rep = identity_report(xa, xb, ctx, tol);
    CHECK(std::abs(rep.residual_corrected) <= identity_bound(rep, tol));
  }
}

TEST_CASE("property: corrected identity across models, frequencies and sizes") {
  const DielectricModel models[] = {
      DielectricModel::constant({2.0, 0.01}),
      DrudePermittivity{2.0, 0.1},
      DrudeLorentzPermittivity{{{1.0, 0.0, 0.05}, {3.0, 1.5, 0.2}}},
      TabulatedPermittivity{{{0.2, {2.0, 0.5}}, {4.0, {-5.0, 1.0}}}},
  };
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> w(0.3, 3.0), l(0.2, 4.0), off(0.0, 5.0);
  const double tol = 1e-8;
  for (const auto& m : models) {
    for (int i = 0; i < 15; ++i) {
      const WaveContext ctx(SlabGeometry(l(rng)), m, w(rng));
      const double xa = ctx.half_length() + off(rng), xb = ctx.half_length() + off(rng);
      const auto rep = identity_report(xa, xb, ctx, tol);
      CHECK(std::abs(rep.residual_corrected) <= identity_bound(rep, tol));
      CHECK(std::abs(rep.residual_uncorrected - rep.f) <= identity_bound(rep, tol));
    }
  }
}

TEST_CASE("no-coupling limit of F") {
  const WaveContext ctx(SlabGeometry(1.0), Complex(1.0, 1e-8), 1.0);
  for (double xs : {1.0, 2.0, 5.5}) {
    CHECK(std::abs(boundary_term_F(xs, xs, ctx) + 0.5) <= 1e-6);
  }
}

TEST_CASE("lhs_quadrature preconditions") {
  const auto ctx = lossy();
  CHECK_THROWS_AS(lhs_quadrature(0.2, 2.0, ctx, 1e-8), UnsupportedSourceError);
  CHECK_THROWS_AS(lhs_quadrature(2.0, 2.0, ctx, 0.0), DomainError);
}
