#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "slabgreen/emission.hpp"
#include "slabgreen/errors.hpp"
#include "slabgreen/identity.hpp"

using namespace slabgreen;

namespace {

constexpr Complex I{0.0, 1.0};

WaveContext at(Complex eps, double l = 1.0, double omega = 1.0) {
  return WaveContext(SlabGeometry(l), eps, omega);
}

EmissionParams natural(double omega = 1.0) {
  EmissionParams p;
  p.omega0 = omega;
  return p;
}

}  // namespace

TEST_CASE("vacuum: corrected rate vanishes, uncorrected equals the 1D reference") {
  const auto ctx = at(1.0);
  const auto p = natural();
  CHECK(decay_rate_corrected(p, ctx) == 0.0);
  CHECK(decay_rate_uncorrected(p, ctx, 2.0) == gamma_vac_1d(p));
  CHECK(decay_from_quadrature(p, ctx, 2.0, 1e-8) == 0.0);
}

TEST_CASE("lossless slabs do not decay") {
  const auto p = natural();
  for (double n : {1.1, 2.0, 3.7}) {
    for (double l : {0.1, 1.0, 9.0}) {
      CHECK(std::abs(decay_rate_corrected(p, at(n * n, l))) <= 1e-12 * gamma_vac_1d(p));
    }
  }
}

TEST_CASE("lossy slab: closed form vs quadrature oracle") {
  const auto ctx = at({3.75, 2.0});
  const auto p = natural();
  const double g = decay_rate_corrected(p, ctx);
  CHECK(g > 0.0);
  // (1 − |A|² − |D|²)/2 from a 40-digit evaluation.
  CHECK(g == doctest::Approx(0.7556397440708867 / 2.0).epsilon(1e-13));
  for (double xs : {1.0, 2.0, 3.3}) {
    CHECK(std::abs(decay_from_quadrature(p, ctx, xs, 1e-10) - g) <= 1e-7 * g);
  }
}

TEST_CASE("difference between the rates is the boundary term") {
  const auto ctx = at({3.75, 2.0});
  const auto p = natural();
  const double scale = 2.0;  // 2ω₀²|d|²/(ħε₀c²S) in natural units
  for (double xs : {1.0, 2.0, 2.7}) {
    const double diff = decay_rate_uncorrected(p, ctx, xs) - decay_rate_corrected(p, ctx);
    CHECK(std::abs(diff - scale * -boundary_term_F(xs, xs, ctx).real()) <= 1e-8);
  }
}

TEST_CASE("uncorrected rate oscillates with period pi/k") {
  const double k = 1.7;
  const WaveContext ctx(SlabGeometry(1.0), Complex(3.75, 2.0), k);
  const auto p = natural(k);
  auto gg = [&](double x) { return decay_rate_uncorrected(p, ctx, x); };
  // Locate successive maxima by golden-section refinement of a grid bracket.
  std::vector<double> maxima;
  const double l = 1.0, span = 4.0 * std::numbers::pi / k, h = span / 400.0;
  for (int i = 1; i < 399; ++i) {
    const double x = l + i * h;
    if (gg(x) > gg(x - h) && gg(x) >= gg(x + h)) {
      double a = x - h, b = x + h;
      const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
      while (b - a > 1e-10) {
        const double c = b - phi * (b - a), d = a + phi * (b - a);
        if (gg(c) > gg(d)) {
          b = d;
        } else {
          a = c;
        }
      }
      maxima.push_back(0.5 * (a + b));
    }
  }
  REQUIRE(maxima.size() >= 2);
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    CHECK(maxima[i] - maxima[i - 1] == doctest::Approx(std::numbers::pi / k).epsilon(1e-6));
  }
}

TEST_CASE("report normalisation") {
  const auto ctx = at({-4.0, 0.7});
  const auto p = natural();
  const auto r = decay_report(p, ctx, 1.5, 1e-9);
  CHECK(r.gamma_vac_1d == 1.0);
  CHECK(std::abs(r.normalized_corrected - (1.0 - ctx.coefficients().power_sum()) / 2.0) <= 1e-12);
  CHECK(r.normalized_uncorrected == r.gamma_uncorrected);
  REQUIRE(r.gamma_quadrature.has_value());
  CHECK(std::abs(*r.gamma_quadrature - r.gamma_corrected) <= 1e-7 * r.gamma_corrected);
  CHECK_FALSE(decay_report(p, ctx, 1.5).gamma_quadrature.has_value());
}

TEST_CASE("position independence on a 100-point grid") {
  const auto ctx = at({3.75, 2.0});
  const auto p = natural();
  const double g0 = decay_rate_corrected(p, ctx);
  const double gq0 = decay_from_quadrature(p, ctx, 1.0, 1e-10);
  for (int i = 0; i < 100; ++i) {
    const double xs = 1.0 + 0.05 * i;
    CHECK(decay_rate_corrected(p, ctx) == g0);
    CHECK(std::abs(decay_from_quadrature(p, ctx, xs, 1e-10) - gq0) <= 1e-7 * gq0);
  }
}

TEST_CASE("oracle equivalence on a 5x5x5 grid and passivity bound") {
  const auto p = natural();
  const Complex ns[] = {{1.3, 0.01}, {2.0, 0.5}, {0.2, 2.5}, {3.5, 0.2}, {1.0, 1.0}};
  const double kls[] = {0.1, 0.5, 1.0, 3.0, 8.0};
  for (Complex n : ns) {
    for (double kl : kls) {
      const auto ctx = at(n * n, kl);
      const double g = decay_rate_corrected(p, ctx);
      CHECK(ctx.coefficients().power_sum() <= 1.0 + 1e-12);
      CHECK(g >= -1e-12 * gamma_vac_1d(p));
      for (int s = 0; s < 5; ++s) {
        const double xs = kl + 0.4 * s;
        const double tol = 1e-10;
        const double gq = decay_from_quadrature(p, ctx, xs, tol);
        CHECK(std::abs(gq - g) <= std::max(2.0 * tol, 1e-7 * g));
      }
    }
  }
}

TEST_CASE("discrepancy witness") {
  const auto ctx = at({3.75, 2.0});
  const auto p = natural();
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const double xs = 1.0 + 0.05 * i;
    worst = std::max(worst, std::abs(decay_rate_uncorrected(p, ctx, xs) -
                                     decay_rate_corrected(p, ctx)));
  }
  CHECK(worst > 0.1 * gamma_vac_1d(p));
}

TEST_CASE("small-loss scaling and limit study") {
  const auto p = natural();
  std::vector<Complex> path;
  for (int m = 1; m <= 8; ++m) path.emplace_back(1.0, std::pow(10.0, -m));
  path.emplace_back(1.0, 0.0);
  const auto rows = limit_study(p, SlabGeometry(1.0), path, 2.0);
  REQUIRE(rows.size() == path.size());
  for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
    REQUIRE_FALSE(rows[i].failure.has_value());
    const double ratio = rows[i].gamma / rows[i].epsilon.imag();
    CHECK(ratio > 0.0);
    CHECK(ratio < 2.0);
  }
  // Γ/δ → 1 at k = ℓ = 1 (40-digit reference at δ = 1e−8: 0.99999998793294557).
  CHECK(rows[7].gamma / 1e-8 == doctest::Approx(0.99999998793294557).epsilon(1e-6));
  CHECK(std::abs(rows[7].f_plus_im_g0) <= 1e-6);
  CHECK(rows[8].gamma == 0.0);
  CHECK(rows[8].gamma_g == gamma_vac_1d(p));
  CHECK(rows[8].f_plus_im_g0 == 0.0);
  CHECK(rows[8].a_squared == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rows[8].d_squared == 0.0);
}

TEST_CASE("limit study marks failing rows and keeps going") {
  const auto rows = limit_study(natural(), SlabGeometry(1.0),
                                {{2.0, 0.1}, {0.0, 0.0}, {1.0, -0.5}, {1.0, 0.01}}, 2.0);
  REQUIRE(rows.size() == 4);
  CHECK_FALSE(rows[0].failure.has_value());
  CHECK(rows[1].failure.has_value());
  CHECK(rows[2].failure.has_value());
  CHECK_FALSE(rows[3].failure.has_value());
}

TEST_CASE("SI constants scale the rates but not the normalised ones") {
  EmissionParams si;
  si.omega0 = 3.0e15;
  si.dipole = 1e-29;
  si.hbar = 1.054571817e-34;
  si.epsilon0 = 8.8541878128e-12;
  si.c = 299792458.0;
  si.surface = 1e-12;
  const double k = si.omega0 / si.c;
  const WaveContext ctx(SlabGeometry(1.0 / k), Complex(3.75, 2.0), si.omega0, si.c);
  const WaveContext ref = at({3.75, 2.0});
  const auto r = decay_report(si, ctx, 2.0 / k, 1e-8 / k);
  CHECK(r.normalized_corrected == doctest::Approx(decay_report(natural(), ref, 2.0).normalized_corrected).epsilon(1e-12));
  CHECK(*r.gamma_quadrature == doctest::Approx(r.gamma_corrected).epsilon(1e-7));
}

TEST_CASE("parameter validation") {
  const auto ctx = at({3.75, 2.0});
  EmissionParams p = natural();
  p.dipole = 0.0;
  CHECK_THROWS_AS(decay_rate_corrected(p, ctx), DomainError);
  CHECK_THROWS_AS(decay_rate_corrected(natural(2.0), ctx), DomainError);
  CHECK_THROWS_AS(decay_rate_uncorrected(natural(), ctx, 0.5), UnsupportedSourceError);
}
