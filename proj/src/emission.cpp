#include "slabgreen/emission.hpp"

#include <cmath>
#include <string>

#include "slabgreen/errors.hpp"
#include "slabgreen/identity.hpp"

namespace slabgreen {
namespace {

constexpr Complex I{0.0, 1.0};

void require_matching(const EmissionParams& p, const WaveContext& ctx) {
  p.validate();
  const auto close = [](double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(b); };
  if (!close(p.omega0, ctx.omega()) || !close(p.c, ctx.speed_of_light())) {
    throw DomainError("emission parameters (omega0, c) do not match the wave context");
  }
}

}  // namespace

void EmissionParams::validate() const {
  for (double v : {omega0, dipole, hbar, epsilon0, c, surface}) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("emission parameters must all be finite and > 0");
    }
  }
}

double gamma_vac_1d(const EmissionParams& p) {
  p.validate();
  return p.omega0 * p.dipole * p.dipole / (p.hbar * p.epsilon0 * p.c * p.surface);
}

double decay_rate_corrected(const EmissionParams& params, const WaveContext& ctx) {
  require_matching(params, ctx);
  return 0.5 * gamma_vac_1d(params) * (1.0 - ctx.coefficients().power_sum());
}

double decay_rate_uncorrected(const EmissionParams& params, const WaveContext& ctx,
                              double x_source) {
  require_matching(params, ctx);
  const double l = ctx.half_length();
  if (!(x_source >= l) || !std::isfinite(x_source)) {
    throw UnsupportedSourceError("decay_rate_uncorrected: x_S must lie right of the slab");
  }
  const Complex D = ctx.coefficients().D;
  const double oscillation = (D * std::exp(-2.0 * I * ctx.k() * (l - x_source))).real();
  return gamma_vac_1d(params) * (1.0 + oscillation);
}

double decay_from_quadrature(const EmissionParams& params, const WaveContext& ctx,
                             double x_source, double tol) {
  require_matching(params, ctx);
  const auto q = lhs_quadrature(x_source, x_source, ctx, tol);
  const double scale = 2.0 * params.omega0 * params.omega0 * params.dipole * params.dipole /
                       (params.hbar * params.epsilon0 * params.c * params.c * params.surface);
  return scale * q.value.real();
}

DecayRateReport decay_report(const EmissionParams& params, const WaveContext& ctx,
                             double x_source, std::optional<double> oracle_tol) {
  DecayRateReport r;
  r.gamma_vac_1d = gamma_vac_1d(params);
  r.gamma_corrected = decay_rate_corrected(params, ctx);
  r.gamma_uncorrected = decay_rate_uncorrected(params, ctx, x_source);
  if (oracle_tol) r.gamma_quadrature = decay_from_quadrature(params, ctx, x_source, *oracle_tol);
  r.normalized_corrected = r.gamma_corrected / r.gamma_vac_1d;
  r.normalized_uncorrected = r.gamma_uncorrected / r.gamma_vac_1d;
  return r;
}

std::vector<LimitRow> limit_study(const EmissionParams& params, const SlabGeometry& geometry,
                                  const std::vector<Complex>& path, double x_source) {
  params.validate();
  std::vector<LimitRow> rows;
  rows.reserve(path.size());
  for (const Complex eps : path) {
    LimitRow row;
    row.epsilon = eps;
    try {
      if (eps.imag() < 0.0) throw DomainError("limit_study: path entries must have Im eps >= 0");
      const WaveContext ctx(geometry, eps, params.omega0, params.c);
      row.gamma = decay_rate_corrected(params, ctx);
      row.gamma_g = decay_rate_uncorrected(params, ctx, x_source);
      row.f_plus_im_g0 = boundary_term_F(x_source, x_source, ctx).real() + 1.0 / (2.0 * ctx.k());
      row.a_squared = std::norm(ctx.coefficients().A);
      row.d_squared = std::norm(ctx.coefficients().D);
    } catch (const Error& e) {
      row.failure = e.what();
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace slabgreen
