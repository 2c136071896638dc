#pragma once

#include <optional>
#include <string>
#include <vector>

#include "slabgreen/slab_green.hpp"

namespace slabgreen {

/// Two-level dipole emitter and the physical constants that scale its
/// rates. Defaults are natural units (ħ = ε₀ = c = 1, S = 1).
struct EmissionParams {
  double omega0 = 1.0;        ///< transition frequency, rad/s
  double dipole = 1.0;        ///< |d|
  double hbar = 1.0;
  double epsilon0 = 1.0;
  double c = 1.0;
  double surface = 1.0;       ///< 1D surface unit S

  /// Throws DomainError unless every field is finite and > 0.
  void validate() const;
};

/// ω₀|d|²/(ħε₀cS), the 1D vacuum reference rate.
double gamma_vac_1d(const EmissionParams& params);

/// Boundary-corrected rate Γ = (ω₀|d|²/(2ħε₀cS))·[1 − |A|² − |D|²].
/// Independent of the emitter position outside the slab.
double decay_rate_corrected(const EmissionParams& params, const WaveContext& ctx);

/// Rate without the boundary term, Γ_G = (ω₀|d|²/(ħε₀cS))·[1 + Re{D e^{−2ik(ℓ−x_S)}}].
/// Requires x_S ≥ ℓ.
double decay_rate_uncorrected(const EmissionParams& params, const WaveContext& ctx,
                              double x_source);

/// Γ from the quadrature of the absorption integral at x_A = x_B = x_S,
/// scaled by 2ω₀²|d|²/(ħε₀c²S). Independent of the closed forms.
double decay_from_quadrature(const EmissionParams& params, const WaveContext& ctx,
                             double x_source, double tol);

struct DecayRateReport {
  double gamma_corrected = 0.0;
  double gamma_uncorrected = 0.0;
  std::optional<double> gamma_quadrature;
  double gamma_vac_1d = 0.0;
  double normalized_corrected = 0.0;
  double normalized_uncorrected = 0.0;
};

/// All rates at x_S; the quadrature oracle runs only when `oracle_tol` is set.
DecayRateReport decay_report(const EmissionParams& params, const WaveContext& ctx,
                             double x_source, std::optional<double> oracle_tol = {});

struct LimitRow {
  Complex epsilon;
  double gamma = 0.0;
  double gamma_g = 0.0;
  double f_plus_im_g0 = 0.0;   ///< F(x_S, x_S) + Im G₀(x_S, x_S)
  double a_squared = 0.0;
  double d_squared = 0.0;
  std::optional<std::string> failure;  ///< set when the row could not be evaluated
};

/// Walks ε along `path` (typically towards 1) at the emitter frequency and
/// position x_S ≥ ℓ. A failing row is marked and the walk continues.
std::vector<LimitRow> limit_study(const EmissionParams& params, const SlabGeometry& geometry,
                                  const std::vector<Complex>& path, double x_source);

}  // namespace slabgreen
