#pragma once

#include <complex>
#include <cstddef>
#include <functional>

namespace slabgreen {

struct QuadratureOptions {
  double tolerance = 1e-8;         ///< absolute target on the summed error estimate
  double max_panel_width = 0.0;    ///< initial panel width cap; 0 means one panel
  std::size_t max_panels = 20000;  ///< budget before giving up
};

struct QuadratureResult {
  std::complex<double> value;
  double error_estimate = 0.0;
  std::size_t panels = 0;
};

/// Globally adaptive Gauss–Kronrod (7/15) integration of a complex-valued
/// function over [a, b]. The interval is first cut into equal panels no
/// wider than `max_panel_width`; the panel with the largest |K15 − G7| is
/// then bisected until the summed estimate drops to `tolerance`.
///
/// Throws QuadratureError carrying the best estimate when the panel budget
/// runs out, DomainError for an empty or reversed interval or tolerance ≤ 0.
QuadratureResult integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                    double a, double b, const QuadratureOptions& options);

}  // namespace slabgreen
