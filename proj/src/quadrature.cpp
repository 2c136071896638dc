#include "slabgreen/quadrature.hpp"

#include <array>
#include <cmath>
#include <queue>
#include <vector>

#include "slabgreen/errors.hpp"

namespace slabgreen {
namespace {

using Complex = std::complex<double>;

// Kronrod 15-point abscissae on [0, 1] (symmetric), with the 7-point Gauss
// weights on the odd-indexed nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  Complex value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gauss_kronrod(const std::function<Complex(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = f(center);
  Complex kronrod = fc * kWgk[7];
  Complex gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Complex s = f(center - dx) + f(center + dx);
    kronrod += kWgk[j] * s;
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<Complex(double)>& f, double a,
                                    double b, const QuadratureOptions& options) {
  if (!(b > a) || !std::isfinite(a) || !std::isfinite(b)) {
    throw DomainError("integrate_adaptive: need finite a < b");
  }
  if (!(options.tolerance > 0.0)) throw DomainError("integrate_adaptive: tolerance must be > 0");

  std::size_t initial = 1;
  if (options.max_panel_width > 0.0) {
    initial = static_cast<std::size_t>(std::ceil((b - a) / options.max_panel_width));
  }
  initial = std::max<std::size_t>(initial, 1);
  if (initial > options.max_panels) {
    throw QuadratureError("integrate_adaptive: initial panelling exceeds the panel budget", {},
                          INFINITY);
  }

  std::priority_queue<Panel> panels;
  Complex total{};
  double error = 0.0;
  const double width = (b - a) / static_cast<double>(initial);
  for (std::size_t i = 0; i < initial; ++i) {
    const double lo = a + width * static_cast<double>(i);
    const double hi = i + 1 == initial ? b : lo + width;
    Panel p = gauss_kronrod(f, lo, hi);
    total += p.value;
    error += p.error;
    panels.push(p);
  }

  auto exact_sum = [&panels] {
    auto copy = panels;
    QuadratureResult r;
    r.panels = copy.size();
    while (!copy.empty()) {
      r.value += copy.top().value;
      r.error_estimate += copy.top().error;
      copy.pop();
    }
    return r;
  };

  for (;;) {
    if (error <= options.tolerance) {
      // Re-sum to shed the drift of incremental updates.
      QuadratureResult r = exact_sum();
      if (r.error_estimate <= options.tolerance) return r;
      total = r.value;
      error = r.error_estimate;
    }
    if (panels.size() >= options.max_panels) {
      throw QuadratureError("integrate_adaptive: panel budget exhausted before reaching tolerance",
                            total, error);
    }
    Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = gauss_kronrod(f, worst.a, mid);
    Panel right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
}

}  // namespace slabgreen
