#include "slabgreen/vacuum3d.hpp"

#include <cmath>
#include <numbers>

#include "slabgreen/errors.hpp"

namespace slabgreen {
namespace {

constexpr std::complex<double> I{0.0, 1.0};
constexpr double kPi = std::numbers::pi;

double separation(const Vec3& r_a, const Vec3& r_b) {
  const double r = (r_a - r_b).norm();
  if (!(r > 0.0)) throw SingularityError("free-space Green function is singular at r_A = r_B");
  return r;
}

void require_frequency(double omega, double c) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("omega must be finite and > 0");
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("c must be finite and > 0");
}

}  // namespace

std::complex<double> scalar_green_g0(double omega, const Vec3& r_a, const Vec3& r_b, double c) {
  if (!(omega >= 0.0) || !std::isfinite(omega)) throw DomainError("omega must be finite and >= 0");
  if (!(c > 0.0)) throw DomainError("c must be > 0");
  const double r = separation(r_a, r_b);
  return std::exp(I * (omega / c) * r) / (4.0 * kPi * r);
}

DyadicGreen green_tensor_vacuum(double omega, const Vec3& r_a, const Vec3& r_b, double c) {
  require_frequency(omega, c);
  const Vec3 d = r_a - r_b;
  const double r = separation(r_a, r_b);
  const double k = omega / c;
  const std::complex<double> g = scalar_green_g0(omega, r_a, r_b, c);

  // g(r) radial derivatives.
  const std::complex<double> q = I * k - 1.0 / r;
  const std::complex<double> g1 = g * q;
  const std::complex<double> g2 = g * (q * q + 1.0 / (r * r));

  DyadicGreen out;
  out.omega = omega;
  out.r_a = r_a;
  out.r_b = r_b;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double delta = i == j ? 1.0 : 0.0;
      const double xx = d[i] * d[j] / (r * r);
      const std::complex<double> hessian = g1 * (delta - xx) / r + g2 * xx;
      out.components(i, j) = delta * g + hessian / (k * k);
    }
  }
  return out;
}

Eigen::Matrix3d im_green_coincident(double omega, double c) {
  require_frequency(omega, c);
  return (omega / (6.0 * kPi * c)) * Eigen::Matrix3d::Identity();
}

double vacuum_decay_3d(const EmissionParams& p) {
  p.validate();
  return std::pow(p.omega0, 3) * p.dipole * p.dipole /
         (3.0 * kPi * p.hbar * p.epsilon0 * std::pow(p.c, 3));
}

double vacuum_decay_3d_from_green(const EmissionParams& p, const Vec3& direction) {
  p.validate();
  const double norm = direction.norm();
  if (!(norm > 0.0)) throw DomainError("dipole direction must be nonzero");
  const Vec3 d = p.dipole * direction / norm;
  const double contraction = d.dot(im_green_coincident(p.omega0, p.c) * d);
  return 2.0 * p.omega0 * p.omega0 / (p.hbar * p.epsilon0 * p.c * p.c) * contraction;
}

}  // namespace slabgreen
