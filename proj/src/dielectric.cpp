#include "slabgreen/dielectric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "slabgreen/errors.hpp"

namespace slabgreen {
namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require(bool ok, const std::string& what) {
  if (!ok) throw DomainError(what);
}

void validate(const ConstantPermittivity& m) {
  require(finite(m.epsilon), "constant permittivity must be finite");
  require(m.epsilon.imag() >= 0.0, "constant permittivity must be passive (Im eps >= 0)");
}

void validate(const DrudePermittivity& m) {
  require(std::isfinite(m.plasma_frequency) && m.plasma_frequency >= 0.0,
          "drude plasma_frequency must be finite and >= 0");
  require(std::isfinite(m.damping) && m.damping >= 0.0,
          "drude damping must be finite and >= 0");
}

void validate(const DrudeLorentzPermittivity& m) {
  for (const auto& t : m.terms) {
    require(std::isfinite(t.strength) && t.strength >= 0.0,
            "drude_lorentz strength must be finite and >= 0");
    require(std::isfinite(t.resonance) && t.resonance >= 0.0,
            "drude_lorentz resonance must be finite and >= 0");
    require(std::isfinite(t.damping) && t.damping >= 0.0,
            "drude_lorentz damping must be finite and >= 0");
  }
}

void validate(const TabulatedPermittivity& m) {
  if (m.samples.size() < 2) throw DomainError("tabulated permittivity needs at least 2 samples");
  for (std::size_t i = 0; i < m.samples.size(); ++i) {
    const auto& s = m.samples[i];
    require(std::isfinite(s.omega) && s.omega > 0.0, "tabulated omega must be finite and > 0");
    require(finite(s.epsilon), "tabulated permittivity must be finite");
    require(s.epsilon.imag() >= 0.0, "tabulated permittivity must be passive (Im eps >= 0)");
    if (i > 0 && !(s.omega > m.samples[i - 1].omega)) {
      throw DomainError("tabulated omega must be strictly increasing");
    }
  }
}

Complex evaluate(const ConstantPermittivity& m, double) { return m.epsilon; }

Complex evaluate(const DrudePermittivity& m, double w) {
  const double wp2 = m.plasma_frequency * m.plasma_frequency;
  return 1.0 - wp2 / Complex(w * w, m.damping * w);
}

Complex evaluate(const DrudeLorentzPermittivity& m, double w) {
  Complex eps{1.0, 0.0};
  for (const auto& t : m.terms) {
    eps += t.strength / Complex(t.resonance * t.resonance - w * w, -t.damping * w);
  }
  return eps;
}

Complex evaluate(const TabulatedPermittivity& m, double w) {
  const auto& s = m.samples;
  if (w < s.front().omega || w > s.back().omega) {
    throw RangeError("omega = " + std::to_string(w) + " outside tabulated range [" +
                     std::to_string(s.front().omega) + ", " + std::to_string(s.back().omega) +
                     "]");
  }
  auto hi = std::lower_bound(s.begin(), s.end(), w,
                             [](const PermittivitySample& p, double v) { return p.omega < v; });
  if (hi == s.begin()) return hi->epsilon;
  auto lo = hi - 1;
  const double t = (w - lo->omega) / (hi->omega - lo->omega);
  return {lo->epsilon.real() + t * (hi->epsilon.real() - lo->epsilon.real()),
          lo->epsilon.imag() + t * (hi->epsilon.imag() - lo->epsilon.imag())};
}

}  // namespace

DielectricModel::DielectricModel(ConstantPermittivity m) : model_(std::move(m)) {
  validate(std::get<ConstantPermittivity>(model_));
}
DielectricModel::DielectricModel(DrudePermittivity m) : model_(std::move(m)) {
  validate(std::get<DrudePermittivity>(model_));
}
DielectricModel::DielectricModel(DrudeLorentzPermittivity m) : model_(std::move(m)) {
  validate(std::get<DrudeLorentzPermittivity>(model_));
}
DielectricModel::DielectricModel(TabulatedPermittivity m) : model_(std::move(m)) {
  validate(std::get<TabulatedPermittivity>(model_));
}

Complex permittivity(const DielectricModel& model, double omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw DomainError("permittivity: omega must be finite and > 0");
  }
  return std::visit([omega](const auto& m) { return evaluate(m, omega); }, model.variant());
}

RefractiveIndex RefractiveIndex::from_permittivity(Complex epsilon) {
  if (epsilon == Complex{0.0, 0.0}) {
    throw DegenerateMediumError("refractive index undefined for eps = 0");
  }
  Complex n = std::sqrt(epsilon);
  if (n.imag() < 0.0 || (n.imag() == 0.0 && n.real() < 0.0)) n = -n;
  // Normalise signed zeros left over from the branch flip.
  return RefractiveIndex{Complex{n.real() + 0.0, n.imag() + 0.0}};
}

}  // namespace slabgreen
