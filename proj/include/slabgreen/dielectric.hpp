#pragma once

#include <complex>
#include <utility>
#include <variant>
#include <vector>

namespace slabgreen {

using Complex = std::complex<double>;

/// Frequency-independent permittivity.
struct ConstantPermittivity {
  Complex epsilon{1.0, 0.0};
};

/// Free-electron response ε(ω) = 1 − ωp²/(ω² + iγω).
struct DrudePermittivity {
  double plasma_frequency = 0.0;  ///< ωp, rad/s
  double damping = 0.0;           ///< γ, rad/s
};

/// One Lorentz oscillator contributing strength/(resonance² − ω² − iγω).
///
/// `strength` carries units of rad²/s² (an oscillator plasma frequency
/// squared). A term with zero resonance is a Drude term.
struct LorentzTerm {
  double strength = 0.0;
  double resonance = 0.0;
  double damping = 0.0;
};

/// ε(ω) = 1 + Σ_j strength_j / (resonance_j² − ω² − iγ_j ω).
struct DrudeLorentzPermittivity {
  std::vector<LorentzTerm> terms;
};

struct PermittivitySample {
  double omega = 0.0;
  Complex epsilon;
};

/// Sampled ε(ω), linearly interpolated on real and imaginary parts.
/// No extrapolation outside [front().omega, back().omega].
struct TabulatedPermittivity {
  std::vector<PermittivitySample> samples;
};

/// Complex permittivity of the slab material. The e^{−iωt} convention is
/// used throughout, so absorption means Im ε > 0.
///
/// Construction validates the parameters; every model that passes
/// validation is passive (Im ε(ω) ≥ 0 for ω > 0).
class DielectricModel {
 public:
  using Variant = std::variant<ConstantPermittivity, DrudePermittivity,
                               DrudeLorentzPermittivity, TabulatedPermittivity>;

  DielectricModel() = default;
  DielectricModel(ConstantPermittivity m);
  DielectricModel(DrudePermittivity m);
  DielectricModel(DrudeLorentzPermittivity m);
  DielectricModel(TabulatedPermittivity m);

  static DielectricModel vacuum() { return DielectricModel{}; }
  static DielectricModel constant(Complex epsilon) {
    return DielectricModel{ConstantPermittivity{epsilon}};
  }

  const Variant& variant() const noexcept { return model_; }

 private:
  Variant model_{ConstantPermittivity{}};
};

/// ε(ω). Throws DomainError for ω ≤ 0 and RangeError when a tabulated
/// model is queried outside its samples.
Complex permittivity(const DielectricModel& model, double omega);

/// n with n² = ε on the branch Im n ≥ 0 (Re n ≥ 0 when Im n = 0), so that
/// e^{iknx} never grows into a passive medium.
class RefractiveIndex {
 public:
  /// Throws DegenerateMediumError for ε = 0.
  static RefractiveIndex from_permittivity(Complex epsilon);

  Complex value() const noexcept { return n_; }
  Complex squared() const noexcept { return n_ * n_; }

 private:
  explicit RefractiveIndex(Complex n) : n_(n) {}
  Complex n_;
};

inline RefractiveIndex refractive_index(Complex epsilon) {
  return RefractiveIndex::from_permittivity(epsilon);
}

}  // namespace slabgreen
