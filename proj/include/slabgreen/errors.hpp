#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace slabgreen {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation (ω ≤ 0, k ≤ 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Tabulated data queried outside its sample range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// ε = 0: the refractive index is undefined.
class DegenerateMediumError : public Error {
 public:
  using Error::Error;
};

/// |Y| vanishes: the slab coefficients are undefined (lossless resonance).
class NearResonanceError : public Error {
 public:
  using Error::Error;
};

/// Source placed inside the slab, where no closed form is available.
class UnsupportedSourceError : public Error {
 public:
  using Error::Error;
};

/// A finite-difference stencil would straddle a kink or an interface.
class StencilError : public Error {
 public:
  using Error::Error;
};

/// Coincident points for a quantity whose real part diverges there.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of panels before reaching the tolerance.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, std::complex<double> best_estimate,
                  double error_estimate)
      : Error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  std::complex<double> best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  std::complex<double> best_estimate_;
  double error_estimate_;
};

}  // namespace slabgreen
