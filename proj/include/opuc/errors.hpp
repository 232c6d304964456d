#ifndef OPUC_ERRORS_HPP
#define OPUC_ERRORS_HPP

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace opuc {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input outside an operation's domain (|z| >= 1, |lambda| != 1, bad degree...).
class DomainError : public Error {
public:
  using Error::Error;
};

/// Not enough moments / coefficients to evaluate the request.
class RangeError : public Error {
public:
  using Error::Error;
};

/// Requested frequency cannot be resolved by the quadrature grid.
class AliasingError : public Error {
public:
  using Error::Error;
};

class NotPositiveDefinite : public Error {
public:
  using Error::Error;
};

class NotUnitary : public Error {
public:
  using Error::Error;
};

/// |Phi_n(0)| >= 1 during inverse recursion: the measure is trivial.
class NotStrictlyInside : public Error {
public:
  NotStrictlyInside(std::size_t index, double modulus)
      : Error("Phi_" + std::to_string(index) + "(0) has modulus " +
              std::to_string(modulus) + " >= 1"),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

/// Schur algorithm hit a unimodular parameter and stopped.
class TerminalParameter : public Error {
public:
  TerminalParameter(std::size_t index, std::complex<double> value)
      : Error("unimodular Schur parameter at index " + std::to_string(index)),
        index_(index), value_(value) {}
  std::size_t index() const noexcept { return index_; }
  std::complex<double> value() const noexcept { return value_; }

private:
  std::size_t index_;
  std::complex<double> value_;
};

/// Sturm sign condition of the inverse Geronimus relations failed.
class SupportOutsideInterval : public Error {
public:
  explicit SupportOutsideInterval(std::size_t index)
      : Error("Jacobi parameters not supported in [-2,2]: sign condition fails at index " +
              std::to_string(index)),
        index_(index) {}
  std::size_t index() const noexcept { return index_; }

private:
  std::size_t index_;
};

class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& what, std::size_t iterations)
      : Error(what + " (after " + std::to_string(iterations) + " iterations)"),
        iterations_(iterations) {}
  std::size_t iterations() const noexcept { return iterations_; }

private:
  std::size_t iterations_;
};

}  // namespace opuc

#endif  // OPUC_ERRORS_HPP
