#ifndef OPUC_POLYNOMIAL_HPP
#define OPUC_POLYNOMIAL_HPP

#include <Eigen/Core>

#include <algorithm>
#include <complex>
#include <initializer_list>

#include "opuc/errors.hpp"

namespace opuc {

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using CVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense complex polynomial, coefficients stored low-to-high degree.
///
/// The stored length fixes the nominal degree; trailing zeros are kept so that
/// a degree-n polynomial with a vanishing leading coefficient (e.g. Phi_n^*)
/// still reports degree n. Use trimmed() for the exact degree.
template <typename Real = double>
class ComplexPoly {
public:
  using Scalar = Complex<Real>;
  using Coeffs = CVector<Real>;

  ComplexPoly() : c_(Coeffs::Zero(1)) {}
  explicit ComplexPoly(Coeffs c) : c_(std::move(c)) {
    if (c_.size() == 0) c_ = Coeffs::Zero(1);
  }
  ComplexPoly(std::initializer_list<Scalar> c) : c_(static_cast<Eigen::Index>(c.size())) {
    Eigen::Index i = 0;
    for (const auto& v : c) c_(i++) = v;
    if (c_.size() == 0) c_ = Coeffs::Zero(1);
  }

  static ComplexPoly constant(Scalar v) { return ComplexPoly(Coeffs::Constant(1, v)); }
  static ComplexPoly monomial(Eigen::Index n, Scalar v = Scalar(1)) {
    Coeffs c = Coeffs::Zero(n + 1);
    c(n) = v;
    return ComplexPoly(std::move(c));
  }
  static ComplexPoly zero(Eigen::Index n) { return ComplexPoly(Coeffs::Zero(n + 1)); }

  const Coeffs& coeffs() const noexcept { return c_; }
  Coeffs& coeffs() noexcept { return c_; }
  Eigen::Index degree() const noexcept { return c_.size() - 1; }
  Scalar operator[](Eigen::Index k) const { return k >= 0 && k < c_.size() ? c_(k) : Scalar(0); }
  Scalar& operator[](Eigen::Index k) { return c_(k); }

  /// Horner evaluation.
  Scalar operator()(Scalar z) const {
    Scalar acc = c_(c_.size() - 1);
    for (Eigen::Index k = c_.size() - 2; k >= 0; --k) acc = acc * z + c_(k);
    return acc;
  }

  ComplexPoly derivative() const {
    if (c_.size() == 1) return ComplexPoly();
    Coeffs d(c_.size() - 1);
    for (Eigen::Index k = 1; k < c_.size(); ++k) d(k - 1) = Real(k) * c_(k);
    return ComplexPoly(std::move(d));
  }

  /// Drops trailing coefficients with modulus <= tol.
  ComplexPoly trimmed(Real tol = Real(0)) const {
    Eigen::Index n = c_.size();
    while (n > 1 && std::abs(c_(n - 1)) <= tol) --n;
    return ComplexPoly(Coeffs(c_.head(n)));
  }

  /// Pads with zeros (never truncates) to nominal degree n.
  ComplexPoly padded(Eigen::Index n) const {
    if (n <= degree()) return *this;
    Coeffs c = Coeffs::Zero(n + 1);
    c.head(c_.size()) = c_;
    return ComplexPoly(std::move(c));
  }

  /// Multiplication by z^k.
  ComplexPoly shifted(Eigen::Index k) const {
    Coeffs c = Coeffs::Zero(c_.size() + k);
    c.tail(c_.size()) = c_;
    return ComplexPoly(std::move(c));
  }

  ComplexPoly& operator+=(const ComplexPoly& o) {
    if (o.c_.size() > c_.size()) *this = padded(o.degree());
    c_.head(o.c_.size()) += o.c_;
    return *this;
  }
  ComplexPoly& operator-=(const ComplexPoly& o) {
    if (o.c_.size() > c_.size()) *this = padded(o.degree());
    c_.head(o.c_.size()) -= o.c_;
    return *this;
  }
  ComplexPoly& operator*=(Scalar s) {
    c_ *= s;
    return *this;
  }

  friend ComplexPoly operator+(ComplexPoly a, const ComplexPoly& b) { return a += b; }
  friend ComplexPoly operator-(ComplexPoly a, const ComplexPoly& b) { return a -= b; }
  friend ComplexPoly operator*(ComplexPoly a, Scalar s) { return a *= s; }
  friend ComplexPoly operator*(Scalar s, ComplexPoly a) { return a *= s; }
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    Coeffs c = Coeffs::Zero(a.c_.size() + b.c_.size() - 1);
    for (Eigen::Index i = 0; i < a.c_.size(); ++i)
      for (Eigen::Index j = 0; j < b.c_.size(); ++j) c(i + j) += a.c_(i) * b.c_(j);
    return ComplexPoly(std::move(c));
  }

  /// Largest coefficient modulus.
  Real max_coeff() const { return c_.cwiseAbs().maxCoeff(); }

private:
  Coeffs c_;
};

/// Reversed polynomial P^{*,n}: coefficient j becomes conj(coefficient n-j).
template <typename Real>
ComplexPoly<Real> reversed(const ComplexPoly<Real>& p, Eigen::Index n) {
  if (p.trimmed().degree() > n)
    throw DomainError("reversed: polynomial degree exceeds n");
  CVector<Real> c = CVector<Real>::Zero(n + 1);
  for (Eigen::Index j = 0; j <= n; ++j) c(j) = std::conj(p[n - j]);
  return ComplexPoly<Real>(std::move(c));
}

/// Max coefficientwise distance (after padding both to a common degree).
template <typename Real>
Real coeff_distance(const ComplexPoly<Real>& a, const ComplexPoly<Real>& b) {
  const Eigen::Index n = std::max(a.degree(), b.degree());
  return (a.padded(n).coeffs() - b.padded(n).coeffs()).cwiseAbs().maxCoeff();
}

}  // namespace opuc

#endif  // OPUC_POLYNOMIAL_HPP
