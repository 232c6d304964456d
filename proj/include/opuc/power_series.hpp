#ifndef OPUC_POWER_SERIES_HPP
#define OPUC_POWER_SERIES_HPP

#include <algorithm>
#include <cassert>

#include "opuc/polynomial.hpp"

namespace opuc {

/// Taylor series about 0 truncated at a fixed order K (coefficients a_0..a_K).
///
/// Binary operations work at the smaller of the two orders and never read
/// past it, so every coefficient produced is exact up to that order.
template <typename Real = double>
class PowerSeries {
public:
  using Scalar = Complex<Real>;
  using Coeffs = CVector<Real>;

  PowerSeries() : a_(Coeffs::Zero(1)) {}
  explicit PowerSeries(Coeffs a) : a_(std::move(a)) {
    if (a_.size() == 0) throw DomainError("PowerSeries: empty coefficient vector");
  }

  static PowerSeries constant(Scalar v, Eigen::Index order) {
    Coeffs a = Coeffs::Zero(order + 1);
    a(0) = v;
    return PowerSeries(std::move(a));
  }
  static PowerSeries from_poly(const ComplexPoly<Real>& p, Eigen::Index order) {
    Coeffs a = Coeffs::Zero(order + 1);
    const Eigen::Index n = std::min(order, p.degree());
    a.head(n + 1) = p.coeffs().head(n + 1);
    return PowerSeries(std::move(a));
  }

  Eigen::Index order() const noexcept { return a_.size() - 1; }
  const Coeffs& coeffs() const noexcept { return a_; }
  Scalar operator[](Eigen::Index k) const { return a_(k); }

  PowerSeries truncated(Eigen::Index order) const {
    assert(order <= this->order());
    return PowerSeries(Coeffs(a_.head(order + 1)));
  }

  Scalar operator()(Scalar z) const {
    Scalar acc = a_(a_.size() - 1);
    for (Eigen::Index k = a_.size() - 2; k >= 0; --k) acc = acc * z + a_(k);
    return acc;
  }

  friend PowerSeries operator+(const PowerSeries& f, const PowerSeries& g) {
    const Eigen::Index k = std::min(f.order(), g.order());
    return PowerSeries(Coeffs(f.a_.head(k + 1) + g.a_.head(k + 1)));
  }
  friend PowerSeries operator-(const PowerSeries& f, const PowerSeries& g) {
    const Eigen::Index k = std::min(f.order(), g.order());
    return PowerSeries(Coeffs(f.a_.head(k + 1) - g.a_.head(k + 1)));
  }
  friend PowerSeries operator*(const PowerSeries& f, Scalar s) { return PowerSeries(Coeffs(f.a_ * s)); }
  friend PowerSeries operator*(Scalar s, const PowerSeries& f) { return f * s; }
  friend PowerSeries operator+(const PowerSeries& f, Scalar s) {
    PowerSeries r = f;
    r.a_(0) += s;
    return r;
  }
  friend PowerSeries operator+(Scalar s, const PowerSeries& f) { return f + s; }
  friend PowerSeries operator-(Scalar s, const PowerSeries& f) { return (f * Scalar(-1)) + s; }
  friend PowerSeries operator-(const PowerSeries& f, Scalar s) { return f + (-s); }

  /// Cauchy product truncated at min order.
  friend PowerSeries operator*(const PowerSeries& f, const PowerSeries& g) {
    const Eigen::Index k = std::min(f.order(), g.order());
    Coeffs c = Coeffs::Zero(k + 1);
    for (Eigen::Index n = 0; n <= k; ++n)
      for (Eigen::Index j = 0; j <= n; ++j) c(n) += f.a_(j) * g.a_(n - j);
    return PowerSeries(std::move(c));
  }

  /// 1/f; requires a_0 != 0.
  PowerSeries reciprocal() const {
    if (a_(0) == Scalar(0)) throw DomainError("PowerSeries::reciprocal: zero constant term");
    Coeffs b = Coeffs::Zero(a_.size());
    b(0) = Scalar(1) / a_(0);
    for (Eigen::Index n = 1; n < a_.size(); ++n) {
      Scalar s(0);
      for (Eigen::Index j = 1; j <= n; ++j) s += a_(j) * b(n - j);
      b(n) = -s * b(0);
    }
    return PowerSeries(std::move(b));
  }

  friend PowerSeries operator/(const PowerSeries& f, const PowerSeries& g) { return f * g.reciprocal(); }

  /// f(z)/z for a series with a_0 = 0 (exact): order drops by one.
  PowerSeries divided_by_z() const {
    if (a_.size() < 2) throw DomainError("PowerSeries::divided_by_z: order 0 series");
    return PowerSeries(Coeffs(a_.tail(a_.size() - 1)));
  }

  /// z*f(z) at the same order (top coefficient discarded).
  PowerSeries times_z() const {
    Coeffs c = Coeffs::Zero(a_.size());
    c.tail(a_.size() - 1) = a_.head(a_.size() - 1);
    return PowerSeries(std::move(c));
  }

private:
  Coeffs a_;
};

template <typename Real>
Real series_distance(const PowerSeries<Real>& f, const PowerSeries<Real>& g) {
  const Eigen::Index k = std::min(f.order(), g.order());
  return (f.coeffs().head(k + 1) - g.coeffs().head(k + 1)).cwiseAbs().maxCoeff();
}

}  // namespace opuc

#endif  // OPUC_POWER_SERIES_HPP
