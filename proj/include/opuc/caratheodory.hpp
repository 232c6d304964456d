#ifndef OPUC_CARATHEODORY_HPP
#define OPUC_CARATHEODORY_HPP

#include "opuc/moments.hpp"
#include "opuc/power_series.hpp"

namespace opuc {

/// F(z) = 1 + 2 sum_{n>=1} c_n z^n, truncated at the last available moment.
template <typename Real>
Complex<Real> caratheodory(const MomentSeq<Real>& c, Complex<Real> z) {
  if (!(std::abs(z) < Real(1))) throw DomainError("caratheodory: |z| must be < 1");
  Complex<Real> acc(0);
  for (Eigen::Index n = c.max_index(); n >= 1; --n) acc = (acc + c(n)) * z;
  return Complex<Real>(1) + Real(2) * acc;
}

/// Taylor series of F to order min(K, N).
template <typename Real>
PowerSeries<Real> caratheodory_series(const MomentSeq<Real>& c, Eigen::Index order) {
  const Eigen::Index k = std::min(order, c.max_index());
  CVector<Real> a(k + 1);
  a(0) = Complex<Real>(1);
  for (Eigen::Index n = 1; n <= k; ++n) a(n) = Real(2) * c(n);
  return PowerSeries<Real>(std::move(a));
}

/// z f = (F - 1)/(F + 1); the result has order K - 1.
template <typename Real>
PowerSeries<Real> schur_from_caratheodory(const PowerSeries<Real>& f_cara) {
  if (std::abs(f_cara[0] - Complex<Real>(1)) > Real(1e-10))
    throw DomainError("schur_from_caratheodory: F(0) must equal 1");
  if (f_cara.order() < 1) throw DomainError("schur_from_caratheodory: need order >= 1");
  PowerSeries<Real> num = f_cara - Complex<Real>(1);
  CVector<Real> nc = num.coeffs();
  nc(0) = Complex<Real>(0);
  const PowerSeries<Real> den = f_cara + Complex<Real>(1);
  assert(std::abs(den[0]) > Real(0));
  return (PowerSeries<Real>(std::move(nc)) / den).divided_by_z();
}

/// F = (1 + z f)/(1 - z f); the result has order K + 1.
template <typename Real>
PowerSeries<Real> caratheodory_from_schur(const PowerSeries<Real>& f) {
  CVector<Real> zf = CVector<Real>::Zero(f.order() + 2);
  zf.tail(f.order() + 1) = f.coeffs();
  const PowerSeries<Real> s(std::move(zf));
  return (Complex<Real>(1) + s) / (Complex<Real>(1) - s);
}

}  // namespace opuc

#endif  // OPUC_CARATHEODORY_HPP
