#ifndef OPUC_MOMENTS_HPP
#define OPUC_MOMENTS_HPP

#include <cmath>

#include "opuc/polynomial.hpp"

namespace opuc {

/// Moments c_0..c_N of a probability measure on the circle, c_0 = 1.
/// Negative indices follow c_{-n} = conj(c_n).
template <typename Real = double>
class MomentSeq {
public:
  using Scalar = Complex<Real>;

  MomentSeq() : c_(CVector<Real>::Ones(1)) {}
  explicit MomentSeq(CVector<Real> c) : c_(std::move(c)) {
    if (c_.size() == 0 || std::abs(c_(0) - Scalar(1)) > Real(1e-10))
      throw DomainError("MomentSeq: c_0 must equal 1");
    c_(0) = Scalar(1);
  }
  MomentSeq(std::initializer_list<Scalar> c) : MomentSeq(to_vec(c)) {}

  Eigen::Index max_index() const noexcept { return c_.size() - 1; }
  const CVector<Real>& values() const noexcept { return c_; }

  Scalar operator()(Eigen::Index n) const {
    if (std::abs(n) > max_index())
      throw RangeError("MomentSeq: moment index " + std::to_string(n) + " not available");
    return n >= 0 ? c_(n) : std::conj(c_(-n));
  }

  /// (n+1)x(n+1) Toeplitz matrix {c_{k-l}}.
  CMatrix<Real> toeplitz(Eigen::Index n) const {
    CMatrix<Real> t(n + 1, n + 1);
    for (Eigen::Index k = 0; k <= n; ++k)
      for (Eigen::Index l = 0; l <= n; ++l) t(k, l) = (*this)(k - l);
    return t;
  }

private:
  static CVector<Real> to_vec(std::initializer_list<Scalar> c) {
    CVector<Real> v(static_cast<Eigen::Index>(c.size()));
    Eigen::Index i = 0;
    for (const auto& x : c) v(i++) = x;
    return v;
  }
  CVector<Real> c_;
};

/// <P, Q> in L^2(d mu) = sum_{j,k} conj(p_j) q_k c_{j-k}; antilinear in P.
template <typename Real>
Complex<Real> inner_product(const ComplexPoly<Real>& p, const ComplexPoly<Real>& q, const MomentSeq<Real>& c) {
  const ComplexPoly<Real> pt = p.trimmed(), qt = q.trimmed();
  if (std::max(pt.degree(), qt.degree()) > c.max_index())
    throw RangeError("inner_product: not enough moments for the given degrees");
  Complex<Real> s(0);
  for (Eigen::Index j = 0; j <= pt.degree(); ++j) {
    Complex<Real> row(0);
    for (Eigen::Index k = 0; k <= qt.degree(); ++k) row += qt[k] * c(j - k);
    s += std::conj(pt[j]) * row;
  }
  return s;
}

}  // namespace opuc

#endif  // OPUC_MOMENTS_HPP
