#ifndef OPUC_VERBLUNSKY_HPP
#define OPUC_VERBLUNSKY_HPP

#include <cmath>
#include <vector>

#include "opuc/polynomial.hpp"

namespace opuc {

/// Finite run of Verblunsky coefficients alpha_0..alpha_{N-1}.
///
/// Every entry lies in the open unit disk, except that the last one may be
/// unimodular when the sequence is flagged terminal (a measure with N atoms).
template <typename Real = double>
class VerblunskySeq {
public:
  using Scalar = Complex<Real>;

  VerblunskySeq() = default;
  explicit VerblunskySeq(CVector<Real> alphas, bool terminal_unimodular = false)
      : a_(std::move(alphas)), terminal_(terminal_unimodular) {
    validate();
  }
  VerblunskySeq(std::initializer_list<Scalar> alphas, bool terminal_unimodular = false)
      : a_(static_cast<Eigen::Index>(alphas.size())), terminal_(terminal_unimodular) {
    Eigen::Index i = 0;
    for (const auto& v : alphas) a_(i++) = v;
    validate();
  }
  static VerblunskySeq from_vector(const std::vector<Scalar>& v, bool terminal = false) {
    CVector<Real> a(static_cast<Eigen::Index>(v.size()));
    for (std::size_t i = 0; i < v.size(); ++i) a(static_cast<Eigen::Index>(i)) = v[i];
    return VerblunskySeq(std::move(a), terminal);
  }

  Eigen::Index size() const noexcept { return a_.size(); }
  bool empty() const noexcept { return a_.size() == 0; }
  bool terminal() const noexcept { return terminal_; }
  const CVector<Real>& alphas() const noexcept { return a_; }
  Scalar operator[](Eigen::Index j) const { return a_(j); }

  /// rho_j = (1 - |alpha_j|^2)^{1/2}; exactly 0 for a terminal entry.
  Real rho(Eigen::Index j) const {
    if (terminal_ && j == a_.size() - 1) return Real(0);
    return std::sqrt(std::max(Real(0), Real(1) - std::norm(a_(j))));
  }

  /// alpha_0..alpha_{n-1}; drops the terminal flag unless the terminal entry is kept.
  VerblunskySeq prefix(Eigen::Index n) const {
    return VerblunskySeq(CVector<Real>(a_.head(n)), terminal_ && n == a_.size());
  }
  /// alpha_n, alpha_{n+1}, ...
  VerblunskySeq tail(Eigen::Index n) const {
    return VerblunskySeq(CVector<Real>(a_.tail(a_.size() - n)), terminal_);
  }
  template <typename Other>
  VerblunskySeq<Other> cast() const {
    return VerblunskySeq<Other>(CVector<Other>(a_.template cast<Complex<Other>>()), terminal_);
  }
  /// alpha_j -> lambda * alpha_j.
  VerblunskySeq rotated(Scalar lambda) const { return VerblunskySeq(CVector<Real>(a_ * lambda), terminal_); }

private:
  void validate() const {
    for (Eigen::Index j = 0; j < a_.size(); ++j) {
      const Real m = std::abs(a_(j));
      const bool last = j == a_.size() - 1;
      if (terminal_ && last) {
        if (std::abs(m - Real(1)) > Real(1e-12))
          throw DomainError("VerblunskySeq: terminal entry is not unimodular");
      } else if (!(m < Real(1))) {
        throw DomainError("VerblunskySeq: alpha_" + std::to_string(j) + " outside the open unit disk");
      }
    }
    if (terminal_ && a_.size() == 0) throw DomainError("VerblunskySeq: terminal flag on empty sequence");
  }

  CVector<Real> a_;
  bool terminal_ = false;
};

}  // namespace opuc

#endif  // OPUC_VERBLUNSKY_HPP
