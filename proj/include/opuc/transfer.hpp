#ifndef OPUC_TRANSFER_HPP
#define OPUC_TRANSFER_HPP

#include <utility>

#include "opuc/cmv.hpp"

namespace opuc {

template <typename Real>
using Mat2 = Eigen::Matrix<Complex<Real>, 2, 2>;

/// One step A(z, alpha) = rho^{-1} [[z, -conj(alpha)], [-alpha z, 1]]; det A = z.
template <typename Real>
Mat2<Real> step_matrix(Complex<Real> z, Complex<Real> alpha) {
  const Real rho = std::sqrt(Real(1) - std::norm(alpha));
  Mat2<Real> a;
  a << z, -std::conj(alpha), -alpha * z, Complex<Real>(1);
  return a / rho;
}

template <typename Real = double>
struct TransferMatrix {
  Mat2<Real> m;
  Eigen::Index n = 0;
  Complex<Real> z;

  Complex<Real> det() const { return m.determinant(); }
  Complex<Real> operator()(int i, int j) const { return m(i, j); }
};

/// T_n(z) = A(z, alpha_{n-1}) ... A(z, alpha_0).
template <typename Real>
TransferMatrix<Real> transfer(const VerblunskySeq<Real>& alpha, Eigen::Index n, Complex<Real> z) {
  if (n < 0 || n > alpha.size()) throw RangeError("transfer: need n <= N");
  Mat2<Real> t = Mat2<Real>::Identity();
  for (Eigen::Index j = 0; j < n; ++j) {
    if (alpha.rho(j) == Real(0)) throw DomainError("transfer: unimodular coefficient");
    t = step_matrix(z, alpha[j]) * t;
  }
  return {t, n, z};
}

/// Orthonormal second-kind pair (psi_n, psi_n^*): phi_n of {-alpha_j}.
template <typename Real>
std::pair<ComplexPoly<Real>, ComplexPoly<Real>> second_kind(const VerblunskySeq<Real>& alpha, Eigen::Index n) {
  if (n < 0 || n > alpha.size()) throw RangeError("second_kind: need n <= N");
  const OpucFamily<Real> fam = szego_forward(alpha.prefix(n).rotated(Complex<Real>(-1)));
  return {fam.orthonormal(n), fam.orthonormal_star(n)};
}

/// (|F phi_n + psi_n|, |F phi_n^* - psi_n^*|) at z.
template <typename Real>
std::pair<Real, Real> weyl_residual(const VerblunskySeq<Real>& alpha, Eigen::Index n, Complex<Real> z,
                                    Complex<Real> f_value) {
  if (!(std::abs(z) < Real(1))) throw DomainError("weyl_residual: |z| must be < 1");
  if (n < 0 || n > alpha.size()) throw RangeError("weyl_residual: need n <= N");
  const auto [phi, phis] = eval_orthonormal(alpha, n, z);
  const auto [psi, psis] = eval_orthonormal(alpha.rotated(Complex<Real>(-1)), n, z);
  return {std::abs(f_value * phi + psi), std::abs(f_value * phis - psis)};
}

/// Both routes for int z^l d nu_n, l = 1..L: (1/n) Tr (C^(n))^l and the power sums of the zeros.
template <typename Real = double>
struct ZeroCountingMoments {
  CVector<Real> trace_route;
  CVector<Real> root_route;
  Real max_deviation() const { return (trace_route - root_route).cwiseAbs().maxCoeff(); }
};

template <typename Real>
ZeroCountingMoments<Real> zero_counting_moments(const VerblunskySeq<Real>& alpha, Eigen::Index n, Eigen::Index l_max) {
  if (l_max < 1) throw DomainError("zero_counting_moments: L must be >= 1");
  if (n < 1 || n > alpha.size()) throw RangeError("zero_counting_moments: need 1 <= n <= N");
  const CMatrix<Real> c = build_cmv(alpha, n).dense;
  const std::vector<Complex<Real>> zeros = phi_zeros(alpha, n);
  ZeroCountingMoments<Real> out{CVector<Real>(l_max), CVector<Real>(l_max)};
  CMatrix<Real> pw = c;
  for (Eigen::Index l = 1; l <= l_max; ++l) {
    if (l > 1) pw = pw * c;
    out.trace_route(l - 1) = pw.trace() / Real(n);
    Complex<Real> s(0);
    for (const auto& zk : zeros) s += std::pow(zk, static_cast<int>(l));
    out.root_route(l - 1) = s / Real(n);
  }
  return out;
}

}  // namespace opuc

#endif  // OPUC_TRANSFER_HPP
