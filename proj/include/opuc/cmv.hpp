#ifndef OPUC_CMV_HPP
#define OPUC_CMV_HPP

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <numeric>
#include <vector>

#include "opuc/szego.hpp"

namespace opuc {

/// Theta(alpha) = [[conj(alpha), rho], [rho, -alpha]].
template <typename Real = double>
struct ThetaBlock {
  Complex<Real> alpha;
  Real rho;

  explicit ThetaBlock(Complex<Real> a = Complex<Real>(0)) : alpha(a) {
    const Real m2 = std::norm(a);
    if (m2 > Real(1) + Real(1e-12)) throw DomainError("ThetaBlock: |alpha| > 1");
    rho = std::sqrt(std::max(Real(0), Real(1) - m2));
  }
  Eigen::Matrix<Complex<Real>, 2, 2> matrix() const {
    Eigen::Matrix<Complex<Real>, 2, 2> m;
    m << std::conj(alpha), rho, rho, -alpha;
    return m;
  }
};

enum class CmvOrder { LM, ML };

/// Finite CMV truncation. L and M are materialized at size N + 2 (alpha
/// padded with zeros) so the top-left N x N block of their product is exact.
template <typename Real = double>
struct CMVMatrix {
  Eigen::Index n = 0;
  CmvOrder order = CmvOrder::LM;
  std::vector<ThetaBlock<Real>> l_blocks;  // Theta(alpha_0), Theta(alpha_2), ...
  std::vector<ThetaBlock<Real>> m_blocks;  // Theta(alpha_1), Theta(alpha_3), ...
  CMatrix<Real> l;
  CMatrix<Real> m;
  CMatrix<Real> dense;  // N x N block of LM (or ML)
};

namespace detail {

// L = Theta(a_0) + Theta(a_2) + ... and M = 1 + Theta(a_1) + ..., both size P.
// m_corner replaces the leading 1 of M.
template <typename Real>
void fill_lm(const CVector<Real>& a, Eigen::Index p, CMatrix<Real>& l, CMatrix<Real>& m,
             Complex<Real> m_corner = Complex<Real>(1)) {
  l = CMatrix<Real>::Zero(p, p);
  m = CMatrix<Real>::Zero(p, p);
  auto put = [&](CMatrix<Real>& t, Eigen::Index at, Eigen::Index j) {
    const Complex<Real> aj = j < a.size() ? a(j) : Complex<Real>(0);
    const auto th = ThetaBlock<Real>(aj).matrix();
    if (at + 1 < p) {
      t.template block<2, 2>(at, at) = th;
    } else {
      t(at, at) = th(0, 0);  // trailing 1x1 corner of a cut block
    }
  };
  for (Eigen::Index j = 0; j < p; j += 2) put(l, j, j);
  m(0, 0) = m_corner;
  for (Eigen::Index j = 1; j < p; j += 2) put(m, j, j);
}

}  // namespace detail

/// C = LM (or ML) from alpha_0..alpha_{N-1}. With pad, missing alphas are 0.
template <typename Real>
CMVMatrix<Real> build_cmv(const VerblunskySeq<Real>& alpha, Eigen::Index n, bool pad = false,
                          CmvOrder order = CmvOrder::LM) {
  if (n < 1) throw DomainError("build_cmv: N must be >= 1");
  if (n > alpha.size() && !pad) throw RangeError("build_cmv: N exceeds the number of coefficients");
  CVector<Real> a = CVector<Real>::Zero(n);
  const Eigen::Index have = std::min(n, alpha.size());
  a.head(have) = alpha.alphas().head(have);
  CMVMatrix<Real> c;
  c.n = n;
  c.order = order;
  for (Eigen::Index j = 0; j < n; ++j) (j % 2 == 0 ? c.l_blocks : c.m_blocks).emplace_back(a(j));
  detail::fill_lm(a, n + 2, c.l, c.m);
  const CMatrix<Real> prod = order == CmvOrder::LM ? CMatrix<Real>(c.l * c.m) : CMatrix<Real>(c.m * c.l);
  c.dense = prod.topLeftCorner(n, n);
  return c;
}

/// det(z - H) for upper Hessenberg H via p_{k+1} = (z - h_kk) p_k - sum_i h_ik (prod_{m=i+1..k} h_{m,m-1}) p_i.
template <typename Real>
ComplexPoly<Real> hessenberg_char_poly(const CMatrix<Real>& h) {
  const Eigen::Index n = h.rows();
  std::vector<ComplexPoly<Real>> p;
  p.reserve(n + 1);
  p.push_back(ComplexPoly<Real>::constant(Real(1)));
  for (Eigen::Index k = 0; k < n; ++k) {
    ComplexPoly<Real> next = p[k].shifted(1) - p[k] * h(k, k);
    Complex<Real> sub(1);
    for (Eigen::Index i = k - 1; i >= 0; --i) {
      sub *= h(i + 1, i);
      next -= p[i] * (h(i, k) * sub);
    }
    p.push_back(next.padded(k + 1));
  }
  return p[n];
}

/// det(z - C^(N)) by Hessenberg reduction; equals Phi_N.
template <typename Real>
ComplexPoly<Real> char_poly(const VerblunskySeq<Real>& alpha, Eigen::Index n) {
  const CMVMatrix<Real> c = build_cmv(alpha, n);
  if (n == 1) return ComplexPoly<Real>({-c.dense(0, 0), Complex<Real>(1)});
  Eigen::HessenbergDecomposition<CMatrix<Real>> hd(c.dense);
  return hessenberg_char_poly<Real>(hd.matrixH());
}

template <typename Real = double>
struct RootCluster {
  Complex<Real> center;
  int multiplicity;
};

/// Groups roots closer than tol (single linkage) and reports centroids with multiplicities.
template <typename Real>
std::vector<RootCluster<Real>> cluster_roots(const std::vector<Complex<Real>>& roots, Real tol = Real(1e-8)) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(roots[i] - roots[j]) < tol) parent[find(i)] = find(j);
  std::vector<RootCluster<Real>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.push_back({Complex<Real>(0), 0});
    }
    out[slot[r]].center += roots[i];
    out[slot[r]].multiplicity += 1;
  }
  for (auto& c : out) c.center /= Real(c.multiplicity);
  return out;
}

namespace detail {

template <typename Real>
std::vector<Complex<Real>> eigenvalues(const CMatrix<Real>& a) {
  Eigen::ComplexEigenSolver<CMatrix<Real>> es;
  es.setMaxIterations(64 * std::max<Eigen::Index>(a.rows(), 1));
  es.compute(a, false);
  if (es.info() != Eigen::Success)
    throw ConvergenceError("eigenvalues: QR iteration did not converge",
                           static_cast<std::size_t>(es.getMaxIterations() * a.rows()));
  std::vector<Complex<Real>> ev(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) ev[i] = es.eigenvalues()(i);
  return ev;
}

// Newton polish of simple roots; groups within merge_tol whose centroid is a
// root of matching multiplicity are collapsed onto the centroid (the
// eigenvalues of a multiple root scatter like eps^{1/m}).
template <typename Real>
void polish_roots(const ComplexPoly<Real>& p, std::vector<Complex<Real>>& roots, Real merge_tol = Real(1e-3)) {
  const Real scale = p.max_coeff();
  const ComplexPoly<Real> dp = p.derivative();
  for (auto& r : roots) {
    for (int it = 0; it < 3; ++it) {
      const Complex<Real> f = p(r), d = dp(r);
      if (std::abs(d) == Real(0)) break;
      const Complex<Real> cand = r - f / d;
      if (std::abs(p(cand)) < std::abs(f)) r = cand;
      else break;
    }
  }
  for (const auto& cl : cluster_roots(roots, merge_tol)) {
    if (cl.multiplicity < 2) continue;
    ComplexPoly<Real> q = p;
    Real fact(1);
    bool ok = true;
    for (int j = 0; j < cl.multiplicity && ok; ++j) {
      if (j > 0) {
        q = q.derivative();
        fact *= Real(j);
      }
      ok = std::abs(q(cl.center)) / fact <= Real(1e-10) * scale;
    }
    if (!ok) continue;
    int left = cl.multiplicity;
    for (auto& r : roots) {
      if (left > 0 && std::abs(r - cl.center) < merge_tol * Real(cl.multiplicity)) {
        r = cl.center;
        --left;
      }
    }
  }
}

}  // namespace detail

/// Zeros of Phi_N (with multiplicity) as eigenvalues of C^(N).
template <typename Real>
std::vector<Complex<Real>> phi_zeros(const VerblunskySeq<Real>& alpha, Eigen::Index n) {
  if (n < 1) throw DomainError("phi_zeros: N must be >= 1");
  const CMVMatrix<Real> c = build_cmv(alpha, n);
  std::vector<Complex<Real>> z = detail::eigenvalues<Real>(c.dense);
  const ComplexPoly<Real> phi = szego_forward(alpha.prefix(n)).phi[n];
  detail::polish_roots(phi, z);
  return z;
}

/// Zeros of z Phi_{N-1} - conj(beta) Phi_{N-1}^*: eigenvalues of the unitary
/// C^(N) built from alpha_0..alpha_{N-2}, beta.
template <typename Real>
std::vector<Complex<Real>> paraorthogonal_zeros(const VerblunskySeq<Real>& alpha, Eigen::Index n, Complex<Real> beta) {
  if (std::abs(std::abs(beta) - Real(1)) > Real(1e-12)) throw DomainError("paraorthogonal_zeros: |beta| must be 1");
  if (n < 1) throw DomainError("paraorthogonal_zeros: N must be >= 1");
  if (n - 1 > alpha.size()) throw RangeError("paraorthogonal_zeros: need alpha_0..alpha_{N-2}");
  CVector<Real> a(n);
  a.head(n - 1) = alpha.alphas().head(n - 1);
  a(n - 1) = beta;
  const VerblunskySeq<Real> ext(std::move(a), true);
  std::vector<Complex<Real>> z = detail::eigenvalues<Real>(build_cmv(ext, n).dense);
  for (auto& r : z) r /= std::abs(r);  // unitary spectrum; remove the radial rounding
  return z;
}

/// max |D C({lambda alpha}) D^{-1} - L({alpha}) M_lambda({alpha})| over the N x N block,
/// D = diag(1, conj(lambda), 1, conj(lambda), ...), M_lambda = M with conj(lambda) in the (0,0) slot
/// (with lambda itself in that slot the (0,0) entries already disagree unless lambda is real).
template <typename Real>
Real aleksandrov_conjugation_check(const VerblunskySeq<Real>& alpha, Complex<Real> lambda, Eigen::Index n) {
  if (std::abs(std::abs(lambda) - Real(1)) > Real(1e-12))
    throw DomainError("aleksandrov_conjugation_check: |lambda| must be 1");
  const CMVMatrix<Real> rot = build_cmv(alpha.rotated(lambda), n, true);
  CVector<Real> a = CVector<Real>::Zero(n);
  const Eigen::Index have = std::min(n, alpha.size());
  a.head(have) = alpha.alphas().head(have);
  CMatrix<Real> l, m;
  detail::fill_lm(a, n + 2, l, m, std::conj(lambda));
  const CMatrix<Real> rhs = (l * m).topLeftCorner(n, n);
  CVector<Real> d(n), dinv(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    d(i) = i % 2 == 0 ? Complex<Real>(1) : std::conj(lambda);
    dinv(i) = i % 2 == 0 ? Complex<Real>(1) : lambda;
  }
  const CMatrix<Real> lhs = d.asDiagonal() * rot.dense * dinv.asDiagonal();
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace opuc

#endif  // OPUC_CMV_HPP
