#ifndef OPUC_SCHUR_HPP
#define OPUC_SCHUR_HPP

#include <array>
#include <utility>

#include "opuc/power_series.hpp"
#include "opuc/szego.hpp"

namespace opuc {

/// Taylor data of an analytic map of the disk into its closure.
template <typename Real = double>
class SchurFunction {
public:
  SchurFunction() = default;
  explicit SchurFunction(PowerSeries<Real> s) : s_(std::move(s)) {
    if (std::abs(s_[0]) > Real(1) + Real(1e-10)) throw DomainError("SchurFunction: |f(0)| > 1");
  }
  const PowerSeries<Real>& series() const noexcept { return s_; }
  Eigen::Index order() const noexcept { return s_.order(); }
  Complex<Real> at_zero() const { return s_[0]; }

private:
  PowerSeries<Real> s_;
};

/// Parameters with |gamma| above this are treated as unimodular.
template <typename Real>
constexpr Real terminal_threshold() {
  return Real(1) - Real(1e-10);
}

/// gamma_0 = f(0), f_1 = (f - gamma_0) / (z (1 - conj(gamma_0) f)).
template <typename Real>
std::pair<Complex<Real>, SchurFunction<Real>> schur_step(const SchurFunction<Real>& f, std::size_t index = 0) {
  const Complex<Real> g = f.at_zero();
  if (std::abs(g) > terminal_threshold<Real>()) throw TerminalParameter(index, std::complex<double>(g));
  if (f.order() < 1) throw DomainError("schur_step: need truncation order >= 1");
  const PowerSeries<Real>& s = f.series();
  CVector<Real> num = s.coeffs();
  num(0) = Complex<Real>(0);
  const PowerSeries<Real> numz = PowerSeries<Real>(std::move(num)).divided_by_z();
  const PowerSeries<Real> den = (Complex<Real>(1) - s * std::conj(g)).truncated(s.order() - 1);
  return {g, SchurFunction<Real>(numz / den)};
}

/// gamma_0..gamma_{N-1} by iterated Schur steps. Throws TerminalParameter
/// (carrying the stopping index) when a unimodular parameter is reached.
template <typename Real>
VerblunskySeq<Real> schur_parameters(const SchurFunction<Real>& f, Eigen::Index n_params) {
  if (n_params == 0) return VerblunskySeq<Real>();
  if (f.order() < n_params - 1) throw RangeError("schur_parameters: truncation order too small");
  CVector<Real> g(n_params);
  SchurFunction<Real> cur = f;
  for (Eigen::Index j = 0; j < n_params; ++j) {
    if (j + 1 == n_params) {
      g(j) = cur.at_zero();
      if (std::abs(g(j)) > terminal_threshold<Real>())
        throw TerminalParameter(static_cast<std::size_t>(j), std::complex<double>(g(j)));
      break;
    }
    auto [gamma, next] = schur_step(cur, static_cast<std::size_t>(j));
    g(j) = gamma;
    cur = std::move(next);
  }
  return VerblunskySeq<Real>(std::move(g));
}

/// 2x2 matrix of polynomials, used for products of [[z, -conj(a)], [-z a, 1]].
template <typename Real>
using PolyMatrix2 = std::array<std::array<ComplexPoly<Real>, 2>, 2>;

/// prod_{j=n-1..0} [[z, -conj(alpha_j)], [-z alpha_j, 1]] (the transfer matrix without the rho factors).
template <typename Real>
PolyMatrix2<Real> unnormalized_transfer(const VerblunskySeq<Real>& alpha, Eigen::Index n) {
  using P = ComplexPoly<Real>;
  PolyMatrix2<Real> t{{{P::constant(Real(1)), P::constant(Real(0))}, {P::constant(Real(0)), P::constant(Real(1))}}};
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex<Real> a = alpha[j];
    PolyMatrix2<Real> next;
    for (int col = 0; col < 2; ++col) {
      const P& top = t[0][col];
      const P& bot = t[1][col];
      next[0][col] = top.shifted(1) - bot * std::conj(a);
      next[1][col] = bot - top.shifted(1) * a;
    }
    t = std::move(next);
  }
  return t;
}

/// Wall polynomials of gamma_0..gamma_n: the Schur approximant is A_n / B_n.
template <typename Real = double>
struct WallPair {
  ComplexPoly<Real> a;
  ComplexPoly<Real> b;
};

template <typename Real>
WallPair<Real> schur_approximant(const VerblunskySeq<Real>& gammas) {
  const Eigen::Index n1 = gammas.size();
  if (n1 == 0) return {ComplexPoly<Real>::constant(Real(0)), ComplexPoly<Real>::constant(Real(1))};
  const PolyMatrix2<Real> t = unnormalized_transfer(gammas, n1);
  // bottom row is [-z A_n, B_n]
  const ComplexPoly<Real> za = t[1][0].padded(n1);
  CVector<Real> ac = -za.coeffs().tail(n1);
  ComplexPoly<Real> b = t[1][1].padded(n1 - 1);
  CVector<Real> bc = b.coeffs().head(n1);
  return {ComplexPoly<Real>(std::move(ac)), ComplexPoly<Real>(std::move(bc))};
}

/// Taylor series of A/B to the given order (B(0) = 1 for Wall polynomials).
template <typename Real>
PowerSeries<Real> rational_series(const ComplexPoly<Real>& num, const ComplexPoly<Real>& den, Eigen::Index order) {
  return PowerSeries<Real>::from_poly(num, order) / PowerSeries<Real>::from_poly(den, order);
}

/// Taylor series of b_n f_n with b_n = phi_n / phi_n^* and f_n the n-th Schur
/// iterate (Schur function of alpha_n, alpha_{n+1}, ...). This is the Schur
/// function of |phi_n|^2 d mu.
template <typename Real>
PowerSeries<Real> khrushchev_product(const VerblunskySeq<Real>& alpha, Eigen::Index n, Eigen::Index order) {
  if (n < 0 || n >= alpha.size()) throw RangeError("khrushchev_product: need n < N");
  const OpucFamily<Real> fam = szego_forward(alpha.prefix(n));
  const PowerSeries<Real> blaschke = rational_series(fam.phi[n], fam.phi_star[n], order);
  const WallPair<Real> w = schur_approximant(alpha.tail(n));
  return blaschke * rational_series(w.a, w.b, order);
}

/// int |f_n(e^{i theta})|^2 d theta / 2 pi with f_n approximated by the Wall
/// rational of alpha_n..alpha_{n+depth-1}, depth = min(N - n, max_depth).
template <typename Real>
Real schur_l2_diagnostics(const VerblunskySeq<Real>& alpha, Eigen::Index n, Eigen::Index grid = 2048,
                          Eigen::Index max_depth = 20) {
  if (n < 0) throw DomainError("schur_l2_diagnostics: negative n");
  if (n >= alpha.size()) return Real(0);
  const Eigen::Index depth = std::min(alpha.size() - n, max_depth);
  const VerblunskySeq<Real> tail(CVector<Real>(alpha.alphas().segment(n, depth)),
                                 alpha.terminal() && n + depth == alpha.size());
  const WallPair<Real> w = schur_approximant(tail);
  const Real two_pi = Real(2) * Real(EIGEN_PI);
  Real acc(0);
  for (Eigen::Index k = 0; k < grid; ++k) {
    const Complex<Real> z = std::polar(Real(1), two_pi * Real(k) / Real(grid));
    acc += std::norm(w.a(z) / w.b(z));
  }
  return acc / Real(grid);
}

}  // namespace opuc

#endif  // OPUC_SCHUR_HPP
