#ifndef OPUC_SZEGO_HPP
#define OPUC_SZEGO_HPP

#include <utility>
#include <vector>

#include "opuc/moments.hpp"
#include "opuc/verblunsky.hpp"

namespace opuc {

/// Monic OPUC Phi_0..Phi_N, their reversals, and the norms ||Phi_n||.
template <typename Real = double>
struct OpucFamily {
  std::vector<ComplexPoly<Real>> phi;
  std::vector<ComplexPoly<Real>> phi_star;
  std::vector<Real> norms;

  Eigen::Index size() const noexcept { return static_cast<Eigen::Index>(phi.size()); }

  /// phi_n = Phi_n / ||Phi_n||.
  ComplexPoly<Real> orthonormal(Eigen::Index n) const {
    if (norms[n] == Real(0)) throw DomainError("orthonormal: ||Phi_n|| = 0 (trivial measure)");
    return phi[n] * Complex<Real>(Real(1) / norms[n]);
  }
  ComplexPoly<Real> orthonormal_star(Eigen::Index n) const {
    if (norms[n] == Real(0)) throw DomainError("orthonormal_star: ||Phi_n|| = 0 (trivial measure)");
    return phi_star[n] * Complex<Real>(Real(1) / norms[n]);
  }
};

/// Szegő recursion Phi_{n+1} = z Phi_n - conj(alpha_n) Phi_n^*,
/// Phi_{n+1}^* = Phi_n^* - alpha_n z Phi_n, ||Phi_{n+1}|| = rho_n ||Phi_n||.
template <typename Real>
OpucFamily<Real> szego_forward(const VerblunskySeq<Real>& alpha) {
  OpucFamily<Real> fam;
  const Eigen::Index n_max = alpha.size();
  fam.phi.reserve(n_max + 1);
  fam.phi_star.reserve(n_max + 1);
  fam.norms.reserve(n_max + 1);
  fam.phi.push_back(ComplexPoly<Real>::constant(Real(1)));
  fam.phi_star.push_back(ComplexPoly<Real>::constant(Real(1)));
  fam.norms.push_back(Real(1));
  for (Eigen::Index n = 0; n < n_max; ++n) {
    const Complex<Real> a = alpha[n];
    const ComplexPoly<Real> zphi = fam.phi[n].shifted(1);
    fam.phi.push_back(zphi - fam.phi_star[n].padded(n + 1) * std::conj(a));
    fam.phi_star.push_back(fam.phi_star[n].padded(n + 1) - zphi * a);
    fam.norms.push_back(fam.norms[n] * alpha.rho(n));
  }
  return fam;
}

/// One inverse Szegő step: Phi_n -> (alpha_{n-1}, Phi_{n-1}).
template <typename Real>
std::pair<Complex<Real>, ComplexPoly<Real>> inverse_szego_step(const ComplexPoly<Real>& phi_n, Eigen::Index n) {
  if (n < 1 || phi_n.trimmed().degree() != n)
    throw DomainError("inverse_szego_step: Phi_n must have exact degree n >= 1");
  if (std::abs(phi_n[n] - Complex<Real>(1)) > Real(1e-10))
    throw DomainError("inverse_szego_step: Phi_n must be monic");
  const Real m = std::abs(phi_n[0]);
  if (!(m < Real(1))) throw NotStrictlyInside(static_cast<std::size_t>(n), static_cast<double>(m));
  const Complex<Real> a = -std::conj(phi_n[0]);
  const Real rho2 = Real(1) - std::norm(a);
  ComplexPoly<Real> bracket = phi_n.padded(n) + reversed(phi_n.padded(n), n) * std::conj(a);
  bracket[0] = Complex<Real>(0);  // vanishes analytically; remove the rounding residue
  CVector<Real> lower = bracket.coeffs().tail(n) / rho2;
  return {a, ComplexPoly<Real>(std::move(lower))};
}

/// Levinson-style extraction of alpha_0..alpha_{N-1} from c_0..c_N:
/// conj(alpha_n) ||Phi_n||^2 = <1, z Phi_n>, then Szegő recursion for Phi_{n+1}.
template <typename Real>
VerblunskySeq<Real> verblunsky_from_moments(const MomentSeq<Real>& c, Eigen::Index n_coeffs,
                                            Real tol = Real(1e-12), Eigen::Index hard_cap = 64) {
  if (n_coeffs < 0) throw DomainError("verblunsky_from_moments: negative count");
  if (n_coeffs > hard_cap)
    throw RangeError("verblunsky_from_moments: N exceeds the hard cap of " + std::to_string(hard_cap));
  if (c.max_index() < n_coeffs) throw RangeError("verblunsky_from_moments: need moments through index N");
  CVector<Real> alphas(n_coeffs);
  ComplexPoly<Real> phi = ComplexPoly<Real>::constant(Real(1));
  ComplexPoly<Real> phi_star = phi;
  Real norm2(1);
  for (Eigen::Index n = 0; n < n_coeffs; ++n) {
    Complex<Real> s(0);
    for (Eigen::Index k = 0; k <= n; ++k) s += std::conj(phi[k]) * c(k + 1);
    const Complex<Real> a = s / norm2;
    const Real m = std::abs(a);
    if (m > Real(1) + tol)
      throw NotPositiveDefinite("verblunsky_from_moments: |alpha_" + std::to_string(n) + "| > 1");
    if (m >= Real(1) - tol) throw NotStrictlyInside(static_cast<std::size_t>(n), static_cast<double>(m));
    alphas(n) = a;
    const ComplexPoly<Real> zphi = phi.shifted(1);
    ComplexPoly<Real> next = zphi - phi_star.padded(n + 1) * std::conj(a);
    phi_star = phi_star.padded(n + 1) - zphi * a;
    phi = std::move(next);
    norm2 *= Real(1) - std::norm(a);
  }
  return VerblunskySeq<Real>(std::move(alphas));
}

/// Moments c_0..c_N of any measure whose first N Verblunsky coefficients are
/// alpha (Verblunsky's formula run forward; exact, no quadrature).
template <typename Real>
MomentSeq<Real> moments_from_verblunsky(const VerblunskySeq<Real>& alpha, Eigen::Index n_moments) {
  if (n_moments > alpha.size()) throw RangeError("moments_from_verblunsky: need N coefficients for c_N");
  CVector<Real> c = CVector<Real>::Zero(n_moments + 1);
  c(0) = Complex<Real>(1);
  ComplexPoly<Real> phi = ComplexPoly<Real>::constant(Real(1));
  ComplexPoly<Real> phi_star = phi;
  Real norm2(1);
  for (Eigen::Index n = 0; n < n_moments; ++n) {
    const Complex<Real> a = alpha[n];
    Complex<Real> s = a * norm2;
    for (Eigen::Index k = 0; k < n; ++k) s -= std::conj(phi[k]) * c(k + 1);
    c(n + 1) = s;  // Phi_n is monic
    const ComplexPoly<Real> zphi = phi.shifted(1);
    ComplexPoly<Real> next = zphi - phi_star.padded(n + 1) * std::conj(a);
    phi_star = phi_star.padded(n + 1) - zphi * a;
    phi = std::move(next);
    norm2 *= Real(1) - std::norm(a);
  }
  return MomentSeq<Real>(std::move(c));
}

/// (phi_n(z), phi_n^*(z)) by the orthonormal recursion (phi, phi^*) <- A(z, alpha_j)(phi, phi^*).
template <typename Real>
std::pair<Complex<Real>, Complex<Real>> eval_orthonormal(const VerblunskySeq<Real>& alpha, Eigen::Index n,
                                                         Complex<Real> z) {
  Complex<Real> u(1), v(1);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex<Real> a = alpha[j];
    const Real rho = alpha.rho(j);
    if (rho == Real(0)) throw DomainError("eval_orthonormal: unimodular coefficient");
    const Complex<Real> nu = (z * u - std::conj(a) * v) / rho;
    const Complex<Real> nv = (v - a * z * u) / rho;
    u = nu;
    v = nv;
  }
  return {u, v};
}

/// Christoffel-Darboux kernel K_n(z, zeta) = sum_{j<=n} conj(phi_j(zeta)) phi_j(z).
/// Uses the closed form [conj(phi*_{n+1}(zeta)) phi*_{n+1}(z) - conj(phi_{n+1}(zeta)) phi_{n+1}(z)] / (1 - z conj(zeta))
/// away from z conj(zeta) = 1, direct summation otherwise.
template <typename Real>
Complex<Real> cd_kernel(const VerblunskySeq<Real>& alpha, Eigen::Index n, Complex<Real> z, Complex<Real> zeta,
                        Real singular_tol = Real(1e-6)) {
  if (n < 0 || n >= alpha.size()) throw RangeError("cd_kernel: need alpha_0..alpha_n");
  const Complex<Real> denom = Complex<Real>(1) - z * std::conj(zeta);
  if (std::abs(denom) > singular_tol) {
    const auto [pz, psz] = eval_orthonormal(alpha, n + 1, z);
    const auto [pw, psw] = eval_orthonormal(alpha, n + 1, zeta);
    return (std::conj(psw) * psz - std::conj(pw) * pz) / denom;
  }
  Complex<Real> s(0);
  for (Eigen::Index j = 0; j <= n; ++j) {
    s += std::conj(eval_orthonormal(alpha, j, zeta).first) * eval_orthonormal(alpha, j, z).first;
  }
  return s;
}

}  // namespace opuc

#endif  // OPUC_SZEGO_HPP
