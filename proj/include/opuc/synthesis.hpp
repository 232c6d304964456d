#ifndef OPUC_SYNTHESIS_HPP
#define OPUC_SYNTHESIS_HPP

#include <algorithm>

#include "opuc/circle_measure.hpp"
#include "opuc/cmv.hpp"
#include "opuc/quadrature.hpp"
#include "opuc/verblunsky.hpp"

namespace opuc {

/// d theta / (2 pi |phi_n(e^{i theta})|^2) on an M-point grid (M >= 64 n).
CircleMeasure bernstein_szego(const VerblunskySeq<double>& alpha, Eigen::Index n, Eigen::Index grid_size = 1024);

/// F(z, d mu_n) = psi_n^*(z) / phi_n^*(z).
std::complex<double> bs_caratheodory(const VerblunskySeq<double>& alpha, Eigen::Index n, std::complex<double> z);

/// alpha_j -> lambda alpha_j, |lambda| = 1.
VerblunskySeq<double> aleksandrov(const VerblunskySeq<double>& alpha, std::complex<double> lambda);

/// (1/L) sum_k c_m(mu_{lambda_k}), lambda_k = e^{2 pi i k / L}; alpha is continued by zeros.
std::complex<double> aleksandrov_average(const VerblunskySeq<double>& alpha, Eigen::Index n_moment, Eigen::Index nodes);

/// Moments c_0..c_K of d theta / (2 pi |phi_n|^2) by composite Gauss-Legendre
/// on a mesh graded geometrically (ratio 4) toward the arguments of the zeros
/// of Phi_n. The weight has peaks of width ~ 1 - |zero| there, which no
/// practical uniform grid resolves once zeros approach the circle.
template <typename Real>
MomentSeq<Real> bernstein_szego_moments(const VerblunskySeq<Real>& alpha, Eigen::Index n, Eigen::Index k_max,
                                        Eigen::Index nodes = 24) {
  if (n < 0 || n > alpha.size()) throw RangeError("bernstein_szego_moments: need n <= N");
  if (k_max < 0) throw DomainError("bernstein_szego_moments: negative moment index");
  const Real pi = std::acos(Real(-1)), two_pi = 2 * pi;
  const OpucFamily<Real> fam = szego_forward(alpha.prefix(n));
  const ComplexPoly<Real>& phi = fam.phi[n];
  const Real norm2 = fam.norms[n] * fam.norms[n];

  std::vector<Real> cuts{Real(0), two_pi};
  if (n > 0) {
    Eigen::VectorXcd ad(n);
    for (Eigen::Index j = 0; j < n; ++j) ad(j) = {double(alpha[j].real()), double(alpha[j].imag())};
    for (const auto& z : phi_zeros(VerblunskySeq<double>(ad), n)) {
      const Real t0 = Real(std::arg(z));
      const Real d = std::max(Real(1) - Real(std::abs(z)), Real(1e-15));
      cuts.push_back(std::fmod(t0 + two_pi, two_pi));
      for (Real s = d; s < pi; s *= 4) {
        cuts.push_back(std::fmod(t0 + s + two_pi, two_pi));
        cuts.push_back(std::fmod(t0 - s + 2 * two_pi, two_pi));
      }
    }
  }
  std::sort(cuts.begin(), cuts.end());
  // cap panel length so e^{-ik theta} stays resolved
  std::vector<Real> mesh;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const Real a = cuts[i], b = cuts[i + 1];
    if (!(b > a)) continue;
    const int pieces = std::max(1, int(std::ceil((b - a) * Real(std::max<Eigen::Index>(k_max, 4)) / Real(2))));
    for (int p = 0; p < pieces; ++p) mesh.push_back(a + (b - a) * Real(p) / Real(pieces));
  }
  mesh.push_back(two_pi);

  std::vector<Real> gx, gw;
  gauss_legendre(nodes, gx, gw);
  CVector<Real> c = CVector<Real>::Zero(k_max + 1);
  for (std::size_t i = 0; i + 1 < mesh.size(); ++i) {
    const Real a = mesh[i], h = (mesh[i + 1] - a) / 2;
    for (Eigen::Index q = 0; q < nodes; ++q) {
      const Complex<Real> z = std::polar(Real(1), a + h * (gx[q] + Real(1)));
      const Real wt = h * gw[q] * norm2 / (std::norm(phi(z)) * two_pi);
      Complex<Real> e(wt);
      for (Eigen::Index k = 0; k <= k_max; ++k) {
        c(k) += e;
        e *= std::conj(z);
      }
    }
  }
  return MomentSeq<Real>(CVector<Real>(c / c(0).real()));
}

/// Caratheodory function of the Aleksandrov member from F:
/// F_lambda = [(1 - lambda) + (1 + lambda) F] / [(1 + lambda) + (1 - lambda) F].
std::complex<double> aleksandrov_caratheodory(std::complex<double> f_value, std::complex<double> lambda);

/// int_0^{2 pi} [(1 - e^{i t}) + (1 + e^{i t}) a] / [(1 + e^{i t}) + (1 - e^{i t}) a] dt / 2 pi for Re a > 0.
std::complex<double> mobius_mean(std::complex<double> a, Eigen::Index nodes = 4096);

/// max_{k <= n} |c_k(mu) - c_k(mu_n)| with mu_n the Bernstein-Szego approximation of mu.
double bs_moment_deviation(const CircleMeasure& mu, Eigen::Index n);

/// Point measure of a finite CMV matrix whose last coefficient is unimodular:
/// atoms at the eigenvalues, masses |v_k(0)|^2.
CircleMeasure spectral_measure(const VerblunskySeq<double>& alpha, Eigen::Index n);

/// Verblunsky coefficients of a Haar-random n x n unitary's CMV model:
/// |alpha_j|^2 = 1 - U^{1/(n-j-1)} with uniform phase, alpha_{n-1} uniform on the circle.
VerblunskySeq<double> haar_sample(Eigen::Index n, std::uint64_t seed);

}  // namespace opuc

#endif  // OPUC_SYNTHESIS_HPP
