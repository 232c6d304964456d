#ifndef OPUC_QUADRATURE_HPP
#define OPUC_QUADRATURE_HPP

#include <Eigen/Core>
#include <cmath>
#include <limits>
#include <vector>

namespace opuc {

/// Gauss-Legendre nodes and weights on [-1, 1] (Newton on P_n, symmetric fill).
template <typename Real>
void gauss_legendre(Eigen::Index n, std::vector<Real>& x, std::vector<Real>& w) {
  x.assign(n, Real(0));
  w.assign(n, Real(0));
  const Real pi = std::acos(Real(-1));
  for (Eigen::Index i = 0; i < (n + 1) / 2; ++i) {
    Real z = std::cos(pi * (Real(i) + Real(0.75)) / (Real(n) + Real(0.5)));
    Real dp(0);
    for (int it = 0; it < 100; ++it) {
      Real p0(1), p1 = z;
      for (Eigen::Index k = 2; k <= n; ++k) {
        const Real p2 = ((Real(2 * k) - 1) * z * p1 - Real(k - 1) * p0) / Real(k);
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = Real(1);
      dp = Real(n) * (z * p1 - p0) / (z * z - Real(1));
      const Real dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < std::numeric_limits<Real>::epsilon()) break;
    }
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = w[n - 1 - i] = Real(2) / ((Real(1) - z * z) * dp * dp);
  }
}

}  // namespace opuc

#endif  // OPUC_QUADRATURE_HPP
