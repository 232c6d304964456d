#ifndef OPUC_ASYMPTOTICS_HPP
#define OPUC_ASYMPTOTICS_HPP

#include <optional>
#include <vector>

#include "opuc/circle_measure.hpp"
#include "opuc/verblunsky.hpp"

namespace opuc {

/// det of the (n+1) x (n+1) Toeplitz matrix two ways: Cholesky and prod (1 - |alpha_j|^2)^{n-j}.
struct ToeplitzDet {
  double gram;
  double product_form;
};
ToeplitzDet toeplitz_det(const MomentSeq<double>& c, Eigen::Index n);

/// F = prod (1 - |alpha_j|^2), G = prod (1 - |alpha_j|^2)^{-j-1}; G flagged infinite past 1e12.
struct SzegoLimits {
  double f;
  double g;
  bool g_infinite;
};
SzegoLimits szego_limits(const VerblunskySeq<double>& alpha);

/// int log w d theta / 2 pi on the grid; -inf if some weight is below 1e-300.
double entropy(const CircleMeasure& mu);

struct SzegoSides {
  double lhs;
  double rhs;
};

/// lhs = prod_{j<N} (1 - |alpha_j(mu)|^2), rhs = exp(int log w).
SzegoSides szego_theorem_check(const CircleMeasure& mu, Eigen::Index n);

/// hat L_k = int e^{-i k theta} log w d theta / 2 pi for k = 0..K (FFT of log w).
Eigen::VectorXcd log_weight_fourier(const CircleMeasure& mu, Eigen::Index k_max);

/// D(z) = exp(hat L_0 / 2 + sum_{k>=1} hat L_k z^k), |z| < 1.
std::complex<double> szego_function(const CircleMeasure& mu, std::complex<double> z);

struct SzegoAsymptoticsRow {
  Eigen::Index n;
  double l2_distance;    // (int |phi_n^* - D^{-1}|^2 w + int |phi_n^*|^2 d mu_s)^{1/2}
  double singular_mass;  // int |phi_n|^2 d mu_s
  double sup_interior;   // max over samples |phi_n^*(z) - D(z)^{-1}|
};
std::vector<SzegoAsymptoticsRow> szego_asymptotics_report(const CircleMeasure& mu, Eigen::Index n,
                                                          const std::vector<std::complex<double>>& z_samples);

/// lhs = prod_{j<N} (1 - |alpha_j|^2)^{-j-1}, rhs = exp(sum_{1<=n<=M/4} n |hat L_n|^2). Rejects atoms.
SzegoSides strong_szego_check(const CircleMeasure& mu, Eigen::Index n);

/// Decay rate limsup |alpha_n|^{1/n} by least squares on the tail half, plus the
/// same estimate for the coefficients of Phi_N^* (the reciprocal of the radius of D^{-1}).
struct DecayRate {
  double rate;
  double phi_star_rate;
};
DecayRate nevai_totik_rate(const VerblunskySeq<double>& alpha);

/// Least-squares exp(slope) of log|v_k| against k over the nonzero entries of the tail half; 0 if the tail vanishes.
double geometric_rate(const Eigen::VectorXcd& v);

struct BaxterDiagnostics {
  double sum_alpha;  // sum_{n>=0} n^l |alpha_n|
  double sum_c;      // sum_{n>=1} n^l |c_n|
  double min_w;      // grid minimum of w (of mu if given, else of the Bernstein-Szego weight of alpha)
};
BaxterDiagnostics baxter_diagnostics(const VerblunskySeq<double>& alpha, const MomentSeq<double>& c, int ell,
                                     const std::optional<CircleMeasure>& mu = std::nullopt);

}  // namespace opuc

#endif  // OPUC_ASYMPTOTICS_HPP
