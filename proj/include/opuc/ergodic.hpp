#ifndef OPUC_ERGODIC_HPP
#define OPUC_ERGODIC_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "opuc/verblunsky.hpp"

namespace opuc {

enum class ErgodicKind { IidUniformDisk, FixedSequence, AlmostPeriodic, Sparse };

/// Generators of Verblunsky sequences along an orbit.
struct ErgodicSpec {
  ErgodicKind kind = ErgodicKind::IidUniformDisk;
  double radius = 0.5;      // iid: disk radius; almost-periodic: amplitude; sparse: bump size
  double frequency = 0.0;   // almost-periodic: alpha_j = radius e^{2 pi i (frequency j + phase)}
  double phase = 0.0;
  std::vector<std::complex<double>> sequence;  // fixed: repeated periodically
  std::vector<Eigen::Index> pattern;           // sparse: nonzero positions
  Eigen::Index length = 1000;
  std::uint64_t seed = 42;

  VerblunskySeq<double> generate(Eigen::Index n) const;
};

/// (1/n) log ||T_n(z)||_2, renormalizing every 32 steps.
double lyapunov(const VerblunskySeq<double>& alpha, std::complex<double> z, Eigen::Index n);
double lyapunov(const ErgodicSpec& spec, std::complex<double> z, Eigen::Index n);

/// (n, (1/n) log ||T_n||) at the given checkpoints.
std::vector<std::pair<Eigen::Index, double>> lyapunov_series(const VerblunskySeq<double>& alpha, std::complex<double> z,
                                                             const std::vector<Eigen::Index>& checkpoints);

/// Density-of-zeros description for the right side of the Thouless formula.
struct NuSpec {
  std::vector<std::pair<double, double>> atoms;  // (theta, mass)
  Eigen::VectorXd density;                       // samples on theta_k = 2 pi k / M against d theta / 2 pi
  static NuSpec uniform(Eigen::Index m = 4096) { return {{}, Eigen::VectorXd::Ones(m)}; }
};

/// -log rho_inf + int log|e^{i theta} - z| d nu.
double thouless_rhs(const NuSpec& nu, double rho_inf, std::complex<double> z);

/// Geometric mean of rho_0..rho_{n-1}.
double rho_infinity(const VerblunskySeq<double>& alpha);

/// Mean and standard deviation of |zeros of Phi_n|.
std::pair<double, double> mhaskar_saff_check(const VerblunskySeq<double>& alpha, Eigen::Index n);

}  // namespace opuc

#endif  // OPUC_ERGODIC_HPP
