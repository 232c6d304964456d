#include "opuc/ergodic.hpp"

#include "opuc/rng.hpp"
#include "opuc/transfer.hpp"

namespace opuc {

namespace {

double spectral_norm(const Mat2<double>& m) {
  const Mat2<double> h = m.adjoint() * m;
  const double tr = h.trace().real();
  const double det = std::max(0.0, h.determinant().real());
  return std::sqrt(0.5 * (tr + std::sqrt(std::max(0.0, tr * tr - 4.0 * det))));
}

}  // namespace

VerblunskySeq<double> ErgodicSpec::generate(Eigen::Index n) const {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(n);
  CounterRng rng(seed);
  switch (kind) {
    case ErgodicKind::IidUniformDisk:
      if (!(radius < 1.0)) throw DomainError("ErgodicSpec: iid radius must be < 1");
      for (Eigen::Index j = 0; j < n; ++j) a(j) = rng.disk(radius);
      break;
    case ErgodicKind::FixedSequence:
      if (sequence.empty()) throw DomainError("ErgodicSpec: empty fixed sequence");
      for (Eigen::Index j = 0; j < n; ++j) a(j) = sequence[j % sequence.size()];
      break;
    case ErgodicKind::AlmostPeriodic:
      for (Eigen::Index j = 0; j < n; ++j) a(j) = std::polar(radius, 2.0 * M_PI * (frequency * double(j) + phase));
      break;
    case ErgodicKind::Sparse:
      for (Eigen::Index p : pattern)
        if (p >= 0 && p < n) a(p) = radius;
      break;
  }
  return VerblunskySeq<double>(std::move(a));
}

std::vector<std::pair<Eigen::Index, double>> lyapunov_series(const VerblunskySeq<double>& alpha, std::complex<double> z,
                                                             const std::vector<Eigen::Index>& checkpoints) {
  std::vector<std::pair<Eigen::Index, double>> out;
  Mat2<double> t = Mat2<double>::Identity();
  double log_scale = 0.0;
  std::size_t next = 0;
  const Eigen::Index n_max = checkpoints.empty() ? 0 : *std::max_element(checkpoints.begin(), checkpoints.end());
  if (n_max > alpha.size()) throw RangeError("lyapunov: need n <= N");
  for (Eigen::Index j = 0; j <= n_max; ++j) {
    while (next < checkpoints.size() && checkpoints[next] == j) {
      if (j < 1) throw DomainError("lyapunov: n must be >= 1");
      out.emplace_back(j, (log_scale + std::log(spectral_norm(t))) / double(j));
      ++next;
    }
    if (j == n_max) break;
    t = step_matrix(z, alpha[j]) * t;
    if ((j + 1) % 32 == 0) {
      const double s = t.cwiseAbs().maxCoeff();
      t /= s;
      log_scale += std::log(s);
    }
  }
  return out;
}

double lyapunov(const VerblunskySeq<double>& alpha, std::complex<double> z, Eigen::Index n) {
  if (n < 1) throw DomainError("lyapunov: n must be >= 1");
  return lyapunov_series(alpha, z, {n}).front().second;
}

double lyapunov(const ErgodicSpec& spec, std::complex<double> z, Eigen::Index n) {
  return lyapunov(spec.generate(n), z, n);
}

double thouless_rhs(const NuSpec& nu, double rho_inf, std::complex<double> z) {
  if (!(rho_inf > 0.0 && rho_inf <= 1.0)) throw DomainError("thouless_rhs: rho_inf must lie in (0, 1]");
  const double r = std::abs(z);
  if (std::abs(r - 1.0) < 1e-12) throw DomainError("thouless_rhs: z on the unit circle");
  if (std::abs(r - 1.0) < 1e-3) z *= (r < 1.0 ? 1.0 - 1e-3 : 1.0 + 1e-3) / r;
  double mass = 0.0, acc = 0.0;
  const Eigen::Index m = nu.density.size();
  for (Eigen::Index k = 0; k < m; ++k) {
    const double d = nu.density(k) / double(m);
    if (d == 0.0) continue;
    mass += d;
    acc += d * std::log(std::abs(std::polar(1.0, 2.0 * M_PI * double(k) / double(m)) - z));
  }
  for (const auto& [theta, w] : nu.atoms) {
    mass += w;
    acc += w * std::log(std::abs(std::polar(1.0, theta) - z));
  }
  if (!(mass > 0.0)) throw DomainError("thouless_rhs: empty density of zeros");
  return -std::log(rho_inf) + acc / mass;
}

double rho_infinity(const VerblunskySeq<double>& alpha) {
  if (alpha.empty()) return 1.0;
  double s = 0.0;
  for (Eigen::Index j = 0; j < alpha.size(); ++j) s += std::log(alpha.rho(j));
  return std::exp(s / double(alpha.size()));
}

std::pair<double, double> mhaskar_saff_check(const VerblunskySeq<double>& alpha, Eigen::Index n) {
  const auto zeros = phi_zeros(alpha, n);
  double mean = 0.0;
  for (const auto& z : zeros) mean += std::abs(z);
  mean /= double(zeros.size());
  double var = 0.0;
  for (const auto& z : zeros) var += (std::abs(z) - mean) * (std::abs(z) - mean);
  return {mean, std::sqrt(var / double(zeros.size()))};
}

}  // namespace opuc
