#include "opuc/asymptotics.hpp"

#include <unsupported/Eigen/FFT>
#include <limits>

#include <Eigen/Cholesky>

#include "opuc/synthesis.hpp"
#include "opuc/szego.hpp"

namespace opuc {

ToeplitzDet toeplitz_det(const MomentSeq<double>& c, Eigen::Index n) {
  if (n < 0) throw DomainError("toeplitz_det: n must be >= 0");
  if (c.max_index() < n) throw RangeError("toeplitz_det: need moments through index n");
  Eigen::LLT<Eigen::MatrixXcd> llt(c.toeplitz(n));
  if (llt.info() != Eigen::Success) throw NotPositiveDefinite("toeplitz_det: Toeplitz matrix is not positive definite");
  double gram = 1.0;
  const Eigen::MatrixXcd l = llt.matrixL();
  for (Eigen::Index k = 0; k <= n; ++k) gram *= std::norm(l(k, k));
  const VerblunskySeq<double> a = verblunsky_from_moments(c, n);
  double prod = 1.0;
  for (Eigen::Index j = 0; j < n; ++j) prod *= std::pow(1.0 - std::norm(a[j]), double(n - j));
  return {gram, prod};
}

SzegoLimits szego_limits(const VerblunskySeq<double>& alpha) {
  double log_f = 0.0, log_g = 0.0;
  bool inf = false;
  for (Eigen::Index j = 0; j < alpha.size(); ++j) {
    const double r2 = 1.0 - std::norm(alpha[j]);
    if (r2 <= 0.0) {
      log_f = -std::numeric_limits<double>::infinity();
      inf = true;
      break;
    }
    log_f += std::log(r2);
    log_g -= double(j + 1) * std::log(r2);
    if (log_g > std::log(1e12)) inf = true;
  }
  return {std::exp(log_f), inf ? std::numeric_limits<double>::infinity() : std::exp(log_g), inf};
}

double entropy(const CircleMeasure& mu) {
  const Eigen::VectorXd& w = mu.ac_weight();
  double s = 0.0;
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    if (w(k) < 1e-300) return -std::numeric_limits<double>::infinity();
    s += std::log(w(k));
  }
  return s / double(w.size());
}

namespace {

double alpha_product(const VerblunskySeq<double>& a) {
  double p = 1.0;
  for (Eigen::Index j = 0; j < a.size(); ++j) p *= 1.0 - std::norm(a[j]);
  return p;
}

VerblunskySeq<double> alphas_of(const CircleMeasure& mu, Eigen::Index n) {
  return verblunsky_from_moments(moments(mu, n), n);
}

// log D on the grid: hat L_0 / 2 + sum_{1 <= k < M/2} hat L_k e^{i k theta}.
Eigen::VectorXcd log_szego_on_grid(const Eigen::VectorXcd& lhat, Eigen::Index m) {
  Eigen::VectorXcd p = lhat;
  p(0) *= 0.5;
  return grid_values(p, m);
}

}  // namespace

SzegoSides szego_theorem_check(const CircleMeasure& mu, Eigen::Index n) {
  const double lhs = alpha_product(alphas_of(mu, n));
  const double h = entropy(mu);
  return {lhs, std::isinf(h) ? 0.0 : std::exp(h)};
}

Eigen::VectorXcd log_weight_fourier(const CircleMeasure& mu, Eigen::Index k_max) {
  const Eigen::Index m = mu.grid_size();
  if (2 * k_max >= m) throw AliasingError("log_weight_fourier: K >= grid_size/2");
  std::vector<std::complex<double>> in(m), out;
  for (Eigen::Index k = 0; k < m; ++k) {
    const double w = mu.ac_weight()(k);
    if (w < 1e-300) throw DomainError("log_weight_fourier: weight vanishes on the grid");
    in[k] = std::log(w);
  }
  Eigen::FFT<double> fft;
  fft.fwd(out, in);
  Eigen::VectorXcd l(k_max + 1);
  for (Eigen::Index k = 0; k <= k_max; ++k) l(k) = out[k] / double(m);
  return l;
}

std::complex<double> szego_function(const CircleMeasure& mu, std::complex<double> z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("szego_function: |z| must be < 1");
  const Eigen::VectorXcd l = log_weight_fourier(mu, mu.grid_size() / 2 - 1);
  std::complex<double> acc = 0.0;
  for (Eigen::Index k = l.size() - 1; k >= 1; --k) acc = (acc + l(k)) * z;
  return std::exp(0.5 * l(0) + acc);
}

std::vector<SzegoAsymptoticsRow> szego_asymptotics_report(const CircleMeasure& mu, Eigen::Index n,
                                                          const std::vector<std::complex<double>>& z_samples) {
  const Eigen::Index m = mu.grid_size();
  const Eigen::VectorXcd l = log_weight_fourier(mu, m / 2 - 1);
  const Eigen::VectorXcd log_d = log_szego_on_grid(l, m);
  std::vector<std::complex<double>> dinv_samples;
  for (const auto& z : z_samples) dinv_samples.push_back(1.0 / szego_function(mu, z));
  const OpucFamily<double> fam = szego_forward(alphas_of(mu, n));
  std::vector<SzegoAsymptoticsRow> rows;
  for (Eigen::Index k = 0; k <= n; ++k) {
    const ComplexPoly<double> ps = fam.orthonormal_star(k);
    const ComplexPoly<double> p = fam.orthonormal(k);
    const Eigen::VectorXcd vals = grid_values(ps.coeffs(), m);
    double ac = 0.0;
    for (Eigen::Index j = 0; j < m; ++j) ac += std::norm(vals(j) - std::exp(-log_d(j))) * mu.ac_weight()(j);
    ac /= double(m);
    double sing = 0.0, sing_star = 0.0;
    for (const auto& a : mu.atoms()) {
      const auto e = std::polar(1.0, a.theta);
      sing += a.mass * std::norm(p(e));
      sing_star += a.mass * std::norm(ps(e));
    }
    double sup = 0.0;
    for (std::size_t i = 0; i < z_samples.size(); ++i) sup = std::max(sup, std::abs(ps(z_samples[i]) - dinv_samples[i]));
    rows.push_back({k, std::sqrt(ac + sing_star), sing, sup});
  }
  return rows;
}

SzegoSides strong_szego_check(const CircleMeasure& mu, Eigen::Index n) {
  if (!mu.atoms().empty()) throw DomainError("strong_szego_check: the measure has point masses");
  const VerblunskySeq<double> a = alphas_of(mu, n);
  double log_lhs = 0.0;
  for (Eigen::Index j = 0; j < n; ++j) log_lhs -= double(j + 1) * std::log(1.0 - std::norm(a[j]));
  const Eigen::VectorXcd l = log_weight_fourier(mu, mu.grid_size() / 4);
  double s = 0.0;
  for (Eigen::Index k = 1; k < l.size(); ++k) s += double(k) * std::norm(l(k));
  return {std::exp(log_lhs), std::exp(s)};
}

double geometric_rate(const Eigen::VectorXcd& v) {
  const Eigen::Index n = v.size();
  std::vector<std::pair<double, double>> pts;
  for (Eigen::Index k = n / 2; k < n; ++k)
    if (std::abs(v(k)) > 1e-300) pts.emplace_back(double(k), std::log(std::abs(v(k))));
  if (pts.empty()) return 0.0;
  if (pts.size() == 1) return pts[0].first > 0.0 ? std::exp(pts[0].second / pts[0].first) : 0.0;
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& [x, y] : pts) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = double(pts.size());
  return std::exp((k * sxy - sx * sy) / (k * sxx - sx * sx));
}

DecayRate nevai_totik_rate(const VerblunskySeq<double>& alpha) {
  if (alpha.size() < 8) throw DomainError("nevai_totik_rate: need at least 8 coefficients");
  const ComplexPoly<double> ps = szego_forward(alpha).phi_star.back();
  return {geometric_rate(alpha.alphas()), geometric_rate(ps.coeffs())};
}

BaxterDiagnostics baxter_diagnostics(const VerblunskySeq<double>& alpha, const MomentSeq<double>& c, int ell,
                                     const std::optional<CircleMeasure>& mu) {
  BaxterDiagnostics d{0.0, 0.0, 0.0};
  for (Eigen::Index j = 0; j < alpha.size(); ++j) d.sum_alpha += std::pow(double(j), ell) * std::abs(alpha[j]);
  for (Eigen::Index j = 1; j <= c.max_index(); ++j) d.sum_c += std::pow(double(j), ell) * std::abs(c(j));
  if (mu) {
    d.min_w = mu->ac_weight().minCoeff();
  } else {
    const Eigen::Index m = std::max<Eigen::Index>(1024, 64 * alpha.size());
    d.min_w = bernstein_szego(alpha, alpha.size(), m).ac_weight().minCoeff();
  }
  return d;
}

}  // namespace opuc
