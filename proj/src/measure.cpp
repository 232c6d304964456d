#include <unsupported/Eigen/FFT>
#include <algorithm>

#include "opuc/cmv.hpp"
#include "opuc/rng.hpp"
#include "opuc/synthesis.hpp"

namespace opuc {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

double wrap_angle(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;
  return t;
}

}  // namespace

Eigen::VectorXcd grid_values(const Eigen::VectorXcd& p, Eigen::Index m) {
  if (p.size() > m) throw DomainError("grid_values: degree exceeds grid");
  std::vector<std::complex<double>> in(m, 0.0), out;
  for (Eigen::Index j = 0; j < p.size(); ++j) in[j] = p(j);
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  fft.inv(out, in);
  return Eigen::Map<Eigen::VectorXcd>(out.data(), m);
}

CircleMeasure::CircleMeasure(Eigen::Index grid_size, Eigen::VectorXd ac_weight, std::vector<PointMass> atoms)
    : m_(grid_size), w_(std::move(ac_weight)), atoms_(std::move(atoms)) {
  if (m_ < 1) throw DomainError("CircleMeasure: grid_size must be positive");
  if (w_.size() != m_) throw DomainError("CircleMeasure: ac_weight must have grid_size entries");
  for (Eigen::Index k = 0; k < m_; ++k)
    if (!(w_(k) >= 0.0) || !std::isfinite(w_(k))) throw DomainError("CircleMeasure: weights must be finite and >= 0");
  for (auto& a : atoms_) {
    if (!(a.mass > 0.0) || !std::isfinite(a.mass)) throw DomainError("CircleMeasure: point masses must be > 0");
    a.theta = wrap_angle(a.theta);
  }
  std::sort(atoms_.begin(), atoms_.end(), [](const PointMass& x, const PointMass& y) { return x.theta < y.theta; });
  for (std::size_t i = 0; i + 1 < atoms_.size(); ++i)
    if (atoms_[i + 1].theta - atoms_[i].theta < 1e-14) throw DomainError("CircleMeasure: duplicate atom angle");
  const double total = ac_mass() + singular_mass();
  if (!(total > 0.0)) throw DomainError("CircleMeasure: zero total mass");
  w_ /= total;
  for (auto& a : atoms_) a.mass /= total;
}

double CircleMeasure::singular_mass() const {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.mass;
  return s;
}

CircleMeasure CircleMeasure::uniform(Eigen::Index grid_size) {
  return CircleMeasure(grid_size, Eigen::VectorXd::Ones(grid_size), {});
}

CircleMeasure CircleMeasure::point(double theta, Eigen::Index grid_size) {
  return CircleMeasure(grid_size, Eigen::VectorXd::Zero(grid_size), {{theta, 1.0}});
}

CircleMeasure CircleMeasure::from_weight(const std::function<double(double)>& w, Eigen::Index grid_size,
                                         std::vector<PointMass> atoms) {
  Eigen::VectorXd v(grid_size);
  for (Eigen::Index k = 0; k < grid_size; ++k) v(k) = w(kTwoPi * double(k) / double(grid_size));
  return CircleMeasure(grid_size, std::move(v), std::move(atoms));
}

MomentSeq<double> moments(const CircleMeasure& mu, Eigen::Index n) {
  if (n < 0) throw DomainError("moments: N must be >= 0");
  const Eigen::Index m = mu.grid_size();
  Eigen::VectorXcd c = Eigen::VectorXcd::Zero(n + 1);
  if (mu.has_ac()) {
    if (2 * n >= m) throw AliasingError("moments: N >= grid_size/2 cannot be resolved by the grid");
    std::vector<std::complex<double>> in(m), out;
    for (Eigen::Index k = 0; k < m; ++k) in[k] = mu.ac_weight()(k);
    Eigen::FFT<double> fft;
    fft.fwd(out, in);
    for (Eigen::Index j = 0; j <= n; ++j) c(j) = out[j] / double(m);
  }
  for (const auto& a : mu.atoms())
    for (Eigen::Index j = 0; j <= n; ++j) c(j) += a.mass * std::polar(1.0, -double(j) * a.theta);
  if (std::abs(c(0) - 1.0) > 1e-10) throw DomainError("moments: measure is not normalized");
  c(0) = 1.0;
  return MomentSeq<double>(std::move(c));
}

std::complex<double> caratheodory_integral(const CircleMeasure& mu, std::complex<double> z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("caratheodory_integral: |z| must be < 1");
  const Eigen::Index m = mu.grid_size();
  std::complex<double> acc = 0.0;
  for (Eigen::Index k = 0; k < m; ++k) {
    const double w = mu.ac_weight()(k);
    if (w == 0.0) continue;
    const auto e = std::polar(1.0, mu.theta(k));
    acc += w * (e + z) / (e - z);
  }
  acc /= double(m);
  for (const auto& a : mu.atoms()) {
    const auto e = std::polar(1.0, a.theta);
    acc += a.mass * (e + z) / (e - z);
  }
  return acc;
}

CircleMeasure measure_from_caratheodory(const PowerSeries<double>& f_cara, Eigen::Index grid_size, double r) {
  if (r <= 0.0) r = 1.0 - 10.0 / double(grid_size);
  if (!(r > 0.0 && r < 1.0)) throw DomainError("measure_from_caratheodory: need 0 < r < 1");
  if (grid_size <= f_cara.order()) throw DomainError("measure_from_caratheodory: grid smaller than series order");
  Eigen::VectorXcd scaled = f_cara.coeffs();
  double rk = 1.0;
  for (Eigen::Index k = 0; k < scaled.size(); ++k, rk *= r) scaled(k) *= rk;
  const Eigen::VectorXcd vals = grid_values(scaled, grid_size);
  Eigen::VectorXd w = vals.real();
  const double top = w.cwiseAbs().maxCoeff();
  for (Eigen::Index k = 0; k < grid_size; ++k) {
    if (w(k) < -1e-9 * std::max(top, 1.0))
      throw DomainError("measure_from_caratheodory: Re F < 0 on the circle of radius r");
    w(k) = std::max(w(k), 0.0);
  }
  return CircleMeasure(grid_size, std::move(w), {});
}

PowerSeries<double> schur_series(const CircleMeasure& mu, Eigen::Index order) {
  return schur_from_caratheodory(caratheodory_series(moments(mu, order + 1), order + 1));
}

CircleMeasure bernstein_szego(const VerblunskySeq<double>& alpha, Eigen::Index n, Eigen::Index grid_size) {
  if (n < 0 || n > alpha.size()) throw RangeError("bernstein_szego: need 0 <= n <= N");
  if (n == 0) return CircleMeasure::uniform(grid_size);
  if (grid_size < 64 * n) throw DomainError("bernstein_szego: grid_size must be >= 64 n");
  const ComplexPoly<double> phi = szego_forward(alpha.prefix(n)).orthonormal(n);
  const Eigen::VectorXcd vals = grid_values(phi.coeffs(), grid_size);
  Eigen::VectorXd w(grid_size);
  for (Eigen::Index k = 0; k < grid_size; ++k) w(k) = 1.0 / std::norm(vals(k));
  return CircleMeasure(grid_size, std::move(w), {});
}

std::complex<double> bs_caratheodory(const VerblunskySeq<double>& alpha, Eigen::Index n, std::complex<double> z) {
  if (!(std::abs(z) < 1.0)) throw DomainError("bs_caratheodory: |z| must be < 1");
  const auto phis = eval_orthonormal(alpha, n, z).second;
  const auto psis = eval_orthonormal(alpha.rotated(-1.0), n, z).second;
  return psis / phis;
}

VerblunskySeq<double> aleksandrov(const VerblunskySeq<double>& alpha, std::complex<double> lambda) {
  if (std::abs(std::abs(lambda) - 1.0) > 1e-12) throw DomainError("aleksandrov: |lambda| must be 1");
  return alpha.rotated(lambda);
}

std::complex<double> aleksandrov_average(const VerblunskySeq<double>& alpha, Eigen::Index n_moment, Eigen::Index nodes) {
  if (nodes < 8) throw DomainError("aleksandrov_average: need at least 8 nodes");
  if (n_moment < 0) throw DomainError("aleksandrov_average: negative moment index");
  if (n_moment == 0) return 1.0;
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(std::max(n_moment, alpha.size()));
  a.head(alpha.size()) = alpha.alphas();
  const VerblunskySeq<double> ext(std::move(a), false);
  std::complex<double> acc = 0.0;
  for (Eigen::Index k = 0; k < nodes; ++k) {
    const auto lam = std::polar(1.0, kTwoPi * double(k) / double(nodes));
    acc += moments_from_verblunsky(ext.rotated(lam), n_moment)(n_moment);
  }
  return acc / double(nodes);
}

std::complex<double> aleksandrov_caratheodory(std::complex<double> f_value, std::complex<double> lambda) {
  return ((1.0 - lambda) + (1.0 + lambda) * f_value) / ((1.0 + lambda) + (1.0 - lambda) * f_value);
}

std::complex<double> mobius_mean(std::complex<double> a, Eigen::Index nodes) {
  if (!(a.real() > 0.0)) throw DomainError("mobius_mean: need Re a > 0");
  std::complex<double> acc = 0.0;
  for (Eigen::Index k = 0; k < nodes; ++k) acc += aleksandrov_caratheodory(a, std::polar(1.0, kTwoPi * (k + 0.5) / double(nodes)));
  return acc / double(nodes);
}

double bs_moment_deviation(const CircleMeasure& mu, Eigen::Index n) {
  const MomentSeq<double> c = moments(mu, n);
  const VerblunskySeq<double> a = verblunsky_from_moments(c, n);
  const CircleMeasure mun = bernstein_szego(a, n, std::max(mu.grid_size(), 64 * std::max<Eigen::Index>(n, 1)));
  return (c.values() - moments(mun, n).values()).cwiseAbs().maxCoeff();
}

CircleMeasure spectral_measure(const VerblunskySeq<double>& alpha, Eigen::Index n) {
  if (!alpha.terminal()) throw NotUnitary("spectral_measure: last coefficient must be unimodular");
  if (n != alpha.size()) throw RangeError("spectral_measure: N must equal the sequence length");
  const CMatrix<double> c = build_cmv(alpha, n).dense;
  Eigen::ComplexEigenSolver<CMatrix<double>> es(c, true);
  if (es.info() != Eigen::Success) throw ConvergenceError("spectral_measure: eigensolver failed", es.getMaxIterations());
  std::vector<PointMass> atoms;
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto v = es.eigenvectors().col(k);
    atoms.push_back({std::arg(es.eigenvalues()(k)), std::norm(v(0)) / v.squaredNorm()});
  }
  return CircleMeasure(1024, Eigen::VectorXd::Zero(1024), std::move(atoms));
}

VerblunskySeq<double> haar_sample(Eigen::Index n, std::uint64_t seed) {
  if (n < 1) throw DomainError("haar_sample: n must be >= 1");
  CounterRng rng(seed);
  Eigen::VectorXcd a(n);
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    const double k = double(n - j - 1);
    const double u = 1.0 - rng.uniform();  // (0, 1]
    const double r2 = 1.0 - std::pow(u, 1.0 / k);
    a(j) = std::polar(std::sqrt(r2), kTwoPi * rng.uniform());
  }
  a(n - 1) = std::polar(1.0, kTwoPi * rng.uniform());
  return VerblunskySeq<double>(std::move(a), true);
}

}  // namespace opuc
