#include "opuc/verify.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <future>
#include <sstream>

#include "opuc/asymptotics.hpp"
#include "opuc/caratheodory.hpp"
#include "opuc/ergodic.hpp"
#include "opuc/rng.hpp"
#include "opuc/schur.hpp"
#include "opuc/synthesis.hpp"
#include "opuc/transfer.hpp"

namespace opuc {

double RunConfig::tol(const std::string& check, double fallback) const {
  const auto it = tolerances.find(check);
  return it == tolerances.end() ? fallback : it->second;
}

void RunConfig::validate() const {
  if (grid_size < 64 || series_order < 1 || max_n < 1 || haar_samples < 2)
    throw DomainError("RunConfig: sizes must be positive (grid_size >= 64, haar_samples >= 2)");
  if (output_format != "json" && output_format != "csv") throw DomainError("RunConfig: format must be json or csv");
  for (const auto& [k, v] : tolerances)
    if (!(v > 0.0)) throw DomainError("RunConfig: tolerance for " + k + " must be > 0");
}

void RunConfig::merge(const json& j) {
  if (!j.is_object()) throw DomainError("config: expected a JSON object");
  if (j.contains("grid_size")) grid_size = j.at("grid_size").get<Eigen::Index>();
  if (j.contains("series_order")) series_order = j.at("series_order").get<Eigen::Index>();
  if (j.contains("max_n")) max_n = j.at("max_n").get<Eigen::Index>();
  if (j.contains("haar_samples")) haar_samples = j.at("haar_samples").get<Eigen::Index>();
  if (j.contains("seed")) seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("output_format")) output_format = j.at("output_format").get<std::string>();
  if (j.contains("tolerances"))
    for (const auto& [k, v] : j.at("tolerances").items()) tolerances[k] = v.get<double>();
}

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

bool SuiteReport::nonconvergence() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.nonconvergence; });
}

double SuiteReport::max_residual() const {
  double m = 0.0;
  for (const auto& c : checks) m = std::max(m, c.residual);
  return m;
}

json SuiteReport::to_json() const {
  json arr = json::array();
  for (const auto& c : checks) {
    json e = {{"name", c.name}, {"passed", c.passed}, {"residual", c.residual}, {"tolerance", c.tolerance}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  return {{"suite", suite}, {"passed", passed()}, {"max_residual", max_residual()}, {"checks", arr}};
}

std::string SuiteReport::to_csv() const {
  std::ostringstream os;
  os.precision(17);
  os << "name,passed,residual,tolerance\n";
  for (const auto& c : checks) os << c.name << ',' << (c.passed ? 1 : 0) << ',' << c.residual << ',' << c.tolerance << '\n';
  return os.str();
}

namespace {

using cd = std::complex<double>;
constexpr double kPi = EIGEN_PI;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) h = (h ^ ch) * 0x100000001b3ULL;
  return h;
}

class Recorder {
public:
  Recorder(const RunConfig& cfg, std::string suite) : cfg_(cfg), suite_(std::move(suite)) {}

  /// passes when residual <= tolerance
  void check(const std::string& name, double residual, double fallback, std::string detail = {}) {
    const std::string full = suite_ + "." + name;
    const double t = cfg_.tol(full, fallback);
    out_.push_back({full, std::isfinite(residual) && residual <= t, residual, t, std::move(detail)});
  }
  void expect(const std::string& name, bool ok, double value, double threshold, std::string detail = {}) {
    out_.push_back({suite_ + "." + name, ok, value, threshold, std::move(detail)});
  }
  template <typename F>
  void guarded(const std::string& name, F&& body) {
    try {
      body();
    } catch (const ConvergenceError& e) {
      out_.push_back({suite_ + "." + name, false, INFINITY, 0.0, e.what(), true});
    } catch (const std::exception& e) {
      out_.push_back({suite_ + "." + name, false, INFINITY, 0.0, e.what()});
    }
  }
  CounterRng rng(std::uint64_t salt = 0) const { return CounterRng(cfg_.seed ^ fnv1a(suite_) ^ (salt * 0x9e3779b97f4a7c15ULL)); }
  std::vector<CheckResult> take() { return std::move(out_); }

private:
  const RunConfig& cfg_;
  std::string suite_;
  std::vector<CheckResult> out_;
};

VerblunskySeq<double> random_alpha(CounterRng& rng, Eigen::Index n, double radius) {
  Eigen::VectorXcd a(n);
  for (Eigen::Index j = 0; j < n; ++j) a(j) = rng.disk(radius);
  return VerblunskySeq<double>(std::move(a));
}

VerblunskySeq<double> random_real_alpha(CounterRng& rng, Eigen::Index n, double radius) {
  Eigen::VectorXcd a(n);
  for (Eigen::Index j = 0; j < n; ++j) a(j) = rng.uniform(-radius, radius);
  return VerblunskySeq<double>(std::move(a));
}

/// alpha continued by zeros to length k (the Bernstein-Szego continuation).
VerblunskySeq<double> zero_padded(const VerblunskySeq<double>& alpha, Eigen::Index k) {
  if (alpha.size() >= k) return alpha;
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(k);
  a.head(alpha.size()) = alpha.alphas();
  return VerblunskySeq<double>(std::move(a));
}

Eigen::Index random_size(CounterRng& rng, Eigen::Index lo, Eigen::Index hi) {
  return lo + static_cast<Eigen::Index>(rng.next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
}

template <typename Ra, typename Rb>
double max_abs_diff(const CVector<Ra>& a, const CVector<Rb>& b) {
  using W = long double;
  const Eigen::Index n = std::max(a.size(), b.size());
  W m = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Complex<W> x = i < a.size() ? Complex<W>(a(i)) : Complex<W>(0), y = i < b.size() ? Complex<W>(b(i)) : Complex<W>(0);
    m = std::max(m, std::abs(x - y));
  }
  return double(m);
}

double max_abs_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) { return max_abs_diff<double, double>(a, b); }

/// Power-of-two grid on which the trapezoid rule resolves 1 / |phi_n|^2: the
/// integrand is analytic in an annulus of width ~ 1 - max|zero of Phi_n|.
Eigen::Index bs_grid(const VerblunskySeq<double>& alpha, Eigen::Index n, Eigen::Index base) {
  double r = 0.0;
  if (n > 0)
    for (const cd& z : phi_zeros(alpha, n)) r = std::max(r, std::abs(z));
  Eigen::Index m = 64;
  while (m < std::max(base, 64 * n) || (double(m) * (1.0 - r) < 40.0 && m < (Eigen::Index(1) << 20))) m *= 2;
  return m;
}

/// The measure w(theta) = 1 + 0.5 cos theta on the grid.
CircleMeasure smooth_measure(Eigen::Index m) {
  return CircleMeasure::from_weight([](double t) { return 1.0 + 0.5 * std::cos(t); }, m);
}

// ---------------------------------------------------------------------------

using ld = long double;

void suite_recursion(Recorder& r, const RunConfig& cfg) {
  r.guarded("roundtrip_bs_moments", [&] {
    CounterRng rng = r.rng(1);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
      const Eigen::Index n = random_size(rng, 1, 15);
      const auto alpha = random_alpha(rng, n, 0.9);
      const auto c = bernstein_szego_moments(alpha.cast<ld>(), n, n);
      worst = std::max(worst, max_abs_diff(verblunsky_from_moments(c, n).alphas(), alpha.alphas()));
    }
    r.check("roundtrip_bs_moments", worst, 1e-8, "200 random alpha, N <= 15, |alpha| <= 0.9");
  });
  r.guarded("bs_truncation", [&] {
    CounterRng rng = r.rng(2);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Index big = random_size(rng, 1, 10);
      const Eigen::Index n = random_size(rng, 0, big);
      const auto alpha = random_alpha(rng, big, 0.9);
      const Eigen::Index probe = big + 3;
      Eigen::VectorXcd want = Eigen::VectorXcd::Zero(probe);
      want.head(n) = alpha.alphas().head(n);
      const auto c = bernstein_szego_moments(alpha.cast<ld>(), n, probe);
      worst = std::max(worst, max_abs_diff(verblunsky_from_moments(c, probe).alphas(), want));
    }
    r.check("bs_truncation", worst, 1e-8, "alpha_j(mu_n) = alpha_j for j < n, 0 beyond");
  });
  r.guarded("norm_recursion", [&] {
    CounterRng rng = r.rng(3);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Eigen::Index n = random_size(rng, 1, 12);
      const auto alpha = random_alpha(rng, n, 0.9).cast<ld>();
      const auto fam = szego_forward(alpha);
      const auto c = moments_from_verblunsky(alpha, n);
      for (Eigen::Index k = 0; k <= n; ++k) {
        const ld direct = inner_product(fam.phi[k], fam.phi[k], c).real();
        worst = std::max(worst, double(std::abs(direct - fam.norms[k] * fam.norms[k]) / (fam.norms[k] * fam.norms[k])));
      }
    }
    r.check("norm_recursion", worst, 1e-10, "||Phi_n||^2 by inner products vs prod rho_j^2");
  });
  r.guarded("orthogonality", [&] {
    CounterRng rng = r.rng(4);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto alpha = random_alpha(rng, 10, 0.9);
      const auto fam = szego_forward(alpha.cast<ld>());
      const auto c = bernstein_szego_moments(alpha.cast<ld>(), 10, 20);
      for (Eigen::Index a = 0; a <= 10; ++a)
        for (Eigen::Index b = 0; b < a; ++b) worst = std::max(worst, double(std::abs(inner_product(fam.phi[a], fam.phi[b], c))));
    }
    r.check("orthogonality", worst, 1e-9);
  });
  r.guarded("phi_star_lower_bound", [&] {
    CounterRng rng = r.rng(5);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto alpha = random_alpha(rng, 12, 0.95);
      const cd z0 = rng.disk(1.0);
      for (Eigen::Index k = 0; k <= 12; ++k)
        worst = std::max(worst, std::sqrt(1.0 - std::norm(z0)) - std::abs(eval_orthonormal(alpha, k, z0).second));
    }
    r.check("phi_star_lower_bound", std::max(0.0, worst), 1e-12, "|phi_n^*(z)| >= (1 - |z|^2)^{1/2}");
  });
  r.guarded("inverse_recursion", [&] {
    CounterRng rng = r.rng(6);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Index n = random_size(rng, 1, 15);
      const auto alpha = random_alpha(rng, n, 0.9);
      ComplexPoly<ld> p = szego_forward(alpha.cast<ld>()).phi[n];
      for (Eigen::Index k = n; k >= 1; --k) {
        auto [a, prev] = inverse_szego_step(p, k);
        worst = std::max(worst, double(std::abs(a - Complex<ld>(alpha[k - 1]))));
        p = std::move(prev);
      }
    }
    r.check("inverse_recursion", worst, 1e-10, "Phi_N determines alpha_0..alpha_{N-1}");
  });
  r.guarded("reversal_involution", [&] {
    CounterRng rng = r.rng(7);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Eigen::Index n = random_size(rng, 0, 10);
      Eigen::VectorXcd c(n + 1);
      for (Eigen::Index k = 0; k <= n; ++k) c(k) = rng.disk(2.0);
      const ComplexPoly<double> p(c);
      worst = std::max(worst, coeff_distance(reversed(reversed(p, n), n), p));
    }
    r.check("reversal_involution", worst, 0.0 + 1e-300);
  });
  r.guarded("toeplitz_psd", [&] {
    CounterRng rng = r.rng(8);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto alpha = random_alpha(rng, 6, 0.9);
      const CircleMeasure bs = bernstein_szego(alpha, 6, cfg.grid_size);
      std::vector<PointMass> atoms{{rng.uniform(0, 2 * kPi), rng.uniform()}, {rng.uniform(0, 2 * kPi), rng.uniform()}};
      const CircleMeasure mu(bs.grid_size(), bs.ac_weight(), atoms);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(moments(mu, 12).toeplitz(12), Eigen::EigenvaluesOnly);
      worst = std::max(worst, -es.eigenvalues().minCoeff());
    }
    r.check("toeplitz_psd", std::max(0.0, worst), 1e-9, "minus the smallest Toeplitz eigenvalue");
  });
  r.guarded("caratheodory_uniform", [&] {
    CounterRng rng = r.rng(9);
    const auto c = moments(CircleMeasure::uniform(cfg.grid_size), 16);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) worst = std::max(worst, std::abs(caratheodory(c, rng.disk(0.9)) - 1.0));
    r.check("caratheodory_uniform", worst, 1e-12);
  });
  r.guarded("schur_caratheodory_inverse", [&] {
    CounterRng rng = r.rng(10);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const auto alpha = random_alpha(rng, 10, 0.9);
      const auto c = moments_from_verblunsky(zero_padded(alpha, cfg.series_order), cfg.series_order);
      const auto f_cara = caratheodory_series(c, cfg.series_order);
      const auto back = caratheodory_from_schur(schur_from_caratheodory(f_cara));
      worst = std::max(worst, max_abs_diff(back.coeffs(), f_cara.coeffs().head(back.coeffs().size())));
    }
    r.check("schur_caratheodory_inverse", worst, 1e-12);
  });
  r.guarded("caratheodory_positive", [&] {
    CounterRng rng = r.rng(11);
    double lowest = INFINITY;
    for (int i = 0; i < 20; ++i) {
      const auto alpha = random_alpha(rng, 5, 0.9);
      const CircleMeasure bs = bernstein_szego(alpha, 5, cfg.grid_size);
      const CircleMeasure mu(bs.grid_size(), bs.ac_weight() * rng.uniform(), {{rng.uniform(0, 2 * kPi), rng.uniform()}});
      for (int k = 0; k < 20; ++k) lowest = std::min(lowest, caratheodory_integral(mu, rng.disk(0.9)).real());
    }
    r.expect("caratheodory_positive", lowest > 0.0, lowest, 0.0, "min Re F over |z| <= 0.9");
  });
}

void suite_geronimus(Recorder& r, const RunConfig& cfg) {
  r.guarded("schur_parameters_pipeline", [&] {
    CounterRng rng = r.rng(1);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Index n = random_size(rng, 1, cfg.max_n);
      const auto alpha = random_alpha(rng, n, 0.9);
      const auto c = bernstein_szego_moments(alpha.cast<ld>(), n, n);
      const auto f = schur_from_caratheodory(caratheodory_series(c, n));
      worst = std::max(worst, max_abs_diff(schur_parameters(SchurFunction<ld>(f), n).alphas(), alpha.alphas()));
    }
    r.check("schur_parameters_pipeline", worst, 1e-8, "gamma_n = alpha_n, measure -> moments -> F -> f -> gamma");
  });
  r.guarded("shared_prefix_contraction", [&] {
    CounterRng rng = r.rng(2);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Eigen::Index n = random_size(rng, 1, 6);
      auto a = random_alpha(rng, n + 4, 0.8).alphas();
      auto b = a;
      for (Eigen::Index k = n; k < b.size(); ++k) b(k) = rng.disk(0.8);
      const auto wa = schur_approximant(VerblunskySeq<double>(a));
      const auto wb = schur_approximant(VerblunskySeq<double>(b));
      const auto d = rational_series(wa.a, wa.b, 12) - rational_series(wb.a, wb.b, 12);
      worst = std::max(worst, d.coeffs().head(n).cwiseAbs().maxCoeff());
    }
    r.check("shared_prefix_contraction", worst, 1e-14, "series of f and g agree below z^n when gamma_j agree for j < n");
  });
  r.guarded("approximant_parameters", [&] {
    CounterRng rng = r.rng(3);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Eigen::Index n = random_size(rng, 1, 8);
      const auto g = random_alpha(rng, n, 0.8);
      const auto w = schur_approximant(g);
      const Eigen::Index k = n + 6;
      Eigen::VectorXcd want = Eigen::VectorXcd::Zero(k);
      want.head(n) = g.alphas();
      worst = std::max(worst, max_abs_diff(schur_parameters(SchurFunction<double>(rational_series(w.a, w.b, k)), k).alphas(), want));
    }
    r.check("approximant_parameters", worst, 1e-10, "gamma_j(A_n / B_n) = gamma_j, then 0");
  });
  r.guarded("khrushchev", [&] {
    CounterRng rng = r.rng(4);
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
      const Eigen::Index big = random_size(rng, 2, 8);
      const Eigen::Index n = random_size(rng, 0, std::min<Eigen::Index>(4, big - 1));
      const auto alpha = random_alpha(rng, big, 0.8);
      const CircleMeasure mu = bernstein_szego(alpha, big, bs_grid(alpha, big, 4 * cfg.grid_size));
      const Eigen::VectorXcd phi = grid_values(szego_forward(alpha).orthonormal(n).coeffs(), mu.grid_size());
      const CircleMeasure weighted(mu.grid_size(), mu.ac_weight().cwiseProduct(phi.cwiseAbs2()), {});
      const Eigen::Index k = 8;
      worst = std::max(worst, max_abs_diff(schur_series(weighted, k).coeffs(), khrushchev_product(alpha, n, k).coeffs()));
    }
    r.check("khrushchev", worst, 1e-8, "Schur function of |phi_n|^2 d mu vs b_n f_n");
  });
  r.guarded("wall_determinant", [&] {
    CounterRng rng = r.rng(5);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Eigen::Index n = random_size(rng, 1, 10);
      const auto g = random_alpha(rng, n, 0.9);
      double prod = 1.0;
      for (Eigen::Index j = 0; j < n; ++j) prod *= 1.0 - std::norm(g[j]);
      const auto t = unnormalized_transfer(g, n);
      const cd z = rng.disk(1.2);
      const cd det = t[0][0](z) * t[1][1](z) - t[0][1](z) * t[1][0](z);
      worst = std::max(worst, std::abs(det - std::pow(z, int(n)) * prod) / std::max(1.0, std::pow(std::abs(z), double(n))));
      const auto w = schur_approximant(g);
      const cd u = rng.unit();
      worst = std::max(worst, std::abs(std::norm(w.b(u)) - std::norm(w.a(u)) - prod));
    }
    r.check("wall_determinant", worst, 1e-12, "det = z^n prod rho^2 and |B|^2 - |A|^2 = prod rho^2 on the circle");
  });
  r.guarded("schur_l2_trend", [&] {
    Eigen::VectorXcd a(30);
    for (Eigen::Index j = 0; j < 30; ++j) a(j) = std::pow(0.9, double(j + 1));
    const VerblunskySeq<double> alpha(a);
    const double far = schur_l2_diagnostics(alpha, 10), near = schur_l2_diagnostics(alpha, 2);
    r.expect("schur_l2_trend", far < near, far, near, "int |f_10|^2 < int |f_2|^2");
  });
}

void suite_cmv(Recorder& r, const RunConfig& cfg) {
  r.guarded("charpoly_vs_phi", [&] {
    CounterRng rng = r.rng(1);
    double worst = coeff_distance(char_poly(VerblunskySeq<double>{0.5, 1.0 / 3.0}, 2), ComplexPoly<double>{-1.0 / 3.0, -1.0 / 3.0, 1.0});
    for (int i = 0; i < 100; ++i) {
      const Eigen::Index n = random_size(rng, 1, cfg.max_n);
      const auto alpha = random_alpha(rng, n, 0.95);
      worst = std::max(worst, coeff_distance(char_poly(alpha, n), szego_forward(alpha).phi[n]));
    }
    r.check("charpoly_vs_phi", worst, 1e-10, "det(z - C^(N)) = Phi_N");
  });
  r.guarded("five_diagonal", [&] {
    CounterRng rng = r.rng(2);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Eigen::Index n = random_size(rng, 1, 12);
      const auto c = build_cmv(random_alpha(rng, n, 0.95), n);
      for (Eigen::Index a = 0; a < n; ++a)
        for (Eigen::Index b = 0; b < n; ++b)
          if (std::abs(a - b) > 2) worst = std::max(worst, std::abs(c.dense(a, b)));
      worst = std::max(worst, (c.dense - (c.l * c.m).topLeftCorner(n, n)).cwiseAbs().maxCoeff());
    }
    r.check("five_diagonal", worst, 1e-15, "entries beyond |row - col| = 2 and C - LM");
  });
  r.guarded("unitary_truncation", [&] {
    CounterRng rng = r.rng(3);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Eigen::Index n = random_size(rng, 1, 12);
      Eigen::VectorXcd a = random_alpha(rng, n, 0.95).alphas();
      a(n - 1) = rng.unit();
      const Eigen::MatrixXcd c = build_cmv(VerblunskySeq<double>(a, true), n).dense;
      const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
      worst = std::max({worst, (c.adjoint() * c - id).cwiseAbs().maxCoeff(), (c * c.adjoint() - id).cwiseAbs().maxCoeff()});
    }
    r.check("unitary_truncation", worst, 1e-12);
  });
  r.guarded("zeros_inside", [&] {
    CounterRng rng = r.rng(4);
    double rmax = 0.0, resid = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Index n = random_size(rng, 1, 10);
      const auto alpha = random_alpha(rng, n, 0.95);
      const auto phi = szego_forward(alpha).phi[n];
      const double scale = phi.coeffs().cwiseAbs().maxCoeff();
      for (const cd& z : phi_zeros(alpha, n)) {
        rmax = std::max(rmax, std::abs(z));
        resid = std::max(resid, std::abs(phi(z)) / scale);
      }
    }
    r.expect("zeros_inside", rmax < 1.0, rmax, 1.0, "largest |zero of Phi_N|");
    r.check("zeros_residual", resid, 1e-8, "|Phi_N(z_k)| / max|coeff|");
  });
  r.guarded("paraorthogonal_on_circle", [&] {
    CounterRng rng = r.rng(5);
    double dev = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Index n = random_size(rng, 1, 10);
      Eigen::VectorXcd a = random_alpha(rng, n, 0.95).alphas();
      a(n - 1) = rng.unit();
      // raw eigenvalues, before any radial normalization
      for (const cd& z : detail::eigenvalues<double>(build_cmv(VerblunskySeq<double>(a, true), n).dense))
        dev = std::max(dev, std::abs(std::abs(z) - 1.0));
    }
    r.check("paraorthogonal_on_circle", dev, 1e-10, "max ||z| - 1| over eigenvalues of the unitary truncation");
  });
  r.guarded("spectral_measure_roundtrip", [&] {
    CounterRng rng = r.rng(6);
    double worst = 0.0, mass = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Eigen::Index n = random_size(rng, 2, 10);
      Eigen::VectorXcd a = random_alpha(rng, n, 0.9).alphas();
      a(n - 1) = rng.unit();
      const CircleMeasure mu = spectral_measure(VerblunskySeq<double>(a, true), n);
      double total = 0.0;
      for (const auto& p : mu.atoms()) total += p.mass;
      mass = std::max(mass, std::abs(total - 1.0));
      const auto ext = verblunsky_from_moments(moments(mu, n - 1), n - 1);
      worst = std::max(worst, max_abs_diff(ext.alphas(), a.head(n - 1)));
    }
    r.check("spectral_measure_roundtrip", worst, 1e-8);
    r.check("spectral_measure_mass", mass, 1e-12);
  });
  r.guarded("zero_counting_dual", [&] {
    CounterRng rng = r.rng(7);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) worst = std::max(worst, zero_counting_moments(random_alpha(rng, 8, 0.9), 8, 8).max_deviation());
    r.check("zero_counting_dual", worst, 1e-8, "(1/n) Tr C^l vs power sums of zeros");
  });
}

void suite_cd(Recorder& r, const RunConfig& cfg) {
  r.guarded("closed_vs_direct", [&] {
    CounterRng rng = r.rng(1);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Index big = random_size(rng, 2, std::max<Eigen::Index>(2, cfg.max_n));
      const Eigen::Index n = random_size(rng, 0, big - 1);
      const auto alpha = random_alpha(rng, big, 0.9);
      const cd z = rng.disk(0.95), zeta = rng.disk(0.95);
      cd direct = 0.0;
      for (Eigen::Index j = 0; j <= n; ++j) direct += std::conj(eval_orthonormal(alpha, j, zeta).first) * eval_orthonormal(alpha, j, z).first;
      worst = std::max(worst, std::abs(cd_kernel(alpha, n, z, zeta) - direct) / std::max(1.0, std::abs(direct)));
    }
    r.check("closed_vs_direct", worst, 1e-10, "100 random (z, zeta, alpha)");
  });
  r.guarded("free_geometric", [&] {
    CounterRng rng = r.rng(2);
    const VerblunskySeq<double> zero(Eigen::VectorXcd::Zero(8));
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const cd z = rng.disk(0.95), zeta = rng.disk(0.95);
      const Eigen::Index n = random_size(rng, 0, 7);
      cd s = 0.0;
      for (Eigen::Index j = 0; j <= n; ++j) s += std::pow(z * std::conj(zeta), int(j));
      worst = std::max(worst, std::abs(cd_kernel(zero, n, z, zeta) - s));
    }
    r.check("free_geometric", worst, 1e-12);
  });
  r.guarded("diagonal_on_circle", [&] {
    CounterRng rng = r.rng(3);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto alpha = random_alpha(rng, 6, 0.9);
      const cd u = rng.unit();
      double direct = 0.0;
      for (Eigen::Index j = 0; j <= 5; ++j) direct += std::norm(eval_orthonormal(alpha, j, u).first);
      worst = std::max(worst, std::abs(cd_kernel(alpha, 5, u, u) - direct) / direct);
    }
    r.check("diagonal_on_circle", worst, 1e-12, "z conj(zeta) = 1 takes the summation branch");
  });
}

void suite_weyl(Recorder& r, const RunConfig&) {
  r.guarded("det_transfer", [&] {
    CounterRng rng = r.rng(1);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Index n = random_size(rng, 0, 30);
      // |z| near 1 and |alpha| <= 0.5: |det| = O(1) while ||T_n|| stays moderate,
      // so the relative error measures the identity, not cancellation
      const auto alpha = random_alpha(rng, n, 0.5).cast<ld>();
      const Complex<ld> z(rng.uniform(0.9, 1.1) * rng.unit());
      const Complex<ld> want = std::pow(z, int(n));
      worst = std::max(worst, double(std::abs(transfer(alpha, n, z).det() - want) / std::max(std::abs(want), ld(1e-300))));
    }
    r.check("det_transfer", worst, 1e-10, "det T_n(z) = z^n, |alpha| <= 0.5, 0.9 <= |z| <= 1.1");
  });
  r.guarded("second_kind_identity", [&] {
    CounterRng rng = r.rng(2);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Index n = random_size(rng, 0, 15);
      const auto alpha = random_alpha(rng, n, 0.9).cast<ld>();
      const auto fam = szego_forward(alpha);
      const auto [psi, psis] = second_kind(alpha, n);
      ComplexPoly<ld> lhs = fam.orthonormal_star(n) * psi;
      lhs += fam.orthonormal(n) * psis;
      worst = std::max(worst, double(coeff_distance(lhs, ComplexPoly<ld>::monomial(n, 2.0L))));
    }
    r.check("second_kind_identity", worst, 1e-10, "phi* psi + phi psi* = 2 z^n coefficientwise");
  });
  r.guarded("transfer_columns", [&] {
    CounterRng rng = r.rng(3);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Index n = random_size(rng, 0, 15);
      const auto alpha = random_alpha(rng, n, 0.9);
      const cd z = rng.disk(1.2);
      const auto t = transfer(alpha, n, z).m;
      const auto [phi, phis] = eval_orthonormal(alpha, n, z);
      const auto [psi, psis] = eval_orthonormal(alpha.rotated(-1.0), n, z);
      const double s = std::max({1.0, std::abs(phi), std::abs(phis), std::abs(psi), std::abs(psis)});
      worst = std::max({worst, std::abs(t(0, 0) + t(0, 1) - phi) / s, std::abs(t(1, 0) + t(1, 1) - phis) / s,
                        std::abs(t(0, 0) - t(0, 1) - psi) / s, std::abs(t(1, 0) - t(1, 1) + psis) / s});
    }
    r.check("transfer_columns", worst, 1e-10, "T (1,1) = (phi, phi*), T (1,-1) = (psi, -psi*)");
  });
  r.guarded("mixed_cd_identity", [&] {
    CounterRng rng = r.rng(4);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Index n = random_size(rng, 1, 15);
      const auto alpha = random_alpha(rng, n, 0.9);
      const cd z = rng.disk(0.95), rr = rng.disk(2.0);
      double lhs = 0.0;
      for (Eigen::Index j = 0; j < n; ++j)
        lhs += std::norm(eval_orthonormal(alpha.rotated(-1.0), j, z).first + rr * eval_orthonormal(alpha, j, z).first);
      lhs *= 1.0 - std::norm(z);
      const auto [phi, phis] = eval_orthonormal(alpha, n, z);
      const auto [psi, psis] = eval_orthonormal(alpha.rotated(-1.0), n, z);
      const double rhs = 4.0 * rr.real() + std::norm(psis - rr * phis) - std::norm(psi + rr * phi);
      worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    r.check("mixed_cd_identity", worst, 1e-8);
  });
  r.guarded("weyl_bound", [&] {
    CounterRng rng = r.rng(5);
    double worst = 0.0, growth = INFINITY;
    for (int i = 0; i < 20; ++i) {
      const Eigen::Index n0 = 8, n1 = 32;
      Eigen::VectorXcd a = Eigen::VectorXcd::Zero(n1);
      a.head(n0) = random_alpha(rng, n0, 0.7).alphas();
      const VerblunskySeq<double> alpha(a);
      // |z| >= 0.5 keeps 2|z|^{n+1}/(1-|z|) above the rounding floor up to n = 32
      const cd z = rng.uniform(0.5, 0.9) * rng.unit();
      const cd f = bs_caratheodory(alpha, n0, z);
      const double q = std::abs(z);
      auto ratios = [&](cd fv, Eigen::Index n) {
        const auto [r1, r2] = weyl_residual(alpha, n, z, fv);
        const double b1 = 2.0 * std::pow(q, double(n)) / (1.0 - q), b2 = b1 * q;
        return std::pair{r1 / b1, r2 / b2};
      };
      for (Eigen::Index n = 0; n <= n1; ++n) {
        const auto [u, v] = ratios(f, n);
        worst = std::max({worst, u, v});
      }
      // with alpha_j = 0 past n0, phi_n^* is frozen, so a wrong r leaves
      // r phi_n^* - psi_n^* at a nonzero constant while the bound decays
      growth = std::min(growth, ratios(f + 0.1, n1).second / ratios(f + 0.1, n0).second);
    }
    r.check("weyl_bound", worst, 1.0, "max residual / bound over n <= 32, 0.5 <= |z| <= 0.9");
    r.expect("weyl_perturbed_grows", growth > 10.0, growth, 10.0, "r = F + 0.1: second residual / bound growth from n = 8 to 32");
  });
  r.guarded("lyapunov_free", [&] {
    const VerblunskySeq<double> zero(Eigen::VectorXcd::Zero(64));
    const double e = std::max(std::abs(lyapunov(zero, 2.0, 64) - std::log(2.0)), std::abs(lyapunov(zero, cd(0.0, 0.5), 64)));
    r.check("lyapunov_free", e, 1e-12);
  });
  r.guarded("thouless", [&] {
    ErgodicSpec spec;
    spec.kind = ErgodicKind::IidUniformDisk;
    spec.radius = 0.5;
    spec.seed = r.rng(6).next_u64();
    const Eigen::Index n = 10000;
    const auto alpha = spec.generate(n);
    const double lhs = lyapunov(alpha, 2.0, n);
    const double rhs = thouless_rhs(NuSpec::uniform(), rho_infinity(alpha), 2.0);
    r.check("thouless", std::abs(lhs - rhs) / std::abs(rhs), 0.02, "iid radius 0.5, z = 2, n = 1e4");
  });
  r.guarded("mhaskar_saff", [&] {
    Eigen::VectorXcd a(40), b = Eigen::VectorXcd::Constant(40, 0.9);
    for (Eigen::Index j = 0; j < 40; ++j) a(j) = std::pow(0.5, double(j + 1));
    const auto [mean, spread] = mhaskar_saff_check(VerblunskySeq<double>(a), 40);
    r.check("mhaskar_saff", std::abs(mean - 0.5), 0.05, "mean " + std::to_string(mean) + " spread " + std::to_string(spread));
    const double mb = mhaskar_saff_check(VerblunskySeq<double>(b), 40).first;
    r.expect("mhaskar_saff_constant", mb > 0.8, mb, 0.8, "alpha_j = 0.9");
  });
}

void suite_toeplitz(Recorder& r, const RunConfig& cfg) {
  r.guarded("gram_vs_product", [&] {
    CounterRng rng = r.rng(1);
    double worst = 0.0, mono = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Eigen::Index n = random_size(rng, 1, 12);
      const auto alpha = random_alpha(rng, n, 0.9);
      const auto c = moments_from_verblunsky(alpha, n);
      double prev = 1.0;
      for (Eigen::Index k = 0; k <= n; ++k) {
        const ToeplitzDet d = toeplitz_det(c, k);
        worst = std::max(worst, std::abs(d.gram - d.product_form) / d.product_form);
        mono = std::max(mono, d.product_form - prev);
        prev = d.product_form;
      }
    }
    r.check("gram_vs_product", worst, 1e-8, "relative");
    r.check("determinants_decrease", std::max(0.0, mono), 1e-15);
  });
  r.guarded("closed_determinants", [&] {
    const auto c = moments_from_verblunsky(VerblunskySeq<double>{0.5, 1.0 / 3.0}, 2);
    const double e = std::max(std::abs(toeplitz_det(c, 1).gram - 0.75), std::abs(toeplitz_det(c, 2).gram - 0.5));
    r.check("closed_determinants", e, 1e-14, "D_1 = 3/4, D_2 = 1/2");
  });
  r.guarded("szego_bernstein_szego", [&] {
    const auto s = szego_theorem_check(bernstein_szego(VerblunskySeq<double>{0.5}, 1, cfg.grid_size), 6);
    r.check("szego_bernstein_szego", std::max(std::abs(s.lhs - 0.75), std::abs(s.rhs - 0.75)), 1e-8);
  });
  r.guarded("szego_smooth", [&] {
    const auto s = szego_theorem_check(smooth_measure(cfg.grid_size), 30);
    r.check("szego_smooth", std::abs(s.lhs - s.rhs), 1e-4, "w = 1 + cos(theta) / 2, N = 30");
  });
  r.guarded("jensen_direction", [&] {
    CounterRng rng = r.rng(2);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto alpha = random_alpha(rng, 6, 0.8);
      const auto s = szego_theorem_check(bernstein_szego(alpha, 6, bs_grid(alpha, 6, cfg.grid_size)), random_size(rng, 1, 10));
      worst = std::max(worst, s.rhs - s.lhs);
    }
    for (Eigen::Index n : {1, 5, 10, 20}) {
      const auto s = szego_theorem_check(smooth_measure(cfg.grid_size), n);
      worst = std::max(worst, s.rhs - s.lhs);
    }
    r.check("jensen_direction", std::max(0.0, worst), 1e-12, "lhs >= rhs");
  });
}

void suite_strong(Recorder& r, const RunConfig& cfg) {
  const CircleMeasure bs = bernstein_szego(VerblunskySeq<double>{0.5}, 1, cfg.grid_size);
  r.guarded("strong_closed_form", [&] {
    const auto s = strong_szego_check(bs, 10);
    r.check("strong_closed_form", std::max(std::abs(s.lhs - 4.0 / 3.0), std::abs(s.rhs - 4.0 / 3.0)), 1e-6, "a = 1/2: 4/3");
  });
  r.guarded("strong_smooth", [&] {
    const auto s = strong_szego_check(smooth_measure(cfg.grid_size), 40);
    r.check("strong_smooth", std::abs(s.lhs - s.rhs) / s.rhs, 1e-3, "w = 1 + cos(theta) / 2, N = 40");
  });
  r.guarded("szego_function_closed", [&] {
    CounterRng rng = r.rng(1);
    const double rho = std::sqrt(0.75);
    double worst = std::abs(szego_function(bs, 0.0) - rho);
    for (int i = 0; i < 20; ++i) {
      const cd z = rng.disk(0.9);
      worst = std::max(worst, std::abs(szego_function(bs, z) - rho / (1.0 - z / 2.0)));
    }
    r.check("szego_function_closed", worst, 1e-10, "D(z) = rho / (1 - z/2)");
  });
  r.guarded("boundary_modulus", [&] {
    const CircleMeasure mu = smooth_measure(cfg.grid_size);
    double worst = 0.0;
    for (int k = 0; k < 64; ++k) {
      const double t = 2 * kPi * k / 64.0;
      worst = std::max(worst, std::abs(std::norm(szego_function(mu, std::polar(0.999, t))) - (1.0 + 0.5 * std::cos(t))));
    }
    r.check("boundary_modulus", worst, 1e-2, "|D(0.999 e^{it})|^2 vs w");
  });
  r.guarded("asymptotics_exact", [&] {
    double worst = 0.0;
    for (const auto& row : szego_asymptotics_report(bs, 5, {0.0, 0.5, cd(0.3, -0.6)}))
      if (row.n >= 1) worst = std::max({worst, row.l2_distance, row.singular_mass, row.sup_interior});
    r.check("asymptotics_exact", worst, 1e-8, "Bernstein-Szego: phi_n^* = 1/D for n >= 1");
  });
  r.guarded("asymptotics_smooth", [&] {
    const auto rows = szego_asymptotics_report(smooth_measure(cfg.grid_size), 20, {0.5});
    bool decreasing = true;
    for (std::size_t k = 1; k < rows.size(); ++k) decreasing = decreasing && rows[k].sup_interior <= rows[k - 1].sup_interior + 1e-15;
    r.expect("asymptotics_smooth", decreasing && rows.back().sup_interior < 1e-3, rows.back().sup_interior, 1e-3,
             "|phi_20^*(1/2) - 1/D(1/2)|, non-increasing in n");
  });
  r.guarded("nevai_totik", [&] {
    Eigen::VectorXcd a(40);
    for (Eigen::Index j = 0; j < 40; ++j) a(j) = std::pow(1.0 / 3.0, double(j + 1));
    const double rate = nevai_totik_rate(VerblunskySeq<double>(a)).rate;
    r.check("nevai_totik", std::abs(rate - 1.0 / 3.0), 0.02, "rate " + std::to_string(rate));
    Eigen::VectorXcd fin = Eigen::VectorXcd::Zero(20);
    fin.head(3) << 0.5, -0.2, 0.1;
    r.check("nevai_totik_finite", nevai_totik_rate(VerblunskySeq<double>(fin)).rate, 1e-300);
    const double one = nevai_totik_rate(VerblunskySeq<double>(Eigen::VectorXcd::Constant(40, 0.5))).rate;
    r.check("nevai_totik_constant", std::abs(one - 1.0), 0.02);
  });
  r.guarded("baxter_min_weight", [&] {
    const auto d = baxter_diagnostics(VerblunskySeq<double>{0.5}, moments(bs, 20), 0, bs);
    r.check("baxter_min_weight", std::abs(d.min_w - 1.0 / 3.0), 1e-12, "Bernstein-Szego a = 1/2: min w = 1/3");
  });
}

void suite_aleksandrov(Recorder& r, const RunConfig& cfg) {
  r.guarded("averaged_moments", [&] {
    CounterRng rng = r.rng(1);
    double worst = std::abs(aleksandrov_average(VerblunskySeq<double>{0.5, 1.0 / 3.0}, 1, 64));
    for (int i = 0; i < 20; ++i) {
      const auto alpha = random_alpha(rng, 6, 0.9);
      for (Eigen::Index m = 1; m <= 3; ++m) worst = std::max(worst, std::abs(aleksandrov_average(alpha, m, 64)));
    }
    r.check("averaged_moments", worst, 1e-6, "64 lambda nodes, moments 1..3");
  });
  r.guarded("conjugation", [&] {
    CounterRng rng = r.rng(2);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) worst = std::max(worst, aleksandrov_conjugation_check(random_alpha(rng, 10, 0.95), rng.unit(), Eigen::Index(8)));
    r.check("conjugation", worst, 1e-12, "D C(lambda alpha) D^{-1} = L M_lambda");
  });
  r.guarded("mobius_mean", [&] {
    CounterRng rng = r.rng(3);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) worst = std::max(worst, std::abs(mobius_mean(cd(rng.uniform(0.2, 3.0), rng.uniform(-3.0, 3.0))) - 1.0));
    r.check("mobius_mean", worst, 1e-10, "lambda-average of F_lambda is 1");
  });
  r.guarded("schur_rotation", [&] {
    CounterRng rng = r.rng(4);
    const Eigen::Index k = cfg.series_order;
    auto schur_of = [&](const VerblunskySeq<double>& a) {
      return schur_from_caratheodory(caratheodory_series(moments_from_verblunsky(zero_padded(a, k + 1), k + 1), k + 1));
    };
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto alpha = random_alpha(rng, 8, 0.9);
      const cd lambda = i == 0 ? cd(0, 1) : rng.unit();
      worst = std::max(worst, max_abs_diff(schur_of(aleksandrov(alpha, lambda)).coeffs(), lambda * schur_of(alpha).coeffs()));
    }
    r.check("schur_rotation", worst, 1e-10, "f_lambda = lambda f");
  });
  r.guarded("bs_caratheodory_pipeline", [&] {
    CounterRng rng = r.rng(5);
    const auto alpha = random_alpha(rng, 6, 0.8);
    const CircleMeasure mu = bernstein_szego(alpha, 6, bs_grid(alpha, 6, cfg.grid_size));
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const cd z = rng.disk(0.8);
      worst = std::max(worst, std::abs(bs_caratheodory(alpha, 6, z) - caratheodory_integral(mu, z)));
    }
    r.check("bs_caratheodory_pipeline", worst, 1e-6, "psi_n^* / phi_n^* vs integral of the measure");
  });
  r.guarded("caratheodory_mobius", [&] {
    CounterRng rng = r.rng(6);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto alpha = random_alpha(rng, 6, 0.9);
      const cd lambda = rng.unit(), z = rng.disk(0.9);
      const cd want = aleksandrov_caratheodory(bs_caratheodory(alpha, 6, z), lambda);
      worst = std::max(worst, std::abs(bs_caratheodory(aleksandrov(alpha, lambda), 6, z) - want));
    }
    r.check("caratheodory_mobius", worst, 1e-10, "F_lambda as a Mobius image of F");
  });
}

void suite_periodic(Recorder& r, const RunConfig& cfg) {
  r.guarded("random_specs", [&] {
    CounterRng rng = r.rng(1);
    double im = 0.0, mass = 0.0, det = 0.0;
    const Eigen::Index grid = std::max<Eigen::Index>(cfg.grid_size, 512);
    for (int i = 0; i < 50; ++i) {
      const Eigen::Index p = 2 * random_size(rng, 1, 3);
      const PeriodicSpec spec(random_alpha(rng, p, 0.9).alphas());
      for (Eigen::Index k = 0; k < grid; ++k) im = std::max(im, std::abs(discriminant(spec, std::polar(1.0, 2 * kPi * k / grid)).imag()));
      if (i < 20) {
        const BandStructure bs = band_structure(spec, grid);
        for (double m : bs.band_masses) mass = std::max(mass, std::abs(m - 1.0 / double(p)));
      }
      const cd z = rng.disk(2.0);
      const auto t = transfer(VerblunskySeq<double>(spec.alphas()), p, z);
      det = std::max(det, std::abs(t.det() / std::pow(z, int(p)) - 1.0));
    }
    r.check("discriminant_real", im, 1e-10, "max |Im Delta| on the circle, p in {2, 4, 6}");
    r.check("band_masses", mass, 1e-6, "each band carries 1/p");
    r.check("normalized_det", det, 1e-10, "det(z^{-p/2} T_p) = 1");
  });
  r.guarded("geronimus_edges", [&] {
    const BandStructure bs = band_structure(PeriodicSpec(Eigen::VectorXcd::Constant(2, 0.5)), std::max<Eigen::Index>(cfg.grid_size, 512));
    double e = INFINITY;
    if (bs.merged.size() == 1) e = std::max(std::abs(bs.merged[0].x - kPi / 3), std::abs(bs.merged[0].y - 5 * kPi / 3));
    r.check("geronimus_edges", e, 1e-8, "a = 1/2: band [pi/3, 5pi/3]");
  });
  r.guarded("geronimus_09_edge", [&] {
    const BandStructure bs = band_structure(PeriodicSpec(Eigen::VectorXcd::Constant(2, 0.9)), std::max<Eigen::Index>(cfg.grid_size, 512));
    double e = INFINITY;
    if (bs.merged.size() == 1) e = std::abs(std::cos(bs.merged[0].x) - (1.0 - 2 * 0.81));
    r.check("geronimus_09_edge", e, 1e-8, "a = 0.9: cos of the edge = 1 - 2 a^2");
  });
  r.guarded("free_bands", [&] {
    const BandStructure bs = band_structure(PeriodicSpec(Eigen::VectorXcd::Zero(2)), std::max<Eigen::Index>(cfg.grid_size, 512));
    double e = INFINITY;
    if (bs.bands.size() == 2) {
      e = std::max({std::abs(bs.bands[0].x), std::abs(bs.bands[0].y - kPi), std::abs(bs.bands[1].x - kPi),
                    std::abs(bs.bands[1].y - 2 * kPi), std::abs(bs.band_masses[0] - 0.5), std::abs(bs.band_masses[1] - 0.5)});
      if (!bs.gaps.empty()) e = INFINITY;
    }
    r.check("free_bands", e, 1e-8, "alpha = 0: [0, pi], [pi, 2pi], no gaps");
  });
  r.guarded("transfer_growth", [&] {
    const PeriodicSpec spec(Eigen::VectorXcd::Constant(2, 0.5));
    const double in_band = periodic_transfer_growth(spec, std::polar(1.0, 2 * kPi / 3), 50);
    const double in_gap = periodic_transfer_growth(spec, std::polar(1.0, 0.1), 50);
    r.expect("transfer_bounded_in_band", in_band < 100.0, in_band, 100.0, "sup_m ||T_2m|| at theta = 2pi/3");
    r.expect("transfer_grows_in_gap", in_gap > 1e6, in_gap, 1e6, "sup_m ||T_2m|| at theta = 0.1");
  });
  r.guarded("capacity", [&] {
    double worst = 0.0;
    for (double a : {0.3, 0.5, 0.9}) {
      const PeriodicSpec spec(Eigen::VectorXcd::Constant(2, a));
      const BandStructure bs = band_structure(spec, std::max<Eigen::Index>(cfg.grid_size, 512));
      worst = std::max(worst, std::abs(band_capacity(spec, bs) - capacity_product_formula(spec)));
    }
    r.check("capacity", worst, 1e-3, "energy capacity vs prod (1 - |a|^2)^{1/2p}");
  });
}

JacobiParams random_jacobi(CounterRng& rng) {
  for (;;) {
    const Eigen::Index n = random_size(rng, 1, 6);
    Eigen::VectorXd a(n), b(n);
    for (Eigen::Index k = 0; k < n; ++k) {
      a(k) = rng.uniform(0.5, 1.5);
      b(k) = rng.uniform(-0.5, 0.5);
    }
    JacobiParams j(a, b);
    try {
      geronimus_inverse(j);
      return j;
    } catch (const SupportOutsideInterval&) {
    }
  }
}

void suite_szego_map(Recorder& r, const RunConfig& cfg) {
  r.guarded("chebyshev_first_kind", [&] {
    const Eigen::Index n = 6;
    const JacobiParams fw = geronimus_forward(VerblunskySeq<double>(Eigen::VectorXcd::Zero(2 * n)));
    Eigen::VectorXd a = Eigen::VectorXd::Ones(n);
    a(0) = std::sqrt(2.0);
    double e = std::max((fw.a - a).cwiseAbs().maxCoeff(), fw.b.cwiseAbs().maxCoeff());
    e = std::max(e, geronimus_inverse(JacobiParams(a, Eigen::VectorXd::Zero(n))).alphas().cwiseAbs().maxCoeff());
    r.check("chebyshev_first_kind", e, 1e-12, "alpha = 0 <-> a = (sqrt 2, 1, ...), b = 0");
  });
  r.guarded("chebyshev_second_kind", [&] {
    const Eigen::Index n = 6;
    Eigen::VectorXcd al = Eigen::VectorXcd::Zero(2 * n);
    for (Eigen::Index m = 1; m <= n; ++m) al(2 * m - 1) = -1.0 / double(m + 1);
    const JacobiParams fw = geronimus_forward(VerblunskySeq<double>(al));
    double e = std::max((fw.a - Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff(), fw.b.cwiseAbs().maxCoeff());
    e = std::max(e, max_abs_diff(geronimus_inverse(JacobiParams(Eigen::VectorXd::Ones(n), Eigen::VectorXd::Zero(n))).alphas(), al));
    r.check("chebyshev_second_kind", e, 1e-12, "alpha_{2n-1} = -1/(n+1) <-> a = 1, b = 0");
  });
  r.guarded("forward_inverse", [&] {
    CounterRng rng = r.rng(1);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const JacobiParams j = random_jacobi(rng);
      const JacobiParams back = geronimus_forward(geronimus_inverse(j));
      worst = std::max({worst, (back.a - j.a).cwiseAbs().maxCoeff(), (back.b - j.b).cwiseAbs().maxCoeff()});
    }
    r.check("forward_inverse", worst, 1e-10, "100 random Jacobi parameters supported in [-2, 2]");
  });
  r.guarded("oprl_orthogonality", [&] {
    CounterRng rng = r.rng(2);
    double worst = 0.0;
    for (int i = 0; i < 20; ++i) {
      const auto alpha = random_real_alpha(rng, 10, 0.9);
      // int x^j d nu with x = 2 cos theta, expanded binomially in the circle moments
      const auto c = bernstein_szego_moments(alpha.cast<ld>(), 10, 10);
      std::vector<ld> xm(11, 0.0L);
      for (int j = 0; j <= 10; ++j) {
        ld binom = 1.0L;
        for (int i = 0; i <= j; ++i) {
          xm[j] += binom * c(j - 2 * i).real();
          binom = binom * ld(j - i) / ld(i + 1);
        }
      }
      std::vector<ComplexPoly<double>> ps;
      for (Eigen::Index n = 0; n <= 5; ++n) ps.push_back(oprl_from_opuc(alpha, n));
      auto gram = [&](const ComplexPoly<double>& p, const ComplexPoly<double>& q) {
        ld g = 0.0L;
        for (Eigen::Index i = 0; i <= p.degree(); ++i)
          for (Eigen::Index k = 0; k <= q.degree(); ++k) g += ld(p[i].real()) * ld(q[k].real()) * xm[i + k];
        return g;
      };
      for (std::size_t a = 0; a < ps.size(); ++a)
        for (std::size_t b = 0; b < a; ++b)
          worst = std::max(worst, double(std::abs(gram(ps[a], ps[b])) / std::sqrt(gram(ps[a], ps[a]) * gram(ps[b], ps[b]))));
    }
    r.check("oprl_orthogonality", worst, 1e-8, "normalized Gram off-diagonal, n <= 5");
  });
  r.guarded("locality", [&] {
    CounterRng rng = r.rng(3);
    bool ok = true;
    for (int i = 0; i < 50; ++i) {
      Eigen::VectorXcd a = random_real_alpha(rng, 16, 0.9).alphas();
      const JacobiParams base = geronimus_forward(VerblunskySeq<double>(a));
      const Eigen::Index k = random_size(rng, 0, 15);
      a(k) = rng.uniform(-0.9, 0.9);
      const JacobiParams moved = geronimus_forward(VerblunskySeq<double>(a));
      const Eigen::Index centre = (k + 1) / 2 + 1;  // 1-based
      for (Eigen::Index m = 0; m < base.size(); ++m)
        if ((base.a(m) != moved.a(m) || base.b(m) != moved.b(m)) && std::abs((m + 1) - centre) > 2) ok = false;
    }
    r.expect("locality", ok, ok ? 0.0 : 1.0, 0.0, "changing alpha_k moves only a_m, b_m with |m - (ceil(k/2) + 1)| <= 2");
  });
  r.guarded("mapped_measures", [&] {
    CounterRng rng = r.rng(4);
    double moment = 0.0, imag = 0.0;
    const Eigen::Index m = cfg.grid_size;
    for (int i = 0; i < 20; ++i) {
      Eigen::VectorXd h(m / 2 + 1);
      const double c1 = rng.uniform(-0.5, 0.5), c2 = rng.uniform(-0.3, 0.3);
      for (Eigen::Index k = 0; k <= m / 2; ++k) {
        const double t = 2 * kPi * k / m;
        h(k) = 1.0 + c1 * std::cos(t) + c2 * std::cos(2 * t);
      }
      const LineMeasure rho(m, h, {{rng.uniform(-2.0, 2.0), rng.uniform(0.0, 0.5)}});
      const CircleMeasure mu = szego_map(rho);
      const auto c = moments(mu, 10);
      moment = std::max(moment, std::abs(rho.moments(2)(2) - (2.0 + 2.0 * c(2).real())));
      imag = std::max(imag, verblunsky_from_moments(c, 10).alphas().imag().cwiseAbs().maxCoeff());
    }
    r.check("second_moment", moment, 1e-9, "int x^2 d rho = int 4 cos^2 d mu");
    r.check("real_verblunsky", imag, 1e-9, "even measures have real alpha");
    const auto cu = moments(szego_map(LineMeasure::arcsine(m)), 8);
    r.check("arcsine_to_uniform", (cu.values().tail(8)).cwiseAbs().maxCoeff(), 1e-12);
  });
  r.guarded("jacobi_spectrum", [&] {
    CounterRng rng = r.rng(5);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const Eigen::Index n = random_size(rng, 1, 6);
      const JacobiParams j = geronimus_forward(random_real_alpha(rng, 2 * n, 0.95));
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(j.matrix(n), Eigen::EigenvaluesOnly);
      worst = std::max(worst, es.eigenvalues().cwiseAbs().maxCoeff() - 2.0);
    }
    r.check("jacobi_spectrum", std::max(0.0, worst), 1e-12, "eigenvalues of J_n in [-2, 2]");
  });
  r.guarded("sign_condition", [&] {
    Eigen::VectorXd a = Eigen::VectorXd::Ones(4), b = Eigen::VectorXd::Zero(4);
    a(0) = std::sqrt(2.0);
    b(0) = 3.0;
    bool thrown = false;
    try {
      geronimus_inverse(JacobiParams(a, b));
    } catch (const SupportOutsideInterval&) {
      thrown = true;
    }
    r.expect("sign_condition", thrown, thrown ? 0.0 : 1.0, 0.0, "b_1 = 3 is rejected");
  });
}

void suite_haar(Recorder& r, const RunConfig& cfg) {
  const Eigen::Index n = 5, s = cfg.haar_samples;
  Eigen::ArrayXd sum = Eigen::ArrayXd::Zero(n), sum2 = Eigen::ArrayXd::Zero(n);
  double terminal = 0.0;
  cd circ = 0.0;
  const std::uint64_t base = r.rng(1).next_u64();
  for (Eigen::Index i = 0; i < s; ++i) {
    const auto a = haar_sample(n, base + static_cast<std::uint64_t>(i));
    for (Eigen::Index j = 0; j < n; ++j) {
      const double v = std::norm(a[j]);
      sum(j) += v;
      sum2(j) += v * v;
    }
    terminal = std::max(terminal, std::abs(std::abs(a[n - 1]) - 1.0));
    circ += a[n - 1];
  }
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    const double mean = sum(j) / double(s);
    const double var = (sum2(j) / double(s) - mean * mean) * double(s) / double(s - 1);
    const double z = std::abs(mean - 1.0 / double(n - j)) / std::sqrt(var / double(s));
    r.check("mean_abs2_j" + std::to_string(j), z, 3.0, "z-score of E|alpha_j|^2 = 1/(n - j)");
  }
  r.check("terminal_unimodular", terminal, 1e-12);
  r.check("terminal_angle_mean", std::abs(circ) / double(s), 5.0 / std::sqrt(double(s)), "|mean of alpha_{n-1}|");
}

using SuiteFn = void (*)(Recorder&, const RunConfig&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"aleksandrov", suite_aleksandrov}, {"cd-formula", suite_cd},
      {"cmv-charpoly", suite_cmv},        {"geronimus", suite_geronimus},
      {"haar", suite_haar},               {"periodic-bands", suite_periodic},
      {"recursion-roundtrip", suite_recursion}, {"strong-szego", suite_strong},
      {"szego-map", suite_szego_map},     {"toeplitz", suite_toeplitz},
      {"weyl", suite_weyl},
  };
  return r;
}

std::vector<CheckResult> run_one(const std::string& name, SuiteFn fn, const RunConfig& cfg) {
  Recorder rec(cfg, name);
  fn(rec, cfg);
  return rec.take();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, f] : registry()) v.push_back(n);
    return v;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, const RunConfig& cfg) {
  cfg.validate();
  SuiteReport rep{name, {}};
  if (name == "all") {
    std::vector<std::future<std::vector<CheckResult>>> jobs;
    for (const auto& [n, f] : registry()) jobs.push_back(std::async(std::launch::async, run_one, n, f, std::cref(cfg)));
    for (auto& j : jobs) {
      auto part = j.get();
      rep.checks.insert(rep.checks.end(), part.begin(), part.end());
    }
  } else {
    const auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == name; });
    if (it == registry().end()) throw DomainError("unknown suite: " + name);
    rep.checks = run_one(it->first, it->second, cfg);
  }
  std::sort(rep.checks.begin(), rep.checks.end(), [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
  return rep;
}

}  // namespace opuc
