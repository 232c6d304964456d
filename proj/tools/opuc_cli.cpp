// opuc: compute OPUC quantities from JSON input and run the verification suites.
#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "opuc/asymptotics.hpp"
#include "opuc/caratheodory.hpp"
#include "opuc/schur.hpp"
#include "opuc/verify.hpp"

namespace fs = std::filesystem;
using namespace opuc;
using cd = std::complex<double>;

namespace {

enum Exit { kPass = 0, kAssertion = 1, kInput = 2, kNonConvergence = 3 };

/// Raised for computed results that miss an internal tolerance.
struct ToleranceViolation : Error {
  using Error::Error;
};

int fail(Exit code, const std::string& kind, const std::string& message) {
  std::cerr << json{{"error", kind}, {"exit_code", int(code)}, {"message", message}}.dump() << '\n';
  return code;
}

struct Problem {
  VerblunskySeq<double> alpha;
  std::optional<CircleMeasure> mu;
  std::optional<JacobiParams> jacobi;
  std::string kind;
};

/// Verblunsky coefficients of a measure; a finitely supported measure ends in a unimodular entry.
VerblunskySeq<double> alpha_of_measure(const CircleMeasure& mu, Eigen::Index n) {
  const MomentSeq<double> c = moments(mu, n);
  try {
    return verblunsky_from_moments(c, n);
  } catch (const NotStrictlyInside& e) {
    const auto k = static_cast<Eigen::Index>(e.index());
    const VerblunskySeq<double> head = verblunsky_from_moments(c, k);
    const auto fam = szego_forward(head);
    cd s = 0.0;
    for (Eigen::Index i = 0; i <= k; ++i) s += std::conj(fam.phi[k][i]) * c(i + 1);
    Eigen::VectorXcd a(k + 1);
    a.head(k) = head.alphas();
    a(k) = s / std::abs(s);
    return VerblunskySeq<double>(a, true);
  }
}

Problem load_problem(const std::string& path, const RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open input file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("json: ") + e.what());
  }
  Problem p;
  const InputDoc doc = parse_input(j);
  if (const auto* a = std::get_if<VerblunskySeq<double>>(&doc)) {
    p.alpha = *a;
    p.kind = "VerblunskySeq";
  } else if (const auto* mu = std::get_if<CircleMeasure>(&doc)) {
    Eigen::Index n = cfg.max_n;
    if (mu->has_ac()) n = std::min(n, mu->grid_size() / 2 - 1);
    p.alpha = alpha_of_measure(*mu, n);
    p.mu = *mu;
    p.kind = "CircleMeasure";
  } else {
    p.jacobi = std::get<JacobiParams>(doc);
    p.alpha = geronimus_inverse(*p.jacobi);
    p.kind = "JacobiParams";
  }
  return p;
}

class Csv {
public:
  explicit Csv(const std::string& header) { os_.precision(17), os_ << header << '\n'; }
  template <typename... T>
  void row(const T&... v) {
    std::size_t i = 0;
    ((os_ << (i++ ? "," : "") << v), ...);
    os_ << '\n';
  }
  std::string str() const { return os_.str(); }

private:
  std::ostringstream os_;
};

struct Artifact {
  json doc;
  std::string csv;
};

Artifact target_phi(const Problem& p) {
  const auto fam = szego_forward(p.alpha);
  const Eigen::Index n = p.alpha.size();
  json family = json::array();
  for (const auto& q : fam.phi) family.push_back(to_json(q));
  Csv csv("k,re,im");
  for (Eigen::Index k = 0; k <= n; ++k) csv.row(k, fam.phi[n][k].real(), fam.phi[n][k].imag());
  return {{{"n", n}, {"phi", to_json(fam.phi[n])}, {"phi_star", to_json(fam.phi_star[n])}, {"norms", fam.norms}, {"family", family}},
          csv.str()};
}

Artifact target_zeros(const Problem& p) {
  const Eigen::Index n = p.alpha.size();
  std::vector<cd> z;
  if (n >= 1) z = p.alpha.terminal() ? paraorthogonal_zeros(p.alpha, n, p.alpha[n - 1]) : phi_zeros(p.alpha, n);
  json zs = json::array(), cl = json::array();
  Csv csv("re,im,modulus");
  for (const cd& x : z) {
    zs.push_back(complex_to_json(x));
    csv.row(x.real(), x.imag(), std::abs(x));
  }
  for (const auto& c : cluster_roots(z)) cl.push_back({{"center", complex_to_json(c.center)}, {"multiplicity", c.multiplicity}});
  return {{{"n", n}, {"zeros", zs}, {"clusters", cl}}, csv.str()};
}

MomentSeq<double> problem_moments(const Problem& p, Eigen::Index k) {
  if (p.mu) return moments(*p.mu, k);
  if (p.alpha.terminal()) throw DomainError("moments: sequence ends in a unimodular entry; pass the measure instead");
  // a finite sequence stands for its Bernstein-Szego measure: continue by zeros
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(std::max(k, p.alpha.size()));
  a.head(p.alpha.size()) = p.alpha.alphas();
  return moments_from_verblunsky(VerblunskySeq<double>(a), k);
}

Artifact target_moments(const Problem& p, const RunConfig& cfg) {
  Eigen::Index k = cfg.series_order;
  if (p.mu && p.mu->has_ac()) k = std::min(k, p.mu->grid_size() / 2 - 1);
  const MomentSeq<double> c = problem_moments(p, k);
  Csv csv("n,re,im");
  for (Eigen::Index n = 0; n <= c.max_index(); ++n) csv.row(n, c(n).real(), c(n).imag());
  return {to_json(c), csv.str()};
}

Artifact target_schur(const Problem& p, const RunConfig& cfg) {
  Eigen::Index k = cfg.series_order;
  if (p.mu && p.mu->has_ac()) k = std::min(k, p.mu->grid_size() / 2 - 2);
  const PowerSeries<double> f =
      p.mu ? schur_series(*p.mu, k) : schur_from_caratheodory(caratheodory_series(problem_moments(p, k + 1), k + 1));
  Csv csv("k,re,im");
  for (Eigen::Index i = 0; i < f.coeffs().size(); ++i) csv.row(i, f.coeffs()(i).real(), f.coeffs()(i).imag());
  return {{{"order", f.order()}, {"coeffs", cvector_to_json(f.coeffs())}, {"parameters", to_json(p.alpha)}}, csv.str()};
}

Artifact target_cmv(const Problem& p) {
  const Eigen::Index n = p.alpha.size();
  if (n < 1) throw DomainError("cmv: need at least one coefficient");
  const auto c = build_cmv(p.alpha, n);
  Csv csv("row,col,re,im");
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k)
      if (c.dense(i, k) != 0.0) csv.row(i, k, c.dense(i, k).real(), c.dense(i, k).imag());
  return {to_json(c), csv.str()};
}

Artifact target_bands(const Problem& p, const RunConfig& cfg) {
  if (p.alpha.terminal()) throw DomainError("bands: periodic coefficients must lie inside the disk");
  // an odd period p is the even period 2p
  Eigen::VectorXcd a = p.alpha.alphas();
  const bool doubled = a.size() % 2 == 1;
  if (doubled) {
    a.conservativeResize(2 * a.size());
    a.tail(a.size() / 2) = a.head(a.size() / 2);
  }
  const PeriodicSpec spec(a);
  const BandStructure bs = band_structure(spec, std::max<Eigen::Index>(cfg.grid_size, 512));
  json doc = to_json(bs);
  doc["period"] = spec.period();
  doc["period_doubled"] = doubled;
  doc["capacity"] = band_capacity(spec, bs);
  doc["capacity_product"] = capacity_product_formula(spec);
  Csv csv("x,y,mass");
  for (std::size_t i = 0; i < bs.bands.size(); ++i) csv.row(bs.bands[i].x, bs.bands[i].y, bs.band_masses[i]);
  return {doc, csv.str()};
}

Artifact target_jacobi(const Problem& p) {
  const JacobiParams j = p.jacobi ? *p.jacobi : geronimus_forward(p.alpha);
  Csv csv("k,a,b");
  for (Eigen::Index k = 0; k < j.size(); ++k) csv.row(k + 1, j.a(k), j.b(k));
  return {to_json(j), csv.str()};
}

Artifact target_szego_report(const Problem& p) {
  const Eigen::Index n = p.alpha.size();
  const SzegoLimits lim = szego_limits(p.alpha);
  json doc = {{"n", n}, {"F", lim.f}, {"G", lim.g}, {"G_infinite", lim.g_infinite}};
  Csv csv("n,D_n,product_form,residual");
  if (!p.alpha.terminal()) {
    const MomentSeq<double> c = problem_moments(p, n);
    json rows = json::array();
    for (Eigen::Index k = 0; k <= n; ++k) {
      const ToeplitzDet d = toeplitz_det(c, k);
      const double res = std::abs(d.gram - d.product_form) / d.product_form;
      rows.push_back({{"n", k}, {"D_n", d.gram}, {"product_form", d.product_form}, {"residual", res}});
      csv.row(k, d.gram, d.product_form, res);
      if (res > 1e-8) throw ToleranceViolation("szego-report: Gram and product forms of D_" + std::to_string(k) + " disagree");
    }
    doc["toeplitz"] = rows;
  }
  if (p.mu && p.mu->has_ac()) doc["entropy"] = entropy(*p.mu);
  if (n >= 8) {
    const DecayRate r = nevai_totik_rate(p.alpha);
    doc["decay_rate"] = r.rate;
    doc["phi_star_rate"] = r.phi_star_rate;
  }
  return {doc, csv.str()};
}

Artifact compute_target(const std::string& t, const Problem& p, const RunConfig& cfg) {
  if (t == "phi") return target_phi(p);
  if (t == "zeros") return target_zeros(p);
  if (t == "moments") return target_moments(p, cfg);
  if (t == "schur") return target_schur(p, cfg);
  if (t == "cmv") return target_cmv(p);
  if (t == "bands") return target_bands(p, cfg);
  if (t == "jacobi") return target_jacobi(p);
  if (t == "szego-report") return target_szego_report(p);
  throw DomainError("unknown target " + t);
}

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write " + path.string());
  out << body;
}

fs::path output_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("OPUC_OUT_DIR"); env && *env) return env;
  return {};
}

const char* kTargetHelp = R"(CSV columns per target:
  phi           k,re,im                       coefficients of Phi_N, low to high
  zeros         re,im,modulus                 zeros of Phi_N (paraorthogonal when the last alpha is unimodular)
  moments       n,re,im                       c_0..c_K, K = --order
  schur         k,re,im                       Taylor coefficients of the Schur function
  cmv           row,col,re,im                 nonzero entries of the N x N CMV matrix
  bands         x,y,mass                      band arcs in angle and their masses
  jacobi        k,a,b                         Jacobi parameters a_k, b_k
  szego-report  n,D_n,product_form,residual   Toeplitz determinants two ways
Output files are <out>/<target>.<format>; --out defaults to $OPUC_OUT_DIR, then the current directory.)";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orthogonal polynomials on the unit circle: pipelines and verification suites"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string config_path, out_flag, input, suite, format;
  std::vector<std::string> targets;
  std::optional<Eigen::Index> grid, order, max_n, samples;
  std::optional<std::uint64_t> seed;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON file with RunConfig fields")->check(CLI::ExistingFile);
    sub->add_option("--grid", grid, "quadrature grid size")->check(CLI::PositiveNumber);
    sub->add_option("--order", order, "series order")->check(CLI::PositiveNumber);
    sub->add_option("--max-n", max_n, "number of Verblunsky coefficients")->check(CLI::PositiveNumber);
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--out", out_flag, "output directory");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* compute = app.add_subcommand("compute", "evaluate targets for a VerblunskySeq, CircleMeasure or JacobiParams file");
  compute->add_option("--input", input, "input JSON")->required();
  compute->add_option("--target", targets, "phi, zeros, moments, schur, cmv, bands, jacobi, szego-report")
      ->required()
      ->check(CLI::IsMember({"phi", "zeros", "moments", "schur", "cmv", "bands", "jacobi", "szego-report"}));
  compute->footer(kTargetHelp);
  common(compute);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  verify->add_option("--suite", suite, "suite name or all")->required()->check(CLI::IsMember(choices));
  verify->add_option("--samples", samples, "Monte Carlo samples for the haar suite")->check(CLI::PositiveNumber);
  verify->footer("CSV columns: name,passed,residual,tolerance");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return fail(kInput, "usage", e.what());
  }

  try {
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      cfg.merge(json::parse(in));
    }
    if (grid) cfg.grid_size = *grid;
    if (order) cfg.series_order = *order;
    if (max_n) cfg.max_n = *max_n;
    if (samples) cfg.haar_samples = *samples;
    if (seed) cfg.seed = *seed;
    if (!format.empty()) cfg.output_format = format;
    cfg.validate();
    const fs::path out = output_dir(out_flag);
    if (!out.empty()) fs::create_directories(out);
    const bool csv = cfg.output_format == "csv";

    if (*compute) {
      const Problem p = load_problem(input, cfg);
      json written = json::array();
      for (const auto& t : targets) {
        const Artifact a = compute_target(t, p, cfg);
        const fs::path path = (out.empty() ? fs::path(".") : out) / (t + (csv ? ".csv" : ".json"));
        write_file(path, csv ? a.csv : a.doc.dump(2) + "\n");
        written.push_back(path.string());
      }
      std::cout << json{{"input_kind", p.kind}, {"outputs", written}}.dump() << '\n';
      return kPass;
    }

    const SuiteReport rep = run_suite(suite, cfg);
    const std::string body = csv ? rep.to_csv() : rep.to_json().dump(2) + "\n";
    if (!out.empty()) write_file(out / ("verify_" + suite + (csv ? ".csv" : ".json")), body);
    std::cout << body;
    if (rep.passed()) return kPass;
    return rep.nonconvergence() ? kNonConvergence : kAssertion;
  } catch (const ConvergenceError& e) {
    return fail(kNonConvergence, "nonconvergence", e.what());
  } catch (const ToleranceViolation& e) {
    return fail(kAssertion, "tolerance", e.what());
  } catch (const json::exception& e) {
    return fail(kInput, "input", std::string("json: ") + e.what());
  } catch (const Error& e) {
    return fail(kInput, "input", e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(kInput, "io", e.what());
  }
}
