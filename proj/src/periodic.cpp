#include "opuc/periodic.hpp"

#include <algorithm>

#include "opuc/quadrature.hpp"
#include "opuc/schur.hpp"
#include "opuc/transfer.hpp"

namespace opuc {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

// Bisection for g(lo) and g(hi) of opposite sign (or zero).
template <typename G>
double bisect(G g, double lo, double hi) {
  double glo = g(lo);
  if (glo == 0.0) return lo;
  if (g(hi) == 0.0) return hi;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm < 0.0) == (glo < 0.0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double wrap(double t) {
  t = std::fmod(t, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t > kTwoPi - 1e-12) t = 0.0;
  return t;
}

}  // namespace

PeriodicSpec::PeriodicSpec(Eigen::VectorXcd alphas) : a_(std::move(alphas)) {
  const Eigen::Index p = a_.size();
  if (p < 2 || p % 2 != 0) throw DomainError("PeriodicSpec: the period must be even (double an odd period)");
  const VerblunskySeq<double> seq(a_);
  double rho = 1.0;
  for (Eigen::Index j = 0; j < p; ++j) rho *= seq.rho(j);
  const PolyMatrix2<double> u = unnormalized_transfer(seq, p);
  q_ = (u[0][0] + u[1][1]) * std::complex<double>(1.0 / rho);
}

std::complex<double> discriminant(const PeriodicSpec& spec, std::complex<double> z) {
  if (z == 0.0) throw DomainError("discriminant: z = 0");
  return spec.trace_poly()(z) * std::pow(z, -static_cast<int>(spec.period() / 2));
}

double discriminant_theta(const PeriodicSpec& spec, double theta) {
  const auto& q = spec.trace_poly();
  const Eigen::Index h = spec.period() / 2;
  std::complex<double> s = 0.0;
  for (Eigen::Index k = 0; k <= q.degree(); ++k) s += q[k] * std::polar(1.0, double(k - h) * theta);
  return s.real();
}

double discriminant_theta_derivative(const PeriodicSpec& spec, double theta) {
  const auto& q = spec.trace_poly();
  const Eigen::Index h = spec.period() / 2;
  std::complex<double> s = 0.0;
  for (Eigen::Index k = 0; k <= q.degree(); ++k)
    s += q[k] * std::complex<double>(0.0, double(k - h)) * std::polar(1.0, double(k - h) * theta);
  return s.real();
}

double dos_density(const PeriodicSpec& spec, double theta) {
  const double d = discriminant_theta(spec, theta);
  if (!(d * d < 4.0)) throw DomainError("dos_density: theta is not inside a band");
  return (2.0 / double(spec.period())) * std::abs(discriminant_theta_derivative(spec, theta)) / std::sqrt(4.0 - d * d);
}

double band_mass(const PeriodicSpec& spec, const Arc& band, Eigen::Index nodes) {
  // theta = x + (y - x) sin^2(t/2), t in [0, pi]: the inverse square root at an open
  // edge and the bounded density at a closed edge both become analytic in t.
  std::vector<double> gx, gw;
  gauss_legendre(nodes, gx, gw);
  const double len = band.y - band.x;
  double acc = 0.0;
  for (Eigen::Index k = 0; k < nodes; ++k) {
    const double t = 0.5 * M_PI * (gx[k] + 1.0);
    const double s = std::sin(0.5 * t);
    const double theta = band.x + len * s * s;
    const double d = discriminant_theta(spec, theta);
    const double gap = std::max(4.0 - d * d, 0.0);
    if (gap == 0.0) continue;
    const double dens = (2.0 / double(spec.period())) * std::abs(discriminant_theta_derivative(spec, theta)) / std::sqrt(gap);
    acc += gw[k] * dens * 0.5 * len * std::sin(t);
  }
  return acc * (0.5 * M_PI) / kTwoPi;
}

BandStructure band_structure(const PeriodicSpec& spec, Eigen::Index grid) {
  if (grid < 512) throw DomainError("band_structure: grid must be >= 512");
  const Eigen::Index p = spec.period();
  auto d = [&](double t) { return discriminant_theta(spec, t); };
  auto dd = [&](double t) { return discriminant_theta_derivative(spec, t); };

  // Critical points of Delta: exactly one per gap (open or closed), p in total.
  std::vector<double> crit;
  const double h = kTwoPi / double(grid);
  double prev = dd(0.5 * h);
  for (Eigen::Index k = 1; k <= grid; ++k) {
    const double t = (double(k) + 0.5) * h;
    const double cur = dd(t);
    if ((prev < 0.0) != (cur < 0.0)) crit.push_back(wrap(bisect(dd, t - h, t)));
    prev = cur;
  }
  std::sort(crit.begin(), crit.end());
  if (static_cast<Eigen::Index>(crit.size()) != p)
    throw ConvergenceError("band_structure: found " + std::to_string(crit.size()) + " critical points of Delta, expected " +
                               std::to_string(p) + "; refine the grid",
                           static_cast<std::size_t>(grid));

  BandStructure bs;
  for (Eigen::Index i = 0; i < p; ++i) {
    const double lo = crit[i];
    const double hi = i + 1 < p ? crit[i + 1] : crit[0] + kTwoPi;
    const double dlo = d(lo), dhi = d(hi);
    if (std::abs(dlo) < 2.0 - 1e-9 || std::abs(dhi) < 2.0 - 1e-9 || (dlo > 0.0) == (dhi > 0.0))
      throw ConvergenceError("band_structure: critical point inside a band", static_cast<std::size_t>(grid));
    const double s = dlo > 0.0 ? 2.0 : -2.0;
    const double x = std::abs(dlo) - 2.0 < 1e-9 ? lo : bisect([&](double t) { return d(t) - s; }, lo, hi);
    const double y = std::abs(dhi) - 2.0 < 1e-9 ? hi : bisect([&](double t) { return d(t) + s; }, x, hi);
    bs.bands.push_back({x, y});
  }
  for (const auto& b : bs.bands) bs.band_masses.push_back(band_mass(spec, b));

  // Merge sub-bands across gaps shorter than 1e-8 (including the wrap-around gap).
  std::vector<Arc> arcs = bs.bands;
  std::size_t start = 0;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& prev_arc = arcs[(i + arcs.size() - 1) % arcs.size()];
    const double gap = i == 0 ? arcs[0].x + kTwoPi - prev_arc.y : arcs[i].x - prev_arc.y;
    if (gap >= 1e-8) {
      start = i;
      break;
    }
    if (i + 1 == arcs.size()) start = arcs.size();  // every gap is closed
  }
  if (start == arcs.size()) {
    bs.merged.push_back({arcs[0].x, arcs[0].x + kTwoPi});
    return bs;
  }
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const std::size_t i = (start + k) % arcs.size();
    Arc a = arcs[i];
    if (i < start) {
      a.x += kTwoPi;
      a.y += kTwoPi;
    }
    if (!bs.merged.empty() && a.x - bs.merged.back().y < 1e-8) {
      bs.merged.back().y = a.y;
    } else {
      bs.merged.push_back(a);
    }
  }
  for (std::size_t i = 0; i < bs.merged.size(); ++i) {
    const Arc& a = bs.merged[i];
    const Arc& b = bs.merged[(i + 1) % bs.merged.size()];
    bs.gaps.push_back({a.y, i + 1 < bs.merged.size() ? b.x : b.x + kTwoPi});
  }
  return bs;
}

namespace {

// Log energy of the density of states with n midpoint nodes per band in the
// variable phi (Delta = 2 cos phi), where each band carries uniform mass 1/p.
// Diagonal cells use the exact self-energy 3/2 - log(length) of a segment.
double band_energy(const PeriodicSpec& spec, const BandStructure& bs, Eigen::Index n) {
  const double p = double(spec.period());
  auto d = [&](double t) { return discriminant_theta(spec, t); };
  std::vector<std::complex<double>> z;
  std::vector<double> cell;
  for (const auto& b : bs.bands) {
    const double sx = d(b.x) > 0.0 ? 1.0 : -1.0;  // Delta runs from 2 sx to -2 sx across the band
    for (Eigen::Index k = 0; k < n; ++k) {
      const double phi = M_PI * (double(k) + 0.5) / double(n);
      const double target = 2.0 * sx * std::cos(phi);
      const double t = bisect([&](double u) { return d(u) - target; }, b.x, b.y);
      const double dtheta = 2.0 * std::sin(phi) / std::abs(discriminant_theta_derivative(spec, t));
      z.push_back(std::polar(1.0, t));
      cell.push_back(dtheta * M_PI / double(n));
    }
  }
  const double w = 1.0 / (p * double(n));
  double energy = 0.0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    for (std::size_t j = 0; j < z.size(); ++j)
      if (i != j) energy -= std::log(std::abs(z[i] - z[j]));
    energy += 1.5 - std::log(cell[i]);
  }
  return energy * w * w;
}

}  // namespace

double band_capacity(const PeriodicSpec& spec, const BandStructure& bs, Eigen::Index n) {
  // Near-diagonal cells leave an O(1/n) error; one Richardson step removes it.
  const double e = 2.0 * band_energy(spec, bs, 2 * n) - band_energy(spec, bs, n);
  return std::exp(-e);
}

double capacity_product_formula(const PeriodicSpec& spec) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < spec.period(); ++j) s += std::log(1.0 - std::norm(spec.alphas()(j)));
  return std::exp(s / (2.0 * double(spec.period())));
}

double periodic_transfer_growth(const PeriodicSpec& spec, std::complex<double> z, Eigen::Index m_max) {
  const VerblunskySeq<double> seq(spec.alphas());
  const Mat2<double> tp = transfer(seq, spec.period(), z).m;
  Mat2<double> t = Mat2<double>::Identity();
  double best = 1.0;
  for (Eigen::Index m = 1; m <= m_max; ++m) {
    t = tp * t;
    Eigen::JacobiSVD<Mat2<double>> svd(t);
    best = std::max(best, svd.singularValues()(0));
  }
  return best;
}

}  // namespace opuc
