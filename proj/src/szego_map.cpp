#include "opuc/szego_map.hpp"

#include "opuc/szego.hpp"

namespace opuc {

namespace {

void require_real(const VerblunskySeq<double>& alpha, const char* who) {
  for (Eigen::Index j = 0; j < alpha.size(); ++j)
    if (std::abs(alpha[j].imag()) > 1e-12) throw DomainError(std::string(who) + ": Verblunsky coefficients must be real");
}

}  // namespace

JacobiParams::JacobiParams(Eigen::VectorXd a_, Eigen::VectorXd b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a.size() != b.size()) throw DomainError("JacobiParams: a and b must have equal length");
  for (Eigen::Index k = 0; k < a.size(); ++k) {
    if (!(a(k) > 0.0) || !std::isfinite(a(k))) throw DomainError("JacobiParams: a_k must be positive");
    if (!std::isfinite(b(k))) throw DomainError("JacobiParams: b_k must be finite");
  }
}

Eigen::MatrixXd JacobiParams::matrix(Eigen::Index n) const {
  if (n > size()) throw RangeError("JacobiParams::matrix: n exceeds the parameter count");
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    j(k, k) = b(k);
    if (k + 1 < n) j(k, k + 1) = j(k + 1, k) = a(k);
  }
  return j;
}

LineMeasure::LineMeasure(Eigen::Index grid_size, Eigen::VectorXd weight, std::vector<LineAtom> atoms)
    : m_(grid_size), h_(std::move(weight)), atoms_(std::move(atoms)) {
  if (m_ < 2 || m_ % 2 != 0) throw DomainError("LineMeasure: grid_size must be even and >= 2");
  if (h_.size() != m_ / 2 + 1) throw DomainError("LineMeasure: weight must have grid_size/2 + 1 entries");
  if ((h_.array() < 0.0).any() || !h_.allFinite()) throw DomainError("LineMeasure: weights must be finite and >= 0");
  for (const auto& a : atoms_) {
    if (!(a.mass > 0.0)) throw DomainError("LineMeasure: point masses must be > 0");
    if (!(std::abs(a.x) <= 2.0)) throw DomainError("LineMeasure: atom outside [-2, 2]");
  }
  const Eigen::VectorXd m0 = moments(0);
  if (!(m0(0) > 0.0)) throw DomainError("LineMeasure: zero total mass");
  h_ /= m0(0);
  for (auto& a : atoms_) a.mass /= m0(0);
}

LineMeasure LineMeasure::arcsine(Eigen::Index grid_size) {
  return LineMeasure(grid_size, Eigen::VectorXd::Ones(grid_size / 2 + 1), {});
}

LineMeasure LineMeasure::point(double x, Eigen::Index grid_size) {
  return LineMeasure(grid_size, Eigen::VectorXd::Zero(grid_size / 2 + 1), {{x, 1.0}});
}

Eigen::VectorXd LineMeasure::moments(Eigen::Index k_max) const {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(k_max + 1);
  const Eigen::Index half = m_ / 2;
  for (Eigen::Index k = 0; k <= half; ++k) {
    const double wt = (k == 0 || k == half ? 0.5 : 1.0) * 2.0 / double(m_) * h_(k);
    if (wt == 0.0) continue;
    const double x = 2.0 * std::cos(2.0 * M_PI * double(k) / double(m_));
    double xp = 1.0;
    for (Eigen::Index j = 0; j <= k_max; ++j, xp *= x) out(j) += wt * xp;
  }
  for (const auto& a : atoms_) {
    double xp = 1.0;
    for (Eigen::Index j = 0; j <= k_max; ++j, xp *= a.x) out(j) += a.mass * xp;
  }
  return out;
}

CircleMeasure szego_map(const LineMeasure& rho) {
  const Eigen::Index m = rho.grid_size();
  Eigen::VectorXd w(m);
  for (Eigen::Index k = 0; k < m; ++k) w(k) = rho.weight()(std::min(k, m - k));
  std::vector<PointMass> atoms;
  for (const auto& a : rho.atoms()) {
    const double t = std::acos(std::clamp(0.5 * a.x, -1.0, 1.0));
    if (t < 1e-15 || t > M_PI - 1e-15) {
      atoms.push_back({t, a.mass});
    } else {
      atoms.push_back({t, 0.5 * a.mass});
      atoms.push_back({-t, 0.5 * a.mass});
    }
  }
  return CircleMeasure(m, std::move(w), std::move(atoms));
}

ComplexPoly<double> oprl_from_opuc(const VerblunskySeq<double>& alpha, Eigen::Index n) {
  require_real(alpha, "oprl_from_opuc");
  if (n < 0 || 2 * n > alpha.size()) throw RangeError("oprl_from_opuc: need 2n <= N");
  const OpucFamily<double> fam = szego_forward(alpha.prefix(2 * n));
  const ComplexPoly<double> s = fam.phi[2 * n] + fam.phi_star[2 * n];
  const double scale = n == 0 ? 0.5 : 1.0 / (1.0 - alpha[2 * n - 1].real());
  // z^{-n} S = s_n + sum_k s_{n+k} (z^k + z^{-k}), and z^k + z^{-k} = C_k(x) with C_0 = 2, C_1 = x, C_{k+1} = x C_k - C_{k-1}.
  ComplexPoly<double> c_prev = ComplexPoly<double>::constant(2.0);
  ComplexPoly<double> c_cur({0.0, 1.0});
  ComplexPoly<double> out = ComplexPoly<double>::constant(s[n]);
  for (Eigen::Index k = 1; k <= n; ++k) {
    out += c_cur * s[n + k];
    ComplexPoly<double> next = c_cur.shifted(1) - c_prev;
    c_prev = std::move(c_cur);
    c_cur = std::move(next);
  }
  return out.padded(n) * std::complex<double>(scale);
}

JacobiParams geronimus_forward(const VerblunskySeq<double>& alpha) {
  require_real(alpha, "geronimus_forward");
  const Eigen::Index n = alpha.size() / 2;
  auto al = [&](Eigen::Index j) { return j == -1 ? -1.0 : (j < -1 ? 0.0 : alpha[j].real()); };
  Eigen::VectorXd a(n), b(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double a2 = (1.0 - al(2 * k - 1)) * (1.0 - al(2 * k) * al(2 * k)) * (1.0 + al(2 * k + 1));
    a(k) = std::sqrt(a2);
    b(k) = (1.0 - al(2 * k - 1)) * al(2 * k) - (1.0 + al(2 * k - 1)) * al(2 * k - 2);
  }
  return JacobiParams(std::move(a), std::move(b));
}

VerblunskySeq<double> geronimus_inverse(const JacobiParams& j) {
  const Eigen::Index n = j.size();
  if (n == 0) return VerblunskySeq<double>();
  // phi^{+-}_0 = 0, phi_1 = 1, phi_{k+1} = (+-2 - b_k) phi_k - a_{k-1}^2 phi_{k-1}, a_0 := 1.
  Eigen::VectorXd pp(n + 2), pm(n + 2);
  pp(0) = pm(0) = 0.0;
  pp(1) = pm(1) = 1.0;
  for (Eigen::Index k = 1; k <= n; ++k) {
    const double a2 = k == 1 ? 1.0 : j.a(k - 2) * j.a(k - 2);
    pp(k + 1) = (2.0 - j.b(k - 1)) * pp(k) - a2 * pp(k - 1);
    pm(k + 1) = (-2.0 - j.b(k - 1)) * pm(k) - a2 * pm(k - 1);
  }
  for (Eigen::Index k = 1; k <= n + 1; ++k) {
    const double sign = (k - 1) % 2 == 0 ? 1.0 : -1.0;
    if (!(pp(k) > 0.0) || !(sign * pm(k) > 0.0)) throw SupportOutsideInterval(static_cast<std::size_t>(k));
  }
  Eigen::VectorXcd alpha(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double u = pp(k + 2) / pp(k + 1);
    const double v = -pm(k + 2) / pm(k + 1);
    alpha(2 * k) = (v - u) / (v + u);
    if (k >= 1) alpha(2 * k - 1) = 1.0 - 0.5 * (u + v);
  }
  const double prev_odd = n >= 2 ? alpha(2 * n - 3).real() : -1.0;
  const double last_even = alpha(2 * n - 2).real();
  const double closing = j.a(n - 1) * j.a(n - 1) / ((1.0 - prev_odd) * (1.0 - last_even * last_even)) - 1.0;
  if (!(std::abs(closing) < 1.0)) throw SupportOutsideInterval(static_cast<std::size_t>(n + 1));
  alpha(2 * n - 1) = closing;
  for (Eigen::Index k = 0; k < 2 * n; ++k)
    if (!(std::abs(alpha(k)) < 1.0)) throw SupportOutsideInterval(static_cast<std::size_t>(k / 2 + 1));
  return VerblunskySeq<double>(std::move(alpha));
}

double jacobi_opr(const JacobiParams& j, Eigen::Index n, double x) {
  if (n < 0 || n > j.size()) throw RangeError("jacobi_opr: need n <= length");
  double prev = 1.0, cur = 1.0;
  if (n == 0) return 1.0;
  cur = x - j.b(0);
  for (Eigen::Index k = 1; k < n; ++k) {
    const double next = (x - j.b(k)) * cur - j.a(k - 1) * j.a(k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace opuc
