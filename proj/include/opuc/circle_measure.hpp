#ifndef OPUC_CIRCLE_MEASURE_HPP
#define OPUC_CIRCLE_MEASURE_HPP

#include <functional>
#include <vector>

#include "opuc/caratheodory.hpp"

namespace opuc {

struct PointMass {
  double theta;
  double mass;
};

/// Probability measure on the circle: w(theta_k) d theta / 2 pi on the grid
/// theta_k = 2 pi k / M, plus finitely many atoms.
class CircleMeasure {
public:
  CircleMeasure() : CircleMeasure(1024, Eigen::VectorXd::Ones(1024), {}) {}
  /// Normalizes to total mass 1 (weights and masses scaled together).
  CircleMeasure(Eigen::Index grid_size, Eigen::VectorXd ac_weight, std::vector<PointMass> atoms);

  static CircleMeasure uniform(Eigen::Index grid_size = 1024);
  static CircleMeasure point(double theta, Eigen::Index grid_size = 1024);
  static CircleMeasure from_weight(const std::function<double(double)>& w, Eigen::Index grid_size = 1024,
                                   std::vector<PointMass> atoms = {});

  Eigen::Index grid_size() const noexcept { return m_; }
  const Eigen::VectorXd& ac_weight() const noexcept { return w_; }
  const std::vector<PointMass>& atoms() const noexcept { return atoms_; }
  double theta(Eigen::Index k) const { return 2.0 * M_PI * static_cast<double>(k) / static_cast<double>(m_); }
  double ac_mass() const { return w_.sum() / static_cast<double>(m_); }
  double singular_mass() const;
  bool has_ac() const { return w_.maxCoeff() > 0.0; }

private:
  Eigen::Index m_;
  Eigen::VectorXd w_;
  std::vector<PointMass> atoms_;
};

/// c_n = (1/M) sum_k w_k e^{-i n theta_k} + sum_j m_j e^{-i n theta_j}, n = 0..N.
/// Throws AliasingError when N >= M/2 and there is an a.c. part.
MomentSeq<double> moments(const CircleMeasure& mu, Eigen::Index n);

/// F(z) = int (e^{i theta} + z)/(e^{i theta} - z) d mu by quadrature; usable near the circle.
std::complex<double> caratheodory_integral(const CircleMeasure& mu, std::complex<double> z);

/// w_k = Re F(r e^{i theta_k}), renormalized; atoms are not recovered.
/// r <= 0 selects the default r = 1 - 10/M.
CircleMeasure measure_from_caratheodory(const PowerSeries<double>& f_cara, Eigen::Index grid_size, double r = -1.0);

/// sum_j p_j e^{i j theta_k} on the grid theta_k = 2 pi k / M (one inverse FFT).
Eigen::VectorXcd grid_values(const Eigen::VectorXcd& p, Eigen::Index m);

/// Schur function of mu to the given order: moments -> F -> f.
PowerSeries<double> schur_series(const CircleMeasure& mu, Eigen::Index order);

}  // namespace opuc

#endif  // OPUC_CIRCLE_MEASURE_HPP
