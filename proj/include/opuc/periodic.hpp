#ifndef OPUC_PERIODIC_HPP
#define OPUC_PERIODIC_HPP

#include <vector>

#include "opuc/polynomial.hpp"

namespace opuc {

/// alpha_{j+p} = alpha_j with p even.
class PeriodicSpec {
public:
  explicit PeriodicSpec(Eigen::VectorXcd alphas);
  Eigen::Index period() const noexcept { return a_.size(); }
  const Eigen::VectorXcd& alphas() const noexcept { return a_; }
  /// z^{p/2} Delta(z) as a polynomial of degree p.
  const ComplexPoly<double>& trace_poly() const noexcept { return q_; }

private:
  Eigen::VectorXcd a_;
  ComplexPoly<double> q_;
};

/// Delta(z) = Tr(z^{-p/2} T_p(z)).
std::complex<double> discriminant(const PeriodicSpec& spec, std::complex<double> z);

/// Delta(e^{i theta}) (real part) and d Delta / d theta.
double discriminant_theta(const PeriodicSpec& spec, double theta);
double discriminant_theta_derivative(const PeriodicSpec& spec, double theta);

struct Arc {
  double x;
  double y;
};

/// p sub-bands (ordered, each carrying mass 1/p), the merged arcs after
/// closing gaps shorter than 1e-8, and the open gaps.
struct BandStructure {
  std::vector<Arc> bands;
  std::vector<double> band_masses;
  std::vector<Arc> merged;
  std::vector<Arc> gaps;
};

BandStructure band_structure(const PeriodicSpec& spec, Eigen::Index grid = 1024);

/// Density of states against d theta / 2 pi: (2/p) |Delta'| / sqrt(4 - Delta^2); rejects theta outside the band interiors.
double dos_density(const PeriodicSpec& spec, double theta);

/// int of the density over [x, y] (one band): Gauss-Legendre after theta = x + (y - x) sin^2(t/2).
double band_mass(const PeriodicSpec& spec, const Arc& band, Eigen::Index nodes = 32);

/// exp(-I) for the log energy I of the density of states, by midpoint quadrature
/// (diagonal cells integrated analytically, Richardson-extrapolated in the node count).
double band_capacity(const PeriodicSpec& spec, const BandStructure& bs, Eigen::Index nodes_per_band = 200);

/// prod (1 - |alpha_j|^2)^{1/(2p)}.
double capacity_product_formula(const PeriodicSpec& spec);

/// max_{m <= m_max} ||T_{mp}(z)||_2.
double periodic_transfer_growth(const PeriodicSpec& spec, std::complex<double> z, Eigen::Index m_max);

}  // namespace opuc

#endif  // OPUC_PERIODIC_HPP
