#ifndef OPUC_SZEGO_MAP_HPP
#define OPUC_SZEGO_MAP_HPP

#include <vector>

#include "opuc/circle_measure.hpp"
#include "opuc/verblunsky.hpp"

namespace opuc {

/// a_1..a_n > 0 and b_1..b_n.
struct JacobiParams {
  Eigen::VectorXd a;
  Eigen::VectorXd b;

  JacobiParams() = default;
  JacobiParams(Eigen::VectorXd a_, Eigen::VectorXd b_);
  Eigen::Index size() const noexcept { return a.size(); }
  /// n x n truncation J with b on the diagonal and a_1..a_{n-1} off it.
  Eigen::MatrixXd matrix(Eigen::Index n) const;
};

struct LineAtom {
  double x;
  double mass;
};

/// Probability measure on [-2, 2]: h(t) dt / pi in the Chebyshev angle t
/// (x = 2 cos t), sampled at t_k = 2 pi k / M for k = 0..M/2, plus atoms.
class LineMeasure {
public:
  LineMeasure(Eigen::Index grid_size, Eigen::VectorXd weight, std::vector<LineAtom> atoms);
  /// The arcsine law dx / (pi sqrt(4 - x^2)).
  static LineMeasure arcsine(Eigen::Index grid_size = 1024);
  static LineMeasure point(double x, Eigen::Index grid_size = 1024);

  Eigen::Index grid_size() const noexcept { return m_; }
  const Eigen::VectorXd& weight() const noexcept { return h_; }
  const std::vector<LineAtom>& atoms() const noexcept { return atoms_; }
  /// int x^k d rho for k = 0..K.
  Eigen::VectorXd moments(Eigen::Index k_max) const;

private:
  Eigen::Index m_;
  Eigen::VectorXd h_;
  std::vector<LineAtom> atoms_;
};

/// The even circle measure with int f(x) d rho = int f(2 cos theta) d mu.
CircleMeasure szego_map(const LineMeasure& rho);

/// Monic P_n in x with P_n(z + 1/z) = z^{-n} (Phi_{2n} + Phi_{2n}^*) / (1 - alpha_{2n-1}).
ComplexPoly<double> oprl_from_opuc(const VerblunskySeq<double>& alpha, Eigen::Index n);

/// a_{n+1}^2 = (1 - alpha_{2n-1})(1 - alpha_{2n}^2)(1 + alpha_{2n+1}),
/// b_{n+1} = (1 - alpha_{2n-1}) alpha_{2n} - (1 + alpha_{2n-1}) alpha_{2n-2}, alpha_{-1} = -1.
/// alpha_0..alpha_{2n-1} give a_1..a_n, b_1..b_n.
JacobiParams geronimus_forward(const VerblunskySeq<double>& alpha);

/// Inverse of geronimus_forward (n Jacobi pairs give alpha_0..alpha_{2n-1}).
VerblunskySeq<double> geronimus_inverse(const JacobiParams& j);

/// Monic OPRL P_n(x) by the three-term recurrence.
double jacobi_opr(const JacobiParams& j, Eigen::Index n, double x);

}  // namespace opuc

#endif  // OPUC_SZEGO_MAP_HPP
