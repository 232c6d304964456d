#ifndef OPUC_TESTS_SUPPORT_HPP
#define OPUC_TESTS_SUPPORT_HPP

#include <doctest.h>

#include <Eigen/Core>
#include <cmath>
#include <complex>

#include "opuc/rng.hpp"
#include "opuc/verblunsky.hpp"

namespace opuc::test {

using cd = std::complex<double>;
inline const double kPi = std::acos(-1.0);

inline double max_diff(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  const Eigen::Index n = std::max(a.size(), b.size());
  double m = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) m = std::max(m, std::abs((i < a.size() ? a(i) : cd(0)) - (i < b.size() ? b(i) : cd(0))));
  return m;
}

inline Eigen::VectorXcd vec(std::initializer_list<cd> v) {
  Eigen::VectorXcd out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (const cd& x : v) out(i++) = x;
  return out;
}

inline VerblunskySeq<double> random_alpha(CounterRng& rng, Eigen::Index n, double radius) {
  Eigen::VectorXcd a(n);
  for (Eigen::Index j = 0; j < n; ++j) a(j) = rng.disk(radius);
  return VerblunskySeq<double>(std::move(a));
}

}  // namespace opuc::test

#endif
