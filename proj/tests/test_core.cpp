#include <doctest.h>

#include "opuc/caratheodory.hpp"
#include "opuc/circle_measure.hpp"
#include "opuc/synthesis.hpp"
#include "opuc/szego.hpp"
#include "support.hpp"

using namespace opuc;
using namespace opuc::test;

TEST_CASE("reversal flips and conjugates coefficients") {
  CHECK(coeff_distance(reversed(ComplexPoly<double>{1.0}, 2), ComplexPoly<double>{0.0, 0.0, 1.0}) == 0.0);
  CHECK(coeff_distance(reversed(ComplexPoly<double>{-0.5, 1.0}, 1), ComplexPoly<double>{1.0, -0.5}) == 0.0);
  const ComplexPoly<double> p{-1.0 / 3, -1.0 / 3, 1.0};
  CHECK(coeff_distance(reversed(p, 2), ComplexPoly<double>{1.0, -1.0 / 3, -1.0 / 3}) == 0.0);
  const ComplexPoly<double> q{cd(1, 2), cd(0, -1)};
  CHECK(coeff_distance(reversed(q, 1), ComplexPoly<double>{cd(0, 1), cd(1, -2)}) == 0.0);
  CHECK_THROWS_AS(reversed(p, 1), DomainError);
}

TEST_CASE("szego recursion by hand") {
  SUBCASE("alpha = (1/2)") {
    const auto fam = szego_forward(VerblunskySeq<double>{0.5});
    CHECK(coeff_distance(fam.phi[1], ComplexPoly<double>{-0.5, 1.0}) < 1e-15);
    CHECK(fam.norms[1] == doctest::Approx(std::sqrt(0.75)).epsilon(1e-15));
  }
  SUBCASE("alpha = (1/2, 1/3)") {
    const auto fam = szego_forward(VerblunskySeq<double>{0.5, 1.0 / 3});
    CHECK(coeff_distance(fam.phi[2], ComplexPoly<double>{-1.0 / 3, -1.0 / 3, 1.0}) < 1e-15);
    CHECK(coeff_distance(fam.phi_star[2], reversed(fam.phi[2], 2)) < 1e-15);
    CHECK(fam.norms[2] * fam.norms[2] == doctest::Approx(0.75 * 8.0 / 9.0));
  }
  SUBCASE("free case") {
    const auto fam = szego_forward(VerblunskySeq<double>{0.0, 0.0, 0.0});
    for (Eigen::Index n = 0; n <= 3; ++n) {
      CHECK(coeff_distance(fam.phi[n], ComplexPoly<double>::monomial(n)) == 0.0);
      CHECK(fam.norms[n] == 1.0);
    }
  }
}

TEST_CASE("inverse recursion") {
  const auto [a1, phi1] = inverse_szego_step(ComplexPoly<double>{-1.0 / 3, -1.0 / 3, 1.0}, 2);
  CHECK(std::abs(a1 - 1.0 / 3) < 1e-15);
  CHECK(coeff_distance(phi1, ComplexPoly<double>{-0.5, 1.0}) < 1e-15);
  const auto [a0, phi0] = inverse_szego_step(ComplexPoly<double>{0.0, 1.0}, 1);
  CHECK(a0 == cd(0));
  CHECK(coeff_distance(phi0, ComplexPoly<double>{1.0}) == 0.0);
  CHECK_THROWS_AS(inverse_szego_step(ComplexPoly<double>{-1.0, 1.0}, 1), NotStrictlyInside);

  CounterRng rng(11);
  for (int i = 0; i < 30; ++i) {
    const auto alpha = random_alpha(rng, 8, 0.7);
    ComplexPoly<double> p = szego_forward(alpha).phi[8];
    for (Eigen::Index k = 8; k >= 1; --k) {
      auto [a, prev] = inverse_szego_step(p, k);
      CHECK(std::abs(a - alpha[k - 1]) < 1e-11);
      p = std::move(prev);
    }
  }
}

TEST_CASE("moments of simple measures") {
  CHECK(max_diff(moments(CircleMeasure::uniform(64), 3).values(), vec({1, 0, 0, 0})) < 1e-15);
  CHECK(max_diff(moments(CircleMeasure::point(0.0), 2).values(), vec({1, 1, 1})) < 1e-15);
  // rho^2 / |1 - a e^{i theta}|^2 has c_n = a^n
  const CircleMeasure bs = CircleMeasure::from_weight(
      [](double t) { return 0.75 / std::norm(1.0 - 0.5 * std::polar(1.0, t)); }, 256);
  CHECK(max_diff(moments(bs, 2).values(), vec({1, 0.5, 0.25})) < 1e-14);
  CHECK_THROWS_AS(moments(CircleMeasure::uniform(8), 4), AliasingError);
}

TEST_CASE("caratheodory function") {
  const MomentSeq<double> uniform{1, 0, 0, 0};
  CHECK(std::abs(caratheodory(uniform, cd(0.3, -0.4)) - 1.0) < 1e-15);

  const double t0 = 0.7;
  const cd u = std::polar(1.0, t0), z(0.2, 0.1);
  CHECK(std::abs(caratheodory_integral(CircleMeasure::point(t0), z) - (u + z) / (u - z)) < 1e-14);

  Eigen::VectorXcd geo(41);
  for (Eigen::Index n = 0; n <= 40; ++n) geo(n) = std::pow(0.5, double(n));
  CHECK(caratheodory(MomentSeq<double>(geo), cd(0.1)).real() == doctest::Approx(1.0 + 2.0 * 0.05 / 0.95).epsilon(1e-14));
  CHECK_THROWS_AS(caratheodory(uniform, cd(1.0)), DomainError);
}

TEST_CASE("schur function from caratheodory") {
  const auto zero = schur_from_caratheodory(PowerSeries<double>::constant(1.0, 8));
  CHECK(zero.coeffs().cwiseAbs().maxCoeff() == 0.0);

  Eigen::VectorXcd herglotz = Eigen::VectorXcd::Constant(9, 2.0);
  herglotz(0) = 1.0;  // (1 + z) / (1 - z)
  const auto one = schur_from_caratheodory(PowerSeries<double>(herglotz));
  CHECK(max_diff(one.coeffs(), vec({1})) < 1e-15);

  const auto f = schur_from_caratheodory(caratheodory_series(MomentSeq<double>{1, 0.5, 0.25, 0.125}, 3));
  CHECK(std::abs(f[0] - 0.5) < 1e-15);
  CHECK(max_diff(caratheodory_from_schur(f).coeffs(), vec({1, 1, 0.5, 0.25})) < 1e-15);
}

TEST_CASE("measure from caratheodory") {
  const auto flat = measure_from_caratheodory(PowerSeries<double>::constant(1.0, 16), 512, 0.9);
  CHECK((flat.ac_weight().array() - 1.0).abs().maxCoeff() < 1e-12);

  Eigen::VectorXcd c(400);
  for (Eigen::Index n = 0; n < 400; ++n) c(n) = std::pow(0.5, double(n));
  const auto mu = measure_from_caratheodory(caratheodory_series(MomentSeq<double>(c), 399), 4096, 0.999);
  double worst = 0.0;
  for (Eigen::Index k = 0; k < 4096; ++k) {
    const double w = 0.75 / std::norm(1.0 - 0.5 * std::polar(1.0, mu.theta(k)));
    worst = std::max(worst, std::abs(mu.ac_weight()(k) - w));
  }
  CHECK(worst < 1e-2);

  Eigen::VectorXcd delta = Eigen::VectorXcd::Constant(200, 2.0);
  delta(0) = 1.0;
  const auto poisson = measure_from_caratheodory(PowerSeries<double>(delta), 1024, 0.9);
  CHECK(poisson.ac_mass() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(poisson.ac_weight()(0) > 10.0 * poisson.ac_weight()(512));
}

TEST_CASE("inner products against moments") {
  const MomentSeq<double> c{1, 0.5, 0.25};
  CHECK(std::abs(inner_product(ComplexPoly<double>{1.0}, ComplexPoly<double>{1.0}, c) - 1.0) < 1e-15);
  CHECK(std::abs(inner_product(ComplexPoly<double>{0.0, 1.0}, ComplexPoly<double>{0.0, 1.0}, c) - 1.0) < 1e-15);
  const ComplexPoly<double> phi1{-0.5, 1.0};
  CHECK(std::abs(inner_product(phi1, phi1, c) - 0.75) < 1e-15);
  CHECK(std::abs(inner_product(ComplexPoly<double>{1.0}, phi1, c)) < 1e-15);
}

TEST_CASE("verblunsky coefficients from moments") {
  CHECK(max_diff(verblunsky_from_moments(MomentSeq<double>{1, 0, 0, 0}, 3).alphas(), vec({0, 0, 0})) == 0.0);
  CHECK(max_diff(verblunsky_from_moments(MomentSeq<double>{1, 0.5, 0.25}, 2).alphas(), vec({0.5, 0})) < 1e-15);
  CHECK(max_diff(verblunsky_from_moments(MomentSeq<double>{1, 0.5, 0.5}, 2).alphas(), vec({0.5, 1.0 / 3})) < 1e-15);
  CHECK_THROWS_AS(verblunsky_from_moments(MomentSeq<double>{1, 1, 1}, 2), NotStrictlyInside);
  CHECK_THROWS_AS(verblunsky_from_moments(MomentSeq<double>{1, 0.5}, 2), RangeError);
  CHECK(max_diff(moments_from_verblunsky(VerblunskySeq<double>{0.5, 1.0 / 3}, 2).values(), vec({1, 0.5, 0.5})) < 1e-15);
}

TEST_CASE("bernstein-szego moments round trip") {
  CounterRng rng(3);
  for (int i = 0; i < 40; ++i) {
    const Eigen::Index n = 1 + Eigen::Index(rng.next_u64() % 15);
    const auto alpha = random_alpha(rng, n, 0.9);
    const auto c = bernstein_szego_moments(alpha.cast<long double>(), n, n + 2);
    const auto back = verblunsky_from_moments(c, n + 2);
    Eigen::VectorXcd got(n + 2);
    for (Eigen::Index j = 0; j < n + 2; ++j) got(j) = cd(back[j]);
    CHECK(max_diff(got, alpha.alphas()) < 1e-8);
  }
  // the grid route agrees when the zeros stay away from the circle
  const VerblunskySeq<double> alpha{0.5, 1.0 / 3};
  const auto grid = moments(bernstein_szego(alpha, 2, 1024), 4).values();
  const auto quad = bernstein_szego_moments(alpha, 2, 4).values();
  CHECK(max_diff(grid, quad) < 1e-13);
  CHECK(max_diff(verblunsky_from_moments(MomentSeq<double>(grid), 4).alphas(), vec({0.5, 1.0 / 3, 0, 0})) < 1e-8);
}

TEST_CASE("bernstein-szego weight for alpha = (1/2)") {
  const auto mu = bernstein_szego(VerblunskySeq<double>{0.5}, 1, 256);
  for (Eigen::Index k = 0; k < 256; k += 17)
    CHECK(mu.ac_weight()(k) == doctest::Approx(0.75 / std::norm(1.0 - 0.5 * std::polar(1.0, mu.theta(k)))).epsilon(1e-13));
  const auto flat = bernstein_szego(VerblunskySeq<double>{0.5}, 0, 64);
  CHECK((flat.ac_weight().array() - 1.0).abs().maxCoeff() < 1e-15);
}

TEST_CASE("christoffel-darboux kernel") {
  const VerblunskySeq<double> zero{0.0, 0.0, 0.0, 0.0};
  CHECK(std::abs(cd_kernel(zero, 2, cd(0), cd(0)) - 1.0) < 1e-15);
  const cd z(0.3, 0.2), w(-0.1, 0.5);
  cd geo = 0.0;
  for (int j = 0; j <= 3; ++j) geo += std::pow(z * std::conj(w), j);
  CHECK(std::abs(cd_kernel(zero, 3, z, w) - geo) < 1e-14);
  CHECK(std::abs(cd_kernel(VerblunskySeq<double>{0.5, 1.0 / 3}, 1, cd(0.3), cd(0.3)) - (1.0 + 0.04 / 0.75)) < 1e-14);

  CounterRng rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto alpha = random_alpha(rng, 7, 0.9);
    const cd a = rng.disk(1.3), b = rng.disk(1.3);
    cd direct = 0.0;
    for (Eigen::Index j = 0; j <= 6; ++j) direct += std::conj(eval_orthonormal(alpha, j, b).first) * eval_orthonormal(alpha, j, a).first;
    CHECK(std::abs(cd_kernel(alpha, 6, a, b) - direct) / std::max(1.0, std::abs(direct)) < 1e-10);
  }
}

TEST_CASE("properties of the orthonormal recursion") {
  CounterRng rng(9);
  for (int i = 0; i < 30; ++i) {
    const auto alpha = random_alpha(rng, 10, 0.95);
    const cd z = rng.disk(1.0), u = rng.unit();
    for (Eigen::Index n = 0; n <= 10; ++n) {
      const auto [p, ps] = eval_orthonormal(alpha, n, z);
      CHECK(std::abs(ps) >= std::sqrt(1.0 - std::norm(z)) - 1e-12);
      CHECK(std::abs(p) <= std::abs(ps) + 1e-12);
      const auto [pu, psu] = eval_orthonormal(alpha, n, u);
      CHECK(std::abs(std::abs(pu) - std::abs(psu)) < 1e-10 * std::abs(psu));
    }
  }
}
