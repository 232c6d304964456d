#include <doctest.h>

#include "opuc/asymptotics.hpp"
#include "opuc/circle_measure.hpp"
#include "opuc/schur.hpp"
#include "opuc/synthesis.hpp"
#include "support.hpp"

using namespace opuc;
using namespace opuc::test;

namespace {

CircleMeasure smooth(Eigen::Index m = 1024) {
  return CircleMeasure::from_weight([](double t) { return 1.0 + 0.5 * std::cos(t); }, m);
}

}  // namespace

TEST_CASE("bernstein-szego caratheodory function") {
  const VerblunskySeq<double> zero{0.0, 0.0};
  for (const cd z : {cd(0), cd(0.4, -0.3)}) CHECK(std::abs(bs_caratheodory(zero, 2, z) - 1.0) < 1e-15);
  const VerblunskySeq<double> half{0.5};
  CHECK(std::abs(bs_caratheodory(half, 1, 0.0) - 1.0) < 1e-15);
  CHECK(std::abs(bs_caratheodory(half, 1, 0.3) - 1.15 / 0.85) < 1e-14);

  // agrees with the series of the exact moments
  CounterRng rng(41);
  for (int i = 0; i < 20; ++i) {
    const auto alpha = random_alpha(rng, 5, 0.7);
    Eigen::VectorXcd a = Eigen::VectorXcd::Zero(80);
    a.head(5) = alpha.alphas();
    const cd z = rng.disk(0.5);
    CHECK(std::abs(bs_caratheodory(alpha, 5, z) - caratheodory(moments_from_verblunsky(VerblunskySeq<double>(a), 80), z)) < 1e-12);
  }
}

TEST_CASE("aleksandrov family") {
  CounterRng rng(42);
  const auto alpha = random_alpha(rng, 6, 0.8);
  CHECK(max_diff(aleksandrov(alpha, 1.0).alphas(), alpha.alphas()) == 0.0);
  CHECK(max_diff(aleksandrov(alpha, -1.0).alphas(), -alpha.alphas()) == 0.0);
  CHECK_THROWS_AS(aleksandrov(alpha, 0.5), DomainError);

  // Schur function rotates: f_lambda = lambda f
  const VerblunskySeq<double> half(vec({0.5, 0, 0, 0, 0, 0, 0, 0, 0}));
  auto schur_of = [](const VerblunskySeq<double>& a) {
    return schur_from_caratheodory(caratheodory_series(moments_from_verblunsky(a, 9), 9));
  };
  CHECK(max_diff(schur_of(aleksandrov(half, cd(0, 1))).coeffs(), cd(0, 1) * schur_of(half).coeffs()) < 1e-10);

  // F_lambda from F, checked against the rotated coefficients
  for (int i = 0; i < 10; ++i) {
    const cd lambda = rng.unit(), z = rng.disk(0.8);
    CHECK(std::abs(aleksandrov_caratheodory(bs_caratheodory(alpha, 6, z), lambda) -
                   bs_caratheodory(aleksandrov(alpha, lambda), 6, z)) < 1e-12);
  }
}

TEST_CASE("aleksandrov averages") {
  CounterRng rng(43);
  CHECK(aleksandrov_average(VerblunskySeq<double>{0.5}, 0, 64) == cd(1));
  CHECK(std::abs(aleksandrov_average(VerblunskySeq<double>{0.5, 1.0 / 3}, 1, 64)) <= 1e-6);
  CHECK(std::abs(aleksandrov_average(random_alpha(rng, 5, 0.8), 2, 64)) <= 1e-6);
  // the mean of the Mobius image of F is 1 for every Re a > 0
  for (int i = 0; i < 5; ++i) {
    const cd a(rng.uniform(0.2, 3.0), rng.uniform(-2.0, 2.0));
    CHECK(std::abs(mobius_mean(a) - 1.0) < 1e-10);
  }
}

TEST_CASE("toeplitz determinants") {
  const auto flat = toeplitz_det(MomentSeq<double>{1, 0, 0, 0}, 3);
  CHECK(flat.gram == doctest::Approx(1.0));
  CHECK(flat.product_form == doctest::Approx(1.0));
  const auto d1 = toeplitz_det(MomentSeq<double>{1, 0.5}, 1);
  CHECK(d1.gram == doctest::Approx(0.75).epsilon(1e-15));
  CHECK(d1.product_form == doctest::Approx(0.75).epsilon(1e-15));
  const auto d2 = toeplitz_det(MomentSeq<double>{1, 0.5, 0.5}, 2);
  CHECK(d2.gram == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(d2.product_form == doctest::Approx(0.5).epsilon(1e-14));

  CounterRng rng(44);
  for (int i = 0; i < 20; ++i) {
    const auto alpha = random_alpha(rng, 12, 0.8);
    const auto c = moments_from_verblunsky(alpha, 12);
    double prev = 2.0;
    for (Eigen::Index n = 0; n <= 12; ++n) {
      const auto d = toeplitz_det(c, n);
      CHECK(std::abs(d.gram - d.product_form) / d.product_form < 1e-8);
      CHECK(d.gram <= prev);  // D_{n+1} / D_n = ||Phi_{n+1}||^2 <= 1
      prev = d.gram;
    }
  }
}

TEST_CASE("szego limits") {
  const auto free = szego_limits(VerblunskySeq<double>{0.0, 0.0});
  CHECK(free.f == 1.0);
  CHECK(free.g == 1.0);
  const auto half = szego_limits(VerblunskySeq<double>{0.5, 0.0, 0.0});
  CHECK(half.f == doctest::Approx(0.75));
  CHECK(half.g == doctest::Approx(4.0 / 3.0));
  Eigen::VectorXcd a(40);
  double prod = 1.0;
  for (Eigen::Index j = 0; j < 40; ++j) {
    a(j) = std::pow(0.5, double(j + 1));
    prod *= 1.0 - std::norm(a(j));
  }
  CHECK(szego_limits(VerblunskySeq<double>(a)).f == doctest::Approx(prod).epsilon(1e-14));
  CHECK(prod == doctest::Approx(0.68854).epsilon(1e-5));
}

TEST_CASE("szego theorem") {
  const auto u = szego_theorem_check(CircleMeasure::uniform(256), 5);
  CHECK(u.lhs == doctest::Approx(1.0));
  CHECK(u.rhs == doctest::Approx(1.0));
  const auto bs = szego_theorem_check(bernstein_szego(VerblunskySeq<double>{0.5}, 1, 1024), 4);
  CHECK(std::abs(bs.lhs - 0.75) < 1e-8);
  CHECK(std::abs(bs.rhs - 0.75) < 1e-8);
  const auto sm = szego_theorem_check(smooth(), 30);
  CHECK(std::abs(sm.lhs - sm.rhs) < 1e-4);
  CHECK(sm.lhs >= sm.rhs);
  // an atom leaves log w unchanged after normalization but lowers the Verblunsky product
  const CircleMeasure with_atom(1024, Eigen::VectorXd::Ones(1024), {{1.0, 0.5}});
  CHECK(std::isfinite(entropy(with_atom)));
}

TEST_CASE("szego function") {
  const auto flat = CircleMeasure::uniform(256);
  CHECK(std::abs(szego_function(flat, cd(0.3, 0.2)) - 1.0) < 1e-14);
  const auto bs = bernstein_szego(VerblunskySeq<double>{0.5}, 1, 1024);
  const double rho = std::sqrt(0.75);
  CHECK(std::abs(szego_function(bs, 0.0) - rho) < 1e-12);
  CounterRng rng(45);
  for (int i = 0; i < 10; ++i) {
    const cd z = rng.disk(0.9);
    CHECK(std::abs(szego_function(bs, z) - rho / (1.0 - z / 2.0)) < 1e-10);
    // phi_1^* D = 1
    CHECK(std::abs(eval_orthonormal(VerblunskySeq<double>{0.5}, 1, z).second * szego_function(bs, z) - 1.0) < 1e-10);
  }
}

TEST_CASE("szego asymptotics report") {
  const auto bs = bernstein_szego(VerblunskySeq<double>{0.5}, 1, 1024);
  for (const auto& row : szego_asymptotics_report(bs, 4, {0.0, 0.5}))
    if (row.n >= 1) {
      CHECK(row.l2_distance < 1e-8);
      CHECK(row.sup_interior < 1e-10);
      CHECK(row.singular_mass == 0.0);
    }
  for (const auto& row : szego_asymptotics_report(CircleMeasure::uniform(256), 4, {0.5})) {
    CHECK(row.l2_distance < 1e-12);
    CHECK(row.sup_interior < 1e-12);
  }
  const auto rows = szego_asymptotics_report(smooth(), 20, {0.5});
  CHECK(rows.back().sup_interior < 1e-3);
  CHECK(rows.back().sup_interior < rows[2].sup_interior);
}

TEST_CASE("strong szego theorem") {
  const auto u = strong_szego_check(CircleMeasure::uniform(256), 5);
  CHECK(u.lhs == doctest::Approx(1.0));
  CHECK(u.rhs == doctest::Approx(1.0));
  const auto bs = strong_szego_check(bernstein_szego(VerblunskySeq<double>{0.5}, 1, 1024), 10);
  CHECK(std::abs(bs.lhs - 4.0 / 3.0) < 1e-6);
  CHECK(std::abs(bs.rhs - 4.0 / 3.0) < 1e-6);
  const auto sm = strong_szego_check(smooth(), 40);
  CHECK(std::abs(sm.lhs - sm.rhs) / sm.rhs <= 1e-3);
  CHECK_THROWS_AS(strong_szego_check(CircleMeasure::point(0.0), 3), DomainError);

  // L_n of the a = 1/2 weight: (1/2)^n / n
  const auto l = log_weight_fourier(bernstein_szego(VerblunskySeq<double>{0.5}, 1, 1024), 6);
  for (Eigen::Index n = 1; n <= 6; ++n) CHECK(std::abs(l(n) - std::pow(0.5, double(n)) / double(n)) < 1e-12);
}

TEST_CASE("nevai-totik decay rate") {
  Eigen::VectorXcd geo(40);
  for (Eigen::Index j = 0; j < 40; ++j) geo(j) = std::pow(1.0 / 3.0, double(j + 1));
  const auto r = nevai_totik_rate(VerblunskySeq<double>(geo));
  CHECK(std::abs(r.rate - 1.0 / 3.0) <= 0.02);
  Eigen::VectorXcd fin = Eigen::VectorXcd::Zero(20);
  fin.head(2) << 0.5, 0.25;
  CHECK(nevai_totik_rate(VerblunskySeq<double>(fin)).rate == 0.0);
  CHECK(std::abs(nevai_totik_rate(VerblunskySeq<double>(Eigen::VectorXcd::Constant(40, 0.5))).rate - 1.0) <= 0.02);
}

TEST_CASE("baxter diagnostics") {
  const auto free = baxter_diagnostics(VerblunskySeq<double>{0.0, 0.0}, MomentSeq<double>{1, 0, 0}, 1);
  CHECK(free.sum_alpha == 0.0);
  CHECK(free.sum_c == 0.0);
  CHECK(free.min_w == doctest::Approx(1.0));

  Eigen::VectorXcd a(20);
  double want = 0.0;
  for (Eigen::Index j = 0; j < 20; ++j) {
    a(j) = std::pow(0.5, double(j + 1));
    want += double(j) * std::abs(a(j));
  }
  const VerblunskySeq<double> geo(a);
  CHECK(baxter_diagnostics(geo, moments_from_verblunsky(geo, 20), 1).sum_alpha == doctest::Approx(want));

  const auto bs = bernstein_szego(VerblunskySeq<double>{0.5}, 1, 1024);
  const auto d = baxter_diagnostics(VerblunskySeq<double>{0.5}, moments(bs, 20), 0, bs);
  double sum_c = 0.0;
  for (int n = 1; n <= 20; ++n) sum_c += std::pow(0.5, n);
  CHECK(d.sum_c == doctest::Approx(sum_c).epsilon(1e-12));
  CHECK(d.min_w == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("bernstein-szego approximation of a general measure") {
  // mu_n shares c_0..c_n with mu
  CHECK(bs_moment_deviation(smooth(), 6) < 1e-12);
  const CircleMeasure mixed(1024, Eigen::VectorXd::Ones(1024), {{0.3, 0.2}});
  CHECK(bs_moment_deviation(mixed, 5) < 1e-9);
}
