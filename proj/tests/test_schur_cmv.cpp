#include <doctest.h>

#include <algorithm>

#include "opuc/caratheodory.hpp"
#include "opuc/circle_measure.hpp"
#include "opuc/cmv.hpp"
#include "opuc/schur.hpp"
#include "opuc/synthesis.hpp"
#include "opuc/transfer.hpp"
#include "support.hpp"

using namespace opuc;
using namespace opuc::test;

namespace {

SchurFunction<double> series_of(std::initializer_list<cd> c, Eigen::Index order) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(order + 1);
  Eigen::Index i = 0;
  for (const cd& x : c) a(i++) = x;
  return SchurFunction<double>(PowerSeries<double>(a));
}

// Schur function of the Bernstein-Szego measure of alpha, from exact moments.
PowerSeries<double> bs_schur(const VerblunskySeq<double>& alpha, Eigen::Index order) {
  Eigen::VectorXcd a = Eigen::VectorXcd::Zero(std::max(order + 1, alpha.size()));
  a.head(alpha.size()) = alpha.alphas();
  return schur_from_caratheodory(caratheodory_series(moments_from_verblunsky(VerblunskySeq<double>(a), order + 1), order + 1));
}

std::vector<cd> sorted_by_angle(std::vector<cd> z) {
  std::sort(z.begin(), z.end(), [](cd a, cd b) {
    const double ta = std::fmod(std::arg(a) + 2 * kPi, 2 * kPi), tb = std::fmod(std::arg(b) + 2 * kPi, 2 * kPi);
    return ta < tb;
  });
  return z;
}

}  // namespace

TEST_CASE("one schur step") {
  const auto [g0, f0] = schur_step(series_of({}, 6));
  CHECK(g0 == cd(0));
  CHECK(f0.series().coeffs().cwiseAbs().maxCoeff() == 0.0);

  const auto [g1, f1] = schur_step(series_of({0.5}, 6));
  CHECK(g1 == cd(0.5));
  CHECK(f1.series().coeffs().cwiseAbs().maxCoeff() < 1e-16);

  // f of alpha = (1/2, 1/3): a_1 = gamma_1 (1 - |gamma_0|^2) = 1/4
  const auto f = bs_schur(VerblunskySeq<double>{0.5, 1.0 / 3}, 8);
  CHECK(std::abs(f[1] - 0.25) < 1e-14);
  const auto [g, next] = schur_step(SchurFunction<double>(f));
  CHECK(std::abs(g - 0.5) < 1e-15);
  CHECK(std::abs(next.at_zero() - 1.0 / 3) < 1e-14);
}

TEST_CASE("schur parameters") {
  CHECK(schur_parameters(series_of({}, 6), 5).alphas().cwiseAbs().maxCoeff() == 0.0);
  try {
    schur_parameters(series_of({1.0}, 6), 3);
    FAIL("expected TerminalParameter");
  } catch (const TerminalParameter& e) {
    CHECK(e.index() == 0);
    CHECK(std::abs(e.value() - 1.0) < 1e-15);
  }
  const auto g = schur_parameters(SchurFunction<double>(bs_schur(VerblunskySeq<double>{0.5, 1.0 / 3}, 8)), 5);
  CHECK(max_diff(g.alphas(), vec({0.5, 1.0 / 3, 0, 0, 0})) < 1e-13);
  CHECK_THROWS_AS(schur_parameters(series_of({0.1}, 2), 5), RangeError);

  CounterRng rng(21);
  for (int i = 0; i < 30; ++i) {
    const auto alpha = random_alpha(rng, 6, 0.6);
    const auto back = schur_parameters(SchurFunction<double>(bs_schur(alpha, 10)), 6);
    CHECK(max_diff(back.alphas(), alpha.alphas()) < 1e-9);
  }
}

TEST_CASE("schur approximants") {
  const auto w0 = schur_approximant(VerblunskySeq<double>{0.0});
  CHECK(coeff_distance(w0.a, ComplexPoly<double>{0.0}) == 0.0);
  CHECK(coeff_distance(w0.b, ComplexPoly<double>{1.0}) == 0.0);

  const auto w1 = schur_approximant(VerblunskySeq<double>{0.5});
  for (const cd z : {cd(0), cd(0.3, 0.4), cd(-0.7)}) CHECK(std::abs(w1.a(z) / w1.b(z) - 0.5) < 1e-15);

  const auto w2 = schur_approximant(VerblunskySeq<double>{0.5, 1.0 / 3});
  for (const cd z : {cd(0), cd(0.3, 0.4), cd(-0.7), cd(0.1, -0.9)})
    CHECK(std::abs(w2.a(z) / w2.b(z) - (0.5 + z / 3.0) / (1.0 + z / 6.0)) < 1e-14);

  // the approximant's own Schur parameters are gamma_0..gamma_n, then 0
  CounterRng rng(22);
  for (int i = 0; i < 20; ++i) {
    const auto gam = random_alpha(rng, 5, 0.8);
    const auto w = schur_approximant(gam);
    const auto back = schur_parameters(SchurFunction<double>(rational_series(w.a, w.b, 12)), 7);
    CHECK(max_diff(back.alphas(), gam.alphas()) < 1e-10);
  }
}

TEST_CASE("khrushchev product") {
  const VerblunskySeq<double> zero(Eigen::VectorXcd::Zero(4));
  CHECK(khrushchev_product(zero, 1, 6).coeffs().cwiseAbs().maxCoeff() == 0.0);
  const VerblunskySeq<double> single(vec({0.5, 0, 0, 0}));
  CHECK(khrushchev_product(single, 1, 6).coeffs().cwiseAbs().maxCoeff() < 1e-15);

  // independent route: weight |phi_1|^2 w on a grid, then moments -> F -> f
  const VerblunskySeq<double> alpha(vec({0.5, 1.0 / 3, 0, 0, 0, 0}));
  const CircleMeasure mu = bernstein_szego(alpha, 2, 2048);
  Eigen::VectorXd w = mu.ac_weight();
  for (Eigen::Index k = 0; k < w.size(); ++k) w(k) *= std::norm(eval_orthonormal(alpha, 1, std::polar(1.0, mu.theta(k))).first);
  const CircleMeasure weighted(mu.grid_size(), w, {});
  CHECK(max_diff(khrushchev_product(alpha, 1, 4).coeffs(), schur_series(weighted, 4).coeffs()) < 1e-8);
}

TEST_CASE("schur L2 diagnostics") {
  const VerblunskySeq<double> zero(Eigen::VectorXcd::Zero(6));
  CHECK(schur_l2_diagnostics(zero, 2) == doctest::Approx(0.0));
  CHECK(schur_l2_diagnostics(VerblunskySeq<double>{0.5}, 1) == 0.0);
  Eigen::VectorXcd a(30);
  for (Eigen::Index j = 0; j < 30; ++j) a(j) = std::pow(0.9, double(j + 1));
  const VerblunskySeq<double> geo(a);
  CHECK(schur_l2_diagnostics(geo, 10) < schur_l2_diagnostics(geo, 2));
}

TEST_CASE("cmv matrix entries") {
  const auto free4 = build_cmv(VerblunskySeq<double>(Eigen::VectorXcd::Zero(4)), 4);
  Eigen::MatrixXcd want = Eigen::MatrixXcd::Zero(4, 4);
  want(1, 0) = 1.0;
  want(0, 2) = 1.0;
  want(3, 1) = 1.0;  // row 2 couples only to column 4, outside the truncation
  CHECK((free4.dense - want).cwiseAbs().maxCoeff() == 0.0);

  const double a1 = 1.0 / 3, r0 = std::sqrt(0.75);
  const auto c2 = build_cmv(VerblunskySeq<double>{0.5, a1}, 2);
  CHECK(std::abs(c2.dense(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(c2.dense(0, 1) - a1 * r0) < 1e-15);
  CHECK(std::abs(c2.dense(1, 0) - r0) < 1e-15);
  CHECK(std::abs(c2.dense(1, 1) + a1 * 0.5) < 1e-15);

  const VerblunskySeq<double> term(vec({0.3, cd(0, 0.4), std::polar(1.0, kPi / 5)}), true);
  const auto c3 = build_cmv(term, 3);
  CHECK((c3.dense.adjoint() * c3.dense - Eigen::MatrixXcd::Identity(3, 3)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK_THROWS_AS(build_cmv(VerblunskySeq<double>{0.5}, 2), RangeError);
}

TEST_CASE("five-diagonal and unitary structure") {
  CounterRng rng(31);
  for (int i = 0; i < 10; ++i) {
    const auto alpha = random_alpha(rng, 12, 0.9);
    const auto c = build_cmv(alpha, 12);
    for (Eigen::Index r = 0; r < 12; ++r)
      for (Eigen::Index k = 0; k < 12; ++k)
        if (std::abs(r - k) > 2) CHECK(c.dense(r, k) == cd(0));
    const auto full = build_cmv(alpha, 40, true);
    const Eigen::MatrixXcd u = (full.l * full.m).topLeftCorner(20, 20);
    CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(20, 20)).topLeftCorner(16, 16).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("characteristic polynomial of the truncation") {
  CHECK(coeff_distance(char_poly(VerblunskySeq<double>{0.5}, 1), ComplexPoly<double>{-0.5, 1.0}) < 1e-15);
  CHECK(coeff_distance(char_poly(VerblunskySeq<double>{0.5, 1.0 / 3}, 2), ComplexPoly<double>{-1.0 / 3, -1.0 / 3, 1.0}) < 1e-15);
  CHECK(coeff_distance(char_poly(VerblunskySeq<double>{0.0, 0.0, 0.0}, 3), ComplexPoly<double>::monomial(3)) < 1e-15);
  CounterRng rng(32);
  for (int i = 0; i < 30; ++i) {
    const Eigen::Index n = 1 + Eigen::Index(rng.next_u64() % 12);
    const auto alpha = random_alpha(rng, n, 0.9);
    CHECK(coeff_distance(char_poly(alpha, n), szego_forward(alpha).phi[n]) < 1e-10);
  }
}

TEST_CASE("zeros of phi_n") {
  const auto z1 = phi_zeros(VerblunskySeq<double>{0.5}, 1);
  REQUIRE(z1.size() == 1);
  CHECK(std::abs(z1[0] - 0.5) < 1e-15);

  for (const cd& z : phi_zeros(VerblunskySeq<double>(Eigen::VectorXcd::Zero(5)), 5)) CHECK(std::abs(z) < 1e-12);

  auto z2 = phi_zeros(VerblunskySeq<double>{0.5, 1.0 / 3}, 2);
  std::sort(z2.begin(), z2.end(), [](cd a, cd b) { return a.real() < b.real(); });
  CHECK(std::abs(z2[0] - (1.0 - std::sqrt(13.0)) / 6.0) < 1e-14);
  CHECK(std::abs(z2[1] - (1.0 + std::sqrt(13.0)) / 6.0) < 1e-14);

  CounterRng rng(33);
  for (int i = 0; i < 30; ++i) {
    const auto alpha = random_alpha(rng, 10, 0.95);
    const auto phi = szego_forward(alpha).phi[10];
    for (const cd& z : phi_zeros(alpha, 10)) {
      CHECK(std::abs(z) < 1.0);
      CHECK(std::abs(phi(z)) < 1e-8 * phi.max_coeff());
    }
  }
}

TEST_CASE("paraorthogonal zeros") {
  const auto cube = sorted_by_angle(paraorthogonal_zeros(VerblunskySeq<double>{0.0, 0.0}, 3, cd(1)));
  REQUIRE(cube.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(cube[k] - std::polar(1.0, 2 * kPi * k / 3)) < 1e-12);

  const auto pm = sorted_by_angle(paraorthogonal_zeros(VerblunskySeq<double>{0.5}, 2, cd(1)));
  REQUIRE(pm.size() == 2);
  CHECK(std::abs(pm[0] - 1.0) < 1e-12);
  CHECK(std::abs(pm[1] + 1.0) < 1e-12);

  CounterRng rng(34);
  const auto alpha = random_alpha(rng, 5, 0.9);
  const auto z6 = paraorthogonal_zeros(alpha, 6, cd(0, 1));
  CHECK(z6.size() == 6);
  for (const cd& z : z6) CHECK(std::abs(std::abs(z) - 1.0) < 1e-10);
  // raw eigenvalues of the unitary truncation, before any radial cleanup
  Eigen::VectorXcd a(6);
  a.head(5) = alpha.alphas();
  a(5) = cd(0, 1);
  for (const cd& z : detail::eigenvalues(build_cmv(VerblunskySeq<double>(a, true), 6).dense))
    CHECK(std::abs(std::abs(z) - 1.0) < 1e-10);
  CHECK_THROWS_AS(paraorthogonal_zeros(alpha, 3, cd(0.5)), DomainError);
}

TEST_CASE("aleksandrov conjugation of cmv matrices") {
  CounterRng rng(35);
  const auto alpha = random_alpha(rng, 8, 0.9);
  CHECK(aleksandrov_conjugation_check(alpha, cd(1), 8) == 0.0);
  CHECK(aleksandrov_conjugation_check(VerblunskySeq<double>(Eigen::VectorXcd::Zero(4)), cd(0, 1), 4) <= 1e-14);
  for (int i = 0; i < 10; ++i) CHECK(aleksandrov_conjugation_check(alpha, rng.unit(), 8) <= 1e-12);
  CHECK_THROWS_AS(aleksandrov_conjugation_check(alpha, cd(2), 8), DomainError);
}

TEST_CASE("spectral measure of a terminal sequence") {
  const auto delta = spectral_measure(VerblunskySeq<double>(vec({1.0}), true), 1);
  REQUIRE(delta.atoms().size() == 1);
  CHECK(std::abs(std::remainder(delta.atoms()[0].theta, 2 * kPi)) < 1e-12);
  CHECK(delta.atoms()[0].mass == doctest::Approx(1.0));

  const auto two = spectral_measure(VerblunskySeq<double>(vec({0.0, 1.0}), true), 2);
  REQUIRE(two.atoms().size() == 2);
  for (const auto& a : two.atoms()) {
    CHECK(a.mass == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(std::sin(a.theta)) < 1e-12);
  }

  const auto mixed = spectral_measure(VerblunskySeq<double>(vec({0.5, 1.0}), true), 2);
  double total = 0.0;
  for (const auto& a : mixed.atoms()) {
    total += a.mass;
    CHECK(std::abs(std::sin(a.theta)) < 1e-12);
  }
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(moments(mixed, 1)(1) - 0.5) < 1e-12);

  // the moments of the point measure reproduce the first N - 1 coefficients
  CounterRng rng(36);
  Eigen::VectorXcd a(7);
  a.head(6) = random_alpha(rng, 6, 0.8).alphas();
  a(6) = rng.unit();
  const VerblunskySeq<double> term(a, true);
  const auto back = verblunsky_from_moments(moments(spectral_measure(term, 7), 6), 6);
  CHECK(max_diff(back.alphas(), a.head(6)) < 1e-10);
}

TEST_CASE("haar samples") {
  const auto one = haar_sample(1, 7);
  CHECK(one.terminal());
  CHECK(std::abs(std::abs(one[0]) - 1.0) < 1e-15);
  const auto two = haar_sample(2, 7);
  CHECK(std::abs(two[0]) < 1.0);
  CHECK(std::abs(std::abs(two[1]) - 1.0) < 1e-15);
  CHECK(max_diff(haar_sample(6, 99).alphas(), haar_sample(6, 99).alphas()) == 0.0);
  CHECK(max_diff(haar_sample(6, 99).alphas(), haar_sample(6, 100).alphas()) > 0.0);

  // E|alpha_j|^2 = 1/(n - j): the density k(1 - r)^{k - 1} in r = |alpha_j|^2, k = n - j - 1
  const int samples = 20000;
  std::vector<double> mean(4, 0.0);
  for (int s = 0; s < samples; ++s) {
    const auto h = haar_sample(5, 1000 + s);
    for (int j = 0; j < 4; ++j) mean[j] += std::norm(h[j]) / samples;
  }
  for (int j = 0; j < 4; ++j) {
    const double k = 5 - j - 1, mu = 1.0 / (k + 1), var = 2.0 / ((k + 1) * (k + 2)) - mu * mu;
    CHECK(std::abs(mean[j] - mu) < 4.0 * std::sqrt(var / samples));
  }
}

TEST_CASE("zero counting moments") {
  const auto free = zero_counting_moments(VerblunskySeq<double>(Eigen::VectorXcd::Zero(4)), 4, 3);
  CHECK(free.trace_route.cwiseAbs().maxCoeff() < 1e-14);
  const auto two = zero_counting_moments(VerblunskySeq<double>{0.5, 1.0 / 3}, 2, 1);
  CHECK(std::abs(two.trace_route(0) - 1.0 / 6) < 1e-14);
  CHECK(std::abs(two.root_route(0) - 1.0 / 6) < 1e-14);
  CounterRng rng(37);
  CHECK(zero_counting_moments(random_alpha(rng, 8, 0.9), 8, 6).max_deviation() < 1e-8);
}
