#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "mlfock/hermite_basis.hpp"
#include "oracles.hpp"

using namespace mlfock;

namespace {

// Explicit low-degree normalized Hermite functions for cross-checks.
double psi2_explicit(double x) {
  // H_2(x) = 4x^2 - 2, normalizer sqrt(2^2 2! sqrt(pi))
  return (4.0 * x * x - 2.0) * std::exp(-0.5 * x * x) /
         std::sqrt(8.0 * std::sqrt(std::numbers::pi));
}

}  // namespace

TEST_SUITE_BEGIN("hermite_basis");

TEST_CASE("hermite_function pinned values at 0") {
  CHECK(hermite_function(0, 0.0) == doctest::Approx(0.7511255444649425).epsilon(1e-15));
  CHECK(hermite_function(1, 0.0) == 0.0);
  CHECK(hermite_function(2, 0.0) == doctest::Approx(-0.5311259660135985).epsilon(1e-14));
}

TEST_CASE("hermite_function against the explicit degree-2 form") {
  for (double x = -4.0; x <= 4.0; x += 0.37)
    CHECK(hermite_function(2, x) == doctest::Approx(psi2_explicit(x)).epsilon(1e-13));
}

TEST_CASE("hermite_function recurrence invariant") {
  for (int n = 1; n <= 30; ++n) {
    for (double x = -8.0; x <= 8.0; x += 0.8) {
      const double lhs = hermite_function(n + 1, x);
      const double rhs = x * std::sqrt(2.0 / (n + 1)) * hermite_function(n, x) -
                         std::sqrt(n / (n + 1.0)) * hermite_function(n - 1, x);
      CHECK(std::abs(lhs - rhs) <= 1e-12);
    }
  }
}

TEST_CASE("hermite_functions_upto agrees with single evaluations") {
  const auto table = hermite_functions_upto(60, 1.7);
  for (int n = 0; n <= 60; n += 7)
    CHECK(table[n] == doctest::Approx(hermite_function(n, 1.7)).epsilon(1e-15));
}

TEST_CASE("hermite degree budget") {
  CHECK_THROWS_AS(hermite_function(201, 0.0), std::domain_error);
  CHECK_THROWS_AS(hermite_function(-1, 0.0), std::domain_error);
  CHECK(std::isfinite(hermite_function(200, 3.0)));
}

TEST_CASE("gauss_hermite_rule small closed forms") {
  const auto r1 = gauss_hermite_rule(1);
  CHECK(r1.nodes[0] == 0.0);
  CHECK(r1.weights[0] == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-14));

  const auto r2 = gauss_hermite_rule(2);
  CHECK(r2.nodes[0] == doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r2.nodes[1] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(r2.weights[0] == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-14));
  CHECK(r2.weights[1] == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-14));
}

TEST_CASE("gauss_hermite_rule moments and symmetry") {
  for (int order : {5, 12, 40, 80, 200, 400}) {
    const auto rule = gauss_hermite_rule(order);
    double w_sum = 0.0, second = 0.0;
    for (int k = 0; k < order; ++k) {
      w_sum += rule.weights[k];
      second += rule.weights[k] * rule.nodes[k] * rule.nodes[k];
      CHECK(rule.weights[k] >= 0.0);
      CHECK(rule.nodes[k] == -rule.nodes[order - 1 - k]);
    }
    CHECK(w_sum == doctest::Approx(std::sqrt(std::numbers::pi)).epsilon(1e-12));
    CHECK(second == doctest::Approx(0.5 * std::sqrt(std::numbers::pi)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gauss_hermite_rule(0), std::domain_error);
  CHECK_THROWS_AS(gauss_hermite_rule(401), std::domain_error);
}

TEST_CASE("gauss_hermite_rule exactness through degree 2n-1") {
  const int order = 12;
  const auto rule = gauss_hermite_rule(order);
  long double moment = std::sqrt((long double)std::numbers::pi);  // integral x^0 e^{-x^2}
  for (int j = 0; j <= 2 * order - 1; ++j) {
    double s = 0.0, sabs = 0.0;
    for (int k = 0; k < order; ++k) {
      const double term = rule.weights[k] * std::pow(rule.nodes[k], j);
      s += term;
      sabs += std::abs(term);
    }
    if (j % 2 == 1) {
      CHECK(std::abs(s) <= 1e-14 * sabs);  // exact cancellation up to rounding
    } else {
      if (j > 0) moment *= (j - 1) / 2.0L;  // Gamma((j+1)/2) recurrence
      CHECK(s == doctest::Approx(static_cast<double>(moment)).epsilon(1e-12));
    }
  }
}

TEST_CASE("quadrature orthonormality of the psi family") {
  const auto rule = gauss_hermite_rule(64);
  for (int m = 0; m <= 20; ++m) {
    for (int j = m; j <= 20; ++j) {
      double s = 0.0;
      for (int k = 0; k < rule.order; ++k)
        s += rule.plain_weights[k] * hermite_function(m, rule.nodes[k]) *
             hermite_function(j, rule.nodes[k]);
      CHECK(std::abs(s - (m == j ? 1.0 : 0.0)) <= 1e-10);
    }
  }
}

TEST_CASE("l2_inner Parseval form") {
  HermiteExpansion em{{{0, 0}, {0, 0}, {1, 0}}};  // psi_2
  HermiteExpansion ej{{{0, 0}, {1, 0}}};          // psi_1
  CHECK(l2_inner(em, em) == std::complex<double>(1.0, 0.0));
  CHECK(l2_inner(em, ej) == std::complex<double>(0.0, 0.0));

  // formula sum f_m conj(g_m); cross-checked against quadrature below
  HermiteExpansion f{{{1, 0}, {0, 2}}};
  HermiteExpansion g{{{1, 0}, {1, 0}}};
  const std::complex<double> v = l2_inner(f, g);
  CHECK(v == std::complex<double>(1.0, 2.0));

  const auto rule = gauss_hermite_rule(40);
  std::complex<double> quad{0.0, 0.0};
  for (int k = 0; k < rule.order; ++k) {
    const double x = rule.nodes[k];
    quad += rule.plain_weights[k] * f.evaluate(x) * std::conj(g.evaluate(x));
  }
  CHECK(std::abs(quad - v) <= 1e-12);
}

TEST_CASE("project_signal recovers basis elements and linear combinations") {
  const auto rule = gauss_hermite_rule(40);

  auto psi3 = [](double x) { return std::complex<double>(hermite_function(3, x), 0.0); };
  const auto p3 = project_signal(psi3, 5, rule);
  for (int m = 0; m <= 5; ++m)
    CHECK(std::abs(p3.coeffs[m] - (m == 3 ? 1.0 : 0.0)) <= 1e-12);

  auto mix = [](double x) {
    return std::complex<double>(hermite_function(0, x) + hermite_function(1, x), 0.0);
  };
  const auto pm = project_signal(mix, 1, rule);
  CHECK(std::abs(pm.coeffs[0] - 1.0) <= 1e-12);
  CHECK(std::abs(pm.coeffs[1] - 1.0) <= 1e-12);

  // x exp(-x^2/2) pi^{-1/4} = psi_1 / sqrt(2)
  auto xgauss = [](double x) {
    return std::complex<double>(x * std::exp(-0.5 * x * x) * 0.7511255444649425, 0.0);
  };
  const auto px = project_signal(xgauss, 4, rule);
  CHECK(std::abs(px.coeffs[1] - 1.0 / std::sqrt(2.0)) <= 1e-12);
  for (int m : {0, 2, 3, 4}) CHECK(std::abs(px.coeffs[m]) <= 1e-12);
}

TEST_CASE("project_signal inverts synthesis up to degree 20") {
  std::mt19937_64 rng(23);
  const auto rule = gauss_hermite_rule(64);
  HermiteExpansion phi;
  phi.coeffs.resize(21);
  for (auto& c : phi.coeffs)
    c = {2.0 * oracles::uniform01(rng) - 1.0, 2.0 * oracles::uniform01(rng) - 1.0};

  const auto back =
      project_signal([&phi](double x) { return phi.evaluate(x); }, 20, rule);
  for (int m = 0; m <= 20; ++m)
    CHECK(std::abs(back.coeffs[m] - phi.coeffs[m]) <= 1e-10);
}

TEST_CASE("project_signal validates the rule order") {
  const auto rule = gauss_hermite_rule(4);
  auto zero = [](double) { return std::complex<double>(0.0, 0.0); };
  CHECK_THROWS_AS(project_signal(zero, 4, rule), std::invalid_argument);
}

TEST_CASE("project_samples matches project_signal on a dense grid") {
  std::mt19937_64 rng(29);
  HermiteExpansion phi;
  phi.coeffs.resize(9);
  for (auto& c : phi.coeffs)
    c = {2.0 * oracles::uniform01(rng) - 1.0, 2.0 * oracles::uniform01(rng) - 1.0};

  std::vector<double> xs;
  std::vector<std::complex<double>> vals;
  for (double x = -8.0; x <= 8.0 + 1e-12; x += 0.05) {
    xs.push_back(x);
    vals.push_back(phi.evaluate(x));
  }
  const auto projected = project_samples(xs, vals, 8);
  for (int m = 0; m <= 8; ++m)
    CHECK(std::abs(projected.coeffs[m] - phi.coeffs[m]) <= 1e-9);

  CHECK_THROWS_AS(project_samples({0.0}, {std::complex<double>(1.0, 0.0)}, 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(project_samples({0.0, 0.0}, {{1.0, 0.0}, {1.0, 0.0}}, 2),
                  std::invalid_argument);
}

TEST_SUITE_END();
