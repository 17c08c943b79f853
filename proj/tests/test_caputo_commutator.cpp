#include <doctest.h>

#include <cmath>
#include <complex>

#include "mlfock/caputo_commutator.hpp"
#include "oracles.hpp"

using namespace mlfock;

namespace {

FracPowerSeries eigen_series(MLOrder q, std::complex<double> lambda, int terms) {
  FracPowerSeries f;
  f.q = q;
  f.coeffs.resize(terms);
  f.coeffs[0] = 1.0;
  for (int n = 1; n < terms; ++n)
    f.coeffs[n] = f.coeffs[n - 1] * lambda / gamma_ratio(q, n);
  return f;
}

}  // namespace

TEST_SUITE_BEGIN("caputo_commutator");

TEST_CASE("caputo_derivative annihilates constants") {
  FracPowerSeries c{MLOrder(1.7), {{5.0, -2.0}}};
  CHECK(caputo_derivative(c).coeffs.empty());
  CHECK(caputo_derivative(FracPowerSeries{MLOrder(0.5), {}}).coeffs.empty());
}

TEST_CASE("caputo_derivative is the ordinary derivative at q = 1") {
  FracPowerSeries f{MLOrder(1.0), {{1, 0}, {1, 0}, {1, 0}, {1, 0}}};
  const auto d = caputo_derivative(f);
  REQUIRE(d.coeffs.size() == 3);
  CHECK(d.coeffs[0] == std::complex<double>(1, 0));
  CHECK(d.coeffs[1] == std::complex<double>(2, 0));
  CHECK(d.coeffs[2] == std::complex<double>(3, 0));
}

TEST_CASE("E_q(lambda z^q) is a Caputo eigenfunction, coefficientwise") {
  const std::complex<double> lambdas[] = {{1, 0}, {2, 0}, {-1, 0}, {0, 1}};
  for (double q : {0.5, 1.0, 2.0}) {
    for (const auto& lambda : lambdas) {
      const auto f = eigen_series(MLOrder(q), lambda, 40);
      const auto d = caputo_derivative(f);
      for (std::size_t n = 0; n < d.coeffs.size(); ++n) {
        const auto want = lambda * f.coeffs[n];
        CHECK(std::abs(d.coeffs[n] - want) <= 1e-12 * std::abs(want));
      }
    }
  }
}

TEST_CASE("multiply_zq shifts coefficients") {
  FracPowerSeries one{MLOrder(2.0), {{1, 0}}};
  const auto shifted = multiply_zq(one);
  REQUIRE(shifted.coeffs.size() == 2);
  CHECK(shifted.coeffs[0] == std::complex<double>(0, 0));
  CHECK(shifted.coeffs[1] == std::complex<double>(1, 0));
  CHECK(multiply_zq(FracPowerSeries{MLOrder(2.0), {}}).coeffs.empty());
}

TEST_CASE("double shift then caputo against direct expansion") {
  // a_n = 1/n!, ten coefficients; D(z^{2q} f) has coefficients
  // a_{n-2} R(n) at exponent n-1 with R(n) = Gamma(qn+1)/Gamma(q(n-1)+1).
  MLOrder q(1.3);
  FracPowerSeries f;
  f.q = q;
  f.coeffs.resize(10);
  for (int n = 0; n < 10; ++n)
    f.coeffs[n] = 1.0 / static_cast<double>(oracles::factorial_ld(n));

  const auto lhs = caputo_derivative(multiply_zq(multiply_zq(f)));
  REQUIRE(lhs.coeffs.size() == 11);
  CHECK(std::abs(lhs.coeffs[0]) == 0.0);
  for (int n = 2; n <= 11; ++n) {
    const std::complex<double> want = f.coeffs[n - 2] * gamma_ratio(q, n);
    CHECK(std::abs(lhs.coeffs[n - 1] - want) <= 1e-13 * std::abs(want));
  }
}

TEST_CASE("commutator pinned examples") {
  // q = 1: the identity operator
  FracPowerSeries f1{MLOrder(1.0), {{2, 1}, {0, -3}, {4, 0}}};
  const auto c1 = commutator_apply(f1);
  REQUIRE(c1.coeffs.size() == f1.coeffs.size());
  for (std::size_t n = 0; n < c1.coeffs.size(); ++n)
    CHECK(std::abs(c1.coeffs[n] - f1.coeffs[n]) <= 1e-14 * std::abs(f1.coeffs[n]));

  // q = 2, a = (0, 1): beta(1,2) = 10 at n = 1
  FracPowerSeries f2{MLOrder(2.0), {{0, 0}, {1, 0}}};
  const auto c2 = commutator_apply(f2);
  CHECK(std::abs(c2.coeffs[0]) == 0.0);
  CHECK(c2.coeffs[1].real() == doctest::Approx(10.0).epsilon(1e-14));

  // q = 3, constant: Gamma(4) = 6
  FracPowerSeries f3{MLOrder(3.0), {{1, 0}}};
  CHECK(commutator_apply(f3).coeffs[0].real() == doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("commutator composition matches the diagonal formula") {
  std::mt19937_64 rng(83);
  for (double q : {0.5, 1.3, 2.0, 3.0}) {
    MLOrder ml_q(q);
    FracPowerSeries f;
    f.q = ml_q;
    f.coeffs.resize(12);
    for (auto& a : f.coeffs)
      a = {2.0 * oracles::uniform01(rng) - 1.0, 2.0 * oracles::uniform01(rng) - 1.0};

    const auto c = commutator_apply(f);
    const auto want0 = f.coeffs[0] * gamma_pos(q + 1.0);
    CHECK(std::abs(c.coeffs[0] - want0) <= 1e-12 * std::abs(want0));
    for (int n = 1; n < 12; ++n) {
      const auto want = f.coeffs[n] * beta(n, ml_q);
      CHECK(std::abs(c.coeffs[n] - want) <= 1e-12 * std::abs(want));
    }
  }
}

TEST_CASE("commutator and caputo are linear") {
  std::mt19937_64 rng(89);
  MLOrder q(1.3);
  FracPowerSeries f, g;
  f.q = g.q = q;
  f.coeffs.resize(8);
  g.coeffs.resize(8);
  for (int n = 0; n < 8; ++n) {
    f.coeffs[n] = {oracles::uniform01(rng), oracles::uniform01(rng)};
    g.coeffs[n] = {oracles::uniform01(rng), oracles::uniform01(rng)};
  }
  const std::complex<double> c{-0.7, 1.9};

  FracPowerSeries combo;
  combo.q = q;
  combo.coeffs.resize(8);
  for (int n = 0; n < 8; ++n) combo.coeffs[n] = f.coeffs[n] + c * g.coeffs[n];

  const auto lhs = commutator_apply(combo);
  const auto rf = commutator_apply(f);
  const auto rg = commutator_apply(g);
  for (std::size_t n = 0; n < lhs.coeffs.size(); ++n)
    CHECK(std::abs(lhs.coeffs[n] - (rf.coeffs[n] + c * rg.coeffs[n])) <= 1e-14);
}

TEST_CASE("beta pinned values") {
  for (int n = 1; n <= 20; ++n) {
    CHECK(beta(n, MLOrder(1.0)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(beta(n, MLOrder(2.0)) ==
          doctest::Approx(2.0 * (4.0 * n + 1.0)).epsilon(1e-12));
  }
  CHECK(beta(2, MLOrder(3.0)) == 384.0);
  CHECK(beta(1, MLOrder(4.0)) == 1656.0);
  CHECK_THROWS_AS(beta(0, MLOrder(1.0)), std::domain_error);

  // non-integer path against direct gammas
  const double direct = gamma_pos(0.7 * 3 + 1.0) / gamma_pos(0.7 * 2 + 1.0) -
                        gamma_pos(0.7 * 2 + 1.0) / gamma_pos(0.7 * 1 + 1.0);
  CHECK(beta(2, MLOrder(0.7)) == doctest::Approx(direct).epsilon(1e-12));
}

TEST_CASE("synthesize_identity recovers the published-form coefficients") {
  CHECK(synthesize_identity(2, 8).coefficients == std::vector<double>{2, 4});
  CHECK(synthesize_identity(3, 8).coefficients == std::vector<double>{6, 18, 9});
  CHECK(synthesize_identity(4, 8).coefficients == std::vector<double>{24, 96, 72, 16});
  CHECK(synthesize_identity(1, 4).coefficients == std::vector<double>{1});
  CHECK_THROWS_AS(synthesize_identity(4, 2), std::domain_error);
  CHECK_THROWS_AS(synthesize_identity(0, 5), std::domain_error);
}

TEST_CASE("synthesized identity holds on held-out n") {
  // identity fitted through n = q..8 must keep matching beta for larger n
  for (int q = 2; q <= 8; ++q) {
    const auto id = synthesize_identity(q, 8);
    for (int n = 9; n <= 13; ++n) {
      double lhs = 0.0;
      for (int k = 0; k < q; ++k) {
        double ff = 1.0;
        for (int i = 0; i < k; ++i) ff *= static_cast<double>(q) * n - i;
        lhs += id.coefficients[k] * ff;
      }
      CHECK(lhs == doctest::Approx(beta(n, MLOrder(q))).epsilon(1e-13));
    }
  }
}

TEST_CASE("verify_conjecture sweeps cleanly at the budget edge") {
  for (int q = 1; q <= 8; ++q) {
    const auto report = verify_conjecture(q, 15);
    CHECK(report.verified_up_to == 15);
    CHECK(!report.falsified_at.has_value());
    for (double r : report.residuals) CHECK(r == 0.0);
  }
  const auto big = verify_conjecture(12, 30);
  CHECK(big.verified_up_to == 30);
  CHECK(!big.falsified_at.has_value());

  CHECK_THROWS_AS(verify_conjecture(13, 10), std::domain_error);
  CHECK_THROWS_AS(verify_conjecture(4, 31), std::domain_error);
}

TEST_CASE("series evaluation uses the principal branch") {
  FracPowerSeries f{MLOrder(0.5), {{0, 0}, {1, 0}}};  // f(z) = z^{1/2}
  const std::complex<double> at_i = f.evaluate({0.0, 1.0});
  const std::complex<double> want = std::pow(std::complex<double>(0.0, 1.0), 0.5);
  CHECK(std::abs(at_i - want) <= 1e-15);
  CHECK(f.evaluate({0.0, 0.0}) == std::complex<double>(0.0, 0.0));

  FracPowerSeries c{MLOrder(0.5), {{3.0, 1.0}}};
  CHECK(c.evaluate({0.0, 0.0}) == std::complex<double>(3.0, 1.0));
}

TEST_CASE("commutator_table flags the two published-form mismatches") {
  const auto t1 = commutator_table(MLOrder(1.0), 20);
  const auto t2 = commutator_table(MLOrder(2.0), 20);
  for (const auto& row : t1) CHECK(*row.matches_published);
  for (const auto& row : t2) CHECK(*row.matches_published);

  const auto t3 = commutator_table(MLOrder(3.0), 20);
  CHECK(*t3[0].matches_published);  // n = 1 coincides
  for (int n = 2; n <= 20; ++n) CHECK(!*t3[n - 1].matches_published);

  const auto t4 = commutator_table(MLOrder(4.0), 20);
  for (int n = 1; n <= 20; ++n) CHECK(!*t4[n - 1].matches_published);

  const auto frac = commutator_table(MLOrder(1.3), 5);
  for (const auto& row : frac) {
    CHECK(!row.beta_published.has_value());
    CHECK(!row.matches_published.has_value());
  }
}

TEST_SUITE_END();
