#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "mlfock/mlb_transform.hpp"
#include "oracles.hpp"

using namespace mlfock;

namespace {

MLFockElement basis_element(MLOrder q, int m) {
  MLFockElement e;
  e.q = q;
  e.coeffs.assign(m + 1, {0.0, 0.0});
  e.coeffs[m] = 1.0;
  return e;
}

std::complex<double> signal_psi(int m, double x) {
  return {hermite_function(m, x), 0.0};
}

}  // namespace

TEST_SUITE_BEGIN("mlb_transform");

TEST_CASE("element evaluation matches the explicit basis form") {
  MLOrder q(2.0);
  for (int m : {0, 1, 3, 7}) {
    const MLFockElement e = basis_element(q, m);
    for (const std::complex<double> z : {std::complex<double>{0.3, -1.1},
                                         std::complex<double>{2.0, 0.0},
                                         std::complex<double>{-0.5, 0.5}}) {
      const std::complex<double> want = std::pow(z, m) / std::sqrt(gamma_pos(2.0 * m + 1.0));
      CHECK(std::abs(e.evaluate(z) - want) <= 1e-14 * (1.0 + std::abs(want)));
    }
  }
  CHECK(MLFockElement{MLOrder(1.0), {}}.evaluate({1.0, 1.0}) ==
        std::complex<double>(0.0, 0.0));
}

TEST_CASE("ml_kernel at z = 0 collapses to psi_0") {
  for (double x : {-2.0, 0.0, 1.3})
    CHECK(ml_kernel(MLOrder(1.7), {0.0, 0.0}, x).real() ==
          doctest::Approx(hermite_function(0, x)).epsilon(1e-15));
}

TEST_CASE("ml_kernel reduces to the classical Bargmann kernel at q = 1") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    const std::complex<double> z = oracles::random_disc(rng, 1.5);
    const double x = 6.0 * (oracles::uniform01(rng) - 0.5);
    const std::complex<double> got = ml_kernel(MLOrder(1.0), z, x, 64);
    const std::complex<double> want = oracles::bargmann_kernel_q1(z, x);
    CHECK(std::abs(got - want) <= 1e-12 * (1.0 + std::abs(want)));
  }
}

TEST_CASE("kernel L2 norm equals E_q(|z|^2)") {
  const auto rule = gauss_hermite_rule(80);
  std::mt19937_64 rng(43);
  for (double q : {0.5, 1.0, 2.0}) {
    MLOrder ml_q(q);
    for (int t = 0; t < 5; ++t) {
      const std::complex<double> z = oracles::random_disc(rng, 1.5);
      double norm_sq = 0.0;
      for (int k = 0; k < rule.order; ++k)
        norm_sq += rule.plain_weights[k] *
                   std::norm(ml_kernel_partial(ml_q, z, rule.nodes[k], 64));
      const double want = mittag_leffler(ml_q, std::norm(z), 1e-13).value.real();
      CHECK(std::abs(norm_sq - want) <= 1e-8 * want);
    }
  }
}

TEST_CASE("ml_kernel tail gate") {
  // q = 1/2 converges slowly: |z| = 2 needs trunc ~ 160, |z| = 3 is
  // outside the degree-200 budget entirely and must fail loudly.
  CHECK_THROWS_AS(ml_kernel(MLOrder(0.5), {2.0, 0.0}, 0.0, 64, 1e-10), ConvergenceError);
  CHECK_THROWS_AS(ml_kernel(MLOrder(0.5), {3.0, 0.0}, 0.0, 200, 1e-10), ConvergenceError);
  CHECK_THROWS_AS(ml_kernel(MLOrder(1.0), {1.0, 0.0}, 0.0, 201), std::domain_error);
  CHECK(std::isfinite(ml_kernel(MLOrder(0.5), {2.0, 0.0}, 0.0, 160, 1e-10).real()));
  CHECK(ml_kernel_tail_bound(MLOrder(0.5), 0.0, 10) == 0.0);
  CHECK(ml_kernel_tail_bound(MLOrder(0.5), 3.0, 64) ==
        std::numeric_limits<double>::infinity());
}

TEST_CASE("mlb_forward_coeff maps the Hermite basis to e_{m,q}") {
  MLOrder q(0.7);
  HermiteExpansion psi3{{{0, 0}, {0, 0}, {0, 0}, {1, 0}}};
  const MLFockElement img = mlb_forward_coeff(psi3, q);
  CHECK(img.coeffs.size() == 4);
  CHECK(img.coeffs[3] == std::complex<double>(1.0, 0.0));
  CHECK(ml_norm(img) == doctest::Approx(1.0));

  CHECK(mlb_forward_coeff(HermiteExpansion{}, q).coeffs.empty());

  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  HermiteExpansion pair{{{inv_sqrt2, 0.0}, {0.0, inv_sqrt2}}};
  CHECK(ml_norm(mlb_forward_coeff(pair, q)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("mlb_forward_integral pinned images") {
  const auto rule = gauss_hermite_rule(80);

  // psi_3 at q=2, z=1: 1/sqrt(Gamma(7)) = 1/sqrt(720)
  const std::complex<double> v1 = mlb_forward_integral(
      [](double x) { return signal_psi(3, x); }, MLOrder(2.0), {1.0, 0.0}, rule, 64);
  CHECK(v1.real() == doctest::Approx(1.0 / std::sqrt(720.0)).epsilon(1e-10));
  CHECK(std::abs(v1.imag()) <= 1e-14);

  const std::complex<double> v2 = mlb_forward_integral(
      [](double x) { return signal_psi(0, x); }, MLOrder(1.3), {0.0, 0.0}, rule, 64);
  CHECK(std::abs(v2 - std::complex<double>(1.0, 0.0)) <= 1e-12);

  const std::complex<double> v3 = mlb_forward_integral(
      [](double x) { return signal_psi(1, x); }, MLOrder(1.0), {0.0, 2.0}, rule, 64);
  CHECK(std::abs(v3 - std::complex<double>(0.0, 2.0)) <= 1e-12);
}

TEST_CASE("forward paths agree: quadrature vs coefficient space") {
  std::mt19937_64 rng(47);
  const auto rule = gauss_hermite_rule(100);
  for (double q : {0.5, 1.0, 2.0}) {
    MLOrder ml_q(q);
    HermiteExpansion phi;
    phi.coeffs.resize(7);
    for (auto& c : phi.coeffs)
      c = {2.0 * oracles::uniform01(rng) - 1.0, 2.0 * oracles::uniform01(rng) - 1.0};
    const MLFockElement f = mlb_forward_coeff(phi, ml_q);

    for (int t = 0; t < 8; ++t) {
      const std::complex<double> z = oracles::random_disc(rng, 2.0);
      const std::complex<double> along_integral = mlb_forward_integral(
          [&phi](double x) { return phi.evaluate(x); }, ml_q, z, rule, 160);
      CHECK(std::abs(along_integral - f.evaluate(z)) <= 1e-7 * (1.0 + std::abs(f.evaluate(z))));
    }
  }
}

TEST_CASE("mlb_inverse sends basis elements to Hermite functions") {
  for (double q : {0.5, 1.0, 2.0}) {
    MLOrder ml_q(q);
    const auto prule = build_planar_rule(ml_q, 80, 64);
    for (int m : {0, 1, 4, 8}) {
      const MLFockElement e = basis_element(ml_q, m);
      for (double x : {-2.0, -0.5, 0.0, 1.0, 3.0}) {
        const std::complex<double> got = mlb_inverse(e, x, prule, 16);
        CHECK(std::abs(got - hermite_function(m, x)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("mlb_inverse pinned combination") {
  MLOrder q(2.0);
  const auto prule = build_planar_rule(q, 80, 64);
  MLFockElement f;
  f.q = q;
  f.coeffs = {{1.0, 0.0}, {1.0, 0.0}};
  const std::complex<double> got = mlb_inverse(f, 0.0, prule, 8);
  CHECK(got.real() == doctest::Approx(0.7511255444649425).epsilon(1e-9));

  MLFockElement zero;
  zero.q = q;
  CHECK(std::abs(mlb_inverse(zero, 1.0, prule, 8)) == 0.0);
}

TEST_CASE("mlb_inverse budget errors") {
  MLOrder q(2.0);
  const auto small = build_planar_rule(q, 4, 16);  // exactness (2*4-1)/2 = 3
  const MLFockElement e4 = basis_element(q, 4);
  CHECK_THROWS_AS(mlb_inverse(e4, 0.0, small, 8), std::invalid_argument);
  const auto fine = build_planar_rule(q, 80, 64);
  CHECK_THROWS_AS(mlb_inverse(e4, 0.0, fine, 2), std::invalid_argument);
}

TEST_CASE("mixing elements and rules of different orders is rejected") {
  const auto rule_q2 = build_planar_rule(MLOrder(2.0), 20, 16);
  const MLFockElement e = basis_element(MLOrder(1.0), 2);
  CHECK_THROWS_AS(mlb_inverse(e, 0.0, rule_q2, 4), std::invalid_argument);
  CHECK_THROWS_AS(ml_inner(e, e, rule_q2), std::invalid_argument);
}

TEST_CASE("unnormalized inverse differs by exactly q pi") {
  MLOrder q(1.5);
  const auto prule = build_planar_rule(q, 80, 64);
  const MLFockElement e = basis_element(q, 3);
  const std::complex<double> unit = mlb_inverse(e, 0.7, prule, 8, true);
  const std::complex<double> bare = mlb_inverse(e, 0.7, prule, 8, false);
  CHECK(std::abs(bare - unit * (q.value() * std::numbers::pi)) <=
        1e-12 * std::abs(bare));
}

TEST_CASE("ml_norm and the quadrature inner product agree") {
  std::mt19937_64 rng(53);
  MLOrder q(2.0);
  const auto prule = build_planar_rule(q, 80, 64);
  MLFockElement f;
  f.q = q;
  f.coeffs.resize(9);
  for (auto& c : f.coeffs)
    c = {2.0 * oracles::uniform01(rng) - 1.0, 2.0 * oracles::uniform01(rng) - 1.0};

  CHECK(ml_norm(basis_element(q, 5)) == 1.0);
  CHECK(ml_norm(MLFockElement{q, {}}) == 0.0);
  CHECK(ml_norm(MLFockElement{q, {{0.6, 0.0}, {0.8, 0.0}}}) == doctest::Approx(1.0));

  const std::complex<double> quad = ml_inner(f, f, prule);
  CHECK(std::sqrt(quad.real()) == doctest::Approx(ml_norm(f)).epsilon(1e-8));
}

TEST_CASE("quadrature round trip at q = 1") {
  std::mt19937_64 rng(59);
  MLOrder q(1.0);
  const auto prule = build_planar_rule(q, 80, 64);
  const auto hrule = gauss_hermite_rule(80);

  HermiteExpansion phi;
  phi.coeffs.resize(6);
  for (auto& c : phi.coeffs)
    c = {2.0 * oracles::uniform01(rng) - 1.0, 2.0 * oracles::uniform01(rng) - 1.0};

  const auto projected =
      project_signal([&phi](double x) { return phi.evaluate(x); }, 5, hrule);
  const MLFockElement f = mlb_forward_coeff(projected, q);
  for (double x = -4.0; x <= 4.0; x += 1.0)
    CHECK(std::abs(mlb_inverse(f, x, prule, 5) - phi.evaluate(x)) <= 1e-8);
}

TEST_CASE("every finite element is a forward image (surjectivity witness)") {
  std::mt19937_64 rng(61);
  MLOrder q(0.5);
  MLFockElement f;
  f.q = q;
  f.coeffs.resize(16);
  for (auto& c : f.coeffs)
    c = {2.0 * oracles::uniform01(rng) - 1.0, 2.0 * oracles::uniform01(rng) - 1.0};

  HermiteExpansion preimage{f.coeffs};
  const MLFockElement image = mlb_forward_coeff(preimage, q);
  CHECK(image.coeffs == f.coeffs);
  CHECK(std::abs(ml_norm(image) - preimage.norm()) <= 1e-12);
}

TEST_SUITE_END();
