#include <benchmark/benchmark.h>

#include <complex>

#include "mlfock/caputo_commutator.hpp"
#include "mlfock/fourier_bridge.hpp"
#include "mlfock/hermite_basis.hpp"
#include "mlfock/mlb_transform.hpp"
#include "mlfock/planar_quadrature.hpp"
#include "mlfock/quaternion_mlf.hpp"

namespace {

using namespace mlfock;

void BM_mittag_leffler(benchmark::State& state) {
  const MLOrder q(0.5 + 0.5 * state.range(0));
  const std::complex<double> z{2.3, -1.1};
  for (auto _ : state) benchmark::DoNotOptimize(mittag_leffler(q, z, 1e-12));
}
BENCHMARK(BM_mittag_leffler)->Arg(0)->Arg(1)->Arg(3);

void BM_hermite_functions_upto(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hermite_functions_upto(n, 1.7));
}
BENCHMARK(BM_hermite_functions_upto)->Arg(16)->Arg(64)->Arg(200);

void BM_gauss_hermite_rule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gauss_hermite_rule(order));
}
BENCHMARK(BM_gauss_hermite_rule)->Arg(40)->Arg(120);

void BM_build_planar_rule(benchmark::State& state) {
  // q = 1/2 exercises the nonclassical radial weight
  const MLOrder q(state.range(0) == 0 ? 0.5 : 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(build_planar_rule(q, 80, 64));
}
BENCHMARK(BM_build_planar_rule)->Arg(0)->Arg(1);

void BM_ml_kernel(benchmark::State& state) {
  const MLOrder q(2.0);
  for (auto _ : state)
    benchmark::DoNotOptimize(ml_kernel_partial(q, {0.9, -0.4}, 0.3, 64));
}
BENCHMARK(BM_ml_kernel);

void BM_mlb_forward_integral(benchmark::State& state) {
  const MLOrder q(2.0);
  const GaussHermiteRule rule = gauss_hermite_rule(80);
  auto signal = [](double x) {
    return std::complex<double>(hermite_function(3, x), 0.0);
  };
  for (auto _ : state)
    benchmark::DoNotOptimize(mlb_forward_integral(signal, q, {1.0, 0.5}, rule, 64));
}
BENCHMARK(BM_mlb_forward_integral);

void BM_mlb_inverse(benchmark::State& state) {
  const MLOrder q(2.0);
  const PlanarRule rule = build_planar_rule(q, 80, 64);
  MLFockElement f;
  f.q = q;
  f.coeffs.assign(9, {0.5, -0.25});
  for (auto _ : state) benchmark::DoNotOptimize(mlb_inverse(f, 0.7, rule, 8));
}
BENCHMARK(BM_mlb_inverse);

void BM_commutator_apply(benchmark::State& state) {
  FracPowerSeries f;
  f.q = MLOrder(1.3);
  f.coeffs.assign(32, {1.0, -1.0});
  for (auto _ : state) benchmark::DoNotOptimize(commutator_apply(f));
}
BENCHMARK(BM_commutator_apply);

void BM_verify_conjecture(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_conjecture(q, 15));
}
BENCHMARK(BM_verify_conjecture)->Arg(4)->Arg(8)->Arg(12);

void BM_quaternion_mul(benchmark::State& state) {
  Quaternion p{0.3, -1.2, 0.5, 2.0}, s{1.0, 0.1, -0.7, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(q_mul(p, s));
}
BENCHMARK(BM_quaternion_mul);

void BM_qml_reproducing_kernel(benchmark::State& state) {
  const MLOrder q(2.0);
  const Quaternion p{0.2, 0.9, -0.3, 0.1}, s{-0.4, 0.2, 0.8, -0.5};
  for (auto _ : state)
    benchmark::DoNotOptimize(qml_reproducing_kernel(q, p, s, 1e-12));
}
BENCHMARK(BM_qml_reproducing_kernel);

}  // namespace

BENCHMARK_MAIN();
