#include "mlfock/fourier_bridge.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace mlfock {
namespace {

std::complex<double> minus_i_pow(int m) {
  switch (m & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, -1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, 1.0};
  }
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

HermiteExpansion fourier_on_hermite(const HermiteExpansion& phi) {
  HermiteExpansion out = phi;
  for (std::size_t m = 0; m < out.coeffs.size(); ++m)
    out.coeffs[m] *= minus_i_pow(static_cast<int>(m));
  return out;
}

std::complex<double> fourier_kernel_action(MLOrder q, std::complex<double> z,
                                           double lambda, int trunc, double tol) {
  return ml_kernel(q, std::complex<double>(0.0, 1.0) * z, lambda, trunc, tol);
}

MLFockElement s_q_coeffs(const MLFockElement& f) {
  MLFockElement out = f;
  for (std::size_t m = 0; m < out.coeffs.size(); ++m)
    out.coeffs[m] *= minus_i_pow(static_cast<int>(m));
  return out;
}

std::complex<double> s_q_apply(const MLFockElement& f, std::complex<double> z) {
  return s_q_coeffs(f).evaluate(z);
}

std::complex<double> s_q_apply_quadrature(const MLFockElement& f,
                                          std::complex<double> z,
                                          const PlanarRule& prule,
                                          const GaussHermiteRule& hrule,
                                          int trunc) {
  const int n = hrule.order;

  // Stage 1: phi = T_q(f) sampled at the Gauss-Hermite nodes.
  std::vector<std::complex<double>> phi(n);
  const int inv_trunc = std::max(f.degree(), 0);
  for (int k = 0; k < n; ++k)
    phi[k] = mlb_inverse(f, hrule.nodes[k], prule, inv_trunc);

  // Stage 2: F(phi) at the same nodes by oscillatory quadrature.
  std::vector<std::complex<double>> fhat(n);
  const double scale = 1.0 / std::sqrt(2.0 * std::numbers::pi);
  for (int j = 0; j < n; ++j) {
    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      const double phase = -hrule.nodes[j] * hrule.nodes[k];
      acc += hrule.plain_weights[k] *
             std::complex<double>(std::cos(phase), std::sin(phase)) * phi[k];
    }
    fhat[j] = scale * acc;
  }

  // Stage 3: B_q of the transformed signal at z.
  std::complex<double> acc{0.0, 0.0};
  for (int j = 0; j < n; ++j) {
    const std::complex<double> kern =
        std::conj(ml_kernel_partial(f.q, z, hrule.nodes[j], trunc));
    acc += hrule.plain_weights[j] * kern * fhat[j];
  }
  return acc;
}

SignReport sign_residuals(const MLFockElement& f,
                          const std::vector<std::complex<double>>& points) {
  SignReport report;
  report.q = f.q.value();
  report.trials = 1;

  double scale_seen = 0.0;
  for (const auto& z : points) {
    const std::complex<double> lhs = s_q_apply(f, z);
    const std::complex<double> target = f.evaluate(std::complex<double>(0.0, -1.0) * z);
    report.max_residual_plus = std::max(report.max_residual_plus, std::abs(lhs - target));
    report.max_residual_minus = std::max(report.max_residual_minus, std::abs(lhs + target));
    scale_seen = std::max(scale_seen, std::abs(target));
  }
  report.degenerate = scale_seen < 1e-14;
  report.best_sign = report.max_residual_plus <= report.max_residual_minus ? +1 : -1;
  return report;
}

SignReport resolve_sign(MLOrder q, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::domain_error("resolve_sign: trials must be >= 1");

  std::mt19937_64 rng(seed);
  SignReport report;
  report.q = q.value();
  report.trials = trials;

  bool degenerate = true;
  for (int t = 0; t < trials; ++t) {
    MLFockElement f;
    f.q = q;
    f.coeffs.resize(9);
    for (auto& c : f.coeffs)
      c = {2.0 * uniform01(rng) - 1.0, 2.0 * uniform01(rng) - 1.0};
    const double nrm = ml_norm(f);
    for (auto& c : f.coeffs) c /= nrm;

    std::vector<std::complex<double>> points(3);
    for (auto& z : points) {
      const double r = 1.5 * std::sqrt(uniform01(rng));
      const double th = 2.0 * std::numbers::pi * uniform01(rng);
      z = {r * std::cos(th), r * std::sin(th)};
    }
    const SignReport trial = sign_residuals(f, points);
    report.max_residual_plus = std::max(report.max_residual_plus, trial.max_residual_plus);
    report.max_residual_minus = std::max(report.max_residual_minus, trial.max_residual_minus);
    degenerate = degenerate && trial.degenerate;
  }

  constexpr double tol = 1e-8;
  report.degenerate = degenerate;
  if (report.degenerate) {
    report.best_sign = +1;
    return report;
  }
  const bool plus_ok = report.max_residual_plus <= tol;
  const bool minus_ok = report.max_residual_minus <= tol;
  if (!plus_ok && !minus_ok)
    throw std::logic_error("resolve_sign: neither sign matches the composition; implementation bug");
  report.best_sign = plus_ok ? +1 : -1;
  return report;
}

}  // namespace mlfock
