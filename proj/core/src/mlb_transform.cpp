#include "mlfock/mlb_transform.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace mlfock {
namespace {

constexpr double kHermiteUniformBound = 1.09;  // |psi_n(x)| <= 1.09 for all n, x

void check_trunc(int trunc) {
  if (trunc < 0 || trunc > kMaxHermiteDegree)
    throw std::domain_error("kernel truncation must be in [0, 200]");
}

// inv_sqrt_ratio[n] = 1 / sqrt(Gamma(qn+1)/Gamma(q(n-1)+1)); the basis
// chain e_{n,q} = e_{n-1,q} * z * inv_sqrt_ratio[n] never over- or
// underflows even where Gamma(qn+1) itself would.
std::vector<double> inv_sqrt_ratios(MLOrder q, int n_max) {
  std::vector<double> v(n_max + 1, 1.0);
  for (int n = 1; n <= n_max; ++n) v[n] = 1.0 / std::sqrt(gamma_ratio(q, n));
  return v;
}

// Kahan-compensated complex accumulator; the forward integral needs it
// because basis images near the origin sit far below the integrand
// scale.
struct CompensatedSum {
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> carry{0.0, 0.0};
  void add(std::complex<double> v) {
    const std::complex<double> y = v - carry;
    const std::complex<double> t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

std::complex<double> MLFockElement::evaluate(std::complex<double> z) const {
  // e_{m,q}(z) builds up incrementally: e_m = e_{m-1} * z / sqrt(gamma_ratio(q, m)).
  std::complex<double> basis{1.0, 0.0};
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (m > 0) basis *= z / std::sqrt(gamma_ratio(q, static_cast<int>(m)));
    sum += coeffs[m] * basis;
  }
  return sum;
}

double ml_kernel_tail_bound(MLOrder q, double abs_z, int trunc) {
  if (abs_z == 0.0) return 0.0;
  const double rho = abs_z / std::sqrt(gamma_ratio(q, trunc + 2));
  if (rho >= 1.0) return std::numeric_limits<double>::infinity();
  const double log_first = (trunc + 1) * std::log(abs_z) -
                           0.5 * log_gamma_pos(q.value() * (trunc + 1) + 1.0);
  return kHermiteUniformBound * std::exp(log_first) / (1.0 - rho);
}

std::complex<double> ml_kernel_partial(MLOrder q, std::complex<double> z, double x,
                                       int trunc) {
  check_trunc(trunc);
  std::vector<double> psi = hermite_functions_upto(trunc, x);
  const std::complex<double> zc = std::conj(z);
  std::complex<double> basis{1.0, 0.0};
  std::complex<double> sum{0.0, 0.0};
  for (int n = 0; n <= trunc; ++n) {
    if (n > 0) basis *= zc / std::sqrt(gamma_ratio(q, n));
    sum += basis * psi[n];
  }
  return sum;
}

std::complex<double> ml_kernel(MLOrder q, std::complex<double> z, double x,
                               int trunc, double tol) {
  check_trunc(trunc);
  const double tail = ml_kernel_tail_bound(q, std::abs(z), trunc);
  if (!(tail <= tol))
    throw ConvergenceError("ml_kernel: tail bound exceeds tolerance at this |z|; raise trunc");
  return ml_kernel_partial(q, z, x, trunc);
}

MLFockElement mlb_forward_coeff(const HermiteExpansion& phi, MLOrder q) {
  return MLFockElement{q, phi.coeffs};
}

std::complex<double> mlb_forward_integral(
    const std::function<std::complex<double>(double)>& signal, MLOrder q,
    std::complex<double> z, const GaussHermiteRule& rule, int trunc, double tol) {
  check_trunc(trunc);
  const double tail = ml_kernel_tail_bound(q, std::abs(z), trunc);
  if (!(tail <= tol) && std::isfinite(tol))
    throw ConvergenceError("mlb_forward_integral: kernel tail bound exceeds tolerance; raise trunc");

  // conj(A_q(z, x)) = sum_n z^n / sqrt(Gamma(qn+1)) psi_n(x)
  const std::vector<double> isr = inv_sqrt_ratios(q, trunc);
  CompensatedSum acc;
  for (int k = 0; k < rule.order; ++k) {
    const std::complex<double> sv = signal(rule.nodes[k]);
    if (sv == std::complex<double>(0.0, 0.0)) continue;
    const std::vector<double> psi = hermite_functions_upto(trunc, rule.nodes[k]);
    std::complex<double> basis{1.0, 0.0};
    CompensatedSum kern;
    kern.add({psi[0], 0.0});
    for (int n = 1; n <= trunc; ++n) {
      basis *= z * isr[n];
      kern.add(basis * psi[n]);
    }
    acc.add(rule.plain_weights[k] * kern.sum * sv);
  }
  return acc.sum;
}

std::complex<double> mlb_inverse(const MLFockElement& f, double x,
                                 const PlanarRule& rule, int trunc,
                                 bool normalized) {
  check_trunc(trunc);
  if (f.q.value() != rule.q.value())
    throw std::invalid_argument("mlb_inverse: element and rule have different orders q");
  if (f.degree() > rule.radial_exactness)
    throw std::invalid_argument("mlb_inverse: element degree exceeds the radial exactness budget of the rule");
  if (trunc < f.degree())
    throw std::invalid_argument("mlb_inverse: kernel truncation below element degree");

  const std::vector<double> psi = hermite_functions_upto(trunc, x);
  const std::vector<double> isr = inv_sqrt_ratios(f.q, trunc);
  const int deg = f.degree();

  std::complex<double> total{0.0, 0.0};
  for (std::size_t j = 0; j < rule.radial_nodes.size(); ++j) {
    std::complex<double> ring{0.0, 0.0};
    for (int k = 0; k < rule.angular_count; ++k) {
      const std::complex<double> z = rule.radial_abs[j] * rule.phases[k];
      const std::complex<double> zc = std::conj(z);
      std::complex<double> basis{1.0, 0.0};
      std::complex<double> kern{psi[0], 0.0};
      std::complex<double> fval = (deg >= 0) ? f.coeffs[0] : std::complex<double>{0.0, 0.0};
      for (int n = 1; n <= trunc; ++n) {
        basis *= zc * isr[n];
        kern += basis * psi[n];
        if (n <= deg) fval += f.coeffs[n] * std::conj(basis);
      }
      ring += kern * fval;
    }
    total += rule.radial_weights[j] * ring;
  }
  total /= static_cast<double>(rule.angular_count);
  if (!normalized) total *= f.q.value() * std::numbers::pi;
  return total;
}

double ml_norm(const MLFockElement& f) {
  double s = 0.0;
  for (const auto& c : f.coeffs) s += std::norm(c);
  return std::sqrt(s);
}

std::complex<double> ml_inner(const MLFockElement& f, const MLFockElement& g,
                              const PlanarRule& rule) {
  if (f.q.value() != rule.q.value() || g.q.value() != rule.q.value())
    throw std::invalid_argument("ml_inner: elements and rule have different orders q");
  return ml_inner(PlaneFunction([&f](std::complex<double> z) { return f.evaluate(z); }),
                  PlaneFunction([&g](std::complex<double> z) { return g.evaluate(z); }),
                  rule);
}

}  // namespace mlfock
