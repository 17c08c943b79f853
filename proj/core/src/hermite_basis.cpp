#include "mlfock/hermite_basis.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gauss_rules.hpp"

namespace mlfock {
namespace {

constexpr double kQuarticRootPiInv = 0.7511255444649425;  // pi^{-1/4}

void check_degree(int n) {
  if (n < 0) throw std::domain_error("hermite_function: n must be >= 0");
  if (n > kMaxHermiteDegree)
    throw std::domain_error("hermite_function: degree exceeds stability budget of 200");
}

}  // namespace

double HermiteExpansion::norm() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += std::norm(c);
  return std::sqrt(s);
}

std::complex<double> HermiteExpansion::evaluate(double x) const {
  if (coeffs.empty()) return {0.0, 0.0};
  std::vector<double> psi = hermite_functions_upto(degree(), x);
  std::complex<double> s{0.0, 0.0};
  for (std::size_t m = 0; m < coeffs.size(); ++m) s += coeffs[m] * psi[m];
  return s;
}

double hermite_function(int n, double x) {
  check_degree(n);
  double pm = 0.0;
  double p = kQuarticRootPiInv * std::exp(-0.5 * x * x);
  for (int k = 0; k < n; ++k) {
    const double pn = x * std::sqrt(2.0 / (k + 1)) * p - std::sqrt(k / (k + 1.0)) * pm;
    pm = p;
    p = pn;
  }
  return p;
}

std::vector<double> hermite_functions_upto(int n, double x) {
  check_degree(n);
  std::vector<double> out(n + 1);
  out[0] = kQuarticRootPiInv * std::exp(-0.5 * x * x);
  if (n == 0) return out;
  out[1] = x * std::sqrt(2.0) * out[0];
  for (int k = 1; k < n; ++k)
    out[k + 1] = x * std::sqrt(2.0 / (k + 1)) * out[k] - std::sqrt(k / (k + 1.0)) * out[k - 1];
  return out;
}

GaussHermiteRule gauss_hermite_rule(int order) {
  if (order < 1 || order > 400)
    throw std::domain_error("gauss_hermite_rule: order must be in [1, 400]");

  detail::GaussRule raw = detail::gauss_rule(detail::hermite_recurrence(order));

  GaussHermiteRule rule;
  rule.order = order;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  rule.plain_weights.resize(order);

  // Eigenvalues are only symmetric to rounding; enforce the exact
  // symmetry of the weight.
  for (int i = 0; i < order; ++i) {
    const int j = order - 1 - i;
    if (i < j) {
      const double x = 0.5 * (raw.nodes[j] - raw.nodes[i]);
      const double w = 0.5 * (raw.weights[i] + raw.weights[j]);
      rule.nodes[i] = -x;
      rule.nodes[j] = x;
      rule.weights[i] = rule.weights[j] = w;
    } else if (i == j) {
      rule.nodes[i] = 0.0;
      rule.weights[i] = raw.weights[i];
    }
  }

  for (int i = 0; i < order; ++i) {
    const double x2 = rule.nodes[i] * rule.nodes[i];
    const double w = rule.weights[i];
    if (w <= 0.0) {
      rule.plain_weights[i] = 0.0;
    } else if (x2 < 700.0) {
      rule.plain_weights[i] = w * std::exp(x2);
    } else {
      rule.plain_weights[i] = std::exp(std::log(w) + x2);
    }
  }
  return rule;
}

std::complex<double> l2_inner(const HermiteExpansion& f, const HermiteExpansion& g) {
  const std::size_t n = std::min(f.coeffs.size(), g.coeffs.size());
  std::complex<double> s{0.0, 0.0};
  for (std::size_t m = 0; m < n; ++m) s += f.coeffs[m] * std::conj(g.coeffs[m]);
  return s;
}

HermiteExpansion project_samples(const std::vector<double>& x,
                                 const std::vector<std::complex<double>>& values,
                                 int degree) {
  if (degree < 0 || degree > kMaxHermiteDegree)
    throw std::domain_error("project_samples: degree must be in [0, 200]");
  if (x.size() != values.size() || x.size() < 2)
    throw std::invalid_argument("project_samples: need matching x/value arrays with >= 2 samples");
  for (std::size_t i = 1; i < x.size(); ++i)
    if (!(x[i] > x[i - 1]))
      throw std::invalid_argument("project_samples: sample grid must be strictly increasing");

  HermiteExpansion out;
  out.coeffs.assign(degree + 1, {0.0, 0.0});
  for (std::size_t i = 0; i < x.size(); ++i) {
    double w = 0.0;
    if (i > 0) w += 0.5 * (x[i] - x[i - 1]);
    if (i + 1 < x.size()) w += 0.5 * (x[i + 1] - x[i]);
    const std::complex<double> sv = w * values[i];
    if (sv == std::complex<double>(0.0, 0.0)) continue;
    std::vector<double> psi = hermite_functions_upto(degree, x[i]);
    for (int m = 0; m <= degree; ++m) out.coeffs[m] += psi[m] * sv;
  }
  return out;
}

HermiteExpansion project_signal(const std::function<std::complex<double>(double)>& signal,
                                int degree, const GaussHermiteRule& rule) {
  if (degree < 0) throw std::domain_error("project_signal: degree must be >= 0");
  if (degree > kMaxHermiteDegree)
    throw std::domain_error("project_signal: degree exceeds stability budget of 200");
  if (rule.order < degree + 1)
    throw std::invalid_argument("project_signal: rule order must be >= degree + 1");

  HermiteExpansion out;
  out.coeffs.assign(degree + 1, {0.0, 0.0});
  for (int k = 0; k < rule.order; ++k) {
    const double x = rule.nodes[k];
    const std::complex<double> sv = rule.plain_weights[k] * signal(x);
    if (sv == std::complex<double>(0.0, 0.0)) continue;
    std::vector<double> psi = hermite_functions_upto(degree, x);
    for (int m = 0; m <= degree; ++m) out.coeffs[m] += psi[m] * sv;
  }
  return out;
}

}  // namespace mlfock
