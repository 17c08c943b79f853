#include "mlfock/planar_quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gauss_rules.hpp"

namespace mlfock {

PlanarRule build_planar_rule(MLOrder q, int radial_order, int angular_count) {
  if (radial_order < 1 || radial_order > 200)
    throw std::domain_error("build_planar_rule: radial_order must be in [1, 200]");
  if (angular_count < 4)
    throw std::domain_error("build_planar_rule: angular_count must be >= 4");

  PlanarRule rule;
  rule.q = q;
  rule.angular_count = angular_count;
  rule.normalization = 1.0 / (q.value() * std::numbers::pi);

  long p = 0, r = 0;
  detail::GaussRule raw;
  if (detail::rationalize(q.value(), 16, p, r)) {
    if (r == 1) {
      raw = detail::gauss_rule(detail::laguerre_recurrence(radial_order, 0.0));
      rule.radial_nodes = raw.nodes;
    } else {
      raw = detail::gauss_rule(
          detail::power_weight_recurrence(radial_order, static_cast<int>(r)));
      rule.radial_nodes.resize(radial_order);
      for (int j = 0; j < radial_order; ++j)
        rule.radial_nodes[j] = std::pow(raw.nodes[j], static_cast<double>(r));
    }
    rule.radial_exactness = static_cast<int>((2L * radial_order - 1) / p);
    rule.exact_monomials = true;
  } else {
    raw = detail::gauss_rule(detail::laguerre_recurrence(radial_order, 0.0));
    rule.radial_nodes = raw.nodes;
    rule.radial_exactness =
        static_cast<int>(std::floor((2.0 * radial_order - 1.0) / q.value()));
    rule.exact_monomials = false;
  }
  rule.radial_weights = raw.weights;

  rule.radial_abs.resize(radial_order);
  for (int j = 0; j < radial_order; ++j)
    rule.radial_abs[j] = std::pow(rule.radial_nodes[j], 0.5 * q.value());

  rule.phases.resize(angular_count);
  for (int k = 0; k < angular_count; ++k) {
    const double th = 2.0 * std::numbers::pi * k / angular_count;
    rule.phases[k] = {std::cos(th), std::sin(th)};
  }
  return rule;
}

std::complex<double> ml_inner(const PlaneFunction& f, const PlaneFunction& g,
                              const PlanarRule& rule) {
  std::complex<double> total{0.0, 0.0};
  const int m = rule.angular_count;
  for (std::size_t j = 0; j < rule.radial_nodes.size(); ++j) {
    std::complex<double> ring{0.0, 0.0};
    for (int k = 0; k < m; ++k) {
      const std::complex<double> z = rule.radial_abs[j] * rule.phases[k];
      ring += f(z) * std::conj(g(z));
    }
    total += rule.radial_weights[j] * ring;
  }
  return total / static_cast<double>(m);
}

std::vector<WeightDiagnosticRow> weight_diagnostic(MLOrder q, int max_n,
                                                   int radial_order) {
  if (max_n < 0) throw std::domain_error("weight_diagnostic: max_n must be >= 0");
  const double qv = q.value();

  PlanarRule corrected = build_planar_rule(q, radial_order, 4);

  // Under the literal weight the radial integral becomes
  // q^{n + 1/q - 1} Gamma(n + 1/q), a generalized Gauss-Laguerre
  // functional with alpha = 1/q - 1 (exact for every integer n).
  const double alpha = 1.0 / qv - 1.0;
  detail::GaussRule literal =
      detail::gauss_rule(detail::laguerre_recurrence(radial_order, alpha));

  std::vector<WeightDiagnosticRow> rows;
  rows.reserve(max_n + 1);
  for (int n = 0; n <= max_n; ++n) {
    WeightDiagnosticRow row;
    row.q = qv;
    row.n = n;
    row.gamma_target = gamma_pos(qv * n + 1.0);

    double s = 0.0;
    for (std::size_t j = 0; j < corrected.radial_nodes.size(); ++j)
      s += corrected.radial_weights[j] * std::pow(corrected.radial_nodes[j], qv * n);
    row.norm_corrected = s;

    // The rule integrates t^n t^alpha e^{-t} exactly; the substitution
    // prefactor q^{1/q-1} and the node map t -> q t give
    // q^{n+1/q-1} Gamma(n+1/q).
    double lit = 0.0;
    for (std::size_t j = 0; j < literal.nodes.size(); ++j)
      lit += literal.weights[j] * std::pow(qv * literal.nodes[j], static_cast<double>(n));
    row.norm_literal = std::pow(qv, 1.0 / qv - 1.0) * lit;

    rows.push_back(row);
  }
  return rows;
}

}  // namespace mlfock
