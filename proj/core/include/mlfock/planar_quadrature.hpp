#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "mlfock/special_functions.hpp"

namespace mlfock {

/// Quadrature rule for the ML_q inner product
///   (1/(q pi)) \int_C f(z) conj(g(z)) |z|^{2/q-2} exp(-|z|^{2/q}) dA(z).
/// The substitution u = |z|^{2/q} turns this into
///   (1/(2 pi)) \int_0^{2pi} \int_0^inf f conj(g) |_{z = u^{q/2} e^{i t}} e^{-u} du dt,
/// discretized by a Gauss-type radial rule for the e^{-u} du functional
/// and the uniform periodic angular grid.
///
/// For integer q the radial rule is classical Gauss-Laguerre. For
/// rational q = p/r the rule is generated for the pushforward weight
/// r t^{r-1} exp(-t^r) under u = t^r, which makes every monomial norm
/// <z^n, z^n> = Gamma(qn+1) exact up to n = radial_exactness. Other q
/// fall back to plain Gauss-Laguerre with degraded accuracy on
/// fractional radial powers.
struct PlanarRule {
  MLOrder q{1.0};
  std::vector<double> radial_nodes;    // u_j > 0
  std::vector<double> radial_weights;  // positive, sum to 1
  int angular_count = 0;
  double normalization = 0.0;          // 1/(q pi), the inner-product prefactor
  int radial_exactness = 0;            // largest n with <z^n, z^n> exact
  bool exact_monomials = true;

  std::vector<double> radial_abs;            // u_j^{q/2}, cached
  std::vector<std::complex<double>> phases;  // e^{2 pi i k / angular_count}

  std::complex<double> node(int j, int k) const {
    return radial_abs[j] * phases[k];
  }
};

PlanarRule build_planar_rule(MLOrder q, int radial_order, int angular_count);

using PlaneFunction = std::function<std::complex<double>(std::complex<double>)>;

/// Quadrature value of the normalized ML_q inner product <f, g>.
std::complex<double> ml_inner(const PlaneFunction& f, const PlaneFunction& g,
                              const PlanarRule& rule);

/// Monomial-norm comparison between the weight exp(-|z|^{2/q}) used by
/// this module and the literal exp(-|z|^2/q): reports both quadrature
/// values against the Gamma(qn+1) target. The two coincide at q = 1.
struct WeightDiagnosticRow {
  double q = 0.0;
  int n = 0;
  double norm_corrected = 0.0;
  double norm_literal = 0.0;
  double gamma_target = 0.0;
};

std::vector<WeightDiagnosticRow> weight_diagnostic(MLOrder q, int max_n,
                                                   int radial_order);

}  // namespace mlfock
