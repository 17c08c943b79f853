#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace mlfock {

/// Stability budget for the normalized Hermite recurrence.
inline constexpr int kMaxHermiteDegree = 200;

/// Finite expansion sum_m coeffs[m] * psi_m over the normalized Hermite
/// functions. An empty coefficient list is the zero element.
struct HermiteExpansion {
  std::vector<std::complex<double>> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  double norm() const;
  std::complex<double> evaluate(double x) const;
};

/// psi_n(x) = H_n(x) exp(-x^2/2) / sqrt(2^n n! sqrt(pi)), evaluated by
/// the recurrence on the normalized functions. n must be <= kMaxHermiteDegree.
double hermite_function(int n, double x);

/// psi_0(x) .. psi_n(x) in one recurrence pass.
std::vector<double> hermite_functions_upto(int n, double x);

/// Gauss-Hermite nodes/weights for the weight exp(-x^2).
/// plain_weights[k] = weights[k] * exp(nodes[k]^2): apply these to an
/// integrand that already carries the Gaussian decay.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> plain_weights;
  int order = 0;
};

GaussHermiteRule gauss_hermite_rule(int order);  // 1 <= order <= 400

/// Parseval form of the L^2 inner product: sum f_m conj(g_m) over the
/// common coefficient range.
std::complex<double> l2_inner(const HermiteExpansion& f, const HermiteExpansion& g);

/// Coefficients alpha_m = integral psi_m(x) signal(x) dx, m = 0..degree,
/// by Gauss-Hermite quadrature. Requires rule.order >= degree + 1.
HermiteExpansion project_signal(const std::function<std::complex<double>(double)>& signal,
                                int degree, const GaussHermiteRule& rule);

/// Projection of a sampled signal by the trapezoid rule on its own
/// grid (spectrally accurate for smooth Gaussian-decay signals on a
/// dense grid; the signal is treated as zero outside it). x must be
/// strictly increasing with at least 2 samples.
HermiteExpansion project_samples(const std::vector<double>& x,
                                 const std::vector<std::complex<double>>& values,
                                 int degree);

}  // namespace mlfock
