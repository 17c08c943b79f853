#pragma once

#include <complex>
#include <cstdint>

#include "mlfock/mlb_transform.hpp"

namespace mlfock {

/// Outcome of adjudicating the sign in S_q(f)(z) = ± f(-iz): the
/// composition is compared against both candidates over random inputs.
struct SignReport {
  double q = 0.0;
  int best_sign = 0;  // +1 or -1
  double max_residual_plus = 0.0;
  double max_residual_minus = 0.0;
  bool degenerate = false;  // all trial values vanished
  int trials = 0;
};

/// Fourier transform in Hermite coordinates: alpha_m -> (-i)^m alpha_m.
/// Exact and unitary.
HermiteExpansion fourier_on_hermite(const HermiteExpansion& phi);

/// F(A_q^z)(lambda) = A_q(i z, lambda): the kernel is a Fourier
/// eigenvector sum, so the action is a rotation of the parameter.
std::complex<double> fourier_kernel_action(MLOrder q, std::complex<double> z,
                                           double lambda,
                                           int trunc = kDefaultKernelTruncation,
                                           double tol = kDefaultKernelTol);

/// S_q = B_q o F o B_q^{-1} computed in coefficient space:
/// c_m -> (-i)^m c_m, then evaluated at z. On the basis this equals
/// f(-i z) identically.
std::complex<double> s_q_apply(const MLFockElement& f, std::complex<double> z);

/// Coefficient image of S_q (the (-i)^m diagonal).
MLFockElement s_q_coeffs(const MLFockElement& f);

/// The same composition evaluated entirely by quadrature:
/// T_q via the planar rule, F via oscillatory Gauss-Hermite quadrature,
/// B_q via Gauss-Hermite quadrature. Independent of the coefficient
/// shortcut; used to check the diagram numerically.
std::complex<double> s_q_apply_quadrature(const MLFockElement& f,
                                          std::complex<double> z,
                                          const PlanarRule& prule,
                                          const GaussHermiteRule& hrule,
                                          int trunc = kDefaultKernelTruncation);

/// Residuals of s_q_apply(f, .) against +f(-i .) and -f(-i .) at the
/// given sample points. Flags the degenerate case where every target
/// value vanishes (e.g. the zero element).
SignReport sign_residuals(const MLFockElement& f,
                          const std::vector<std::complex<double>>& points);

/// Compares s_q_apply against +f(-iz) and -f(-iz) on random elements of
/// degree <= 8 and random points. Throws std::logic_error when neither
/// sign fits (an implementation bug, not a paper ambiguity).
SignReport resolve_sign(MLOrder q, int trials, std::uint64_t seed = 20240817u);

}  // namespace mlfock
