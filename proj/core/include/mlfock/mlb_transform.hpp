#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "mlfock/hermite_basis.hpp"
#include "mlfock/planar_quadrature.hpp"
#include "mlfock/special_functions.hpp"

namespace mlfock {

inline constexpr int kDefaultKernelTruncation = 64;
inline constexpr double kDefaultKernelTol = 1e-8;

/// Element of ML_q as a finite coefficient sequence over the
/// orthonormal basis e_{m,q}(z) = z^m / sqrt(Gamma(qm+1)).
/// An empty coefficient list is the zero element.
struct MLFockElement {
  MLOrder q{1.0};
  std::vector<std::complex<double>> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  std::complex<double> evaluate(std::complex<double> z) const;
};

/// Partial sum through degree trunc of the ML-Bargmann kernel
///   A_q(z, x) = sum_n conj(z)^n / sqrt(Gamma(qn+1)) psi_n(x).
/// The tail is bounded uniformly in x by |psi_n| <= 1.09 and the
/// sqrt-Gamma decay; throws ConvergenceError when that bound exceeds
/// tol. trunc must be <= kMaxHermiteDegree.
std::complex<double> ml_kernel(MLOrder q, std::complex<double> z, double x,
                               int trunc = kDefaultKernelTruncation,
                               double tol = kDefaultKernelTol);

/// Raw partial sum without the tail gate. Inside the planar integrals
/// the terms beyond the element degree integrate to zero exactly, so no
/// pointwise tail control is wanted there.
std::complex<double> ml_kernel_partial(MLOrder q, std::complex<double> z, double x,
                                       int trunc);

/// Uniform-in-x bound on the kernel tail beyond degree trunc at radius
/// |z|; infinity when the term ratio has not yet dropped below 1.
double ml_kernel_tail_bound(MLOrder q, double abs_z, int trunc);

/// B_q in coefficient space: the Hermite coefficient sequence is the
/// e_{m,q} coefficient sequence, index by index. Exact.
MLFockElement mlb_forward_coeff(const HermiteExpansion& phi, MLOrder q);

/// B_q(signal)(z) = integral conj(A_q(z, x)) signal(x) dx by
/// Gauss-Hermite quadrature. Tail-gated like ml_kernel (the bound is
/// uniform in x); pass tol = infinity to disable the gate when the
/// truncation is exact by orthogonality.
std::complex<double> mlb_forward_integral(
    const std::function<std::complex<double>(double)>& signal, MLOrder q,
    std::complex<double> z, const GaussHermiteRule& rule,
    int trunc = kDefaultKernelTruncation, double tol = kDefaultKernelTol);

/// T_q(f)(x) = (1/(q pi)) integral A_q(z, x) f(z) |z|^{2/q-2} e^{-|z|^{2/q}} dA(z)
/// by planar quadrature; inverse and adjoint of B_q. With
/// normalized = false the 1/(q pi) prefactor is dropped (the bare
/// integral form), which no longer inverts B_q.
std::complex<double> mlb_inverse(const MLFockElement& f, double x,
                                 const PlanarRule& rule,
                                 int trunc = kDefaultKernelTruncation,
                                 bool normalized = true);

/// sqrt(sum |c_m|^2), the exact ML_q norm by Parseval.
double ml_norm(const MLFockElement& f);

/// Quadrature inner product of two elements (dual route to the
/// coefficient-space value sum f_m conj(g_m)).
std::complex<double> ml_inner(const MLFockElement& f, const MLFockElement& g,
                              const PlanarRule& rule);

}  // namespace mlfock
