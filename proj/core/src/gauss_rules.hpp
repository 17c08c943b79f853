#pragma once

// Internal Golub-Welsch machinery shared by the Hermite and planar
// quadrature modules. Not installed.
//
// Nodes come from the eigenvalues of the symmetric tridiagonal Jacobi
// matrix. Weights are NOT taken from eigenvector components (those lose
// all relative accuracy in the tail); they are recomputed from the
// Christoffel function w_j = 1 / sum_k p_k(x_j)^2 with orthonormal p_k
// evaluated by the three-term recurrence, rescaled to avoid overflow.

#include <cmath>
#include <cstddef>
#include <vector>

namespace mlfock::detail {

struct Recurrence {
  std::vector<double> a;  // diagonal, size n
  std::vector<double> b;  // b[0] = mu0 (zeroth moment), b[k>=1] off-diagonal^2
};

struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

Recurrence hermite_recurrence(int n);                    // weight exp(-x^2) on R
Recurrence laguerre_recurrence(int n, double alpha);     // weight x^alpha exp(-x) on [0,inf)
Recurrence legendre_recurrence(int n);                   // weight 1 on [-1,1]

// Discretized Stieltjes coefficients for the weight
// r t^{r-1} exp(-t^r) on [0, inf), the pushforward of exp(-u) du under
// u = t^r. All moments are Gamma(m/r + 1).
Recurrence power_weight_recurrence(int n, int r);

GaussRule gauss_rule(const Recurrence& rc);

// q = p/r in lowest terms with r <= max_den, if q is within tol of such
// a rational. Returns false otherwise.
bool rationalize(double q, int max_den, long& p, long& r);

}  // namespace mlfock::detail
