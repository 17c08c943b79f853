#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "mlfock/special_functions.hpp"

namespace mlfock {

/// f(z) = sum_n coeffs[n] z^{qn}, evaluated on the cut plane with the
/// principal branch of z^q (the ordinary power for integer q).
struct FracPowerSeries {
  MLOrder q{1.0};
  std::vector<std::complex<double>> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  std::complex<double> evaluate(std::complex<double> z) const;
};

/// Series-form Caputo derivative: a_n -> a_n Gamma(qn+1)/Gamma(q(n-1)+1)
/// with the exponent shift; constants are annihilated.
FracPowerSeries caputo_derivative(const FracPowerSeries& f);

/// Multiplication by z^q: the coefficient shift b_n = a_{n-1}.
FracPowerSeries multiply_zq(const FracPowerSeries& f);

/// [D_*^q, M_{z^q}] f computed by composing the two operators.
FracPowerSeries commutator_apply(const FracPowerSeries& f);

/// Diagonal commutator coefficient
///   beta(n, q) = Gamma(q(n+1)+1)/Gamma(qn+1) - Gamma(qn+1)/Gamma(q(n-1)+1),
/// overflow-safe via gamma ratios. n >= 1.
double beta(int n, MLOrder q);

/// Differential-operator form of the commutator for integer q:
/// [D_*^q, M_{z^q}] f = sum_k C_k z^k d^k/dz^k f(z^q).
struct DiffIdentity {
  int q = 0;
  std::vector<double> coefficients;  // C_0 .. C_{q-1}
};

/// Solves for the C_k by exact integer arithmetic (beta is a degree
/// q-1 polynomial in qn; the falling-factorial change of basis is a
/// Stirling transform) and verifies the result on n = 1..max_n.
/// Throws std::runtime_error if any sampled n is inconsistent.
DiffIdentity synthesize_identity(int q, int max_n);

/// Exact check of the differential identity on all monomials z^{qn},
/// n <= degree. Requires q <= 12 and degree <= 30. Falsification is a
/// reported outcome, not an error.
struct ConjectureReport {
  int q = 0;
  std::vector<double> coefficients;
  int verified_up_to = 0;
  std::optional<int> falsified_at;
  std::vector<double> residuals;  // |identity - commutator| per n, exact arithmetic
};

ConjectureReport verify_conjecture(int q, int degree);

/// One row of the beta cross-check table: the gamma-ratio value next to
/// the published closed form, where one exists (q = 1..4).
struct BetaTableRow {
  double q = 0.0;
  int n = 0;
  double beta_gamma = 0.0;
  std::optional<double> beta_published;
  std::optional<bool> matches_published;
};

std::vector<BetaTableRow> commutator_table(MLOrder q, int max_n);

}  // namespace mlfock
