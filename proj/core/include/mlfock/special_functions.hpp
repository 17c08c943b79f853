#pragma once

#include <complex>
#include <stdexcept>

namespace mlfock {

/// Order parameter q > 0 of the space ML_q. Construction rejects
/// non-finite or non-positive values.
class MLOrder {
 public:
  explicit MLOrder(double q) : q_(q) {
    if (!(q > 0.0) || !std::isfinite(q))
      throw std::domain_error("MLOrder: q must be finite and > 0");
  }
  double value() const noexcept { return q_; }

 private:
  double q_;
};

/// Partial sum of a series together with a rigorous bound on the
/// omitted tail.
struct TruncatedValue {
  std::complex<double> value{0.0, 0.0};
  int terms_used = 0;
  double error_bound = 0.0;
};

/// Thrown when a series does not reach the requested tolerance within
/// its term budget.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultMaxTerms = 512;
inline constexpr double kDefaultSeriesTol = 1e-12;

/// Gamma(x) for x > 0 via a fixed published Lanczos approximation.
/// Throws std::domain_error for x <= 0 (or non-finite), and
/// std::overflow_error once the result exceeds the double range.
double gamma_pos(double x);

/// log Gamma(x) for x > 0; same domain checks, never overflows for
/// representable x.
double log_gamma_pos(double x);

/// Gamma(qn+1) / Gamma(q(n-1)+1) for n >= 1, computed without forming
/// the (possibly overflowing) gammas. Integer q uses the exact product
/// of q consecutive integers; otherwise log-gamma differences.
double gamma_ratio(MLOrder q, int n);

/// Mittag-Leffler function E_q(z) = sum_n z^n / Gamma(qn+1) by direct
/// summation. Stops once a geometric majorant of the tail falls below
/// tol; throws ConvergenceError if max_terms is exhausted first.
TruncatedValue mittag_leffler(MLOrder q, std::complex<double> z,
                              double tol = kDefaultSeriesTol,
                              int max_terms = kDefaultMaxTerms);

}  // namespace mlfock
