#include "gauss_rules.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mlfock::detail {

Recurrence hermite_recurrence(int n) {
  Recurrence rc;
  rc.a.assign(n, 0.0);
  rc.b.assign(n, 0.0);
  rc.b[0] = std::sqrt(std::numbers::pi);
  for (int k = 1; k < n; ++k) rc.b[k] = 0.5 * k;
  return rc;
}

Recurrence laguerre_recurrence(int n, double alpha) {
  if (!(alpha > -1.0))
    throw std::domain_error("laguerre_recurrence: alpha must be > -1");
  Recurrence rc;
  rc.a.resize(n);
  rc.b.resize(n);
  rc.b[0] = std::tgamma(alpha + 1.0);
  for (int k = 0; k < n; ++k) rc.a[k] = 2.0 * k + alpha + 1.0;
  for (int k = 1; k < n; ++k) rc.b[k] = k * (k + alpha);
  return rc;
}

Recurrence legendre_recurrence(int n) {
  Recurrence rc;
  rc.a.assign(n, 0.0);
  rc.b.assign(n, 0.0);
  rc.b[0] = 2.0;
  for (int k = 1; k < n; ++k)
    rc.b[k] = (k * k) / (4.0 * k * k - 1.0);
  return rc;
}

namespace {

// Composite Gauss-Legendre discretization of [0, T].
struct Discretization {
  std::vector<double> t, w;
};

Discretization composite_legendre(double T, int panels, int per_panel) {
  GaussRule base = gauss_rule(legendre_recurrence(per_panel));
  Discretization d;
  d.t.reserve(static_cast<std::size_t>(panels) * per_panel);
  d.w.reserve(static_cast<std::size_t>(panels) * per_panel);
  const double h = T / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * h;
    for (int i = 0; i < per_panel; ++i) {
      d.t.push_back(mid + 0.5 * h * base.nodes[i]);
      d.w.push_back(0.5 * h * base.weights[i]);
    }
  }
  return d;
}

}  // namespace

Recurrence power_weight_recurrence(int n, int r) {
  if (r < 1) throw std::domain_error("power_weight_recurrence: r must be >= 1");
  if (r == 1) return laguerre_recurrence(n, 0.0);

  // Stieltjes with phi_k = p_k sqrt(w); the scaled functions stay O(1)
  // so the recurrence never overflows. Panel density resolves the
  // oscillations of p_{n-1}.
  const double T = 1.15 * std::pow(4.0 * n + 30.0, 1.0 / r);
  const int panels = std::max(64, 3 * n);
  Discretization d = composite_legendre(T, panels, 24);
  const std::size_t m = d.t.size();

  std::vector<double> sq(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double t = d.t[i];
    sq[i] = std::sqrt(static_cast<double>(r)) * std::pow(t, 0.5 * (r - 1)) *
            std::exp(-0.5 * std::pow(t, static_cast<double>(r)));
  }

  Recurrence rc;
  rc.a.assign(n, 0.0);
  rc.b.assign(n, 0.0);

  double mu0 = 0.0;
  for (std::size_t i = 0; i < m; ++i) mu0 += d.w[i] * sq[i] * sq[i];
  rc.b[0] = mu0;

  std::vector<double> phi_prev(m, 0.0), phi(m), next(m);
  const double inv = 1.0 / std::sqrt(mu0);
  for (std::size_t i = 0; i < m; ++i) phi[i] = sq[i] * inv;

  double sb_prev = 0.0;
  for (int k = 0; k < n; ++k) {
    double ak = 0.0;
    for (std::size_t i = 0; i < m; ++i) ak += d.w[i] * d.t[i] * phi[i] * phi[i];
    rc.a[k] = ak;
    double nb = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      next[i] = (d.t[i] - ak) * phi[i] - sb_prev * phi_prev[i];
      nb += d.w[i] * next[i] * next[i];
    }
    if (k + 1 < n) rc.b[k + 1] = nb;
    sb_prev = std::sqrt(nb);
    const double scale = 1.0 / sb_prev;
    for (std::size_t i = 0; i < m; ++i) {
      phi_prev[i] = phi[i];
      phi[i] = next[i] * scale;
    }
  }
  return rc;
}

GaussRule gauss_rule(const Recurrence& rc) {
  const int n = static_cast<int>(rc.a.size());
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  if (n == 1) {
    rule.nodes[0] = rc.a[0];
    rule.weights[0] = rc.b[0];
    return rule;
  }

  Eigen::VectorXd diag(n), sub(n - 1);
  for (int k = 0; k < n; ++k) diag[k] = rc.a[k];
  for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(rc.b[k]);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_rule: tridiagonal eigensolve failed");

  for (int j = 0; j < n; ++j) rule.nodes[j] = es.eigenvalues()[j];

  // Christoffel weights with on-the-fly rescaling. p_0 = 1/sqrt(mu0).
  for (int j = 0; j < n; ++j) {
    const double x = rule.nodes[j];
    double pm = 0.0;
    double p = 1.0 / std::sqrt(rc.b[0]);
    double s = p * p;
    double log_scale = 0.0;
    for (int k = 0; k + 1 < n; ++k) {
      const double sbk = (k > 0) ? std::sqrt(rc.b[k]) : 0.0;
      const double pn = ((x - rc.a[k]) * p - sbk * pm) / std::sqrt(rc.b[k + 1]);
      pm = p;
      p = pn;
      s += p * p;
      if (std::abs(p) > 1e150) {
        constexpr double f = 1e-150;
        pm *= f;
        p *= f;
        s *= f * f;
        log_scale += 150.0 * std::numbers::ln10;
      }
    }
    rule.weights[j] =
        (log_scale == 0.0) ? 1.0 / s : std::exp(-std::log(s) - 2.0 * log_scale);
  }
  return rule;
}

bool rationalize(double q, int max_den, long& p, long& r) {
  // Continued-fraction expansion with bounded denominator.
  long p0 = 1, q0 = 0, p1 = 0, q1 = 1;  // convergents of the fraction part order
  double x = q;
  for (int it = 0; it < 64; ++it) {
    const double fl = std::floor(x);
    if (fl > static_cast<double>(1L << 40)) break;
    const long ai = static_cast<long>(fl);
    const long p2 = ai * p0 + p1;
    const long q2 = ai * q0 + q1;
    if (q2 > max_den) break;
    p1 = p0; q1 = q0; p0 = p2; q0 = q2;
    if (q0 > 0 && std::abs(q - static_cast<double>(p0) / q0) <= 1e-9 * std::max(1.0, q)) {
      p = p0;
      r = q0;
      return p > 0;
    }
    const double frac = x - fl;
    if (frac < 1e-12) break;
    x = 1.0 / frac;
  }
  return false;
}

}  // namespace mlfock::detail
