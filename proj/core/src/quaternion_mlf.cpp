#include "mlfock/quaternion_mlf.hpp"

#include <cmath>
#include <stdexcept>

#include "mlfock/hermite_basis.hpp"
#include "mlfock/mlb_transform.hpp"

namespace mlfock {

double Quaternion::abs() const { return std::sqrt(norm_sq()); }

SliceUnit::SliceUnit(const Quaternion& I) : unit_(I) {
  if (std::abs(I.x0) > 1e-12)
    throw std::domain_error("SliceUnit: real part must vanish");
  if (std::abs(I.norm_sq() - 1.0) > 1e-12)
    throw std::domain_error("SliceUnit: unit norm required");
}

SliceDecomposition slice_decompose(const Quaternion& p) {
  SliceDecomposition d;
  d.real = p.x0;
  const double y = std::sqrt(p.x1 * p.x1 + p.x2 * p.x2 + p.x3 * p.x3);
  d.imag_norm = y;
  if (y > 0.0)
    d.unit = SliceUnit({0.0, p.x1 / y, p.x2 / y, p.x3 / y});
  return d;
}

Quaternion embed_in_slice(std::complex<double> z, const SliceUnit& I) {
  return Quaternion::real(z.real()) + z.imag() * I.unit();
}

std::complex<double> project_to_slice(const Quaternion& p, const SliceUnit& I) {
  const Quaternion& u = I.unit();
  const double y = p.x1 * u.x1 + p.x2 * u.x2 + p.x3 * u.x3;
  const Quaternion back = Quaternion::real(p.x0) + y * u;
  const Quaternion off = p - back;
  if (off.abs() > 1e-9 * std::max(1.0, p.abs()))
    throw std::domain_error("project_to_slice: quaternion does not lie in the slice");
  return {p.x0, y};
}

Quaternion qml_kernel(MLOrder q, const Quaternion& p, double x, int trunc, double tol) {
  if (trunc < 0 || trunc > kMaxHermiteDegree)
    throw std::domain_error("qml_kernel: truncation must be in [0, 200]");
  const double tail = ml_kernel_tail_bound(q, p.abs(), trunc);
  if (!(tail <= tol))
    throw ConvergenceError("qml_kernel: tail bound exceeds tolerance at this |p|; raise trunc");

  const std::vector<double> psi = hermite_functions_upto(trunc, x);
  const Quaternion pc = p.conj();
  Quaternion basis = Quaternion::real(1.0);
  Quaternion sum = psi[0] * basis;
  for (int n = 1; n <= trunc; ++n) {
    basis = basis * pc * (1.0 / std::sqrt(gamma_ratio(q, n)));
    sum = sum + psi[n] * basis;
  }
  return sum;
}

Quaternion qml_reproducing_kernel(MLOrder q, const Quaternion& p, const Quaternion& s,
                                  double tol, int max_terms) {
  if (!(tol > 0.0))
    throw std::domain_error("qml_reproducing_kernel: tol must be > 0");
  const double prod = p.abs() * s.abs();
  const Quaternion sc = s.conj();

  Quaternion pw = Quaternion::real(1.0);   // p^n
  Quaternion sw = Quaternion::real(1.0);   // conj(s)^n
  Quaternion sum = Quaternion::real(1.0);  // n = 0 term
  double scale = 1.0;                      // 1/Gamma(qn+1)
  double term_mag = 1.0;                   // (|p||s|)^n / Gamma(qn+1)

  for (int n = 0; n < max_terms; ++n) {
    const double rho = prod / gamma_ratio(q, n + 1);
    if (prod == 0.0 || rho < 0.5) {
      const double tail = (prod == 0.0) ? 0.0 : term_mag * rho / (1.0 - rho);
      if (tail <= tol) return sum;
    }
    pw = pw * p;
    sw = sw * sc;
    scale /= gamma_ratio(q, n + 1);
    term_mag *= rho;
    sum = sum + (pw * sw) * scale;
  }
  throw ConvergenceError("qml_reproducing_kernel: term budget exhausted (|p||s| too large for q)");
}

Quaternion QMLFockElement::evaluate(const Quaternion& p) const {
  Quaternion pw = Quaternion::real(1.0);
  Quaternion sum{};
  double scale = 1.0;  // 1/sqrt(Gamma(qm+1)) built incrementally
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    if (m > 0) {
      pw = pw * p;
      scale /= std::sqrt(gamma_ratio(q, static_cast<int>(m)));
    }
    sum = sum + (pw * coeffs[m]) * scale;
  }
  return sum;
}

double QMLFockElement::norm() const {
  double s = 0.0;
  for (const auto& c : coeffs) s += c.norm_sq();
  return std::sqrt(s);
}

QMLFockElement qmlb_forward(const QHermiteExpansion& phi, MLOrder q) {
  return QMLFockElement{q, phi.coeffs};
}

double slice_norm(const QMLFockElement& f, const SliceUnit& I, const PlanarRule& rule) {
  if (f.q.value() != rule.q.value())
    throw std::invalid_argument("slice_norm: element and rule have different orders q");
  if (f.degree() > rule.radial_exactness)
    throw std::invalid_argument("slice_norm: element degree exceeds the radial exactness budget of the rule");

  double total = 0.0;
  for (std::size_t j = 0; j < rule.radial_nodes.size(); ++j) {
    double ring = 0.0;
    for (int k = 0; k < rule.angular_count; ++k) {
      const std::complex<double> z = rule.radial_abs[j] * rule.phases[k];
      ring += f.evaluate(embed_in_slice(z, I)).norm_sq();
    }
    total += rule.radial_weights[j] * ring;
  }
  return std::sqrt(total / rule.angular_count);
}

Quaternion qml_inner(const QMLFockElement& f, const QMLFockElement& g,
                     const SliceUnit& I, const PlanarRule& rule) {
  if (f.q.value() != rule.q.value() || g.q.value() != rule.q.value())
    throw std::invalid_argument("qml_inner: elements and rule have different orders q");
  Quaternion total{};
  for (std::size_t j = 0; j < rule.radial_nodes.size(); ++j) {
    Quaternion ring{};
    for (int k = 0; k < rule.angular_count; ++k) {
      const Quaternion p = embed_in_slice(rule.radial_abs[j] * rule.phases[k], I);
      ring = ring + g.evaluate(p).conj() * f.evaluate(p);
    }
    total = total + rule.radial_weights[j] * ring;
  }
  return total * (1.0 / rule.angular_count);
}

}  // namespace mlfock
