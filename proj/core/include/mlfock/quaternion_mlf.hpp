#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "mlfock/planar_quadrature.hpp"
#include "mlfock/special_functions.hpp"

namespace mlfock {

/// Quaternion x0 + x1 i + x2 j + x3 k with the Hamilton product.
struct Quaternion {
  double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double a, double b, double c, double d)
      : x0(a), x1(b), x2(c), x3(d) {}
  static constexpr Quaternion real(double a) { return {a, 0.0, 0.0, 0.0}; }

  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
  }
  friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
            a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
            a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
  }
  friend constexpr Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.x0, s * a.x1, s * a.x2, s * a.x3};
  }
  friend constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }
  friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.x0 == b.x0 && a.x1 == b.x1 && a.x2 == b.x2 && a.x3 == b.x3;
  }

  constexpr double norm_sq() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }
  double abs() const;
  constexpr Quaternion conj() const { return {x0, -x1, -x2, -x3}; }
};

/// Hamilton product (free-function spelling of operator*).
constexpr Quaternion q_mul(const Quaternion& p, const Quaternion& s) { return p * s; }

/// Imaginary unit: zero real part and |I| = 1 (validated to 1e-12).
class SliceUnit {
 public:
  explicit SliceUnit(const Quaternion& I);
  const Quaternion& unit() const noexcept { return unit_; }

 private:
  Quaternion unit_;
};

/// p = x + I y with y = |imaginary part| >= 0; the unit is absent for
/// real quaternions, which belong to every slice.
struct SliceDecomposition {
  double real = 0.0;
  double imag_norm = 0.0;
  std::optional<SliceUnit> unit;
};

SliceDecomposition slice_decompose(const Quaternion& p);

/// x + I y for z = x + i y: embeds a complex number into the slice C_I.
Quaternion embed_in_slice(std::complex<double> z, const SliceUnit& I);

/// Inverse of embed_in_slice for p in C_I (validated to 1e-9 |p|).
std::complex<double> project_to_slice(const Quaternion& p, const SliceUnit& I);

/// QML-Bargmann kernel partial sum
///   sum_{n<=trunc} conj(p)^n / sqrt(Gamma(qn+1)) psi_n(x),
/// tail-gated exactly like the complex kernel.
Quaternion qml_kernel(MLOrder q, const Quaternion& p, double x,
                      int trunc = 64, double tol = 1e-8);

/// Ordered noncommutative kernel sum_n p^n conj(s)^n / Gamma(qn+1)
/// (never E_q of the product: p and conj(s) do not commute). Stops on a
/// geometric tail bound below tol; throws ConvergenceError when the
/// term budget runs out first.
Quaternion qml_reproducing_kernel(MLOrder q, const Quaternion& p, const Quaternion& s,
                                  double tol = kDefaultSeriesTol,
                                  int max_terms = kDefaultMaxTerms);

/// Hermite expansion with quaternion coefficients (right multipliers).
struct QHermiteExpansion {
  std::vector<Quaternion> coeffs;
};

/// Element f(p) = sum_m e_{m,q}(p) c_m of the slice-hyperholomorphic
/// ML_q space; coefficients multiply on the right.
struct QMLFockElement {
  MLOrder q{1.0};
  std::vector<Quaternion> coeffs;

  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
  Quaternion evaluate(const Quaternion& p) const;
  double norm() const;  // sqrt(sum |c_m|^2)
};

/// Coefficient-space transform: c_m = alpha_m, mirroring the complex
/// case; exact and norm preserving.
QMLFockElement qmlb_forward(const QHermiteExpansion& phi, MLOrder q);

/// Norm of f by quadrature over the slice C_I. The value is independent
/// of the slice; here that is measured rather than assumed.
double slice_norm(const QMLFockElement& f, const SliceUnit& I, const PlanarRule& rule);

/// Quadrature inner product over the slice C_I with the convention
/// <f, g> = integral conj(g(p)) f(p) d mu_I(p).
Quaternion qml_inner(const QMLFockElement& f, const QMLFockElement& g,
                     const SliceUnit& I, const PlanarRule& rule);

}  // namespace mlfock
