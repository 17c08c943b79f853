#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mlfock/caputo_commutator.hpp"
#include "mlfock/fourier_bridge.hpp"
#include "mlfock/planar_quadrature.hpp"

namespace mlfock {

/// Shared CLI run configuration. Precedence: command-line flags over a
/// defaults file (MLFOCK_DEFAULTS) over these built-ins.
struct RunConfig {
  double q = 1.0;
  int truncation = 64;
  int quad_radial = 80;
  int quad_angular = 64;
  int hermite_order = 80;
  double tolerance = 1e-8;
  std::uint64_t seed = 20240817;
};

/// Overlays the fields present in a JSON defaults file onto base.
RunConfig apply_config_json(RunConfig base, std::string_view text);

/// Residuals of the full verification battery. Every number is produced
/// by a module operation; pass flags apply the pinned bounds.
struct BatteryResults {
  // Orthonormal basis norms under the corrected weight, and the
  // literal-weight witness that fails them.
  double onb_max_diag_residual = 0.0;
  double onb_max_cross_residual = 0.0;
  double weight_corrected_max_rel = 0.0;
  double literal_q2_n0_value = 0.0;
  std::vector<WeightDiagnosticRow> weight_rows;

  double basis_image_max_rel = 0.0;

  double isometry_coeff_max_abs = 0.0;
  double roundtrip_max_abs = 0.0;

  double kernel_identity_max_abs = 0.0;
  double kernel_norm_max_abs = 0.0;

  SignReport sign_q1;
  SignReport sign_q2;
  double fourier_lemma_max_abs = 0.0;
  double diagram_max_abs = 0.0;

  double beta_q1_max_rel = 0.0;
  double beta_q2_max_rel = 0.0;
  double beta_2_3 = 0.0;
  double beta_1_4 = 0.0;
  std::vector<double> c_q2, c_q3, c_q4;
  int q3_form_first_mismatch = 0;
  int q4_form_first_mismatch = 0;
  std::vector<BetaTableRow> beta_table;  // q = 1..4, n <= 20
  std::vector<ConjectureReport> conjectures;  // q = 1..8
  double eigenproperty_max_rel = 0.0;

  bool hamilton_table_exact = false;
  double quat_norm_mult_max_rel = 0.0;
  double slice_norm_max_rel = 0.0;
  double qkernel_restriction_max_abs = 0.0;
  double hermitian_symmetry_max_abs = 0.0;
  double slice_reproducing_max_abs = 0.0;

  bool pass_onb = false;
  bool pass_weight = false;
  bool pass_basis_images = false;
  bool pass_isometry = false;
  bool pass_kernel = false;
  bool pass_fourier = false;
  bool pass_commutator = false;
  bool pass_conjecture = false;
  bool pass_eigenproperty = false;
  bool pass_quaternion = false;
  bool all_passed = false;
};

BatteryResults run_battery(const RunConfig& cfg);

/// Just the quaternion section (for the quaternion-check subcommand).
BatteryResults run_quaternion_battery(const RunConfig& cfg);

/// Deterministic JSON rendering of the battery (same bytes for the same
/// config and seed).
std::string render_report(const BatteryResults& results, const RunConfig& cfg);

/// Deterministic JSON rendering of the quaternion section alone.
std::string render_quaternion_report(const BatteryResults& results);

}  // namespace mlfock
