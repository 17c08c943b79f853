// mlfock command-line driver: batch transforms, point evaluation, and
// the verification report. Exit codes: 0 success, 1 verification
// failure, 2 usage or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "mlfock/report.hpp"
#include "mlfock/serialization.hpp"

namespace {

using namespace mlfock;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
  RunConfig cfg;
  std::string in;
  std::string out;
  double grid_min = -8.0;
  double grid_max = 8.0;
  int grid_count = 321;
  std::string grid_file;
  bool check = false;
  double z_re = 0.0;
  double z_im = 0.0;
  int trials = 20;
  int nmax = 20;
  int degree = 15;
};

void add_config_flags(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--q", cfg.q, "ML order q > 0");
  cmd->add_option("--trunc", cfg.truncation, "kernel truncation degree");
  cmd->add_option("--radial", cfg.quad_radial, "radial quadrature order");
  cmd->add_option("--angular", cfg.quad_angular, "angular grid size");
  cmd->add_option("--hermite-order", cfg.hermite_order, "Gauss-Hermite order / projection degree");
  cmd->add_option("--tol", cfg.tolerance, "tolerance for series and --check");
  cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
}

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' || c == '[';
  }
  return false;
}

int require_integral_q(double q) {
  const double r = std::round(q);
  if (std::abs(q - r) > 1e-12 || r < 1.0)
    throw ParseError("this subcommand needs a positive integer --q");
  return static_cast<int>(r);
}

int cmd_transform(const Options& opt) {
  const std::string text = read_input(opt.in);
  MLOrder q(opt.cfg.q);

  HermiteExpansion phi;
  if (looks_like_json(text)) {
    phi = hermite_expansion_from_json(text);
  } else {
    std::istringstream ss(text);
    const SignalSamples samples = signal_from_csv(ss);
    phi = project_samples(samples.x, samples.values, opt.cfg.hermite_order);
  }
  if (phi.degree() > opt.cfg.truncation)
    throw ParseError("input degree " + std::to_string(phi.degree()) +
                     " exceeds the truncation budget --trunc=" +
                     std::to_string(opt.cfg.truncation));

  write_output(opt.out, to_json(mlb_forward_coeff(phi, q)));
  return kExitOk;
}

std::vector<double> load_grid(const Options& opt) {
  if (!opt.grid_file.empty()) {
    std::ifstream in(opt.grid_file);
    if (!in) throw ParseError("cannot open grid file: " + opt.grid_file);
    std::vector<double> xs;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      xs.push_back(std::stod(line));
    }
    if (xs.empty()) throw ParseError("grid file has no samples");
    return xs;
  }
  if (opt.grid_count < 2 || !(opt.grid_max > opt.grid_min))
    throw ParseError("invalid grid: need grid-max > grid-min and grid-count >= 2");
  std::vector<double> xs(opt.grid_count);
  const double h = (opt.grid_max - opt.grid_min) / (opt.grid_count - 1);
  for (int i = 0; i < opt.grid_count; ++i) xs[i] = opt.grid_min + h * i;
  return xs;
}

int cmd_inverse(const Options& opt) {
  const MLFockElement f = mlfock_element_from_json(read_input(opt.in));
  const std::vector<double> grid = load_grid(opt);

  if (f.degree() > opt.cfg.truncation)
    throw ParseError("element degree exceeds the truncation budget --trunc");
  PlanarRule rule = build_planar_rule(f.q, opt.cfg.quad_radial, opt.cfg.quad_angular);
  if (f.degree() > rule.radial_exactness)
    throw ParseError("element degree exceeds the radial exactness budget of the rule");

  const int trunc = std::max(f.degree(), 0);
  SignalSamples outsamples;
  outsamples.x = grid;
  outsamples.values.resize(grid.size());
  double max_discrepancy = 0.0;
  const HermiteExpansion direct{f.coeffs};  // T_q in coefficient space
  for (std::size_t i = 0; i < grid.size(); ++i) {
    outsamples.values[i] = mlb_inverse(f, grid[i], rule, trunc);
    if (opt.check)
      max_discrepancy = std::max(
          max_discrepancy, std::abs(outsamples.values[i] - direct.evaluate(grid[i])));
  }

  write_output(opt.out, to_csv(outsamples));
  if (opt.check) {
    std::cerr << "max_path_discrepancy=" << format_double(max_discrepancy) << "\n";
    if (max_discrepancy > opt.cfg.tolerance) return kExitVerificationFailure;
  }
  return kExitOk;
}

int cmd_ml_eval(const Options& opt) {
  const TruncatedValue v = mittag_leffler(
      MLOrder(opt.cfg.q), {opt.z_re, opt.z_im}, opt.cfg.tolerance);
  write_output(opt.out, to_json(v));
  return kExitOk;
}

int cmd_fourier_check(const Options& opt) {
  const SignReport report = resolve_sign(MLOrder(opt.cfg.q), opt.trials, opt.cfg.seed);
  write_output(opt.out, to_json(report));
  return kExitOk;
}

int cmd_commutator_table(const Options& opt) {
  write_output(opt.out, to_csv(commutator_table(MLOrder(opt.cfg.q), opt.nmax)));
  return kExitOk;
}

int cmd_conjecture(const Options& opt) {
  const int q = require_integral_q(opt.cfg.q);
  write_output(opt.out, to_json(verify_conjecture(q, opt.degree)));
  return kExitOk;
}

int cmd_quaternion_check(const Options& opt) {
  const BatteryResults results = run_quaternion_battery(opt.cfg);
  write_output(opt.out, render_quaternion_report(results));
  return results.all_passed ? kExitOk : kExitVerificationFailure;
}

int cmd_report(const Options& opt) {
  const BatteryResults results = run_battery(opt.cfg);
  write_output(opt.out, render_report(results, opt.cfg));
  return results.all_passed ? kExitOk : kExitVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mittag-Leffler Fock space toolkit"};
  app.require_subcommand(1);

  Options opt;
  if (const char* defaults = std::getenv("MLFOCK_DEFAULTS")) {
    try {
      opt.cfg = apply_config_json(opt.cfg, read_input(defaults));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  }

  auto* transform = app.add_subcommand(
      "transform", "Hermite coefficients (JSON) or samples (CSV) -> ML_q element");
  add_config_flags(transform, opt.cfg);
  transform->add_option("--in", opt.in, "input file")->required();
  transform->add_option("--out", opt.out, "output file (default stdout)");

  auto* inverse = app.add_subcommand(
      "inverse", "ML_q element -> signal values on a real grid (CSV)");
  add_config_flags(inverse, opt.cfg);
  inverse->add_option("--in", opt.in, "element JSON file")->required();
  inverse->add_option("--out", opt.out, "output file (default stdout)");
  inverse->add_option("--grid-min", opt.grid_min, "grid start");
  inverse->add_option("--grid-max", opt.grid_max, "grid end");
  inverse->add_option("--grid-count", opt.grid_count, "grid size");
  inverse->add_option("--grid-file", opt.grid_file, "file with one x per line");
  inverse->add_flag("--check", opt.check, "also run the coefficient path and compare");

  auto* ml_eval = app.add_subcommand("ml-eval", "evaluate E_q(z)");
  add_config_flags(ml_eval, opt.cfg);
  ml_eval->add_option("--z-re", opt.z_re, "Re z")->required();
  ml_eval->add_option("--z-im", opt.z_im, "Im z");
  ml_eval->add_option("--out", opt.out, "output file (default stdout)");

  auto* fourier = app.add_subcommand("fourier-check", "adjudicate the S_q sign");
  add_config_flags(fourier, opt.cfg);
  fourier->add_option("--trials", opt.trials, "random trials");
  fourier->add_option("--out", opt.out, "output file (default stdout)");

  auto* table = app.add_subcommand("commutator-table", "beta coefficients vs published forms (CSV)");
  add_config_flags(table, opt.cfg);
  table->add_option("--nmax", opt.nmax, "largest n");
  table->add_option("--out", opt.out, "output file (default stdout)");

  auto* conjecture = app.add_subcommand("conjecture", "exact differential-identity check");
  add_config_flags(conjecture, opt.cfg);
  conjecture->add_option("--degree", opt.degree, "monomial degree bound");
  conjecture->add_option("--out", opt.out, "output file (default stdout)");

  auto* quat = app.add_subcommand("quaternion-check", "slice-hyperholomorphic suite");
  add_config_flags(quat, opt.cfg);
  quat->add_option("--out", opt.out, "output file (default stdout)");

  auto* report = app.add_subcommand("report", "full verification battery (JSON)");
  add_config_flags(report, opt.cfg);
  report->add_option("--out", opt.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (transform->parsed()) return cmd_transform(opt);
    if (inverse->parsed()) return cmd_inverse(opt);
    if (ml_eval->parsed()) return cmd_ml_eval(opt);
    if (fourier->parsed()) return cmd_fourier_check(opt);
    if (table->parsed()) return cmd_commutator_table(opt);
    if (conjecture->parsed()) return cmd_conjecture(opt);
    if (quat->parsed()) return cmd_quaternion_check(opt);
    if (report->parsed()) return cmd_report(opt);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
