#pragma once

#include <complex>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mlfock/caputo_commutator.hpp"
#include "mlfock/fourier_bridge.hpp"
#include "mlfock/hermite_basis.hpp"
#include "mlfock/mlb_transform.hpp"
#include "mlfock/planar_quadrature.hpp"
#include "mlfock/quaternion_mlf.hpp"

namespace mlfock {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fixed formatting for every emitted floating-point value: 17
/// significant digits, lowercase scientific. Emission is byte-stable.
std::string format_double(double v);

/// Minimal ordered JSON document builder. Objects keep insertion order
/// and doubles go through format_double, so equal inputs always dump to
/// identical bytes.
class JsonValue {
 public:
  static JsonValue object();
  static JsonValue array();
  static JsonValue number(double v);
  static JsonValue integer(long long v);
  static JsonValue boolean(bool v);
  static JsonValue string(std::string v);
  static JsonValue null();

  JsonValue& add(std::string key, JsonValue v);  // object member
  JsonValue& push(JsonValue v);                  // array element

  std::string dump(int indent = 2) const;

 private:
  enum class Kind { Null, Bool, Int, Double, String, Array, Object };
  Kind kind_ = Kind::Null;
  bool bool_ = false;
  long long int_ = 0;
  double double_ = 0.0;
  std::string string_;
  std::vector<JsonValue> items_;
  std::vector<std::pair<std::string, JsonValue>> members_;

  void write(std::string& out, int indent, int depth) const;
};

// --- interchange formats -------------------------------------------------

std::string to_json(const MLFockElement& f);
MLFockElement mlfock_element_from_json(std::string_view text);

std::string to_json(const HermiteExpansion& f);
HermiteExpansion hermite_expansion_from_json(std::string_view text);

std::string to_json(const QMLFockElement& f);
QMLFockElement qml_element_from_json(std::string_view text);

std::string to_json(const TruncatedValue& v);
std::string to_json(const SignReport& r);
std::string to_json(const ConjectureReport& r);
std::string to_json(const std::vector<WeightDiagnosticRow>& rows);

/// CSV with header q,n,beta_gamma,beta_published_form,match_flag; the
/// published-form cells are empty where no closed form exists.
std::string to_csv(const std::vector<BetaTableRow>& rows);

/// Sampled signal on the real line, CSV columns x,re,im.
struct SignalSamples {
  std::vector<double> x;
  std::vector<std::complex<double>> values;
};

SignalSamples signal_from_csv(std::istream& in);
std::string to_csv(const SignalSamples& s);

}  // namespace mlfock
