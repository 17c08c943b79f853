#include "mlfock/serialization.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <sstream>

namespace mlfock {

namespace {

using nlohmann::json;

json parse_checked(std::string_view text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded())
    throw ParseError(std::string(what) + ": malformed JSON");
  return j;
}

std::vector<std::complex<double>> complex_pairs(const json& arr, const char* what) {
  if (!arr.is_array()) throw ParseError(std::string(what) + ": coeffs must be an array");
  std::vector<std::complex<double>> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number() || !item[1].is_number())
      throw ParseError(std::string(what) + ": coefficients must be [re, im] pairs");
    out.emplace_back(item[0].get<double>(), item[1].get<double>());
  }
  return out;
}

double require_q(const json& j, const char* what) {
  if (!j.contains("q") || !j["q"].is_number())
    throw ParseError(std::string(what) + ": missing numeric field \"q\"");
  return j["q"].get<double>();
}

void escape_to(std::string& out, const std::string& s) {
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

JsonValue JsonValue::object() {
  JsonValue v;
  v.kind_ = Kind::Object;
  return v;
}
JsonValue JsonValue::array() {
  JsonValue v;
  v.kind_ = Kind::Array;
  return v;
}
JsonValue JsonValue::number(double d) {
  JsonValue v;
  v.kind_ = Kind::Double;
  v.double_ = d;
  return v;
}
JsonValue JsonValue::integer(long long i) {
  JsonValue v;
  v.kind_ = Kind::Int;
  v.int_ = i;
  return v;
}
JsonValue JsonValue::boolean(bool b) {
  JsonValue v;
  v.kind_ = Kind::Bool;
  v.bool_ = b;
  return v;
}
JsonValue JsonValue::string(std::string s) {
  JsonValue v;
  v.kind_ = Kind::String;
  v.string_ = std::move(s);
  return v;
}
JsonValue JsonValue::null() { return JsonValue{}; }

JsonValue& JsonValue::add(std::string key, JsonValue v) {
  members_.emplace_back(std::move(key), std::move(v));
  return *this;
}
JsonValue& JsonValue::push(JsonValue v) {
  items_.push_back(std::move(v));
  return *this;
}

void JsonValue::write(std::string& out, int indent, int depth) const {
  const std::string pad(indent * depth, ' ');
  const std::string pad_in(indent * (depth + 1), ' ');
  const char* nl = indent > 0 ? "\n" : "";
  switch (kind_) {
    case Kind::Null: out += "null"; break;
    case Kind::Bool: out += bool_ ? "true" : "false"; break;
    case Kind::Int: out += std::to_string(int_); break;
    case Kind::Double: out += format_double(double_); break;
    case Kind::String: escape_to(out, string_); break;
    case Kind::Array: {
      if (items_.empty()) {
        out += "[]";
        break;
      }
      out += '[';
      out += nl;
      for (std::size_t i = 0; i < items_.size(); ++i) {
        out += pad_in;
        items_[i].write(out, indent, depth + 1);
        if (i + 1 < items_.size()) out += ',';
        out += nl;
      }
      out += pad;
      out += ']';
      break;
    }
    case Kind::Object: {
      if (members_.empty()) {
        out += "{}";
        break;
      }
      out += '{';
      out += nl;
      for (std::size_t i = 0; i < members_.size(); ++i) {
        out += pad_in;
        escape_to(out, members_[i].first);
        out += indent > 0 ? ": " : ":";
        members_[i].second.write(out, indent, depth + 1);
        if (i + 1 < members_.size()) out += ',';
        out += nl;
      }
      out += pad;
      out += '}';
      break;
    }
  }
}

std::string JsonValue::dump(int indent) const {
  std::string out;
  write(out, indent, 0);
  if (indent > 0) out += '\n';
  return out;
}

// --- elements -------------------------------------------------------------

namespace {

JsonValue coeff_array(const std::vector<std::complex<double>>& coeffs) {
  JsonValue arr = JsonValue::array();
  for (const auto& c : coeffs) {
    JsonValue pair = JsonValue::array();
    pair.push(JsonValue::number(c.real()));
    pair.push(JsonValue::number(c.imag()));
    arr.push(std::move(pair));
  }
  return arr;
}

}  // namespace

std::string to_json(const MLFockElement& f) {
  JsonValue doc = JsonValue::object();
  doc.add("q", JsonValue::number(f.q.value()));
  doc.add("coeffs", coeff_array(f.coeffs));
  return doc.dump();
}

MLFockElement mlfock_element_from_json(std::string_view text) {
  json j = parse_checked(text, "MLFockElement");
  MLFockElement f;
  try {
    f.q = MLOrder(require_q(j, "MLFockElement"));
  } catch (const std::domain_error& e) {
    throw ParseError(std::string("MLFockElement: ") + e.what());
  }
  if (j.contains("coeffs")) f.coeffs = complex_pairs(j["coeffs"], "MLFockElement");
  return f;
}

std::string to_json(const HermiteExpansion& f) {
  JsonValue doc = JsonValue::object();
  doc.add("coeffs", coeff_array(f.coeffs));
  return doc.dump();
}

HermiteExpansion hermite_expansion_from_json(std::string_view text) {
  json j = parse_checked(text, "HermiteExpansion");
  HermiteExpansion f;
  if (j.contains("coeffs")) f.coeffs = complex_pairs(j["coeffs"], "HermiteExpansion");
  return f;
}

std::string to_json(const QMLFockElement& f) {
  JsonValue doc = JsonValue::object();
  doc.add("q", JsonValue::number(f.q.value()));
  JsonValue arr = JsonValue::array();
  for (const auto& c : f.coeffs) {
    JsonValue quad = JsonValue::array();
    quad.push(JsonValue::number(c.x0));
    quad.push(JsonValue::number(c.x1));
    quad.push(JsonValue::number(c.x2));
    quad.push(JsonValue::number(c.x3));
    arr.push(std::move(quad));
  }
  doc.add("coeffs", std::move(arr));
  return doc.dump();
}

QMLFockElement qml_element_from_json(std::string_view text) {
  json j = parse_checked(text, "QMLFockElement");
  QMLFockElement f;
  try {
    f.q = MLOrder(require_q(j, "QMLFockElement"));
  } catch (const std::domain_error& e) {
    throw ParseError(std::string("QMLFockElement: ") + e.what());
  }
  if (j.contains("coeffs")) {
    if (!j["coeffs"].is_array()) throw ParseError("QMLFockElement: coeffs must be an array");
    for (const auto& item : j["coeffs"]) {
      if (!item.is_array() || item.size() != 4)
        throw ParseError("QMLFockElement: coefficients must be [x0, x1, x2, x3]");
      f.coeffs.push_back({item[0].get<double>(), item[1].get<double>(),
                          item[2].get<double>(), item[3].get<double>()});
    }
  }
  return f;
}

std::string to_json(const TruncatedValue& v) {
  JsonValue doc = JsonValue::object();
  JsonValue val = JsonValue::array();
  val.push(JsonValue::number(v.value.real()));
  val.push(JsonValue::number(v.value.imag()));
  doc.add("value", std::move(val));
  doc.add("terms_used", JsonValue::integer(v.terms_used));
  doc.add("error_bound", JsonValue::number(v.error_bound));
  return doc.dump();
}

std::string to_json(const SignReport& r) {
  JsonValue doc = JsonValue::object();
  doc.add("q", JsonValue::number(r.q));
  doc.add("best_sign", JsonValue::integer(r.best_sign));
  doc.add("max_residual_plus", JsonValue::number(r.max_residual_plus));
  doc.add("max_residual_minus", JsonValue::number(r.max_residual_minus));
  doc.add("degenerate", JsonValue::boolean(r.degenerate));
  doc.add("trials", JsonValue::integer(r.trials));
  return doc.dump();
}

std::string to_json(const ConjectureReport& r) {
  JsonValue doc = JsonValue::object();
  doc.add("q", JsonValue::integer(r.q));
  JsonValue c = JsonValue::array();
  for (double v : r.coefficients) c.push(JsonValue::number(v));
  doc.add("C", std::move(c));
  doc.add("verified_up_to", JsonValue::integer(r.verified_up_to));
  doc.add("falsified_at",
          r.falsified_at ? JsonValue::integer(*r.falsified_at) : JsonValue::null());
  return doc.dump();
}

std::string to_json(const std::vector<WeightDiagnosticRow>& rows) {
  JsonValue arr = JsonValue::array();
  for (const auto& row : rows) {
    JsonValue doc = JsonValue::object();
    doc.add("q", JsonValue::number(row.q));
    doc.add("n", JsonValue::integer(row.n));
    doc.add("norm_corrected", JsonValue::number(row.norm_corrected));
    doc.add("norm_literal", JsonValue::number(row.norm_literal));
    doc.add("gamma_target", JsonValue::number(row.gamma_target));
    arr.push(std::move(doc));
  }
  return arr.dump();
}

std::string to_csv(const std::vector<BetaTableRow>& rows) {
  std::string out = "q,n,beta_gamma,beta_published_form,match_flag\n";
  for (const auto& row : rows) {
    out += format_double(row.q);
    out += ',';
    out += std::to_string(row.n);
    out += ',';
    out += format_double(row.beta_gamma);
    out += ',';
    if (row.beta_published) out += format_double(*row.beta_published);
    out += ',';
    if (row.matches_published) out += *row.matches_published ? "1" : "0";
    out += '\n';
  }
  return out;
}

SignalSamples signal_from_csv(std::istream& in) {
  SignalSamples s;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (lineno == 1 && line.find_first_not_of("xreim, \t\r") == std::string::npos)
      continue;  // header
    std::istringstream ls(line);
    double x = 0.0, re = 0.0, im = 0.0;
    char c1 = 0, c2 = 0;
    if (!(ls >> x >> c1 >> re >> c2 >> im) || c1 != ',' || c2 != ',')
      throw ParseError("signal CSV: expected \"x,re,im\" on line " + std::to_string(lineno));
    s.x.push_back(x);
    s.values.emplace_back(re, im);
  }
  if (s.x.empty()) throw ParseError("signal CSV: no samples found");
  return s;
}

std::string to_csv(const SignalSamples& s) {
  std::string out = "x,re,im\n";
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    out += format_double(s.x[i]);
    out += ',';
    out += format_double(s.values[i].real());
    out += ',';
    out += format_double(s.values[i].imag());
    out += '\n';
  }
  return out;
}

}  // namespace mlfock
