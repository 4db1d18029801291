#pragma once

// JSON forms of highest weights and reports. Needs nlohmann/json (json.hpp) on
// the include path.

#include <string>
#include <vector>

#include "json.hpp"
#include "yosp/errors.hpp"
#include "yosp/hw/highest_weight.hpp"
#include "yosp/report.hpp"

namespace yosp::io {

using nlohmann::json;

/// Malformed document; `location` is a JSON pointer or a line/column position.
class DocumentError : public Error {
 public:
  DocumentError(std::string location, const std::string& what)
      : Error(location + ": " + what), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct WeightDocument {
  int m = 0, n = 0;
  std::string parity;
  std::vector<FactoredSeries> components;
  FactoredSeries last;

  HighestWeight to_highest_weight() const { return HighestWeight(AlgebraContext::make(m, n, parity), components, last); }
  static WeightDocument from_highest_weight(const HighestWeight& hw) {
    return {hw.context.m(), hw.context.n(), hw.context.sequence_string(), hw.components, hw.last};
  }
};

inline json coefficients_json(const Polynomial& p) {
  json out = json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_string(c));
  if (out.empty()) out.push_back("0");
  return out;
}

/// {"roots": [a_1, ...], "tail": {"num": [...], "den": [...]}} for prod (1 + a_i u^-1) * num(u)/den(u);
/// coefficient lists are ascending.
inline json series_json(const FactoredSeries& f) {
  json roots = json::array();
  for (const auto& a : f.roots().elements()) roots.push_back(to_string(a));
  return {{"roots", roots}, {"tail", {{"num", coefficients_json(f.tail().numer())}, {"den", coefficients_json(f.tail().denom())}}}};
}

inline json document_json(const WeightDocument& d) {
  json comps = json::array();
  for (const auto& c : d.components) comps.push_back(series_json(c));
  return {{"m", d.m}, {"n", d.n}, {"parity", d.parity}, {"components", comps}, {"last", series_json(d.last)}};
}

namespace detail {

inline const json& member(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) throw DocumentError(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw DocumentError(where + "/" + key, "missing");
  return *it;
}

inline Rational rational_at(const json& v, const std::string& where) {
  if (!v.is_string()) throw DocumentError(where, "rationals must be exact strings such as \"-3/2\"");
  try {
    return parse_rational(v.get<std::string>());
  } catch (const InvalidInput& e) {
    throw DocumentError(where, e.what());
  }
}

inline std::vector<Rational> rational_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw DocumentError(where, "expected an array");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(rational_at(v[i], where + "/" + std::to_string(i)));
  return out;
}

inline FactoredSeries series_at(const json& v, const std::string& where) {
  const auto roots = rational_list(member(v, "roots", where), where + "/roots");
  const json& tail = member(v, "tail", where);
  const Polynomial num(rational_list(member(tail, "num", where + "/tail"), where + "/tail/num"));
  const Polynomial den(rational_list(member(tail, "den", where + "/tail"), where + "/tail/den"));
  if (den.is_zero()) throw DocumentError(where + "/tail/den", "zero denominator");
  try {
    return FactoredSeries(RootMultiset::from_list(roots), RationalFunction(num, den));
  } catch (const InvalidInput& e) {
    throw DocumentError(where + "/tail", e.what());
  }
}

inline int int_at(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw DocumentError(where, "expected an integer");
  return v.get<int>();
}

}  // namespace detail

inline WeightDocument parse_document(const json& j) {
  WeightDocument d;
  d.m = detail::int_at(detail::member(j, "m", ""), "/m");
  d.n = detail::int_at(detail::member(j, "n", ""), "/n");
  const json& parity = detail::member(j, "parity", "");
  if (!parity.is_string()) throw DocumentError("/parity", "expected a string of 0 and 1");
  d.parity = parity.get<std::string>();
  try {
    AlgebraContext::make(d.m, d.n, d.parity);
  } catch (const InvalidInput& e) {
    throw DocumentError("/parity", e.what());
  }
  const json& comps = detail::member(j, "components", "");
  if (!comps.is_array()) throw DocumentError("/components", "expected an array");
  if (comps.size() != static_cast<std::size_t>(d.m + d.n))
    throw DocumentError("/components", "expected " + std::to_string(d.m + d.n) + " components, got " + std::to_string(comps.size()));
  for (std::size_t i = 0; i < comps.size(); ++i) d.components.push_back(detail::series_at(comps[i], "/components/" + std::to_string(i)));
  d.last = detail::series_at(detail::member(j, "last", ""), "/last");
  return d;
}

inline WeightDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw DocumentError("byte " + std::to_string(e.byte), e.what());
  }
  return parse_document(j);
}

inline json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json w = json::object();
    for (const auto& [k, v] : c.witnesses) w[k] = v;
    checks.push_back({{"name", c.name}, {"verdict", to_string(c.verdict)}, {"detail", c.detail}, {"witnesses", w}});
  }
  json info = json::object();
  for (const auto& [k, v] : r.info) info[k] = v;
  return {{"command", r.command}, {"verdict", to_string(r.verdict())}, {"checks", checks}, {"info", info},
          {"notes", r.notes},     {"seconds", r.seconds}};
}

inline std::string report_text(const Report& r) {
  std::string out = r.command + ": " + to_string(r.verdict()) + "\n";
  for (const auto& [k, v] : r.info) out += "  " + k + " = " + v + "\n";
  for (const auto& c : r.checks) {
    out += "  [" + std::string(to_string(c.verdict)) + "] " + c.name;
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
    for (const auto& [k, v] : c.witnesses) {
      out += "      " + k + " = [";
      for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i];
      out += "]\n";
    }
  }
  for (const auto& note : r.notes) out += "  note: " + note + "\n";
  return out;
}

}  // namespace yosp::io
