#ifndef K3AUTO_JSON_IO_HPP
#define K3AUTO_JSON_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3auto/families.hpp"

namespace k3auto {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Input

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("coefficient must be a string like \"3/4\" or an integer");
}

/// [["c", e], ...] with c a rational string.
inline RationalPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of [coefficient, exponent] pairs");
  std::vector<std::pair<Rational, unsigned>> pairs;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_number_integer() || term[1].get<long long>() < 0) {
      throw ParseError("polynomial term must be [coefficient, non-negative exponent]");
    }
    pairs.emplace_back(rational_from_json(term[0]), static_cast<unsigned>(term[1].get<long long>()));
  }
  return RationalPolynomial::from_pairs(pairs);
}

inline Json polynomial_to_json(const RationalPolynomial& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) out.push_back({it->second.to_string(), it->first});
  return out;
}

struct FibrationInput {
  WeierstrassFibration fibration;
  std::optional<TwoTorsionFibration> two_torsion;
};

/// {"a": [...], "b": [...], "form": "short" | "two-torsion"}. Degree and
/// discriminant violations surface as InvalidDatum.
inline FibrationInput fibration_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("a") || !j.contains("b")) throw ParseError("fibration needs keys \"a\" and \"b\"");
  const std::string form = j.value("form", std::string("short"));
  auto a = polynomial_from_json(j.at("a"));
  auto b = polynomial_from_json(j.at("b"));
  if (form == "short") return {WeierstrassFibration::make(std::move(a), std::move(b)), std::nullopt};
  if (form == "two-torsion") {
    auto tt = TwoTorsionFibration::make(std::move(a), std::move(b));
    return {tt.short_form(), tt};
  }
  throw ParseError("form must be \"short\" or \"two-torsion\"");
}

inline DiagonalAutomorphism automorphism_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("automorphism must be an object");
  for (const char* key : {"ex", "ey", "et"}) {
    if (!j.contains(key) || !j.at(key).is_number_integer()) throw ParseError(std::string("missing integer \"") + key + "\"");
  }
  DiagonalAutomorphism g;
  g.ex = mod8(j.at("ex").get<long long>());
  g.ey = mod8(j.at("ey").get<long long>());
  g.et = mod8(j.at("et").get<long long>());
  if (j.contains("translate")) {
    if (!j.at("translate").is_boolean()) throw ParseError("\"translate\" must be a boolean");
    g.compose_translation = j.at("translate").get<bool>();
  }
  return g;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

// ---------------------------------------------------------------------------
// Output

inline Json row_to_json(const ClassificationRow& r) {
  return Json{{"index", r.index},       {"r", r.r},
              {"l", r.l},               {"m", r.m},
              {"k_sigma2", r.k_sigma2}, {"num_C", r.num_C},
              {"rk_pic", r.rk_pic},     {"k_sigma4", r.k_sigma4},
              {"N", r.N},               {"n2", r.n2},
              {"n3", r.n3},             {"n4", r.n4},
              {"k", r.k},               {"action", Json::array({r.action.first, r.action.second})}};
}

inline ClassificationRow row_from_json(const Json& j) {
  try {
    ClassificationRow r;
    r.index = j.at("index").get<int>();
    r.r = j.at("r").get<int>();
    r.l = j.at("l").get<int>();
    r.m = j.at("m").get<int>();
    r.k_sigma2 = j.at("k_sigma2").get<int>();
    r.num_C = j.at("num_C").get<int>();
    r.rk_pic = j.at("rk_pic").get<int>();
    r.k_sigma4 = j.at("k_sigma4").get<int>();
    r.N = j.at("N").get<int>();
    r.n2 = j.at("n2").get<int>();
    r.n3 = j.at("n3").get<int>();
    r.n4 = j.at("n4").get<int>();
    r.k = j.at("k").get<int>();
    r.action = {j.at("action").at(0).get<std::string>(), j.at("action").at(1).get<std::string>()};
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad classification row: ") + e.what());
  }
}

inline Json place_to_json(const Place& p) {
  Json j{{"kind", p.kind_name()}, {"label", p.to_string()}, {"degree", p.degree()}};
  return j;
}

inline Json fiber_report_to_json(const FiberReport& r) {
  return Json{{"place", place_to_json(r.place)},
              {"v_a", r.v_a},
              {"v_b", r.v_b},
              {"v_delta", r.v_delta},
              {"kodaira", r.kodaira.name()}};
}

inline Json fixed_point_to_json(const FixedPointReport& p) {
  return Json{{"point", p.descriptor},
              {"count", p.count},
              {"exponents", Json::array({p.tangent, p.transverse})},
              {"type", p.type.to_string()}};
}

inline Json fiber_action_to_json(const InvariantFiberAction& a) {
  Json j{{"place", a.place.to_string()}, {"fiber", a.report.kodaira.name()}, {"action", a.label}};
  Json pts = Json::array();
  for (const auto& p : a.points) pts.push_back(fixed_point_to_json(p));
  j["fixed_points"] = pts;
  if (!a.note.empty()) j["note"] = a.note;
  return j;
}

inline Json checks_to_json(const std::vector<CheckItem>& items) {
  Json out = Json::array();
  for (const auto& c : items) out.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return out;
}

inline Json analysis_to_json(const AnalysisReport& r) {
  Json j;
  j["a"] = polynomial_to_json(r.fibration.a);
  j["b"] = polynomial_to_json(r.fibration.b);
  if (r.two_torsion) {
    j["two_torsion"] = {{"a", polynomial_to_json(r.two_torsion->a)}, {"b", polynomial_to_json(r.two_torsion->b)}};
  }
  j["automorphism"] = {{"ex", r.automorphism.ex},
                       {"ey", r.automorphism.ey},
                       {"et", r.automorphism.et},
                       {"translate", r.automorphism.compose_translation}};
  Json fibers = Json::array();
  for (const auto& f : r.fibers) fibers.push_back(fiber_report_to_json(f));
  j["fibers"] = fibers;
  Json inv = Json::object();
  for (const auto& [k, n] : r.inventory) inv[k] = n;
  j["inventory"] = inv;
  j["euler_sum"] = r.euler_sum;
  j["two_form_exponent"] = r.two_form_exponent;
  Json acts = Json::array();
  for (const auto& a : r.actions) acts.push_back(fiber_action_to_json(a));
  j["invariant_fibers"] = acts;
  j["fixed_locus"] = {{"n2", r.fixed.n2}, {"n3", r.fixed.n3}, {"n4", r.fixed.n4}, {"k", r.fixed.k()},
                      {"elliptic_curves", static_cast<int>(r.fixed.curves.size()) - r.fixed.k()}};
  j["matched_row"] = r.matched_row ? Json(*r.matched_row) : Json(nullptr);
  if (!r.match_note.empty()) j["match_note"] = r.match_note;
  j["invariants"] = checks_to_json(r.invariants);
  return j;
}

}  // namespace k3auto

#endif  // K3AUTO_JSON_IO_HPP
