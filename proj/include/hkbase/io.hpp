#pragma once

// JSON schemas for lattices, deformation types, contexts and reports.
//
// Integers are written as JSON numbers when they fit in 64 bits and as
// decimal strings otherwise; both forms are accepted on input. Rationals
// are strings "p/q" (plain integers also accepted). Every parse failure is
// reported as MalformedInput.

#include <nlohmann/json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "hkbase/base_divisor.hpp"
#include "hkbase/cones.hpp"
#include "hkbase/deformation.hpp"
#include "hkbase/errors.hpp"
#include "hkbase/lattice.hpp"

namespace hkbase::io {

using nlohmann::json;

inline json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(x));
  }
  return json(x.str());
}

inline Integer integer_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() > start && s.find_first_not_of("0123456789", start) == std::string::npos) {
      return Integer(s);
    }
  }
  throw MalformedInput(what + ": expected an integer, got " + j.dump());
}

inline Rational rational_from_json(const json& j, const std::string& what) {
  if (j.is_number_integer()) return Rational(integer_from_json(j, what));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(integer_from_json(j, what));
    const Integer num = integer_from_json(json(s.substr(0, slash)), what);
    const Integer den = integer_from_json(json(s.substr(slash + 1)), what);
    if (den == 0) throw MalformedInput(what + ": zero denominator in " + s);
    return Rational(num, den);
  }
  throw MalformedInput(what + ": expected a rational string, got " + j.dump());
}

inline json vector_to_json(const ClassVector& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(integer_to_json(c));
  return a;
}

inline ClassVector vector_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw MalformedInput(what + ": expected an integer array");
  std::vector<Integer> c;
  for (const auto& e : j) c.push_back(integer_from_json(e, what));
  return ClassVector(std::move(c));
}

inline std::vector<ClassVector> vectors_from_json(const json& j, const std::string& what) {
  if (!j.is_array()) throw MalformedInput(what + ": expected an array of integer arrays");
  std::vector<ClassVector> out;
  for (const auto& e : j) out.push_back(vector_from_json(e, what));
  return out;
}

inline json gram_to_json(const Lattice::Gram& g) {
  json rows = json::array();
  for (const auto& row : g) {
    json r = json::array();
    for (const auto& e : row) r.push_back(integer_to_json(e));
    rows.push_back(std::move(r));
  }
  return rows;
}

inline Lattice::Gram gram_from_json(const json& j) {
  if (!j.is_array()) throw MalformedInput("lattice.gram: expected an array of rows");
  Lattice::Gram g;
  for (const auto& row : j) {
    if (!row.is_array()) throw MalformedInput("lattice.gram: expected an array of rows");
    std::vector<Integer> r;
    for (const auto& e : row) r.push_back(integer_from_json(e, "lattice.gram"));
    g.push_back(std::move(r));
  }
  return g;
}

// {"gram": [[...],...], "even": bool}
inline json lattice_to_json(const Lattice& lat) {
  return json{{"gram", gram_to_json(lat.gram())}, {"even", lat.even()}};
}

inline Lattice lattice_from_json(const json& j) {
  if (!j.is_object() || !j.contains("gram")) throw MalformedInput("lattice: missing \"gram\"");
  const bool even = j.value("even", false);
  try {
    return Lattice(gram_from_json(j.at("gram")), even);
  } catch (const StructuralError& e) {
    throw MalformedInput(std::string("lattice: ") + e.what());
  }
}

// {"kind": "K3n"|"Kumn"|"Generic", "n": int, "coeffs": ["b0", ...]}
inline json deformation_to_json(const DeformationType& t) {
  json j{{"kind", kind_name(t.kind())}, {"n", t.n()}};
  if (t.kind() == DeformationKind::Generic) {
    json c = json::array();
    for (const auto& b : t.rr().coeffs()) c.push_back(to_string(b));
    j["coeffs"] = std::move(c);
    if (t.allows_odd()) j["allow_odd"] = true;
  }
  if (t.fujiki()) j["fujiki"] = to_string(*t.fujiki());
  return j;
}

// Domain violations (Kum^1, b_n <= 0) surface as DomainError, not MalformedInput.
inline DeformationType deformation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw MalformedInput("deformation: missing string \"kind\"");
  }
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "Generic") {
    if (!j.contains("coeffs") || !j.at("coeffs").is_array())
      throw MalformedInput("deformation: Generic needs \"coeffs\"");
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c, "deformation.coeffs"));
    if (j.contains("n")) {
      if (!j.at("n").is_number_integer()) throw MalformedInput("deformation.n: expected an integer");
      if (j.at("n").get<long>() + 1 != static_cast<long>(coeffs.size()))
        throw MalformedInput("deformation: n does not match the number of coefficients");
    }
    std::optional<Rational> fujiki;
    if (j.contains("fujiki")) fujiki = rational_from_json(j.at("fujiki"), "deformation.fujiki");
    return make_generic(std::move(coeffs), j.value("allow_odd", false), fujiki);
  }
  if (!j.contains("n") || !j.at("n").is_number_integer())
    throw MalformedInput("deformation: missing integer \"n\"");
  const int n = j.at("n").get<int>();
  if (kind == "K3n") return make_type(DeformationKind::K3n, n);
  if (kind == "Kumn") return make_type(DeformationKind::Kumn, n);
  throw MalformedInput("deformation: unknown kind \"" + kind + "\"");
}

// {"lattice": {...}, "ample": [...], "peds": [[...],...], "walls": [[...],...],
//  "deformation": {...}, "strong_rlf": bool, "note": "..."}
inline ContextData context_data_from_json(const json& j) {
  if (!j.is_object()) throw MalformedInput("context: expected a JSON object");
  for (const char* key : {"lattice", "ample", "deformation"})
    if (!j.contains(key)) throw MalformedInput(std::string("context: missing \"") + key + "\"");
  ContextData d;
  const json& lat = j.at("lattice");
  if (!lat.is_object() || !lat.contains("gram")) throw MalformedInput("lattice: missing \"gram\"");
  d.gram = gram_from_json(lat.at("gram"));
  if (lat.contains("even") && !lat.at("even").is_boolean())
    throw MalformedInput("lattice.even: expected a boolean");
  d.even = lat.value("even", false);
  d.ample = vector_from_json(j.at("ample"), "ample");
  if (j.contains("peds")) d.peds = vectors_from_json(j.at("peds"), "peds");
  if (j.contains("walls")) d.walls = vectors_from_json(j.at("walls"), "walls");
  d.dtype = deformation_from_json(j.at("deformation"));
  if (j.contains("strong_rlf") && !j.at("strong_rlf").is_boolean())
    throw MalformedInput("strong_rlf: expected a boolean");
  d.strong_rlf = j.value("strong_rlf", false);
  if (j.contains("note") && j.at("note").is_string()) d.note = j.at("note").get<std::string>();
  return d;
}

inline json context_to_json(const ContextData& d) {
  json peds = json::array();
  for (const auto& p : d.peds) peds.push_back(vector_to_json(p));
  json walls = json::array();
  for (const auto& w : d.walls) walls.push_back(vector_to_json(w));
  json j{{"lattice", {{"gram", gram_to_json(d.gram)}, {"even", d.even}}},
         {"ample", vector_to_json(d.ample)},
         {"peds", std::move(peds)},
         {"walls", std::move(walls)},
         {"deformation", deformation_to_json(d.dtype)},
         {"strong_rlf", d.strong_rlf}};
  if (!d.note.empty()) j["note"] = d.note;
  return j;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw MalformedInput(path + ": " + e.what());
  }
}

// {"result": [...], "steps": [{"ped": [...], "a": int}]}
inline json trace_to_json(const ReflectionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    steps.push_back({{"ped", vector_to_json(s.ped)}, {"a", integer_to_json(s.multiplicity)}});
  }
  return json{{"result", vector_to_json(t.result)}, {"steps", std::move(steps)}};
}

inline json decomposition_to_json(const Decomposition& d) {
  return json{{"m", integer_to_json(d.m)},
              {"L", vector_to_json(d.L)},
              {"F", vector_to_json(d.F)},
              {"d", integer_to_json(d.d)}};
}

// {"has_base_divisor", "decomposition" | null, "q_H", "rr_value", "certificates"}
inline json classification_to_json(const Classification& c) {
  return json{{"has_base_divisor", c.decomposition.has_value()},
              {"decomposition", c.decomposition ? decomposition_to_json(*c.decomposition) : json(nullptr)},
              {"q_H", integer_to_json(c.q_H)},
              {"rr_value", integer_to_json(c.rr_value)},
              {"certificates", {{"monotonic", c.monotonic}, {"strong_rlf", c.strong_rlf}}}};
}

inline json validation_to_json(const ValidationReport& r) {
  json items = json::array();
  for (const auto& i : r.items) {
    items.push_back(
        {{"check", i.check}, {"subject", i.subject}, {"passed", i.passed}, {"detail", i.detail}});
  }
  return json{{"valid", r.ok()}, {"items", std::move(items)}};
}

}  // namespace hkbase::io
