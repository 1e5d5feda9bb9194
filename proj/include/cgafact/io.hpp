#ifndef CGAFACT_IO_HPP
#define CGAFACT_IO_HPP

#include <json.hpp>

#include <charconv>
#include <cstdio>
#include <string>
#include <system_error>

#include "cgafact/algebra.hpp"
#include "cgafact/errors.hpp"
#include "cgafact/factorization.hpp"
#include "cgafact/geometry.hpp"
#include "cgafact/polynomial.hpp"

//------------------------------------------------------------------------------
// Serialization. Multivectors are JSON objects keyed by blade name ("s" for
// the scalar, "e12", "e3p", ... for blades); zero components are omitted.
// Polynomials are {"coeffs": [c0, c1, ...]} by ascending degree. All doubles
// are emitted in shortest round-trip form with negative zero normalized, so
// identical inputs produce byte-identical output.
//------------------------------------------------------------------------------

namespace cgafact {

using json = nlohmann::json;

inline double scrub_zero(double v) { return v == 0.0 ? 0.0 : v; }

inline std::string format_double(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof(buf), scrub_zero(v));
  return std::string(buf, r.ptr);
}

//------------------------------------------------------------------------------
// Multivectors
//------------------------------------------------------------------------------

inline json to_json(const Multivector& m) {
  json j = json::object();
  for (unsigned mask = 0; mask < kBladeCount; ++mask) {
    if (m.c[mask] == 0.0) continue;
    j[blade_name(mask)] = scrub_zero(m.c[mask]);
  }
  return j;
}

inline json to_json(const EvenMultivector& m) { return to_json(m.embed()); }

inline Multivector multivector_from_json(const json& j) {
  if (!j.is_object())
    throw FormatError("multivector must be a JSON object keyed by blade name");
  Multivector m;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const unsigned mask = parse_blade_name(it.key());
    if (!it.value().is_number())
      throw FormatError("component '" + it.key() + "' is not a number");
    m.c[mask] = it.value().get<double>();
  }
  return m;
}

inline EvenMultivector even_from_json(const json& j) {
  if (!j.is_object())
    throw FormatError("multivector must be a JSON object keyed by blade name");
  EvenMultivector m;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const unsigned mask = parse_blade_name(it.key());
    if (grade_of(mask) % 2 != 0)
      throw FormatError("blade '" + it.key() +
                        "' has odd grade; only even elements are accepted here");
    if (!it.value().is_number())
      throw FormatError("component '" + it.key() + "' is not a number");
    m.set_mask(mask, it.value().get<double>());
  }
  return m;
}

//------------------------------------------------------------------------------
// Polynomials
//------------------------------------------------------------------------------

inline json to_json(const MotionPolynomial& p) {
  json coeffs = json::array();
  for (const auto& c : p.c) coeffs.push_back(to_json(c));
  return json{{"coeffs", coeffs}};
}

inline MotionPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs"))
    throw FormatError("polynomial must be an object with a 'coeffs' array");
  const json& arr = j.at("coeffs");
  if (!arr.is_array())
    throw FormatError("'coeffs' must be an array of multivectors");
  MotionPolynomial p;
  for (const auto& c : arr) p.c.push_back(even_from_json(c));
  return p;
}

//------------------------------------------------------------------------------
// Factorization reports
//------------------------------------------------------------------------------

inline json to_json(const FamilySample& s) {
  return json{{"factors", json::array({to_json(s.h1), to_json(s.h2)})},
              {"residual", scrub_zero(s.residual)}};
}

inline json to_json(const FamilyDescriptor& f) {
  json tangents = json::array();
  for (const auto& t : f.tangents) tangents.push_back(to_json(t));
  json samples = json::array();
  for (const auto& s : f.samples) samples.push_back(to_json(s));
  return json{
      {"dimension", f.dimension},
      {"base",
       json{{"factors", json::array({to_json(f.base_h1), to_json(f.base_h2)})},
            {"residual", scrub_zero(f.base_residual)}}},
      {"tangents", tangents},
      {"samples", samples}};
}

inline json report_to_json(const FactorizationReport& rep) {
  json j;
  j["verdict"] = verdict_name(rep.verdict);
  j["count"] = rep.factorizations.size();
  j["leading"] = to_json(rep.leading);
  json q = json::array();
  for (double c : rep.quadrance.c) q.push_back(scrub_zero(c));
  j["quadrance"] = json{{"coeffs", q}};
  json fs = json::array();
  for (const auto& f : rep.factorizations)
    fs.push_back(json{{"factors", json::array({to_json(f.h1), to_json(f.h2)})},
                      {"irregular", f.irregular},
                      {"residual", scrub_zero(f.residual)}});
  j["factorizations"] = fs;
  if (rep.family) j["family"] = to_json(*rep.family);
  return j;
}

//------------------------------------------------------------------------------
// Trajectories
//------------------------------------------------------------------------------

inline std::string trajectory_csv(const TrajectoryResult& tr) {
  std::string out = "t,x,y,z\n";
  for (const auto& s : tr.samples) {
    out += format_double(s.t);
    out += ',';
    out += format_double(s.point.x);
    out += ',';
    out += format_double(s.point.y);
    out += ',';
    out += format_double(s.point.z);
    out += '\n';
  }
  return out;
}

}  // namespace cgafact

#endif
