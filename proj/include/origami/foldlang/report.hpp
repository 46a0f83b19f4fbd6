#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "origami/construct.hpp"
#include "origami/foldlang/interpreter.hpp"

namespace origami::foldlang {

using origami::to_string;

using Json = nlohmann::ordered_json;

inline Json to_json(const AlgebraicReal& a, int digits = 6) {
  return Json{{"minpoly", to_string(a.min_poly())},
              {"interval", {to_string(a.interval().low), to_string(a.interval().high)}},
              {"approx", to_decimal(approximate(a, decimal_tolerance(digits)), digits)}};
}

inline Json to_json(const TowerCertificate& cert) {
  Json steps = Json::array();
  for (const auto& s : cert.steps) {
    Json j{{"kind", to_string(s.kind)}, {"degree", s.degree}};
    if (s.kind == StepKind::Sqrt || s.kind == StepKind::Cbrt) {
      j["radicand"] = s.data[0].to_string();
    } else {
      Json coeffs = Json::array();
      for (const auto& c : s.data) coeffs.push_back(c.to_string());
      j["coefficients"] = coeffs;
      j["interval"] = {to_string(s.interval->low), to_string(s.interval->high)};
    }
    steps.push_back(j);
  }
  return Json{{"steps", steps}, {"value", cert.value.to_string()}, {"total_degree", cert.total_degree()}};
}

inline Json to_json(const DegreeVerdict& v) {
  return Json{{"degree", v.degree}, {"factorization", {{"r", v.r}, {"s", v.s}, {"m", v.m}}}, {"verdict", to_string(v.verdict)}};
}

/// {"value", "degree", "factorization", "origami", "ruler_compass"} for a named number.
inline Json number_verdict_json(const std::string& label, const AlgebraicReal& a) {
  DegreeVerdict o = degree_test_origami(a), rc = degree_test_ruler_compass(a);
  return Json{{"value", label},
              {"degree", o.degree},
              {"factorization", {{"r", o.r}, {"s", o.s}, {"m", o.m}}},
              {"origami", to_string(o.verdict)},
              {"ruler_compass", to_string(rc.verdict)},
              {"number", to_json(a)}};
}

inline Json to_json(const PolygonVerdict& v) {
  Json j{{"n", v.n}, {"constructible", v.constructible}};
  if (v.constructible) {
    Json primes = Json::array();
    for (const auto& p : v.primes) primes.push_back({{"p", p.p}, {"a", p.a}, {"b", p.b}});
    j["witness"] = {{"r", v.r}, {"s", v.s}, {"primes", primes}};
  } else if (v.failing) {
    j["failing"] = {{"p", v.failing->p}, {"exponent", v.failing->e}};
  }
  return j;
}

/// Certificate of one coordinate, validated independently of how it was produced.
inline Json coordinate_json(const Traced& t) {
  Json j = to_json(t.value());
  DegreeVerdict v = degree_test_origami(t.value());
  j["origami"] = to_string(v.verdict);
  try {
    TowerCertificate cert = t.certificate();
    Json c = to_json(cert);
    c["valid"] = validate_certificate(cert, t.value());
    j["certificate"] = c;
  } catch (const Error& e) {
    j["certificate"] = Json{{"error", e.what()}};
  }
  return j;
}

inline Json to_json(const Environment& env) {
  Json bindings = Json::array();
  for (const auto& b : env.bindings()) {
    Json j{{"name", b.name}, {"kind", b.is_point ? "point" : "line"}, {"line", b.loc.line}};
    auto coords = b.coordinates();
    const char* const point_keys[] = {"x", "y"};
    const char* const line_keys[] = {"a", "b", "c"};
    for (std::size_t i = 0; i < coords.size(); ++i)
      j[b.is_point ? point_keys[i] : line_keys[i]] = coordinate_json(coords[i]);
    bindings.push_back(j);
  }
  Json assertions = Json::array();
  for (const auto& a : env.assertions())
    assertions.push_back({{"line", a.loc.line}, {"assertion", a.text}, {"passed", a.passed}, {"detail", a.detail}});
  return Json{{"bindings", bindings}, {"assertions", assertions}, {"passed", env.all_passed()}};
}

}  // namespace origami::foldlang
