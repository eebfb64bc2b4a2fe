#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "sl3cv/exact_complex.hpp"
#include "sl3cv/matrix3.hpp"
#include "sl3cv/rewrite.hpp"
#include "sl3cv/variety.hpp"

namespace sl3cv {

using nlohmann::json;

// ------------------------------------------------------------------
// Exact values serialize as strings ("2/3", "1+1/2i", "-i"); approximate
// values as a number when real, else [re, im].
// ------------------------------------------------------------------
inline ExactComplex exact_from_json(const json& j) {
  if (j.is_string()) return parse_exact_complex(j.get<std::string>());
  if (j.is_number_integer()) return ExactComplex(j.get<long>());
  throw std::invalid_argument("expected a rational string or integer, got " + j.dump());
}

inline json approx_to_json(const std::complex<double>& z) {
  if (z.imag() == 0.0) return z.real();
  return json::array({z.real(), z.imag()});
}

inline std::complex<double> approx_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  if (j.is_string()) return parse_exact_complex(j.get<std::string>()).to_complex();
  throw std::invalid_argument("expected a number, [re, im] pair, or rational string, got " +
                              j.dump());
}

// ------------------------------------------------------------------
// Matrices and pairs.
// ------------------------------------------------------------------
inline json matrix_to_json(const ExactMat3& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(to_string(m.at(r, c)));
    rows.push_back(row);
  }
  return rows;
}

inline ExactMat3 matrix_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3)
    throw std::invalid_argument("matrix JSON must be an array of three rows");
  ExactMat3 m;
  for (int r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3)
      throw std::invalid_argument("matrix row must hold three entries");
    for (int c = 0; c < 3; ++c) m.at(r, c) = exact_from_json(j[r][c]);
  }
  return m;
}

inline json pair_to_json(const SL3Pair& p) {
  return json{{"A", matrix_to_json(p.A)}, {"B", matrix_to_json(p.B)}};
}

// throws NonUnimodularError when a determinant is not 1
inline SL3Pair pair_from_json(const json& j) {
  if (!j.is_object() || !j.contains("A") || !j.contains("B"))
    throw std::invalid_argument("pair JSON must be an object with \"A\" and \"B\"");
  return SL3Pair(matrix_from_json(j["A"]), matrix_from_json(j["B"]));
}

// ------------------------------------------------------------------
// Points: the nine keys t1, tm1, ..., t4, tm4, t5.
// ------------------------------------------------------------------
inline std::string coord_key(int tag) {
  return (tag < 0 ? "tm" : "t") + std::to_string(tag < 0 ? -tag : tag);
}

inline json point_to_json(const CharPoint& pt) {
  json j = json::object();
  for (int i = 0; i < 9; ++i) j[coord_key(kVarTags[i])] = to_string(pt.t[i]);
  return j;
}

inline json point_to_json(const ApproxCharPoint& pt) {
  json j = json::object();
  for (int i = 0; i < 9; ++i) j[coord_key(kVarTags[i])] = approx_to_json(pt.t[i]);
  return j;
}

inline CharPoint point_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("point JSON must be an object");
  CharPoint pt;
  for (int i = 0; i < 9; ++i) {
    std::string key = coord_key(kVarTags[i]);
    if (!j.contains(key)) throw std::invalid_argument("point JSON missing key \"" + key + "\"");
    pt.t[i] = exact_from_json(j[key]);
  }
  return pt;
}

inline ApproxCharPoint approx_point_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("point JSON must be an object");
  ApproxCharPoint pt;
  for (int i = 0; i < 9; ++i) {
    std::string key = coord_key(kVarTags[i]);
    if (!j.contains(key)) throw std::invalid_argument("point JSON missing key \"" + key + "\"");
    pt.t[i] = approx_from_json(j[key]);
  }
  return pt;
}

// ------------------------------------------------------------------
// Rewrite traces, one JSON object per step.
// ------------------------------------------------------------------
inline json step_to_json(const RewriteStep& s) {
  json after = json::array();
  for (const auto& pr : s.after) {
    json factors = json::array();
    for (const Word& f : pr.factors) factors.push_back(f.str());
    after.push_back(json{{"coeff", detail::rational_to_string(pr.coeff)},
                         {"factors", factors},
                         {"poly", pr.poly.str()}});
  }
  return json{{"rule", s.rule}, {"before", s.before.str()}, {"after", after}};
}

inline json trace_to_json(const RewriteTrace& t) {
  json arr = json::array();
  for (const auto& s : t.steps) arr.push_back(step_to_json(s));
  return arr;
}

}  // namespace sl3cv
