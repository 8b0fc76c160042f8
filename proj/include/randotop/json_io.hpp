#pragma once

// JSON embeddings of the value types. An IntervalSet is a list of
// ["lo","hi"] string pairs; rationals are reduced-fraction strings.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "randotop/complex.hpp"
#include "randotop/cylinders.hpp"
#include "randotop/errors.hpp"
#include "randotop/interval_set.hpp"
#include "randotop/random_simplex.hpp"
#include "randotop/rational.hpp"
#include "randotop/simplicial_sets.hpp"

namespace randotop {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "randotop/1";

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const IntervalSet& a) {
  Json out = Json::array();
  for (const auto& iv : a.intervals()) out.push_back(Json::array({to_string(iv.lo), to_string(iv.hi)}));
  return out;
}

inline IntervalSet interval_set_from_json(const Json& j) {
  if (!j.is_array()) throw domain_error("interval set must be a JSON array");
  std::vector<Interval> raw;
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw domain_error("interval must be a pair of rationals");
    raw.push_back({parse_rational(pair[0].get<std::string>()), parse_rational(pair[1].get<std::string>())});
  }
  return IntervalSet::normalize(std::move(raw));
}

inline Json to_json(const RandomSimplex& f) {
  Json out = Json::array();
  for (const auto& c : f.classes()) out.push_back(to_json(c));
  return out;
}

inline RandomSimplex random_simplex_from_json(const Json& j) {
  if (!j.is_array()) throw domain_error("random simplex must be a JSON array of interval sets");
  std::vector<IntervalSet> classes;
  for (const auto& c : j) classes.push_back(interval_set_from_json(c));
  return RandomSimplex(std::move(classes));
}

inline Json to_json(const ProbVector& alpha) {
  Json out = Json::array();
  for (const auto& x : alpha.entries()) out.push_back(to_json(x));
  return out;
}

// Keys "0-", "0+", … as in the textual form; empty classes are omitted.
inline Json to_json(const CylinderPoint& f) {
  Json out = Json::object();
  for (std::size_t j = 0; j <= f.dim(); ++j) {
    if (!f.minus(j).empty()) out[std::to_string(j) + "-"] = to_json(f.minus(j));
    if (!f.plus(j).empty()) out[std::to_string(j) + "+"] = to_json(f.plus(j));
  }
  return out;
}

inline Json to_json(const SimplicialComplex& k) {
  Json out = Json::array();
  for (const auto& f : k.maximal_faces()) out.push_back(f);
  return out;
}

// A list of maximal faces; the vertex set is {0,…,max vertex} unless given.
inline SimplicialComplex complex_from_json(const Json& j, std::size_t vertex_count = 0) {
  if (!j.is_array()) throw domain_error("complex must be a JSON list of faces");
  std::vector<Face> faces;
  for (const auto& f : j) {
    Face face = f.get<Face>();
    for (std::size_t v : face) vertex_count = std::max(vertex_count, v + 1);
    faces.push_back(std::move(face));
  }
  return SimplicialComplex(vertex_count, faces);
}

inline Json to_json(const CanonicalPoint& p) {
  return Json{{"simplex", p.simplex.vertices()}, {"point", to_string(p.coords)}};
}

}  // namespace randotop
