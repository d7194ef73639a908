#pragma once

// JSON views of the library's value types.  Key order is fixed
// (nlohmann::ordered_json) so serialized reports are byte-stable.

#include <string>
#include <vector>

#include <json.hpp>

#include "rigidlab/coloring.hpp"
#include "rigidlab/complex.hpp"
#include "rigidlab/rigidity.hpp"
#include "rigidlab/sr_bridge.hpp"

namespace rigidlab {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Faces and integer lists (coordinate sets, color types) share a type.
inline Json to_json(const std::vector<int>& xs) {
  Json j = Json::array();
  for (int x : xs) j.push_back(x);
  return j;
}

inline Json to_json(const FVector& f) {
  Json j = Json::array();
  for (auto x : f.values) j.push_back(x);
  return j;
}

inline Json to_json(const HVector& h) {
  Json j = Json::array();
  for (auto x : h.values) j.push_back(x);
  return j;
}

inline Json to_json(const Point& p) {
  Json j = Json::array();
  for (const auto& x : p) j.push_back(to_string(x));
  return j;
}

inline Json to_json(const RigidityReport& r) {
  Json j;
  j["edges"] = r.edges;
  j["vertices"] = r.vertices;
  j["d"] = r.d;
  j["rank"] = r.rank;
  j["motion_dim"] = r.motion_dim;
  j["trivial_motion_dim"] = r.trivial_motion_dim;
  j["stress_dim"] = r.stress_dim;
  j["rigid"] = r.rigid;
  j["affine_span_dim"] = r.affine_span_dim;
  j["rank_criterion_applicable"] = r.rank_criterion_applicable;
  j["rank_criterion_rigid"] = r.rank_criterion_rigid;
  j["seed"] = r.seed ? Json(*r.seed) : Json(nullptr);
  j["sampling"] = r.sampling;
  j["rank_method"] = r.rank_method;
  return j;
}

inline Json to_json(const Framework& fw) {
  Json pts = Json::object();
  for (const auto& [v, p] : fw.points) pts[std::to_string(v)] = to_json(p);
  Json j;
  j["d"] = fw.dim;
  j["points"] = std::move(pts);
  return j;
}

inline Json to_json(const SparseRigidityVerdict& v) {
  Json j;
  j["rigid"] = v.rigid;
  j["trials"] = v.trials;
  j["max_rank"] = v.max_rank;
  j["witness_seed"] = v.witness_seed ? Json(*v.witness_seed) : Json(nullptr);
  j["note"] = v.note;
  j["report"] = to_json(v.best);
  return j;
}

inline Json to_json(const GradedDims& g) {
  Json j;
  j["dim1"] = g.degree1;
  j["dim2"] = g.degree2;
  j["dim2_with_omega"] = g.degree2_mod_omega;
  return j;
}

inline Json to_json(const OmegaReport& o) {
  Json j;
  j["injective"] = o.injective;
  j["graded_dims"] = to_json(o.dims);
  j["bookkeeping_ok"] = o.bookkeeping_ok;
  j["exact_split_ok"] = o.exact_split_ok;
  j["rigidity"] = to_json(o.rigidity);
  return j;
}

inline Json to_json(const ColorMap& k) {
  Json j = Json::object();
  for (const auto& [v, c] : k.color) j[std::to_string(v)] = c;
  return j;
}

inline Json to_json(const SupportMap& l) {
  Json j = Json::object();
  for (const auto& [v, s] : l.allowed) j[std::to_string(v)] = to_json(s);
  return j;
}

}  // namespace rigidlab
