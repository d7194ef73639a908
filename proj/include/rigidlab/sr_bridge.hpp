#pragma once

// Point configurations read as linear forms θ_i = Σ_v p(v)_i x_v on the face
// ring: l.s.o.p. recognition, colored s.o.p. sampling, the degree-1 and
// degree-2 dimensions computed through stresses, and the ×ω injectivity test
// with ω = Σ_v x_v.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>

#include "rigidlab/coloring.hpp"
#include "rigidlab/complex.hpp"
#include "rigidlab/errors.hpp"
#include "rigidlab/linalg.hpp"
#include "rigidlab/random.hpp"
#include "rigidlab/rigidity.hpp"

namespace rigidlab {

struct LsopCandidate {
  int dim = 0;
  std::map<Vertex, Point> points;
  /// Seed of the sample the points came from, when sampled.
  std::optional<std::uint64_t> seed;

  static LsopCandidate from_framework(const Framework& fw) { return {fw.dim, fw.points, std::nullopt}; }

  Framework framework(const Graph& g) const {
    Framework fw{g, dim, {}};
    for (Vertex v : g.vertices) {
      auto it = points.find(v);
      if (it == points.end()) throw ParamError("LsopCandidate: vertex has no point");
      fw.points[v] = it->second;
    }
    fw.validate();
    return fw;
  }
};

struct LsopCheck {
  bool ok = false;
  std::optional<Face> violating;
};

namespace detail {

inline void require_candidate_dim(const Complex& c, const LsopCandidate& cand) {
  if (cand.dim != c.dim() + 1) throw ParamError("l.s.o.p. candidate dimension must be dim + 1 of the complex");
}

}  // namespace detail

/// Linear independence of {p(v) : v ∈ F} for every facet F (which covers
/// every face).  On failure reports the first offending facet.
inline LsopCheck is_lsop(const Complex& c, const LsopCandidate& cand) {
  detail::require_candidate_dim(c, cand);
  const auto d = static_cast<std::size_t>(cand.dim);
  for (const auto& f : c.facets()) {
    Matrix<Rational> m(f.size(), d);
    for (std::size_t r = 0; r < f.size(); ++r) {
      auto it = cand.points.find(f[r]);
      if (it == cand.points.end()) throw ParamError("is_lsop: vertex has no point");
      for (std::size_t k = 0; k < d; ++k) m(r, k) = it->second[k];
    }
    if (rank_exact(m) != f.size()) return {false, f};
  }
  return {true, std::nullopt};
}

inline constexpr int kColoredSopRetries = 16;

/// (κ, a)-sparse sample that is an l.s.o.p.; attempt k uses
/// derive_seed(seed, k), with at most 16 retries after the first attempt.
inline LsopCandidate colored_sop(const Complex& c, const ColorMap& k, std::span<const int> a, std::uint64_t seed) {
  if (!verify_a_coloring(c, k, a)) throw ParamError("colored_sop: not an a-coloring of the complex");
  const SupportMap l = from_coloring(k, a);
  const Graph g = graph_of(c);
  for (int attempt = 0; attempt <= kColoredSopRetries; ++attempt) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(attempt));
    LsopCandidate cand = LsopCandidate::from_framework(sample_sparse(g, l, s));
    cand.seed = s;
    if (is_lsop(c, cand).ok) return cand;
  }
  throw SamplingError("colored_sop: no l.s.o.p. after " + std::to_string(kColoredSopRetries) + " retries");
}

struct GradedDims {
  std::int64_t degree1 = 0;            ///< f0 - rank of the point matrix
  std::int64_t degree2 = 0;            ///< stresses of the cone with apex at 0
  std::int64_t degree2_mod_omega = 0;  ///< stresses of (G(Δ), p)
};

inline GradedDims graded_dims(const Complex& c, const LsopCandidate& cand) {
  detail::require_candidate_dim(c, cand);
  const Graph g = graph_of(c);
  const Framework fw = cand.framework(g);
  const auto d = static_cast<std::size_t>(cand.dim);
  GradedDims out;

  Matrix<Rational> pts(d, g.vertices.size());
  for (std::size_t x = 0; x < g.vertices.size(); ++x)
    for (std::size_t k = 0; k < d; ++k) pts(k, x) = fw(g.vertices[x])[k];
  out.degree1 = static_cast<std::int64_t>(g.vertices.size()) - static_cast<std::int64_t>(rank_exact(pts));

  out.degree2_mod_omega = static_cast<std::int64_t>(is_infinitesimally_rigid(fw).stress_dim);

  const Vertex apex = c.max_vertex() + 1;
  Framework cone{cone_graph(g, apex), cand.dim, fw.points};
  cone.points[apex] = Point(d, Rational(0));
  out.degree2 = static_cast<std::int64_t>(is_infinitesimally_rigid(cone).stress_dim);
  return out;
}

struct OmegaReport {
  bool injective = false;
  RigidityReport rigidity;
  GradedDims dims;
  /// degree2 >= degree2_mod_omega and degree2 - degree2_mod_omega <= degree1.
  bool bookkeeping_ok = false;
  /// When injective: degree2 - degree2_mod_omega == degree1.
  bool exact_split_ok = false;
};

/// ×ω : (R[Δ]/Θ)_1 → (R[Δ]/Θ)_2 is injective iff (G(Δ), p) is
/// infinitesimally rigid; the graded dimensions are cross-checked.
inline OmegaReport omega_injective(const Complex& c, const LsopCandidate& cand) {
  if (!is_strongly_connected(c)) throw ParamError("omega_injective: complex must be strongly connected");
  if (!is_lsop(c, cand).ok) throw ParamError("omega_injective: candidate is not an l.s.o.p.");
  OmegaReport r;
  r.rigidity = is_infinitesimally_rigid(cand.framework(graph_of(c)));
  r.rigidity.seed = cand.seed;
  r.injective = r.rigidity.rigid;
  r.dims = graded_dims(c, cand);
  const auto gap = r.dims.degree2 - r.dims.degree2_mod_omega;
  r.bookkeeping_ok = gap >= 0 && gap <= r.dims.degree1;
  r.exact_split_ok = !r.injective || gap == r.dims.degree1;
  return r;
}

}  // namespace rigidlab
