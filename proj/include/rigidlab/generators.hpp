#pragma once

// Constructors for the complex families used throughout: simplex and
// cross-polytope boundaries, connected sums, stacked (cross-polytopal)
// spheres, facet subdivisions and cones.

#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "rigidlab/coloring.hpp"
#include "rigidlab/complex.hpp"
#include "rigidlab/errors.hpp"
#include "rigidlab/random.hpp"

namespace rigidlab {

struct ColoredComplex {
  Complex complex;
  ColorMap coloring;
};

/// ∂(d-simplex) on labels 1..d+1: all d-subsets.
inline Complex simplex_boundary(int d) {
  if (d < 1) throw ParamError("simplex_boundary: d must be >= 1");
  Face all(static_cast<std::size_t>(d + 1));
  std::iota(all.begin(), all.end(), 1);
  std::vector<Face> facets;
  for_each_subset(all, static_cast<std::size_t>(d), [&](const Face& f) { facets.push_back(f); });
  return Complex::from_facets(facets);
}

/// Label of the cross-polytope vertex ±e_i: +e_i -> 2i-1, -e_i -> 2i.
inline Vertex cross_vertex(int i, bool positive) { return positive ? 2 * i - 1 : 2 * i; }

/// ∂C_d*: 2d vertices, 2^d facets, with the proper coloring κ(±e_i) = i.
inline ColoredComplex cross_polytope_boundary(int d) {
  if (d < 1) throw ParamError("cross_polytope_boundary: d must be >= 1");
  std::vector<Face> facets;
  for (std::uint32_t mask = 0; mask < (1U << d); ++mask) {
    Face f;
    for (int i = 1; i <= d; ++i) f.push_back(cross_vertex(i, !((mask >> (i - 1)) & 1U)));
    facets.push_back(make_face(std::move(f)));
  }
  ColorMap k{{}, d};
  for (int i = 1; i <= d; ++i) {
    k.color[cross_vertex(i, true)] = i;
    k.color[cross_vertex(i, false)] = i;
  }
  return {Complex::from_facets(facets), std::move(k)};
}

struct ConnectedSum {
  Complex complex;
  /// Where each vertex of the second operand ended up.
  std::map<Vertex, Vertex> second_to_result;
};

/// Δ1 #_γ Δ2 for facets F1 ∈ Δ1, F2 ∈ Δ2 and a bijection γ : F1 → F2.
///
/// Δ2 is relabeled internally: x ∈ F2 becomes γ^{-1}(x), every other vertex
/// receives a fresh label above max V(Δ1) in ascending order.  Both glued
/// facets are removed.
inline ConnectedSum connected_sum(const Complex& c1, const Complex& c2, const Face& f1,
                                  const Face& f2, const std::map<Vertex, Vertex>& gamma) {
  if (c1.dim() != c2.dim() || !is_pure(c1) || !is_pure(c2))
    throw ConstructionError("connected_sum: operands must be pure of equal dimension");
  if (!c1.is_facet(f1) || !c2.is_facet(f2))
    throw ConstructionError("connected_sum: glued faces must be facets");
  if (gamma.size() != f1.size()) throw ConstructionError("connected_sum: gamma must be a bijection F1 -> F2");
  std::map<Vertex, Vertex> inverse;
  bool identity = true;
  for (const auto& [x, y] : gamma) {
    if (!std::binary_search(f1.begin(), f1.end(), x) || !std::binary_search(f2.begin(), f2.end(), y) ||
        !inverse.emplace(y, x).second)
      throw ConstructionError("connected_sum: gamma must be a bijection F1 -> F2");
    identity = identity && x == y;
  }
  if (identity && f1 == f2 && c1 == c2)
    throw ConstructionError("connected_sum: refusing to glue a facet onto its own copy");

  std::map<Vertex, Vertex> to_result;
  Vertex next = c1.max_vertex() + 1;
  for (Vertex y : c2.vertices()) {
    auto it = inverse.find(y);
    to_result[y] = it != inverse.end() ? it->second : next++;
  }
  std::vector<Face> facets;
  for (const auto& f : c1.facets())
    if (f != f1) facets.push_back(f);
  for (const auto& f : c2.facets()) {
    if (f == f2) continue;
    Face g;
    for (Vertex y : f) g.push_back(to_result.at(y));
    facets.push_back(make_face(std::move(g)));
  }
  return {Complex::from_facets(facets), std::move(to_result)};
}

/// Shifts every label of `c` by `offset`.
inline Complex shift_labels(const Complex& c, Vertex offset) {
  std::map<Vertex, Vertex> m;
  for (Vertex v : c.vertices()) m[v] = v + offset;
  return relabel(c, m);
}

/// One stacking step: a fresh vertex `apex` glued over `facet`.
struct StackingStep {
  Face facet;
  Vertex apex = 0;
};

struct StackedSphere {
  Complex complex;
  /// In construction order, starting from ∂Δ^d on labels 1..d+1.
  std::vector<StackingStep> steps;
};

/// Stacked (d-1)-sphere on n vertices: ∂Δ^d followed by n-d-1 connected sums
/// with ∂Δ^d, each glued to a facet chosen by the seed.
inline StackedSphere stacked_sphere_with_history(int d, int n, std::uint64_t seed) {
  if (d < 1) throw ParamError("stacked_sphere: d must be >= 1");
  if (n < d + 1) throw ParamError("stacked_sphere: n must be >= d+1");
  Rng rng(seed);
  StackedSphere s{simplex_boundary(d), {}};
  const Complex piece = simplex_boundary(d);
  for (int k = d + 1; k < n; ++k) {
    const Complex fresh = shift_labels(piece, s.complex.max_vertex());
    const auto& fs = s.complex.facets();
    const Face f1 = fs[uniform_below(rng, fs.size())];
    const Face f2 = fresh.facets().front();
    std::map<Vertex, Vertex> gamma;
    for (std::size_t i = 0; i < f1.size(); ++i) gamma[f1[i]] = f2[i];
    auto sum = connected_sum(s.complex, fresh, f1, f2, gamma);
    const Face apex_face = face_difference(fresh.vertices(), f2);
    s.steps.push_back({f1, sum.second_to_result.at(apex_face.front())});
    s.complex = std::move(sum.complex);
  }
  return s;
}

inline Complex stacked_sphere(int d, int n, std::uint64_t seed) {
  return stacked_sphere_with_history(d, n, seed).complex;
}

/// Connected sum of n/d - 1 copies of ∂C_d*.  With `color_preserving` the
/// gluing bijections respect the canonical colorings, so the result carries a
/// proper d-coloring.  Otherwise γ is a seeded random bijection and the
/// returned map is merely inherited from the copies (possibly improper).
inline ColoredComplex stacked_cross_polytopal_sphere(int d, int n, std::uint64_t seed,
                                                     bool color_preserving = true) {
  if (d < 1) throw ParamError("stacked_cross_polytopal_sphere: d must be >= 1");
  if (n % d != 0 || n < 2 * d)
    throw ParamError("stacked_cross_polytopal_sphere: need d | n and n >= 2d");
  Rng rng(seed);
  const ColoredComplex piece = cross_polytope_boundary(d);
  ColoredComplex s = piece;
  for (int copies = 2; copies <= n / d - 1; ++copies) {
    const Vertex offset = s.complex.max_vertex();
    const Complex fresh = shift_labels(piece.complex, offset);
    const auto& fs = s.complex.facets();
    const Face f1 = fs[uniform_below(rng, fs.size())];
    const Face f2 = fresh.facets()[uniform_below(rng, fresh.facets().size())];
    std::map<Vertex, Vertex> gamma;
    if (color_preserving) {
      for (Vertex x : f1)
        for (Vertex y : f2)
          if (piece.coloring(y - offset) == s.coloring(x)) gamma[x] = y;
    } else {
      Face shuffled = f2;
      seeded_shuffle(shuffled, rng);
      for (std::size_t i = 0; i < f1.size(); ++i) gamma[f1[i]] = shuffled[i];
    }
    auto sum = connected_sum(s.complex, fresh, f1, f2, gamma);
    ColorMap k = s.coloring;
    for (const auto& [y, r] : sum.second_to_result)
      if (!k.has(r)) k.color[r] = piece.coloring(y - offset);
    s = {std::move(sum.complex), std::move(k)};
  }
  return s;
}

struct Subdivision {
  Complex complex;
  std::vector<Vertex> original;
  /// apices[i] subdivides the i-th facet of the input (canonical order).
  std::vector<Vertex> apices;
};

/// Replaces each facet F by the cone over ∂F with a fresh apex.
inline Subdivision subdivide_all_facets(const Complex& c) {
  if (c.is_empty() || !is_pure(c)) throw PurityError("subdivide_all_facets requires a pure complex");
  Subdivision s;
  s.original = c.vertices();
  std::vector<Face> facets;
  Vertex next = c.max_vertex() + 1;
  for (const auto& f : c.facets()) {
    const Vertex apex = next++;
    s.apices.push_back(apex);
    for (Vertex x : f) facets.push_back(face_plus(face_minus(f, x), apex));
  }
  s.complex = Complex::from_facets(facets);
  return s;
}

/// Cone with a fresh apex (label max+1, or 1 on a complex without vertices).
inline Complex cone_complex(const Complex& c) {
  const Vertex apex = c.vertices().empty() ? 1 : c.max_vertex() + 1;
  if (c.is_empty() || c.is_void()) return Complex::from_facets({{apex}});
  std::vector<Face> facets;
  for (const auto& f : c.facets()) facets.push_back(face_plus(f, apex));
  return Complex::from_facets(facets);
}

}  // namespace rigidlab
