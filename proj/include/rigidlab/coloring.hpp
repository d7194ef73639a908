#pragma once

// Proper d-colorings, a-colorings, rank-selected subcomplexes, transversal
// sets and the coordinate support maps derived from them.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <span>
#include <vector>

#include "rigidlab/complex.hpp"
#include "rigidlab/errors.hpp"
#include "rigidlab/random.hpp"

namespace rigidlab {

/// κ : V → [m].  Colors are 1-based.
struct ColorMap {
  std::map<Vertex, int> color;
  int palette = 0;

  int operator()(Vertex v) const {
    auto it = color.find(v);
    if (it == color.end()) throw ParamError("ColorMap: vertex has no color");
    return it->second;
  }
  bool has(Vertex v) const { return color.count(v) != 0; }
  bool operator==(const ColorMap&) const = default;
};

/// L : V → 2^[d].  Coordinate indices are 0-based (coordinate j of a point
/// is `p[j]`).
struct SupportMap {
  int dim = 0;
  std::map<Vertex, std::vector<int>> allowed;

  const std::vector<int>& operator()(Vertex v) const {
    auto it = allowed.find(v);
    if (it == allowed.end()) throw SupportError("SupportMap: vertex has no support set");
    return it->second;
  }
  bool operator==(const SupportMap&) const = default;
};

/// The all-free support map on `vertices` in R^d.
inline SupportMap free_support(const std::vector<Vertex>& vertices, int d) {
  SupportMap l{d, {}};
  std::vector<int> all(static_cast<std::size_t>(d));
  std::iota(all.begin(), all.end(), 0);
  for (Vertex v : vertices) l.allowed[v] = all;
  return l;
}

enum class ColoringStatus { found, not_colorable, node_limit };

struct ColoringResult {
  ColoringStatus status = ColoringStatus::not_colorable;
  std::optional<ColorMap> coloring;
  std::uint64_t nodes = 0;

  bool ok() const { return status == ColoringStatus::found; }
};

namespace detail {

inline bool facets_rainbow(const Complex& c, const ColorMap& k) {
  for (const auto& f : c.facets()) {
    std::set<int> seen;
    for (Vertex v : f)
      if (!seen.insert(k(v)).second) return false;
  }
  return true;
}

/// Colors forced along ridge adjacency from one starting facet.  Returns
/// false on a conflict.
inline bool propagate_colors(const Complex& c, std::size_t start, const std::vector<int>& perm,
                             std::map<Vertex, int>& color) {
  const auto& fs = c.facets();
  const auto ridges = ridge_map(c);
  for (std::size_t i = 0; i < fs[start].size(); ++i) color[fs[start][i]] = perm[i];
  std::vector<bool> seen(fs.size(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  while (!queue.empty()) {
    const std::size_t fi = queue.front();
    queue.pop_front();
    const Face& f = fs[fi];
    for (Vertex out : f) {
      const Face r = face_minus(f, out);
      auto it = ridges.find(r);
      if (it == ridges.end()) continue;
      for (std::size_t gi : it->second) {
        if (gi == fi) continue;
        const Vertex in = face_difference(fs[gi], r).front();
        auto [pos, inserted] = color.emplace(in, color.at(out));
        if (!inserted && pos->second != color.at(out)) return false;
        if (!seen[gi]) {
          seen[gi] = true;
          queue.push_back(gi);
        }
      }
    }
  }
  return true;
}

struct Backtracker {
  const std::vector<Vertex>& order;
  const std::vector<std::vector<std::size_t>>& earlier_neighbors;
  int colors;
  std::uint64_t limit;
  std::uint64_t nodes = 0;
  std::vector<int> assign;

  // 1 = solved, 0 = exhausted, -1 = hit node limit
  int search(std::size_t i, int max_used) {
    if (i == order.size()) return 1;
    for (int col = 1; col <= std::min(colors, max_used + 1); ++col) {
      if (++nodes > limit) return -1;
      bool clash = false;
      for (std::size_t j : earlier_neighbors[i])
        if (assign[j] == col) {
          clash = true;
          break;
        }
      if (clash) continue;
      assign[i] = col;
      const int r = search(i + 1, std::max(max_used, col));
      if (r != 0) return r;
    }
    assign[i] = 0;
    return 0;
  }
};

}  // namespace detail

/// A proper d-coloring of G(Δ) for a pure (d-1)-complex, if one exists.
///
/// Strongly connected inputs are colored by forced propagation across
/// ridges (the coloring is unique up to permuting colors, so a conflict
/// proves non-colorability).  Other inputs fall back to backtracking capped at
/// `node_limit` search nodes.  The seed picks the starting facet and the
/// color permutation.
inline ColoringResult find_proper_coloring(const Complex& c, std::uint64_t seed = 0,
                                           std::uint64_t node_limit = 10'000'000) {
  if (c.is_empty() || !is_pure(c)) throw PurityError("find_proper_coloring requires a pure complex");
  const int d = c.dim() + 1;
  Rng rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(d));
  std::iota(perm.begin(), perm.end(), 1);
  seeded_shuffle(perm, rng);

  ColoringResult result;
  if (d == 0) {
    result.status = ColoringStatus::found;
    result.coloring = ColorMap{{}, 0};
    return result;
  }
  if (is_strongly_connected(c)) {
    const std::size_t start = uniform_below(rng, c.facets().size());
    std::map<Vertex, int> color;
    result.nodes = c.facets().size();
    if (!detail::propagate_colors(c, start, perm, color)) return result;
    ColorMap k{std::move(color), d};
    if (!detail::facets_rainbow(c, k)) return result;
    result.status = ColoringStatus::found;
    result.coloring = std::move(k);
    return result;
  }

  // BFS order over the 1-skeleton keeps early conflicts local.
  const auto& vs = c.vertices();
  std::map<Vertex, std::set<Vertex>> adj;
  for (const auto& [a, b] : c.edges()) {
    adj[a].insert(b);
    adj[b].insert(a);
  }
  std::vector<Vertex> order;
  std::set<Vertex> placed;
  for (Vertex root : vs) {
    if (placed.count(root)) continue;
    std::deque<Vertex> q{root};
    placed.insert(root);
    while (!q.empty()) {
      Vertex x = q.front();
      q.pop_front();
      order.push_back(x);
      for (Vertex y : adj[x])
        if (placed.insert(y).second) q.push_back(y);
    }
  }
  std::map<Vertex, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::vector<std::vector<std::size_t>> earlier(order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex y : adj[order[i]])
      if (pos[y] < i) earlier[i].push_back(pos[y]);

  detail::Backtracker bt{order, earlier, d, node_limit, 0, std::vector<int>(order.size(), 0)};
  const int r = bt.search(0, 0);
  result.nodes = bt.nodes;
  if (r == -1) {
    result.status = ColoringStatus::node_limit;
    return result;
  }
  if (r == 0) return result;
  ColorMap k{{}, d};
  for (std::size_t i = 0; i < order.size(); ++i)
    k.color[order[i]] = perm[static_cast<std::size_t>(bt.assign[i] - 1)];
  result.status = ColoringStatus::found;
  result.coloring = std::move(k);
  return result;
}

/// Relabels colors in order of first appearance along ascending vertices, so
/// two colorings differing by a permutation of colors compare equal.
inline ColorMap canonical_colors(const ColorMap& k) {
  std::map<int, int> rename;
  ColorMap out{{}, k.palette};
  for (const auto& [v, col] : k.color) {
    auto [it, inserted] = rename.emplace(col, static_cast<int>(rename.size()) + 1);
    out.color[v] = it->second;
  }
  return out;
}

inline int sum_of(std::span<const int> a) { return std::accumulate(a.begin(), a.end(), 0); }

/// For pure Δ: every facet meets color i in exactly a_i vertices.
inline bool verify_a_coloring(const Complex& c, const ColorMap& k, std::span<const int> a) {
  if (c.is_empty() || !is_pure(c)) throw PurityError("verify_a_coloring requires a pure complex");
  const int d = c.dim() + 1;
  if (sum_of(a) != d) throw ParamError("verify_a_coloring: sum of a must equal d");
  if (std::any_of(a.begin(), a.end(), [](int x) { return x <= 0; }))
    throw ParamError("verify_a_coloring: entries of a must be positive");
  const int m = static_cast<int>(a.size());
  for (Vertex v : c.vertices()) {
    if (!k.has(v)) return false;
    const int col = k(v);
    if (col < 1 || col > m) return false;
  }
  for (const auto& f : c.facets()) {
    std::vector<int> count(a.size(), 0);
    for (Vertex v : f) ++count[static_cast<std::size_t>(k(v) - 1)];
    for (std::size_t i = 0; i < a.size(); ++i)
      if (count[i] != a[i]) return false;
  }
  return true;
}

/// Merges consecutive blocks of a proper d-coloring: colors
/// a_1+...+a_{i-1}+1 .. a_1+...+a_i become color i.  A proper coloring turns
/// into an a-coloring.
inline ColorMap merge_colors(const ColorMap& proper, std::span<const int> a) {
  std::vector<int> block;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (int r = 0; r < a[i]; ++r) block.push_back(static_cast<int>(i) + 1);
  ColorMap out{{}, static_cast<int>(a.size())};
  for (const auto& [v, col] : proper.color) {
    if (col < 1 || col > static_cast<int>(block.size()))
      throw ParamError("merge_colors: color outside the merged palette");
    out.color[v] = block[static_cast<std::size_t>(col - 1)];
  }
  return out;
}

/// Δ_T = Δ[κ^{-1}(T)].
inline Complex rank_selected(const Complex& c, const ColorMap& k, const std::set<int>& colors) {
  std::vector<Vertex> keep;
  for (Vertex v : c.vertices())
    if (colors.count(k(v))) keep.push_back(v);
  return restrict_to(c, keep);
}

/// |U ∩ F| >= k for every facet F.
inline bool is_transversal(const Complex& c, const std::vector<Vertex>& u, int k) {
  if (c.is_empty() || !is_pure(c)) throw PurityError("is_transversal requires a pure complex");
  const Face us = make_face(u);
  for (const auto& f : c.facets())
    if (static_cast<int>(face_intersection(f, us).size()) < k) return false;
  return true;
}

/// Consecutive coordinate blocks I_1, ..., I_m with |I_i| = sizes[i],
/// starting at coordinate `offset`.
inline std::vector<std::vector<int>> coordinate_blocks(std::span<const int> sizes, int offset = 0) {
  std::vector<std::vector<int>> blocks;
  int next = offset;
  for (int s : sizes) {
    std::vector<int> b;
    for (int r = 0; r < s; ++r) b.push_back(next++);
    blocks.push_back(std::move(b));
  }
  return blocks;
}

/// L_{κ,a}(v) = I_{κ(v)} with consecutive blocks in color order.
inline SupportMap from_coloring(const ColorMap& k, std::span<const int> a) {
  if (std::any_of(a.begin(), a.end(), [](int x) { return x <= 0; }))
    throw ParamError("from_coloring: entries of a must be positive");
  const auto blocks = coordinate_blocks(a);
  SupportMap l{sum_of(a), {}};
  for (const auto& [v, col] : k.color) {
    if (col < 1 || col > static_cast<int>(a.size()))
      throw ParamError("from_coloring: color outside [m]");
    l.allowed[v] = blocks[static_cast<std::size_t>(col - 1)];
  }
  return l;
}

/// L*(v) = [d] on the transversal set X, I_{κ(v)} elsewhere.  The blocks
/// I_i (|I_i| = b_i) follow the first `a` coordinates, so with X = ∅ and
/// a = 0 this is exactly from_coloring.
inline SupportMap transversal_support_map(const Complex& c, const std::vector<Vertex>& x,
                                          const ColorMap& k, std::span<const int> b, int a) {
  const int d = c.dim() + 1;
  if (a < 0 || sum_of(b) + a != d) throw ParamError("transversal_support_map: a + sum(b) must equal d");
  if (!is_transversal(c, x, a)) throw ParamError("transversal_support_map: X is not (>=a)-transversal");
  const Face xs = make_face(x);
  for (Vertex v : c.vertices()) {
    if (std::binary_search(xs.begin(), xs.end(), v)) continue;
    if (!k.has(v)) throw ParamError("transversal_support_map: coloring must cover V \\ X");
    if (k(v) < 1 || k(v) > static_cast<int>(b.size()))
      throw ParamError("transversal_support_map: color outside [m]");
  }
  for (const auto& f : c.facets()) {
    std::vector<int> count(b.size(), 0);
    for (Vertex v : f)
      if (!std::binary_search(xs.begin(), xs.end(), v)) ++count[static_cast<std::size_t>(k(v) - 1)];
    for (std::size_t i = 0; i < b.size(); ++i)
      if (count[i] > b[i]) throw ParamError("transversal_support_map: facet exceeds b_i in a color");
  }
  const auto blocks = coordinate_blocks(b, a);
  SupportMap l = free_support(xs, d);
  for (Vertex v : c.vertices())
    if (!std::binary_search(xs.begin(), xs.end(), v))
      l.allowed[v] = blocks[static_cast<std::size_t>(k(v) - 1)];
  return l;
}

/// t_κ(U) = (|U ∩ κ^{-1}(i)|)_i.
inline std::vector<int> color_type(const ColorMap& k, const std::vector<Vertex>& u, int m) {
  std::vector<int> t(static_cast<std::size_t>(m), 0);
  for (Vertex v : u) ++t.at(static_cast<std::size_t>(k(v) - 1));
  return t;
}

}  // namespace rigidlab
