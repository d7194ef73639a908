#pragma once

// Simplicial complexes stored by their facets over integer vertex labels.
// Faces are sorted label vectors; lower faces are enumerated on demand.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rigidlab/errors.hpp"

namespace rigidlab {

using Vertex = std::int32_t;
/// Sorted, duplicate-free list of vertex labels.
using Face = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

inline Face make_face(std::vector<Vertex> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  return labels;
}

inline Face make_face(std::initializer_list<Vertex> labels) {
  return make_face(std::vector<Vertex>(labels));
}

/// a ⊆ b for sorted faces.
inline bool is_subface(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline Face face_minus(const Face& f, Vertex v) {
  Face out;
  out.reserve(f.size());
  for (Vertex x : f)
    if (x != v) out.push_back(x);
  return out;
}

inline Face face_plus(Face f, Vertex v) {
  auto it = std::lower_bound(f.begin(), f.end(), v);
  if (it == f.end() || *it != v) f.insert(it, v);
  return f;
}

inline Face face_union(const Face& a, const Face& b) {
  Face out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Face face_intersection(const Face& a, const Face& b) {
  Face out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline Face face_difference(const Face& a, const Face& b) {
  Face out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Calls `fn` on every k-subset of `f` in lexicographic order.
template <typename Fn>
void for_each_subset(const Face& f, std::size_t k, Fn&& fn) {
  if (k > f.size()) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Face sub(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) sub[i] = f[idx[i]];
    fn(static_cast<const Face&>(sub));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == f.size() - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// A finite simplicial complex, kept as its inclusion-maximal faces in
/// canonical (lexicographic) order.
///
/// The empty complex (no faces) and the void complex {∅} are distinct
/// values; both have no vertices and dimension -1.
class Complex {
 public:
  Complex() = default;

  /// Public constructor: input must be a nonempty list of nonempty vertex
  /// sets.  Duplicates and non-maximal sets are dropped.
  static Complex from_facets(const std::vector<Face>& facets) {
    if (facets.empty()) throw ConstructionError("from_facets: empty facet list");
    for (const auto& f : facets)
      if (f.empty()) throw ConstructionError("from_facets: empty facet");
    return from_generators(facets);
  }

  /// Complex spanned by arbitrary generators.  Never throws: an empty
  /// generator list gives the empty complex, a list of only ∅ the void one.
  static Complex from_generators(std::vector<Face> gens) {
    for (auto& g : gens) g = make_face(std::move(g));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<const Face*> by_size;
    by_size.reserve(gens.size());
    for (const auto& g : gens) by_size.push_back(&g);
    std::stable_sort(by_size.begin(), by_size.end(),
                     [](const Face* a, const Face* b) { return a->size() > b->size(); });
    std::vector<Face> kept;
    for (const Face* g : by_size) {
      bool absorbed = false;
      for (const auto& k : kept) {
        if (k.size() > g->size() && is_subface(*g, k)) {
          absorbed = true;
          break;
        }
      }
      if (!absorbed) kept.push_back(*g);
    }
    Complex c;
    std::sort(kept.begin(), kept.end());
    c.facets_ = std::move(kept);
    std::set<Vertex> vs;
    for (const auto& f : c.facets_) vs.insert(f.begin(), f.end());
    c.vertices_.assign(vs.begin(), vs.end());
    return c;
  }

  static Complex empty_complex() { return Complex{}; }
  static Complex void_complex() { return from_generators({Face{}}); }

  const std::vector<Face>& facets() const noexcept { return facets_; }
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }

  /// True for the complex with no faces at all.
  bool is_empty() const noexcept { return facets_.empty(); }
  /// True for {∅}.
  bool is_void() const noexcept { return facets_.size() == 1 && facets_[0].empty(); }

  int dim() const {
    std::size_t m = 0;
    for (const auto& f : facets_) m = std::max(m, f.size());
    return static_cast<int>(m) - 1;
  }

  Vertex max_vertex() const { return vertices_.empty() ? 0 : vertices_.back(); }

  bool has_vertex(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
  }

  /// Face membership.  ∅ belongs to every nonempty complex.
  bool contains(const Face& f) const {
    for (const auto& g : facets_)
      if (is_subface(f, g)) return true;
    return false;
  }

  bool is_facet(const Face& f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
  }

  /// All faces of dimension `k` (k = -1 gives {∅} for a nonempty complex).
  std::vector<Face> faces(int k) const {
    std::vector<Face> out;
    if (k < -1) return out;
    const auto size = static_cast<std::size_t>(k + 1);
    for (const auto& f : facets_) {
      for_each_subset(f, size, [&](const Face& s) { out.push_back(s); });
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Every face, including ∅, in (size, lex) order.
  std::vector<Face> all_faces() const {
    std::vector<Face> out;
    for (int k = -1; k <= dim(); ++k) {
      auto fk = faces(k);
      out.insert(out.end(), fk.begin(), fk.end());
    }
    return out;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (const auto& e : faces(1)) out.emplace_back(e[0], e[1]);
    return out;
  }

  bool operator==(const Complex& other) const { return facets_ == other.facets_; }

 private:
  std::vector<Face> facets_;
  std::vector<Vertex> vertices_;
};

// ---------------------------------------------------------------------------
// f- and h-vectors

/// f(Δ) = (f_{-1}, f_0, ..., f_{d-1}); index with `at(i)` using the
/// dimension i directly.
struct FVector {
  std::vector<std::int64_t> values;

  std::int64_t at(int i) const { return values.at(static_cast<std::size_t>(i + 1)); }
  int top_dim() const { return static_cast<int>(values.size()) - 2; }
  bool operator==(const FVector&) const = default;
};

/// h(Δ) = (h_0, ..., h_d).
struct HVector {
  std::vector<std::int64_t> values;

  std::int64_t at(int j) const { return values.at(static_cast<std::size_t>(j)); }
  bool operator==(const HVector&) const = default;
};

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline FVector f_vector(const Complex& c) {
  if (c.is_empty()) return {{0}};
  FVector f;
  for (int k = -1; k <= c.dim(); ++k)
    f.values.push_back(static_cast<std::int64_t>(c.faces(k).size()));
  return f;
}

inline bool is_pure(const Complex& c) {
  const auto& fs = c.facets();
  return std::all_of(fs.begin(), fs.end(),
                     [&](const Face& f) { return f.size() == fs.front().size(); });
}

/// h_j = Σ_{i=0}^{j} (-1)^{j-i} C(d-i, d-j) f_{i-1}, with d = dim + 1.
inline HVector h_from_f(const FVector& f) {
  const int d = f.top_dim() + 1;
  HVector h;
  for (int j = 0; j <= d; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i <= j; ++i) {
      const std::int64_t term = binomial(d - i, d - j) * f.at(i - 1);
      s += ((j - i) % 2 == 0) ? term : -term;
    }
    h.values.push_back(s);
  }
  return h;
}

/// Inverse transform: f_{j-1} = Σ_{i=0}^{j} C(d-i, j-i) h_i.
inline FVector f_from_h(const HVector& h) {
  const int d = static_cast<int>(h.values.size()) - 1;
  FVector f;
  for (int j = 0; j <= d; ++j) {
    std::int64_t s = 0;
    for (int i = 0; i <= j; ++i) s += binomial(d - i, j - i) * h.at(i);
    f.values.push_back(s);
  }
  return f;
}

inline HVector h_vector(const Complex& c) {
  if (c.is_empty() || !is_pure(c)) throw PurityError("h_vector requires a pure complex");
  return h_from_f(f_vector(c));
}

inline std::int64_t euler_characteristic(const Complex& c) {
  const FVector f = f_vector(c);
  std::int64_t chi = 0;
  for (int i = 0; i <= f.top_dim(); ++i) chi += (i % 2 == 0) ? f.at(i) : -f.at(i);
  return chi;
}

// ---------------------------------------------------------------------------
// links, stars, restrictions, contraction

inline void require_face(const Complex& c, const Face& f, const char* op) {
  if (!c.contains(f)) throw FaceError(std::string(op) + ": not a face of the complex");
}

/// lk(F) = {G : F ∩ G = ∅, F ∪ G ∈ Δ}.  A facet has link {∅}.
inline Complex link(const Complex& c, const Face& f) {
  const Face face = make_face(f);
  require_face(c, face, "link");
  std::vector<Face> gens;
  for (const auto& g : c.facets())
    if (is_subface(face, g)) gens.push_back(face_difference(g, face));
  return Complex::from_generators(std::move(gens));
}

/// Closed star: {G : F ∪ G ∈ Δ}, spanned by the facets containing F.
inline Complex star(const Complex& c, const Face& f) {
  const Face face = make_face(f);
  require_face(c, face, "star");
  std::vector<Face> gens;
  for (const auto& g : c.facets())
    if (is_subface(face, g)) gens.push_back(g);
  return Complex::from_generators(std::move(gens));
}

/// Δ[W] = {F ∈ Δ : F ⊆ W}.
inline Complex restrict_to(const Complex& c, const std::vector<Vertex>& w) {
  const Face keep = make_face(w);
  if (c.is_empty()) return c;
  std::vector<Face> gens;
  for (const auto& g : c.facets()) gens.push_back(face_intersection(g, keep));
  return Complex::from_generators(std::move(gens));
}

/// Δ/uv: v is identified with u; coinciding faces are merged.
inline Complex contract_edge(const Complex& c, Vertex u, Vertex v) {
  if (u == v || !c.contains(make_face({u, v})))
    throw FaceError("contract_edge: {u,v} is not an edge");
  std::vector<Face> gens;
  for (const auto& g : c.facets()) {
    if (std::binary_search(g.begin(), g.end(), v))
      gens.push_back(face_plus(face_minus(g, v), u));
    else
      gens.push_back(g);
  }
  return Complex::from_generators(std::move(gens));
}

/// Relabels vertices through `map` (labels missing from the map are kept).
inline Complex relabel(const Complex& c, const std::map<Vertex, Vertex>& map) {
  std::vector<Face> gens;
  for (const auto& g : c.facets()) {
    Face h;
    for (Vertex x : g) {
      auto it = map.find(x);
      h.push_back(it == map.end() ? x : it->second);
    }
    gens.push_back(make_face(std::move(h)));
  }
  return Complex::from_generators(std::move(gens));
}

// ---------------------------------------------------------------------------
// structural predicates

/// Ridge -> indices (into facets()) of the facets containing it.  Only
/// meaningful for pure complexes.
inline std::map<Face, std::vector<std::size_t>> ridge_map(const Complex& c) {
  std::map<Face, std::vector<std::size_t>> out;
  const auto& fs = c.facets();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (fs[i].empty()) continue;
    for_each_subset(fs[i], fs[i].size() - 1, [&](const Face& r) { out[r].push_back(i); });
  }
  return out;
}

namespace detail {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), std::size_t{0});
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace detail

/// Connected components of the facet-adjacency graph (facets sharing a
/// ridge), as lists of facet indices in ascending order.
inline std::vector<std::vector<std::size_t>> facet_components(const Complex& c) {
  const auto n = c.facets().size();
  detail::UnionFind uf(n);
  for (const auto& [ridge, owners] : ridge_map(c))
    for (std::size_t k = 1; k < owners.size(); ++k) uf.unite(owners[0], owners[k]);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < n; ++i) groups[uf.find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

/// 1-skeleton connectivity (a single vertex, or {∅}, counts as connected;
/// the empty complex does not).
inline bool is_graph_connected(const Complex& c) {
  if (c.is_empty()) return false;
  const auto& vs = c.vertices();
  if (vs.size() <= 1) return true;
  detail::UnionFind uf(vs.size());
  auto idx = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::size_t merges = 0;
  for (const auto& f : c.facets())
    for (std::size_t k = 1; k < f.size(); ++k)
      if (uf.unite(idx(f[0]), idx(f[k]))) ++merges;
  return merges + 1 == vs.size();
}

inline bool is_strongly_connected(const Complex& c) {
  if (c.is_empty() || !is_pure(c)) return false;
  return facet_components(c).size() == 1;
}

inline bool is_pseudomanifold(const Complex& c) {
  if (c.is_empty() || c.is_void() || !is_strongly_connected(c)) return false;
  for (const auto& [ridge, owners] : ridge_map(c))
    if (owners.size() != 2) return false;
  return true;
}

/// Pseudomanifold whose faces of dimension <= d-3 (∅ included) all have
/// graph-connected links.
inline bool is_normal(const Complex& c) {
  if (!is_pseudomanifold(c)) return false;
  const int d = c.dim() + 1;
  for (int k = -1; k <= d - 3; ++k) {
    for (const auto& f : c.faces(k)) {
      if (!is_graph_connected(link(c, f))) return false;
    }
  }
  return true;
}

namespace detail {

/// Connected 1-dimensional complex in which every vertex has degree 2.
inline bool is_cycle_graph(const Complex& c) {
  if (c.dim() != 1 || !is_pure(c) || !is_graph_connected(c)) return false;
  std::map<Vertex, int> degree;
  for (const auto& e : c.facets()) {
    ++degree[e[0]];
    ++degree[e[1]];
  }
  return std::all_of(degree.begin(), degree.end(), [](const auto& kv) { return kv.second == 2; });
}

}  // namespace detail

/// Kalai's class: 2-spheres for d = 3, and for d >= 4 pseudomanifolds
/// whose vertex links all lie in the class one dimension down.  A 2-sphere is
/// recognised as a pseudomanifold whose vertex links are cycles (a closed
/// connected surface) with Euler characteristic 2.
inline bool in_class_Cd(const Complex& c) {
  const int d = c.dim() + 1;
  if (d < 3 || !is_pseudomanifold(c)) return false;
  if (d == 3) {
    for (Vertex v : c.vertices())
      if (!detail::is_cycle_graph(link(c, {v}))) return false;
    return euler_characteristic(c) == 2;
  }
  for (Vertex v : c.vertices())
    if (!in_class_Cd(link(c, {v}))) return false;
  return true;
}

/// Union of two complexes on (possibly overlapping) label sets.
inline Complex complex_union(const Complex& a, const Complex& b) {
  std::vector<Face> gens = a.facets();
  gens.insert(gens.end(), b.facets().begin(), b.facets().end());
  return Complex::from_generators(std::move(gens));
}

}  // namespace rigidlab
