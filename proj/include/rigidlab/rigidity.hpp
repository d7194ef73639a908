#pragma once

// Exact infinitesimal rigidity: graphs and frameworks, the rigidity matrix,
// motion / stress dimensions, L-sparse sampling, the Hall condition, cone
// projection, vertex splitting and the gluing precondition.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rigidlab/coloring.hpp"
#include "rigidlab/complex.hpp"
#include "rigidlab/errors.hpp"
#include "rigidlab/linalg.hpp"
#include "rigidlab/random.hpp"

namespace rigidlab {

using Point = std::vector<Rational>;

/// Simple graph with sorted vertex list and sorted edges (a < b).
struct Graph {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  bool has_vertex(Vertex v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }
  bool has_edge(Vertex a, Vertex b) const {
    const Edge e = a < b ? Edge{a, b} : Edge{b, a};
    return std::binary_search(edges.begin(), edges.end(), e);
  }
  bool operator==(const Graph&) const = default;
};

inline Graph make_graph(std::vector<Vertex> vertices, const std::vector<Edge>& edges) {
  std::set<Vertex> vs(vertices.begin(), vertices.end());
  std::set<Edge> es;
  for (auto [a, b] : edges) {
    if (a == b) throw ParamError("make_graph: loops are not allowed");
    vs.insert(a);
    vs.insert(b);
    es.insert(a < b ? Edge{a, b} : Edge{b, a});
  }
  return {{vs.begin(), vs.end()}, {es.begin(), es.end()}};
}

/// G(Δ): the 1-skeleton.
inline Graph graph_of(const Complex& c) { return make_graph(c.vertices(), c.edges()); }

/// G * {apex}.
inline Graph cone_graph(const Graph& g, Vertex apex) {
  if (g.has_vertex(apex)) throw ParamError("cone_graph: apex must be a new vertex");
  std::vector<Edge> edges = g.edges;
  for (Vertex x : g.vertices) edges.emplace_back(x, apex);
  auto vs = g.vertices;
  vs.push_back(apex);
  return make_graph(vs, edges);
}

/// G/uv: v is merged into u, parallel edges collapse.
inline Graph contract(const Graph& g, Vertex u, Vertex v) {
  if (!g.has_edge(u, v)) throw FaceError("contract: uv is not an edge");
  std::vector<Vertex> vs;
  for (Vertex x : g.vertices)
    if (x != v) vs.push_back(x);
  std::vector<Edge> es;
  for (auto [a, b] : g.edges) {
    const Vertex a2 = a == v ? u : a, b2 = b == v ? u : b;
    if (a2 != b2) es.emplace_back(a2, b2);
  }
  return make_graph(vs, es);
}

inline Graph induced(const Graph& g, const std::vector<Vertex>& w) {
  const std::set<Vertex> keep(w.begin(), w.end());
  std::vector<Vertex> vs;
  for (Vertex x : g.vertices)
    if (keep.count(x)) vs.push_back(x);
  std::vector<Edge> es;
  for (auto e : g.edges)
    if (keep.count(e.first) && keep.count(e.second)) es.push_back(e);
  return make_graph(vs, es);
}

inline Graph graph_union(const Graph& a, const Graph& b) {
  auto vs = a.vertices;
  vs.insert(vs.end(), b.vertices.begin(), b.vertices.end());
  auto es = a.edges;
  es.insert(es.end(), b.edges.begin(), b.edges.end());
  return make_graph(vs, es);
}

inline std::vector<Vertex> neighbors(const Graph& g, Vertex v) {
  std::vector<Vertex> out;
  for (auto [a, b] : g.edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// (G, p) in R^d with exact rational points.
struct Framework {
  Graph graph;
  int dim = 0;
  std::map<Vertex, Point> points;

  const Point& operator()(Vertex v) const {
    auto it = points.find(v);
    if (it == points.end()) throw ParamError("Framework: vertex has no point");
    return it->second;
  }

  void validate() const {
    if (dim < 1) throw ParamError("Framework: dimension must be >= 1");
    for (Vertex v : graph.vertices) {
      auto it = points.find(v);
      if (it == points.end() || it->second.size() != static_cast<std::size_t>(dim))
        throw ParamError("Framework: every vertex needs a point of length d");
    }
  }

  Framework restricted(const std::vector<Vertex>& w) const {
    Framework f{induced(graph, w), dim, {}};
    for (Vertex x : f.graph.vertices) f.points[x] = (*this)(x);
    return f;
  }
};

/// Builds a framework from integer coordinates.
inline Framework make_framework(const Graph& g, int d, const std::map<Vertex, std::vector<long>>& coords) {
  Framework f{g, d, {}};
  for (const auto& [v, xs] : coords) {
    Point p;
    for (long x : xs) p.emplace_back(x);
    f.points[v] = std::move(p);
  }
  f.validate();
  return f;
}

/// |E| x d|V| matrix.  The row of edge ij (i < j) carries p(j) - p(i) in the
/// columns of i and p(i) - p(j) in the columns of j; columns are ordered by
/// vertex, then coordinate.
inline Matrix<Rational> rigidity_matrix(const Framework& fw) {
  fw.validate();
  const auto d = static_cast<std::size_t>(fw.dim);
  std::map<Vertex, std::size_t> col;
  for (std::size_t k = 0; k < fw.graph.vertices.size(); ++k) col[fw.graph.vertices[k]] = k * d;
  Matrix<Rational> m(fw.graph.edges.size(), d * fw.graph.vertices.size());
  for (std::size_t r = 0; r < fw.graph.edges.size(); ++r) {
    const auto [i, j] = fw.graph.edges[r];
    const Point& pi = fw(i);
    const Point& pj = fw(j);
    for (std::size_t k = 0; k < d; ++k) {
      m(r, col[i] + k) = pj[k] - pi[k];
      m(r, col[j] + k) = pi[k] - pj[k];
    }
  }
  return m;
}

/// Rank of the d translations and C(d,2) elementary rotations evaluated at p.
inline std::size_t trivial_motion_dim(const Framework& fw) {
  fw.validate();
  const auto d = static_cast<std::size_t>(fw.dim);
  const auto& vs = fw.graph.vertices;
  if (vs.empty()) return 0;
  Matrix<Rational> m(d + d * (d - 1) / 2, d * vs.size());
  std::size_t row = 0;
  for (std::size_t k = 0; k < d; ++k, ++row)
    for (std::size_t x = 0; x < vs.size(); ++x) m(row, x * d + k) = 1;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b, ++row) {
      // S = E_ab - E_ba, so (S p)_a = p_b and (S p)_b = -p_a.
      for (std::size_t x = 0; x < vs.size(); ++x) {
        const Point& p = fw(vs[x]);
        m(row, x * d + a) = p[b];
        m(row, x * d + b) = -p[a];
      }
    }
  }
  return rank_exact(m);
}

/// Dimension of the affine span of the given points (-1 for none).
inline int affine_dimension(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  const std::size_t d = pts.front().size();
  Matrix<Rational> m(pts.size() - 1, d);
  for (std::size_t r = 1; r < pts.size(); ++r)
    for (std::size_t k = 0; k < d; ++k) m(r - 1, k) = pts[r][k] - pts[0][k];
  return static_cast<int>(rank_exact(m));
}

inline int affine_dimension(const Framework& fw, const std::vector<Vertex>& w) {
  std::vector<Point> pts;
  for (Vertex v : w) pts.push_back(fw(v));
  return affine_dimension(pts);
}

struct RigidityReport {
  std::size_t edges = 0;
  std::size_t vertices = 0;
  int d = 0;
  std::size_t rank = 0;
  std::size_t motion_dim = 0;          ///< dim ker R
  std::size_t trivial_motion_dim = 0;
  std::size_t stress_dim = 0;          ///< dim of the left kernel
  bool rigid = false;
  int affine_span_dim = -1;
  /// Whether the span precondition of the rank criterion holds, and what the
  /// criterion rank R = d|V| - C(d+1,2) says.
  bool rank_criterion_applicable = false;
  bool rank_criterion_rigid = false;
  std::optional<std::uint64_t> seed;
  std::string sampling = "given";
  std::string rank_method;
};

inline RigidityReport is_infinitesimally_rigid(const Framework& fw) {
  fw.validate();
  RigidityReport r;
  r.edges = fw.graph.edges.size();
  r.vertices = fw.graph.vertices.size();
  r.d = fw.dim;
  const std::size_t cols = static_cast<std::size_t>(fw.dim) * r.vertices;
  r.trivial_motion_dim = trivial_motion_dim(fw);
  // Trivial motions lie in the kernel, so rank <= d|V| - trivial.
  const auto rk = rank_certified(rigidity_matrix(fw), cols - r.trivial_motion_dim);
  r.rank = rk.rank;
  r.rank_method = rk.method;
  r.motion_dim = cols - r.rank;
  r.stress_dim = r.edges - r.rank;
  r.rigid = r.motion_dim == r.trivial_motion_dim;
  r.affine_span_dim = affine_dimension(fw, fw.graph.vertices);
  r.rank_criterion_applicable = r.affine_span_dim >= fw.dim - 1;
  const auto target = static_cast<std::int64_t>(cols) - binomial(fw.dim + 1, 2);
  r.rank_criterion_rigid = static_cast<std::int64_t>(r.rank) == target;
  return r;
}

inline std::size_t stress_space_dim(const Framework& fw) { return is_infinitesimally_rigid(fw).stress_dim; }

inline constexpr std::int64_t kSampleBound = std::int64_t{1} << 31;

/// L-sparse configuration: every allowed coordinate uniform in [1, 2^31),
/// every other coordinate exactly 0.  Vertices are visited in ascending order
/// and coordinates in ascending order, so the draw sequence is a function of
/// (G, L, seed) alone.
inline Framework sample_sparse(const Graph& g, const SupportMap& l, std::uint64_t seed) {
  if (l.dim < 1) throw SupportError("sample_sparse: support map needs a dimension");
  Rng rng(seed);
  Framework f{g, l.dim, {}};
  for (Vertex v : g.vertices) {
    auto it = l.allowed.find(v);
    if (it == l.allowed.end() || it->second.empty())
      throw SupportError("sample_sparse: vertex " + std::to_string(v) + " has empty support");
    std::vector<bool> on(static_cast<std::size_t>(l.dim), false);
    for (int j : it->second) {
      if (j < 0 || j >= l.dim) throw SupportError("sample_sparse: coordinate outside [d]");
      on[static_cast<std::size_t>(j)] = true;
    }
    Point p(static_cast<std::size_t>(l.dim), Rational(0));
    for (std::size_t j = 0; j < on.size(); ++j)
      if (on[j]) p[j] = Rational(static_cast<long>(uniform_in(rng, 1, kSampleBound - 1)));
    f.points[v] = std::move(p);
  }
  return f;
}

/// |∪_{w∈W} L(w)| + 1 >= |W| for all W ⊆ U, decided by a U-saturating
/// matching into [d+1] where v is adjacent to L(v) and to the extra row d+1.
inline bool hall_condition(const SupportMap& l, const std::vector<Vertex>& u) {
  const Face us = make_face(u);
  if (us.size() != u.size()) throw ParamError("hall_condition: U has repeated vertices");
  if (us.size() > static_cast<std::size_t>(l.dim) + 1) throw ParamError("hall_condition: |U| must be <= d+1");
  std::vector<std::vector<int>> adj;
  for (Vertex v : us) {
    auto a = l(v);
    a.push_back(l.dim);
    adj.push_back(std::move(a));
  }
  std::vector<int> owner(static_cast<std::size_t>(l.dim) + 1, -1);
  for (std::size_t s = 0; s < adj.size(); ++s) {
    std::vector<bool> seen(owner.size(), false);
    // Kuhn's augmenting path search.
    auto augment = [&](auto&& self, std::size_t x) -> bool {
      for (int c : adj[x]) {
        auto ci = static_cast<std::size_t>(c);
        if (seen[ci]) continue;
        seen[ci] = true;
        if (owner[ci] < 0 || self(self, static_cast<std::size_t>(owner[ci]))) {
          owner[ci] = static_cast<int>(x);
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, s)) return false;
  }
  return true;
}

/// rank [p(v_1) ... p(v_k); 1 ... 1] == k.
inline bool affinely_independent(const Framework& fw, const std::vector<Vertex>& u) {
  const auto d = static_cast<std::size_t>(fw.dim);
  Matrix<Rational> a(d + 1, u.size());
  for (std::size_t c = 0; c < u.size(); ++c) {
    const Point& p = fw(u[c]);
    for (std::size_t k = 0; k < d; ++k) a(k, c) = p[k];
    a(d, c) = 1;
  }
  return rank_exact(a) == u.size();
}

/// Hyperplane {x : normal · x = offset}.
struct AffineFunctional {
  Point normal;
  Rational offset;
};

inline Rational dot(const Point& a, const Point& b) {
  Rational s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

/// Central projection of a cone framework in R^{d+1} from its apex onto H,
/// followed by the affine identification H ≅ R^d that drops the first
/// coordinate where the normal is nonzero.
inline Framework cone_project(const Framework& fw, Vertex apex, const AffineFunctional& h) {
  fw.validate();
  if (h.normal.size() != static_cast<std::size_t>(fw.dim))
    throw GeometryError("cone_project: hyperplane lives in the wrong dimension");
  auto drop = std::find_if(h.normal.begin(), h.normal.end(), [](const Rational& x) { return sgn(x) != 0; });
  if (drop == h.normal.end()) throw GeometryError("cone_project: zero normal");
  if (fw.dim < 2) throw GeometryError("cone_project: cone must live in dimension >= 2");
  const auto skip = static_cast<std::size_t>(drop - h.normal.begin());
  if (!fw.graph.has_vertex(apex)) throw ParamError("cone_project: apex is not a vertex");
  for (Vertex x : fw.graph.vertices)
    if (x != apex && !fw.graph.has_edge(x, apex)) throw ParamError("cone_project: framework is not a cone");

  const Point& a = fw(apex);
  const Rational gap = h.offset - dot(h.normal, a);
  if (sgn(gap) == 0) throw GeometryError("cone_project: apex lies on H");
  std::vector<Vertex> base;
  for (Vertex x : fw.graph.vertices)
    if (x != apex) base.push_back(x);
  Framework out{induced(fw.graph, base), fw.dim - 1, {}};
  for (Vertex x : base) {
    Point w(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) w[k] = fw(x)[k] - a[k];
    const Rational along = dot(h.normal, w);
    if (sgn(along) == 0) throw GeometryError("cone_project: a cone line is parallel to H");
    const Rational s = gap / along;
    Point q;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (k != skip) q.push_back(a[k] + s * w[k]);
    out.points[x] = std::move(q);
  }
  return out;
}

struct SplitResult {
  bool applicable = false;  ///< false when the contracted framework is not rigid
  std::optional<Framework> framework;
  Rational t;
  int trials = 0;
  RigidityReport report;
};

inline constexpr int kSplitHalvings = 64;

/// Extends a rigid (G/uv, p) to (G, p') with p'(v) = p(u) + t z, trying
/// t = 1, 1/2, 1/4, ... (at most 65 values).
inline SplitResult vertex_split(const Framework& contracted, const Graph& g, Vertex u, Vertex v,
                                const std::vector<Vertex>& c, const Point& z) {
  contracted.validate();
  const int d = contracted.dim;
  if (!g.has_edge(u, v)) throw SplitError("vertex_split: uv is not an edge");
  if (!(contracted.graph == contract(g, u, v))) throw SplitError("vertex_split: framework graph is not G/uv");
  if (c.size() != static_cast<std::size_t>(d - 1)) throw SplitError("vertex_split: |C| must be d-1");
  if (z.size() != static_cast<std::size_t>(d)) throw SplitError("vertex_split: z has the wrong length");
  const auto nu = neighbors(g, u), nv = neighbors(g, v);
  for (Vertex w : c)
    if (!std::binary_search(nu.begin(), nu.end(), w) || !std::binary_search(nv.begin(), nv.end(), w))
      throw SplitError("vertex_split: C must lie in the common neighbourhood of u and v");
  Matrix<Rational> span(c.size() + 1, static_cast<std::size_t>(d));
  for (std::size_t r = 0; r < c.size(); ++r)
    for (std::size_t k = 0; k < z.size(); ++k) span(r, k) = contracted(c[r])[k] - contracted(u)[k];
  if (c.size() > 0 && rank_exact(span) != c.size())
    throw SplitError("vertex_split: {p(w) - p(u) : w in C} is not linearly independent");
  for (std::size_t k = 0; k < z.size(); ++k) span(c.size(), k) = z[k];
  if (rank_exact(span) != c.size() + 1) throw SplitError("vertex_split: z lies in the span of C");

  SplitResult res;
  res.report = is_infinitesimally_rigid(contracted);
  if (!res.report.rigid) return res;
  res.applicable = true;
  Rational t = 1;
  for (int k = 0; k <= kSplitHalvings; ++k, t /= 2) {
    Framework fw{g, d, contracted.points};
    Point pv(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) pv[j] = contracted(u)[j] + t * z[j];
    fw.points[v] = std::move(pv);
    res.trials = k + 1;
    auto rep = is_infinitesimally_rigid(fw);
    if (rep.rigid) {
      res.framework = std::move(fw);
      res.t = t;
      res.report = rep;
      return res;
    }
  }
  throw BudgetError("vertex_split: no rigid extension among 65 values of t",
                    "contracted framework is rigid; preconditions hold");
}

/// p(V1 ∩ V2) spans an affine subspace of dimension >= d-1.
inline bool glue_precondition(const Framework& fw, const std::vector<Vertex>& v1, const std::vector<Vertex>& v2) {
  const Face shared = face_intersection(make_face(v1), make_face(v2));
  return affine_dimension(fw, shared) >= fw.dim - 1;
}

struct SparseRigidityVerdict {
  bool rigid = false;  ///< true only with a witness
  int trials = 0;
  std::size_t max_rank = 0;
  std::optional<Framework> witness;
  std::optional<std::uint64_t> witness_seed;
  RigidityReport best;  ///< report of the witness, or of the highest-rank sample
  std::string note;
};

inline std::string negative_sampling_note(int trials) {
  return "no witness in " + std::to_string(trials) +
         " generic samples; random-integer samples failing is strong evidence, not proof";
}

/// Tries up to `trials` independent L-sparse samples with seeds
/// derive_seed(seed, k).  A positive verdict is a certificate.
inline SparseRigidityVerdict is_sparse_rigid(const Graph& g, const SupportMap& l, int trials, std::uint64_t seed) {
  if (trials < 1) throw ParamError("is_sparse_rigid: trials must be >= 1");
  SparseRigidityVerdict out;
  bool have_best = false;
  for (int k = 0; k < trials; ++k) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(k));
    Framework fw = sample_sparse(g, l, s);
    RigidityReport rep = is_infinitesimally_rigid(fw);
    rep.seed = s;
    rep.sampling = "sparse-uniform";
    out.trials = k + 1;
    if (!have_best || rep.rank > out.best.rank) {
      out.best = rep;
      have_best = true;
    }
    out.max_rank = std::max(out.max_rank, rep.rank);
    if (rep.rigid) {
      out.rigid = true;
      out.best = rep;
      out.witness = std::move(fw);
      out.witness_seed = s;
      out.note = "witness found";
      return out;
    }
  }
  out.note = negative_sampling_note(out.trials);
  return out;
}

/// The support map of the base graph in the sparse cone correspondence:
/// given L on V(G) ∪ {apex} in [d+1] and a coordinate i ∈ L(apex) such that
/// every u has i ∉ L(u) or |L(apex) \ L(u)| <= 1, returns L' on V(G) in
/// [d+1] \ {i} ≅ [d] with L'(u) = (L(u) ∪ L(apex)) \ {i} when i ∈ L(u).
inline SupportMap cone_support_map(const SupportMap& l, Vertex apex, int i) {
  const auto& la = l(apex);
  if (std::find(la.begin(), la.end(), i) == la.end()) throw ParamError("cone_support_map: i must lie in L(apex)");
  SupportMap out{l.dim - 1, {}};
  for (const auto& [u, lu] : l.allowed) {
    if (u == apex) continue;
    std::set<int> s(lu.begin(), lu.end());
    if (s.count(i)) {
      std::size_t missing = 0;
      for (int j : la) missing += s.count(j) ? 0 : 1;
      if (missing > 1) throw ParamError("cone_support_map: |L(apex) \\ L(u)| must be <= 1 when i in L(u)");
      s.insert(la.begin(), la.end());
      s.erase(i);
    }
    std::vector<int> shifted;
    for (int j : s) shifted.push_back(j > i ? j - 1 : j);
    out.allowed[u] = std::move(shifted);
  }
  return out;
}

}  // namespace rigidlab
