#pragma once

// The registry of checkable claims.  Every entry expands into instances over
// generated complexes; each instance reports pass / fail (exact statements)
// or warn (generic-sampling negatives, which are evidence rather than proof).
//
// Claim ids are part of the command-line interface and are kept stable.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rigidlab/chains.hpp"
#include "rigidlab/coloring.hpp"
#include "rigidlab/complex.hpp"
#include "rigidlab/errors.hpp"
#include "rigidlab/generators.hpp"
#include "rigidlab/harness.hpp"
#include "rigidlab/random.hpp"
#include "rigidlab/report.hpp"
#include "rigidlab/rigidity.hpp"
#include "rigidlab/sr_bridge.hpp"

namespace rigidlab {

const std::vector<Claim>& claim_registry();

namespace claims {

// ---------------------------------------------------------------- helpers

inline InstanceResult exact(bool ok, Json data) { return {ok ? Status::pass : Status::fail, std::move(data)}; }

/// A sampled positive certifies; a sampled negative only warns.
inline InstanceResult evidence(bool found, Json data) { return {found ? Status::pass : Status::warn, std::move(data)}; }

inline InstanceResult combine(Status s, Json data) { return {s, std::move(data)}; }

inline Status worst(Status a, Status b) { return static_cast<int>(a) > static_cast<int>(b) ? a : b; }

inline std::string key_of(std::initializer_list<std::pair<const char*, std::string>> parts) {
  std::string out;
  for (const auto& [k, v] : parts) {
    if (!out.empty()) out += ',';
    out += k;
    out += '=';
    out += v;
  }
  return out;
}

inline std::string pad(long x, int width = 2) {
  std::ostringstream os;
  os << std::setw(width) << std::setfill('0') << x;
  return os.str();
}

inline std::string vec_str(const std::vector<int>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

inline ColorMap constant_coloring(const Complex& c) {
  ColorMap k{{}, 1};
  for (Vertex v : c.vertices()) k.color[v] = 1;
  return k;
}

/// Original vertices get color 1, subdivision apices color 2.
inline ColorMap apex_coloring(const Subdivision& s) {
  ColorMap k{{}, 2};
  for (Vertex v : s.original) k.color[v] = 1;
  for (Vertex v : s.apices) k.color[v] = 2;
  return k;
}

/// The 7-vertex torus: {i, i+1, i+3} and {i, i+2, i+3} mod 7, labels 1..7.
inline Complex seven_vertex_torus() {
  std::vector<Face> fs;
  for (int i = 0; i < 7; ++i) {
    fs.push_back(make_face({i % 7 + 1, (i + 1) % 7 + 1, (i + 3) % 7 + 1}));
    fs.push_back(make_face({i % 7 + 1, (i + 2) % 7 + 1, (i + 3) % 7 + 1}));
  }
  return Complex::from_facets(fs);
}

/// The 6-vertex real projective plane.
inline Complex projective_plane6() {
  return Complex::from_facets({{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                               {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}});
}

/// Three triangulated disks sharing the boundary circle 1-2-3 (apices 4,5,6).
inline Complex theta_complex() {
  std::vector<Face> fs;
  for (Vertex apex : {4, 5, 6})
    for (auto e : std::vector<Face>{{1, 2}, {2, 3}, {1, 3}}) fs.push_back(face_plus(e, apex));
  return Complex::from_facets(fs);
}

inline Complex disjoint_tetrahedra() {
  return complex_union(simplex_boundary(3), shift_labels(simplex_boundary(3), 4));
}

inline Complex minus_facet(const Complex& c, std::size_t which) {
  std::vector<Face> fs = c.facets();
  fs.erase(fs.begin() + static_cast<std::ptrdiff_t>(which));
  return Complex::from_facets(fs);
}

/// Z2 minimality by enumerating every nonempty facet subset (Gray code over
/// ridge parities).  Independent of the kernel method it cross-checks.
inline bool z2_minimal_by_enumeration(const Complex& c) {
  const auto& fs = c.facets();
  const std::size_t n = fs.size();
  if (n == 1) return true;
  if (n > 24) throw BudgetError("z2_minimal_by_enumeration: too many facets");
  std::map<Face, std::size_t> ridge_index;
  std::vector<std::vector<std::size_t>> cols(n);
  for (std::size_t i = 0; i < n; ++i)
    for (Vertex x : fs[i]) {
      auto [it, fresh] = ridge_index.emplace(face_minus(fs[i], x), ridge_index.size());
      cols[i].push_back(it->second);
    }
  std::vector<std::uint8_t> parity(ridge_index.size(), 0);
  std::size_t odd = 0, in_set = 0;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  std::uint64_t mask = 0;
  bool proper_cycle = false, full_cycle = false;
  for (std::uint64_t step = 1; step <= all; ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    mask ^= std::uint64_t{1} << bit;
    in_set += (mask >> bit) & 1U ? 1 : 0;
    in_set -= (mask >> bit) & 1U ? 0 : 1;
    for (std::size_t r : cols[bit]) {
      parity[r] ^= 1U;
      if (parity[r]) ++odd; else --odd;
    }
    if (odd == 0 && in_set > 0) {
      if (mask == all) full_cycle = true;
      else proper_cycle = true;
    }
  }
  return full_cycle && !proper_cycle;
}

/// Sparse rigidity instance: checks the coloring, then samples.
inline InstanceResult sparse_rigidity_instance(const Complex& c, const ColorMap& k, const std::vector<int>& a,
                                               const RunContext& ctx, bool require_cd = false) {
  Json data;
  data["f_vector"] = to_json(f_vector(c));
  data["a"] = to_json(a);
  const bool coloring_ok = verify_a_coloring(c, k, a);
  data["a_coloring"] = coloring_ok;
  if (require_cd) data["in_class_Cd"] = in_class_Cd(c);
  if (!coloring_ok || (require_cd && !data["in_class_Cd"].get<bool>())) return exact(false, std::move(data));
  const auto verdict = is_sparse_rigid(graph_of(c), from_coloring(k, a), ctx.trials, ctx.seed);
  data["verdict"] = to_json(verdict);
  return evidence(verdict.rigid, std::move(data));
}

struct ColoredCase {
  std::string name;
  std::function<ColoredComplex(std::uint64_t)> make;
  std::vector<int> a;  ///< merged from the proper coloring
};

inline std::vector<Instance> colored_cases(const std::vector<ColoredCase>& cases, bool require_cd = false) {
  std::vector<Instance> out;
  for (const auto& cc : cases) {
    out.push_back({key_of({{"complex", cc.name}, {"a", vec_str(cc.a)}}), [cc, require_cd](const RunContext& ctx) {
                     const ColoredComplex x = cc.make(ctx.seed);
                     return sparse_rigidity_instance(x.complex, merge_colors(x.coloring, cc.a), cc.a, ctx, require_cd);
                   }});
  }
  return out;
}

inline std::function<ColoredComplex(std::uint64_t)> cross(int d) {
  return [d](std::uint64_t) { return cross_polytope_boundary(d); };
}

inline std::function<ColoredComplex(std::uint64_t)> cross_sum(int d, int n) {
  return [d, n](std::uint64_t seed) { return stacked_cross_polytopal_sphere(d, n, seed); };
}

// ---------------------------------------------------------------- h-vector claims

inline std::vector<Instance> cross_sum_equality(int) {
  std::vector<Instance> out;
  const std::vector<std::pair<int, int>> grid{{3, 6}, {3, 9}, {3, 12}, {4, 8}, {4, 12}};
  for (auto [d, n] : grid) {
    out.push_back({key_of({{"d", std::to_string(d)}, {"n", pad(n)}}), [d = d, n = n](const RunContext& ctx) {
                     const auto s = stacked_cross_polytopal_sphere(d, n, ctx.seed);
                     const auto h = h_vector(s.complex);
                     std::vector<int> ones(static_cast<std::size_t>(d), 1);
                     Json data;
                     data["f_vector"] = to_json(f_vector(s.complex));
                     data["h_vector"] = to_json(h);
                     data["lhs_2h2"] = 2 * h.at(2);
                     data["rhs_(d-1)h1"] = (d - 1) * h.at(1);
                     data["balanced"] = verify_a_coloring(s.complex, s.coloring, ones);
                     data["pseudomanifold"] = is_pseudomanifold(s.complex);
                     const bool ok = 2 * h.at(2) == (d - 1) * h.at(1) && data["balanced"].get<bool>() &&
                                     data["pseudomanifold"].get<bool>() &&
                                     static_cast<int>(s.complex.vertices().size()) == n;
                     return exact(ok, std::move(data));
                   }});
  }
  return out;
}

inline std::vector<Instance> balanced_lbt(int) {
  std::vector<Instance> out;
  const std::vector<std::pair<int, std::vector<int>>> grid{{3, {6, 9, 12, 15, 18}}, {4, {8, 12, 16, 20, 24}}};
  for (const auto& [d, ns] : grid) {
    for (int n : ns) {
      for (int rep = 0; rep < 3; ++rep) {
        out.push_back({key_of({{"d", std::to_string(d)}, {"n", pad(n)}, {"rep", std::to_string(rep)}}),
                       [d = d, n](const RunContext& ctx) {
                         const auto s = stacked_cross_polytopal_sphere(d, n, ctx.seed);
                         // Balancedness is re-derived from scratch, not taken from the generator.
                         const auto col = find_proper_coloring(s.complex, ctx.seed);
                         const auto h = h_vector(s.complex);
                         Json data;
                         data["h_vector"] = to_json(h);
                         data["balanced"] = col.ok();
                         data["minimal_cycle_z2"] = is_minimal_cycle_complex(s.complex, Ring::z2);
                         data["lhs_2h2"] = 2 * h.at(2);
                         data["rhs_(d-1)h1"] = (d - 1) * h.at(1);
                         const bool ok = col.ok() && data["minimal_cycle_z2"].get<bool>() &&
                                         2 * h.at(2) >= (d - 1) * h.at(1);
                         return exact(ok, std::move(data));
                       }});
      }
    }
  }
  return out;
}

inline std::vector<Instance> rank_selected_rigidity(int) {
  std::vector<Instance> out;
  const std::vector<std::pair<std::string, std::function<ColoredComplex(std::uint64_t)>>> bases{
      {"cross4", cross(4)}, {"cross-sum(4,12)", cross_sum(4, 12)}, {"cross-sum(3,9)", cross_sum(3, 9)}};
  for (const auto& [name, make] : bases) {
    const int d = make(0).complex.dim() + 1;
    for (std::uint32_t mask = 1; mask < (1U << d); ++mask) {
      std::set<int> t;
      for (int i = 0; i < d; ++i)
        if ((mask >> i) & 1U) t.insert(i + 1);
      if (t.size() < 3) continue;
      std::vector<int> tv(t.begin(), t.end());
      out.push_back({key_of({{"complex", name}, {"T", vec_str(tv)}}), [make = make, t, tv](const RunContext& ctx) {
                       const auto s = make(ctx.seed);
                       const Complex sel = rank_selected(s.complex, s.coloring, t);
                       const int k = static_cast<int>(t.size());
                       std::vector<Vertex> u;
                       for (Vertex v : s.complex.vertices())
                         if (t.count(s.coloring(v))) u.push_back(v);
                       const auto f0 = static_cast<std::int64_t>(sel.vertices().size());
                       const auto verdict = is_sparse_rigid(graph_of(sel), free_support(sel.vertices(), k),
                                                            ctx.trials, ctx.seed);
                       Json data;
                       data["T"] = to_json(tv);
                       data["f0"] = f0;
                       data["transversal"] = is_transversal(s.complex, u, k);
                       data["target_rank"] = k * f0 - binomial(k + 1, 2);
                       data["verdict"] = to_json(verdict);
                       if (!data["transversal"].get<bool>()) return exact(false, std::move(data));
                       const bool hit = static_cast<std::int64_t>(verdict.max_rank) == k * f0 - binomial(k + 1, 2);
                       return evidence(hit && verdict.rigid, std::move(data));
                     }});
    }
  }
  return out;
}

// ---------------------------------------------------------------- sparse rigidity positives

inline std::vector<Instance> balanced_two_spheres(int) {
  return colored_cases({{"cross3", cross(3), {1, 1, 1}},
                        {"cross-sum(3,9)", cross_sum(3, 9), {1, 1, 1}},
                        {"cross-sum(3,12)", cross_sum(3, 12), {1, 1, 1}},
                        {"cross-sum(3,15)", cross_sum(3, 15), {1, 1, 1}}},
                       true);
}

inline std::vector<Instance> blocks_at_least_two(int) {
  return colored_cases({{"cross4", cross(4), {2, 2}},
                        {"cross-sum(4,8)", cross_sum(4, 8), {2, 2}},
                        {"cross-sum(4,12)", cross_sum(4, 12), {2, 2}},
                        {"cross5", cross(5), {2, 3}},
                        {"cross-sum(5,10)", cross_sum(5, 10), {2, 3}},
                        {"cross6", cross(6), {2, 2, 2}},
                        {"cross6", cross(6), {3, 3}}});
}

inline std::vector<Instance> class_cd_spheres(int) {
  return colored_cases({{"cross4", cross(4), {1, 1, 1, 1}},
                        {"cross4", cross(4), {2, 1, 1}},
                        {"cross4", cross(4), {1, 1, 2}},
                        {"cross-sum(4,12)", cross_sum(4, 12), {1, 1, 1, 1}},
                        {"cross5", cross(5), {1, 1, 1, 1, 1}},
                        {"cross5", cross(5), {2, 1, 2}}},
                       true);
}

// ---------------------------------------------------------------- flexible counterexample

inline std::vector<Instance> subdivided_flexible(int) {
  std::vector<Instance> out;
  const std::vector<std::pair<int, int>> grid{{3, 4}, {3, 6}, {3, 8}, {4, 5}, {4, 7}};
  for (auto [d, n] : grid) {
    out.push_back({key_of({{"d", std::to_string(d)}, {"f0_gamma", pad(n)}}), [d = d, n = n](const RunContext& ctx) {
                     const Complex gamma = stacked_sphere(d, n, ctx.seed);
                     const Subdivision sub = subdivide_all_facets(gamma);
                     const Complex& delta = sub.complex;
                     const ColorMap k = apex_coloring(sub);
                     const std::vector<int> a{d - 1, 1};
                     const auto fd = f_vector(delta), fg = f_vector(gamma);
                     Json data;
                     data["f_vector"] = to_json(fd);
                     data["vertex_count_ok"] = fd.at(0) == fg.at(0) + fg.at(d - 1);
                     data["stacked_edge_count"] = fd.at(1) == d * fd.at(0) - binomial(d + 1, 2);
                     data["a_coloring"] = verify_a_coloring(delta, k, a);
                     const std::int64_t bound = n - d;
                     data["stress_lower_bound"] = bound;
                     bool ok = data["vertex_count_ok"].get<bool>() && data["stacked_edge_count"].get<bool>() &&
                               data["a_coloring"].get<bool>();
                     const Graph g = graph_of(delta);
                     const SupportMap l = from_coloring(k, a);
                     Json samples = Json::array();
                     const int count = std::max(5, ctx.trials);
                     for (int s = 0; s < count; ++s) {
                       const auto seed = derive_seed(ctx.seed, static_cast<std::uint64_t>(s));
                       const auto rep = is_infinitesimally_rigid(sample_sparse(g, l, seed));
                       const bool sample_ok = !rep.rigid && static_cast<std::int64_t>(rep.stress_dim) >= bound &&
                                              rep.motion_dim - static_cast<std::size_t>(binomial(d + 1, 2)) ==
                                                  rep.stress_dim;
                       ok = ok && sample_ok;
                       samples.push_back({{"seed", seed},
                                          {"stress_dim", rep.stress_dim},
                                          {"rigid", rep.rigid},
                                          {"nontrivial_motions", rep.motion_dim - rep.trivial_motion_dim}});
                     }
                     data["samples"] = std::move(samples);
                     return exact(ok, std::move(data));
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- face ring bridge

struct LeeCase {
  std::string name;
  std::function<ColoredComplex(std::uint64_t)> make;
  std::vector<int> a;
};

inline std::vector<LeeCase> lee_cases() {
  auto stacked = [](int d, int n) {
    return [d, n](std::uint64_t seed) {
      const Complex c = stacked_sphere(d, n, seed);
      return ColoredComplex{c, constant_coloring(c)};
    };
  };
  auto subdivided = [](int d, int n) {
    return [d, n](std::uint64_t seed) {
      const Subdivision s = subdivide_all_facets(stacked_sphere(d, n, seed));
      return ColoredComplex{s.complex, apex_coloring(s)};
    };
  };
  auto as_proper = [](std::function<ColoredComplex(std::uint64_t)> f) { return f; };
  return {{"cross3", as_proper(cross(3)), {1, 1, 1}},
          {"cross3", as_proper(cross(3)), {3}},
          {"cross4", as_proper(cross(4)), {2, 2}},
          {"cross4", as_proper(cross(4)), {1, 1, 1, 1}},
          {"stacked(3,7)", stacked(3, 7), {3}},
          {"stacked(4,8)", stacked(4, 8), {4}},
          {"cross-sum(3,9)", as_proper(cross_sum(3, 9)), {1, 1, 1}},
          {"subdivided-stacked(3,6)", subdivided(3, 6), {2, 1}}};
}

/// Colorings in lee_cases are either proper (merged by `a`) or already final.
inline ColorMap lee_coloring(const ColoredComplex& x, const std::vector<int>& a) {
  return x.coloring.palette == static_cast<int>(a.size()) ? x.coloring : merge_colors(x.coloring, a);
}

inline std::vector<Instance> lee_identities(int) {
  std::vector<Instance> out;
  for (const auto& lc : lee_cases()) {
    out.push_back({key_of({{"complex", lc.name}, {"a", vec_str(lc.a)}}), [lc](const RunContext& ctx) {
                     const ColoredComplex x = lc.make(ctx.seed);
                     const ColorMap k = lee_coloring(x, lc.a);
                     const auto cand = colored_sop(x.complex, k, lc.a, ctx.seed);
                     const auto omega = omega_injective(x.complex, cand);
                     const auto h = h_vector(x.complex);
                     Json data;
                     data["h_vector"] = to_json(h);
                     data["lsop_seed"] = *cand.seed;
                     data["omega"] = to_json(omega);
                     data["dim1_eq_h1"] = omega.dims.degree1 == h.at(1);
                     data["dim2_eq_h2"] = omega.dims.degree2 == h.at(2);
                     data["coker_eq_h2_minus_h1_iff_rigid"] =
                         (omega.dims.degree2_mod_omega == h.at(2) - h.at(1)) == omega.rigidity.rigid;
                     const bool ok = data["dim1_eq_h1"].get<bool>() && data["dim2_eq_h2"].get<bool>() &&
                                     data["coker_eq_h2_minus_h1_iff_rigid"].get<bool>() && omega.bookkeeping_ok &&
                                     omega.exact_split_ok && omega.injective == omega.rigidity.rigid;
                     return exact(ok, std::move(data));
                   }});
  }
  return out;
}

inline std::vector<Instance> conjecture_equivalence(int) {
  std::vector<Instance> out;
  for (const auto& lc : lee_cases()) {
    out.push_back({key_of({{"complex", lc.name}, {"a", vec_str(lc.a)}}), [lc](const RunContext& ctx) {
                     const ColoredComplex x = lc.make(ctx.seed);
                     const ColorMap k = lee_coloring(x, lc.a);
                     const auto cand = colored_sop(x.complex, k, lc.a, ctx.seed);
                     const auto omega = omega_injective(x.complex, cand);
                     const auto fw = cand.framework(graph_of(x.complex));
                     const auto rep = is_infinitesimally_rigid(fw);
                     // The colored s.o.p. is itself a (κ,a)-sparse configuration.
                     const SupportMap l = from_coloring(k, lc.a);
                     bool sparse = true;
                     for (const auto& [v, p] : fw.points)
                       for (std::size_t j = 0; j < p.size(); ++j)
                         if (sgn(p[j]) != 0 && std::find(l(v).begin(), l(v).end(), static_cast<int>(j)) == l(v).end())
                           sparse = false;
                     Json data;
                     data["omega_injective"] = omega.injective;
                     data["rigid_on_same_p"] = rep.rigid;
                     data["p_is_sparse"] = sparse;
                     return exact(sparse && omega.injective == rep.rigid, std::move(data));
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- Hall condition oracle

inline SupportMap random_support(Rng& rng, int d, const std::vector<Vertex>& vs) {
  SupportMap l{d, {}};
  for (Vertex v : vs) {
    // Small supports half the time, so Hall failures are well represented.
    const int cap = uniform_below(rng, 2) == 0 ? 1 : d;
    const auto size = static_cast<std::size_t>(uniform_in(rng, 1, cap));
    std::vector<int> all(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) all[static_cast<std::size_t>(j)] = j;
    seeded_shuffle(all, rng);
    all.resize(size);
    std::sort(all.begin(), all.end());
    l.allowed[v] = all;
  }
  return l;
}

inline constexpr int kHallPairs = 1000;
inline constexpr int kHallSeeds = 3;

inline std::vector<Instance> hall_oracle(int) {
  std::vector<Instance> out;
  for (int d : {3, 4, 5}) {
    out.push_back({key_of({{"d", std::to_string(d)}}), [d](const RunContext& ctx) {
                     Rng rng(ctx.seed);
                     std::size_t hall_true = 0, disagreements = 0, checks = 0;
                     for (int i = 0; i < kHallPairs; ++i) {
                       const auto k = static_cast<int>(uniform_in(rng, d - 1, d + 1));
                       std::vector<Vertex> u;
                       for (int x = 1; x <= k; ++x) u.push_back(x);
                       const SupportMap l = random_support(rng, d, u);
                       const bool hall = hall_condition(l, u);
                       hall_true += hall ? 1 : 0;
                       const Graph g = make_graph(u, {});
                       for (int s = 0; s < kHallSeeds; ++s) {
                         const auto seed = derive_seed(ctx.seed, static_cast<std::uint64_t>(i * kHallSeeds + s) + 1);
                         ++checks;
                         if (affinely_independent(sample_sparse(g, l, seed), u) != hall) ++disagreements;
                       }
                     }
                     Json data;
                     data["pairs"] = kHallPairs;
                     data["seeds_per_pair"] = kHallSeeds;
                     data["hall_true"] = hall_true;
                     data["hall_false"] = kHallPairs - hall_true;
                     data["checks"] = checks;
                     data["disagreements"] = disagreements;
                     return exact(disagreements == 0 && hall_true > 0 && hall_true < kHallPairs, std::move(data));
                   }});
  }
  return out;
}

/// Color types of (d+1)-sets: Hall holds under L_{κ,a} iff t = a + e_j.
inline std::vector<Instance> hall_types(int) {
  std::vector<Instance> out;
  const std::vector<std::vector<int>> as{{3}, {2, 1}, {1, 2}, {1, 1, 1}, {2, 2}, {1, 1, 2}, {2, 3}, {1, 1, 1, 1}};
  for (const auto& a : as) {
    out.push_back({key_of({{"part", "types"}, {"a", vec_str(a)}}), [a](const RunContext&) {
                     const int d = sum_of(a), m = static_cast<int>(a.size());
                     std::size_t types = 0, mismatches = 0;
                     std::vector<int> t(static_cast<std::size_t>(m), 0);
                     // Enumerate compositions of d+1 into m nonnegative parts.
                     std::function<void(int, int)> rec = [&](int i, int left) {
                       if (i == m - 1) {
                         t[static_cast<std::size_t>(i)] = left;
                         ColorMap k{{}, m};
                         std::vector<Vertex> u;
                         Vertex next = 1;
                         for (int c = 0; c < m; ++c)
                           for (int r = 0; r < t[static_cast<std::size_t>(c)]; ++r) {
                             k.color[next] = c + 1;
                             u.push_back(next++);
                           }
                         bool expected = false;
                         for (int j = 0; j < m; ++j) {
                           bool eq = true;
                           for (int c = 0; c < m; ++c)
                             eq = eq && t[static_cast<std::size_t>(c)] ==
                                            a[static_cast<std::size_t>(c)] + (c == j ? 1 : 0);
                           expected = expected || eq;
                         }
                         ++types;
                         if (hall_condition(from_coloring(k, a), u) != expected) ++mismatches;
                         return;
                       }
                       for (int x = 0; x <= left; ++x) {
                         t[static_cast<std::size_t>(i)] = x;
                         rec(i + 1, left - x);
                       }
                     };
                     rec(0, d + 1);
                     Json data;
                     data["types"] = types;
                     data["mismatches"] = mismatches;
                     return exact(mismatches == 0, std::move(data));
                   }});
  }
  // Splitting replay: a same-color edge uv with a common-neighbour set C of
  // type a + e_j lifts sparse rigidity from G/uv to G.
  for (const auto& [name, d, a] : std::vector<std::tuple<std::string, int, std::vector<int>>>{
           {"cross4", 4, {2, 2}}, {"cross5", 5, {2, 3}}}) {
    out.push_back({key_of({{"part", "split"}, {"complex", name}, {"a", vec_str(a)}}),
                   [d = d, a = a](const RunContext& ctx) {
                     const auto x = cross_polytope_boundary(d);
                     const ColorMap k = merge_colors(x.coloring, a);
                     const Graph g = graph_of(x.complex);
                     const Vertex u = cross_vertex(1, true), v = cross_vertex(2, true);
                     std::vector<Vertex> common;
                     const auto nu = neighbors(g, u), nv = neighbors(g, v);
                     std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
                     // Pick C of size d-1 making t(C+u+v) = a + e_j.
                     std::optional<std::vector<Vertex>> chosen;
                     for_each_subset(common, static_cast<std::size_t>(d - 1), [&](const Face& c) {
                       if (chosen) return;
                       auto w = c;
                       w.push_back(u);
                       w.push_back(v);
                       if (hall_condition(from_coloring(k, a), w)) chosen = c;
                     });
                     Json data;
                     data["u"] = u;
                     data["v"] = v;
                     if (!chosen) {
                       data["error"] = "no admissible C";
                       return exact(false, std::move(data));
                     }
                     data["C"] = to_json(*chosen);
                     const Graph gc = contract(g, u, v);
                     const SupportMap l = from_coloring(k, a);
                     SupportMap lc{l.dim, {}};
                     for (Vertex w : gc.vertices) lc.allowed[w] = l(w);
                     const auto base = is_sparse_rigid(gc, lc, ctx.trials, ctx.seed);
                     data["contracted"] = to_json(base);
                     if (!base.rigid) return evidence(false, std::move(data));
                     Rng rng(derive_seed(ctx.seed, 999));
                     Point z(static_cast<std::size_t>(d), Rational(0));
                     for (int j : l(v)) z[static_cast<std::size_t>(j)] = Rational(static_cast<long>(uniform_in(rng, 1, kSampleBound - 1)));
                     const auto split = vertex_split(*base.witness, g, u, v, *chosen, z);
                     data["split_t"] = to_string(split.t);
                     data["split_rigid"] = split.framework.has_value() && split.report.rigid;
                     return exact(split.applicable && split.report.rigid, std::move(data));
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- cone lemmas

inline constexpr int kConeCases = 100;

inline std::vector<Instance> cone_equivalence(int) {
  std::vector<Instance> out;
  for (int d : {3, 4}) {
    out.push_back({key_of({{"d", std::to_string(d)}}), [d](const RunContext& ctx) {
                     Rng rng(ctx.seed);
                     std::size_t agree = 0, rigid_cases = 0, resamples = 0;
                     Json mismatches = Json::array();
                     for (int i = 0; i < kConeCases; ++i) {
                       while (true) {
                         const auto n = static_cast<int>(uniform_in(rng, d, d + 4));
                         const double density = std::array<double, 3>{0.55, 0.8, 1.0}[uniform_below(rng, 3)];
                         std::vector<Vertex> vs;
                         std::vector<Edge> es;
                         for (int x = 1; x <= n; ++x) vs.push_back(x);
                         for (int x = 1; x <= n; ++x)
                           for (int y = x + 1; y <= n; ++y)
                             if (static_cast<double>(uniform_below(rng, 1000)) < density * 1000) es.emplace_back(x, y);
                         const Vertex apex = n + 1;
                         const Graph cg = cone_graph(make_graph(vs, es), apex);
                         Framework fw{cg, d + 1, {}};
                         for (Vertex x : cg.vertices) {
                           Point p;
                           for (int k = 0; k <= d; ++k) p.emplace_back(static_cast<long>(uniform_in(rng, -4, 4)));
                           fw.points[x] = std::move(p);
                         }
                         AffineFunctional h;
                         for (int k = 0; k <= d; ++k) h.normal.emplace_back(static_cast<long>(uniform_in(rng, -3, 3)));
                         h.offset = static_cast<long>(uniform_in(rng, -5, 5));
                         bool coincident = false;
                         for (Vertex x : vs) coincident = coincident || fw(x) == fw(apex);
                         if (coincident) {
                           ++resamples;
                           continue;
                         }
                         Framework proj;
                         try {
                           proj = cone_project(fw, apex, h);
                         } catch (const GeometryError&) {
                           ++resamples;
                           continue;
                         }
                         const bool a = is_infinitesimally_rigid(fw).rigid;
                         const bool b = is_infinitesimally_rigid(proj).rigid;
                         rigid_cases += a ? 1 : 0;
                         if (a == b) ++agree;
                         else mismatches.push_back(i);
                         break;
                       }
                     }
                     Json data;
                     data["cases"] = kConeCases;
                     data["agree"] = agree;
                     data["rigid_cases"] = rigid_cases;
                     data["flexible_cases"] = kConeCases - rigid_cases;
                     data["resamples"] = resamples;
                     data["mismatches"] = std::move(mismatches);
                     return exact(agree == static_cast<std::size_t>(kConeCases), std::move(data));
                   }});
  }
  return out;
}

/// Random base support maps on G * {apex} meeting the sparse-cone condition.
inline SupportMap random_cone_support(Rng& rng, int dim, const std::vector<Vertex>& base, Vertex apex, int& i) {
  SupportMap l{dim, {}};
  std::vector<int> all(static_cast<std::size_t>(dim));
  for (int j = 0; j < dim; ++j) all[static_cast<std::size_t>(j)] = j;
  auto subset = [&](std::size_t size, const std::vector<int>& from) {
    auto s = from;
    seeded_shuffle(s, rng);
    s.resize(std::min(size, s.size()));
    std::sort(s.begin(), s.end());
    return s;
  };
  const auto la = subset(static_cast<std::size_t>(uniform_in(rng, 1, 2)), all);
  i = la[uniform_below(rng, la.size())];
  l.allowed[apex] = la;
  for (Vertex u : base) {
    if (uniform_below(rng, 2) == 0) {
      std::vector<int> rest;
      for (int j : all)
        if (j != i) rest.push_back(j);
      l.allowed[u] = subset(static_cast<std::size_t>(uniform_in(rng, 1, static_cast<std::int64_t>(rest.size()))), rest);
    } else {
      std::set<int> s(la.begin(), la.end());
      for (int j : subset(static_cast<std::size_t>(uniform_in(rng, 0, 2)), all)) s.insert(j);
      std::vector<int> droppable;
      for (int j : la)
        if (j != i) droppable.push_back(j);
      if (!droppable.empty() && uniform_below(rng, 2) == 0) s.erase(droppable[uniform_below(rng, droppable.size())]);
      if (s.size() < 2) s.insert(all[(static_cast<std::size_t>(i) + 1) % all.size()]);
      l.allowed[u] = {s.begin(), s.end()};
    }
  }
  return l;
}

inline std::vector<Instance> sparse_cone(int) {
  std::vector<Instance> out;
  // Structured cases: a coloured base with the apex on a fresh coordinate or
  // sharing a block.
  struct Fixed {
    std::string name;
    int d;
    std::vector<int> a;
    std::vector<int> apex_support;
    int i;
  };
  const std::vector<Fixed> fixed{{"cross3,apex-new-axis", 3, {1, 1, 1}, {3}, 3},
                                 {"cross3,apex-shares-axis", 3, {1, 1, 1}, {0, 3}, 3},
                                 {"cross4(2,2),apex-new-axis", 4, {2, 2}, {4}, 4}};
  for (const auto& f : fixed) {
    out.push_back({key_of({{"case", f.name}}), [f](const RunContext& ctx) {
                     const auto x = cross_polytope_boundary(f.d);
                     const Graph g = graph_of(x.complex);
                     const Vertex apex = x.complex.max_vertex() + 1;
                     SupportMap l = from_coloring(merge_colors(x.coloring, f.a), f.a);
                     l.dim = f.d + 1;
                     l.allowed[apex] = f.apex_support;
                     const SupportMap lp = cone_support_map(l, apex, f.i);
                     const auto cone = is_sparse_rigid(cone_graph(g, apex), l, ctx.trials, ctx.seed);
                     const auto base = is_sparse_rigid(g, lp, ctx.trials, derive_seed(ctx.seed, 1));
                     Json data;
                     data["base_support"] = to_json(lp);
                     data["cone_rigid"] = cone.rigid;
                     data["base_rigid"] = base.rigid;
                     return evidence(cone.rigid == base.rigid, std::move(data));
                   }});
  }
  for (int dim : {3, 4}) {
    for (int rep = 0; rep < 10; ++rep) {
      out.push_back({key_of({{"dim", std::to_string(dim)}, {"rep", pad(rep)}}), [dim](const RunContext& ctx) {
                       Rng rng(ctx.seed);
                       const auto n = static_cast<int>(uniform_in(rng, dim, dim + 3));
                       std::vector<Vertex> vs;
                       std::vector<Edge> es;
                       for (int x = 1; x <= n; ++x) vs.push_back(x);
                       for (int x = 1; x <= n; ++x)
                         for (int y = x + 1; y <= n; ++y)
                           if (uniform_below(rng, 10) < 8) es.emplace_back(x, y);
                       const Graph g = make_graph(vs, es);
                       const Vertex apex = n + 1;
                       int i = 0;
                       const SupportMap l = random_cone_support(rng, dim, vs, apex, i);
                       const SupportMap lp = cone_support_map(l, apex, i);
                       const auto cone = is_sparse_rigid(cone_graph(g, apex), l, ctx.trials, ctx.seed);
                       const auto base = is_sparse_rigid(g, lp, ctx.trials, derive_seed(ctx.seed, 1));
                       Json data;
                       data["i"] = i;
                       data["support"] = to_json(l);
                       data["base_support"] = to_json(lp);
                       data["cone_rigid"] = cone.rigid;
                       data["base_rigid"] = base.rigid;
                       return evidence(cone.rigid == base.rigid, std::move(data));
                     }});
    }
  }
  return out;
}

inline std::vector<Instance> cone_colorings(int) {
  std::vector<Instance> out;
  const std::vector<std::tuple<std::string, std::function<ColoredComplex(std::uint64_t)>, std::vector<int>>> cases{
      {"cross3", cross(3), {1, 1, 1}}, {"cross4", cross(4), {2, 2}}, {"cross-sum(3,9)", cross_sum(3, 9), {1, 1, 1}}};
  for (const auto& [name, make, a] : cases) {
    out.push_back({key_of({{"complex", name}, {"a", vec_str(a)}}), [make = make, a = a](const RunContext& ctx) {
                     const auto x = make(ctx.seed);
                     const ColorMap k = merge_colors(x.coloring, a);
                     const Graph g = graph_of(x.complex);
                     const auto premise = is_sparse_rigid(g, from_coloring(k, a), ctx.trials, ctx.seed);
                     Json data;
                     data["premise_rigid"] = premise.rigid;
                     if (!premise.rigid) return evidence(false, std::move(data));
                     const Vertex apex = x.complex.max_vertex() + 1;
                     const Graph cg = cone_graph(g, apex);
                     Status s = Status::pass;
                     Json cones = Json::array();
                     const int m = static_cast<int>(a.size());
                     // New color m+1 with a_{m+1} = 1, then the apex joining each existing color.
                     for (int c = 1; c <= m + 1; ++c) {
                       auto a2 = a;
                       if (c == m + 1) a2.push_back(1);
                       else ++a2[static_cast<std::size_t>(c - 1)];
                       ColorMap k2 = k;
                       k2.color[apex] = c;
                       k2.palette = static_cast<int>(a2.size());
                       const auto v = is_sparse_rigid(cg, from_coloring(k2, a2), ctx.trials,
                                                      derive_seed(ctx.seed, static_cast<std::uint64_t>(c)));
                       cones.push_back({{"apex_color", c}, {"a", to_json(a2)}, {"rigid", v.rigid}});
                       if (!v.rigid) s = worst(s, Status::warn);
                     }
                     data["cones"] = std::move(cones);
                     return combine(s, std::move(data));
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- further sparse statements

inline std::vector<Instance> near_balanced(int) {
  std::vector<Instance> out;
  struct Case {
    std::string name;
    int d;
    std::vector<int> a;
    bool twist;  ///< recolor one vertex so facets have types a or a + e_2 - e_1
    bool stacked;
  };
  const std::vector<Case> cases{{"cross4,a=(4)", 4, {4}, false, false},
                                {"stacked(4,7),a=(4)", 4, {4}, false, true},
                                {"cross6,a=(4,2)", 6, {4, 2}, false, false},
                                {"cross6,a=(4,2),twisted", 6, {4, 2}, true, false}};
  for (const auto& cs : cases) {
    out.push_back({key_of({{"case", cs.name}}), [cs](const RunContext& ctx) {
                     Complex c;
                     ColorMap k;
                     if (cs.stacked) {
                       c = stacked_sphere(cs.d, 7, ctx.seed);
                       k = constant_coloring(c);
                     } else {
                       const auto x = cross_polytope_boundary(cs.d);
                       c = x.complex;
                       k = merge_colors(x.coloring, cs.a);
                       if (cs.twist) k.color[cross_vertex(4, false)] = 2;
                     }
                     const int m = static_cast<int>(cs.a.size());
                     // Every facet must have type a + e_j - e_1 for some j.
                     bool types_ok = true;
                     for (const auto& f : c.facets()) {
                       const auto t = color_type(k, f, m);
                       bool any = false;
                       for (int j = 0; j < m; ++j) {
                         auto want = cs.a;
                         --want[0];
                         ++want[static_cast<std::size_t>(j)];
                         any = any || t == want;
                       }
                       types_ok = types_ok && any;
                     }
                     Json data;
                     data["facet_types_ok"] = types_ok;
                     data["minimal_cycle_z2"] = is_minimal_cycle_complex(c, Ring::z2);
                     if (!types_ok || !data["minimal_cycle_z2"].get<bool>()) return exact(false, std::move(data));
                     const auto v = is_sparse_rigid(graph_of(c), from_coloring(k, cs.a), ctx.trials, ctx.seed);
                     data["verdict"] = to_json(v);
                     return evidence(v.rigid, std::move(data));
                   }});
  }
  return out;
}

/// Greedy set S with |F ∩ S| <= cap for every facet; its complement is then
/// (>= d - cap)-transversal.
inline std::vector<Vertex> capped_set(const Complex& c, int cap) {
  std::set<Vertex> s;
  for (Vertex v : c.vertices()) {
    s.insert(v);
    for (const auto& f : c.facets()) {
      int hit = 0;
      for (Vertex x : f) hit += s.count(x) ? 1 : 0;
      if (hit > cap) {
        s.erase(v);
        break;
      }
    }
  }
  return {s.begin(), s.end()};
}

inline std::vector<Instance> transversal_free(int) {
  std::vector<Instance> out;
  struct Case {
    std::string name;
    int d;
    int a;                        ///< transversality of X
    std::vector<int> b;           ///< caps on the remaining colors
    std::vector<int> free_colors; ///< proper colors forming X (cross-polytope cases)
    bool stacked;
  };
  const std::vector<Case> cases{{"cross3,X=colors{1,2}", 3, 2, {1}, {1, 2}, false},
                                {"cross4,X=colors{1,2}", 4, 2, {1, 1}, {1, 2}, false},
                                {"cross4,X=colors{1,2,3}", 4, 3, {1}, {1, 2, 3}, false},
                                {"stacked(4,8),greedy-X", 4, 2, {2}, {}, true}};
  for (const auto& cs : cases) {
    out.push_back({key_of({{"case", cs.name}}), [cs](const RunContext& ctx) {
                     Complex c;
                     std::vector<Vertex> x;
                     ColorMap k{{}, static_cast<int>(cs.b.size())};
                     if (cs.stacked) {
                       c = stacked_sphere(cs.d, 8, ctx.seed);
                       const auto rest = capped_set(c, cs.d - cs.a);
                       for (Vertex v : c.vertices())
                         if (!std::binary_search(rest.begin(), rest.end(), v)) x.push_back(v);
                       for (Vertex v : rest) k.color[v] = 1;
                     } else {
                       const auto cp = cross_polytope_boundary(cs.d);
                       c = cp.complex;
                       int next = 1;
                       std::map<int, int> remap;
                       for (int col = 1; col <= cs.d; ++col)
                         if (std::find(cs.free_colors.begin(), cs.free_colors.end(), col) == cs.free_colors.end())
                           remap[col] = next++;
                       for (Vertex v : c.vertices()) {
                         const int col = cp.coloring(v);
                         if (remap.count(col)) k.color[v] = remap[col];
                         else x.push_back(v);
                       }
                     }
                     Json data;
                     data["X"] = to_json(x);
                     data["transversal"] = is_transversal(c, x, cs.a);
                     data["minimal_cycle_z2"] = is_minimal_cycle_complex(c, Ring::z2);
                     if (!data["transversal"].get<bool>() || !data["minimal_cycle_z2"].get<bool>())
                       return exact(false, std::move(data));
                     const SupportMap l = transversal_support_map(c, x, k, cs.b, cs.a);
                     data["support"] = to_json(l);
                     const auto v = is_sparse_rigid(graph_of(c), l, ctx.trials, ctx.seed);
                     data["verdict"] = to_json(v);
                     return evidence(v.rigid, std::move(data));
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- chains

struct NamedComplex {
  std::string name;
  Complex complex;
};

inline std::vector<NamedComplex> small_corpus(std::uint64_t seed) {
  std::vector<NamedComplex> out{{"simplex-boundary(2)", simplex_boundary(2)},
                                {"simplex-boundary(3)", simplex_boundary(3)},
                                {"simplex-boundary(4)", simplex_boundary(4)},
                                {"cross3", cross_polytope_boundary(3).complex},
                                {"cross4", cross_polytope_boundary(4).complex},
                                {"cross-sum(3,9)", stacked_cross_polytopal_sphere(3, 9, seed).complex},
                                {"cross-sum(3,12)", stacked_cross_polytopal_sphere(3, 12, seed).complex},
                                {"subdivided-simplex-boundary(3)", subdivide_all_facets(simplex_boundary(3)).complex},
                                {"torus7", seven_vertex_torus()},
                                {"projective-plane6", projective_plane6()},
                                {"theta", theta_complex()},
                                {"two-tetrahedra", disjoint_tetrahedra()},
                                {"cross3-minus-facet", minus_facet(cross_polytope_boundary(3).complex, 0)},
                                {"single-facet", Complex::from_facets({{1, 2, 3}})}};
  for (int n = 5; n <= 12; ++n) out.push_back({"stacked(3," + pad(n) + ")", stacked_sphere(3, n, seed)});
  for (int n = 6; n <= 10; ++n) out.push_back({"stacked(4," + pad(n) + ")", stacked_sphere(4, n, seed)});
  return out;
}

inline std::vector<Instance> minimal_cycle_oracle(int) {
  std::vector<Instance> out;
  for (const auto& nc : small_corpus(0)) {
    out.push_back({key_of({{"complex", nc.name}}), [name = nc.name](const RunContext& ctx) {
                     Complex c;
                     for (auto& x : small_corpus(ctx.seed))
                       if (x.name == name) c = x.complex;
                     Json data;
                     data["facets"] = c.facets().size();
                     const bool kernel = is_minimal_cycle_complex(c, Ring::z2);
                     const bool brute = z2_minimal_by_enumeration(c);
                     data["kernel_method"] = kernel;
                     data["enumeration"] = brute;
                     data["pseudomanifold"] = is_pseudomanifold(c);
                     bool ok = kernel == brute && c.facets().size() <= 20;
                     if (data["pseudomanifold"].get<bool>()) {
                       const auto basic = verify_basic_lemma(c);
                       data["basic_lemma"] = {{"strongly_connected", basic.strongly_connected},
                                              {"ridges_in_two_facets", basic.ridges_in_two_facets},
                                              {"enough_vertices", basic.enough_vertices}};
                       ok = ok && kernel && basic.all();
                     }
                     return exact(ok, std::move(data));
                   }});
  }
  return out;
}

inline std::vector<Instance> basic_lemma(int) {
  std::vector<Instance> out;
  std::vector<std::pair<std::string, std::function<Complex(std::uint64_t)>>> corpus{
      {"torus7", [](std::uint64_t) { return seven_vertex_torus(); }},
      {"projective-plane6", [](std::uint64_t) { return projective_plane6(); }},
      {"cross5", [](std::uint64_t) { return cross_polytope_boundary(5).complex; }},
      {"subdivided-stacked(4,7)", [](std::uint64_t s) { return subdivide_all_facets(stacked_sphere(4, 7, s)).complex; }}};
  for (int d = 3; d <= 5; ++d) {
    corpus.push_back({"stacked(" + std::to_string(d) + ",12)", [d](std::uint64_t s) { return stacked_sphere(d, 12, s); }});
    corpus.push_back({"cross-sum(" + std::to_string(d) + "," + pad(3 * d) + ")",
                      [d](std::uint64_t s) { return stacked_cross_polytopal_sphere(d, 3 * d, s).complex; }});
  }
  for (const auto& [name, make] : corpus) {
    out.push_back({key_of({{"complex", name}}), [make = make](const RunContext& ctx) {
                     const Complex c = make(ctx.seed);
                     const auto r = verify_basic_lemma(c, Ring::z2);
                     Json data;
                     data["precondition"] = r.precondition;
                     data["pseudomanifold"] = is_pseudomanifold(c);
                     data["strongly_connected"] = r.strongly_connected;
                     data["ridges_in_two_facets"] = r.ridges_in_two_facets;
                     data["enough_vertices"] = r.enough_vertices;
                     return exact(r.precondition && r.all(), std::move(data));
                   }});
  }
  return out;
}

inline std::vector<Instance> decomposition_verifier(int) {
  // Δ = ∂[1234] # ∂[1235] along 123; contracting 12 needs two parts.
  const Complex two = Complex::from_facets({{1, 2, 4}, {1, 3, 4}, {2, 3, 4}, {1, 2, 5}, {1, 3, 5}, {2, 3, 5}});
  auto tet = [](std::initializer_list<Vertex> vs) {
    std::vector<Face> fs;
    for_each_subset(make_face(vs), 3, [&](const Face& f) { fs.push_back(f); });
    return Complex::from_facets(fs);
  };
  const Complex oct = cross_polytope_boundary(3).complex;
  struct Case {
    std::string name;
    Complex delta;
    Vertex u, v;
    std::vector<Complex> parts;
    bool expect_all;
    std::string expect_failing;  ///< property that must fail, if any
  };
  const std::vector<Case> cases{
      {"cross3,single-part", oct, 1, 3, {oct}, true, ""},
      {"stacked5,two-parts", two, 1, 2, {tet({1, 2, 3, 4}), tet({1, 2, 3, 5})}, true, ""},
      {"stacked5,no-parts", two, 1, 2, {}, false, "d"},
      {"stacked5,missing-part", two, 1, 2, {tet({1, 2, 3, 4})}, false, "d"},
      {"stacked5,foreign-facet", two, 1, 2, {tet({1, 2, 3, 4}), tet({1, 2, 4, 5}), tet({1, 2, 3, 5})}, false, "b"}};
  std::vector<Instance> out;
  for (const auto& cs : cases) {
    out.push_back({key_of({{"case", cs.name}}), [cs](const RunContext&) {
                     const auto r = verify_fogelsanger(cs.delta, cs.u, cs.v, cs.parts, Ring::z2);
                     Json data;
                     data["parts_valid"] = r.parts_valid;
                     for (const auto& [k, val] : std::vector<std::pair<std::string, bool>>{
                              {"a", r.a}, {"b", r.b}, {"c", r.c}, {"d", r.d}, {"e", r.e}})
                       data[k] = val;
                     data["violations"] = r.violations;
                     bool ok = r.all() == cs.expect_all;
                     if (!cs.expect_failing.empty()) ok = ok && !data[cs.expect_failing].get<bool>();
                     return exact(ok, std::move(data));
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- construction replays

/// Stacked-sphere construction replayed as gluings of K_{d+1} onto the
/// previous graph, at one generic configuration of the final vertex set.
inline std::vector<Instance> gluing_replay(int) {
  std::vector<Instance> out;
  for (int d = 3; d <= 5; ++d) {
    out.push_back({key_of({{"family", "stacked"}, {"d", std::to_string(d)}}), [d](const RunContext& ctx) {
                     const auto s = stacked_sphere_with_history(d, d + 7, ctx.seed);
                     const Graph full = graph_of(s.complex);
                     const Framework fw = sample_sparse(full, free_support(full.vertices, d), ctx.seed);
                     std::vector<Vertex> current(static_cast<std::size_t>(d + 1));
                     for (int x = 0; x <= d; ++x) current[static_cast<std::size_t>(x)] = x + 1;
                     std::size_t premises = 0, violations = 0;
                     for (const auto& step : s.steps) {
                       auto piece = step.facet;
                       piece.push_back(step.apex);
                       auto next = current;
                       next.push_back(step.apex);
                       const Framework f1 = fw.restricted(current);
                       Framework f2{make_graph(piece, {}), d, {}};
                       std::vector<Edge> clique;
                       for (std::size_t a = 0; a < piece.size(); ++a)
                         for (std::size_t b = a + 1; b < piece.size(); ++b) clique.emplace_back(piece[a], piece[b]);
                       f2.graph = make_graph(piece, clique);
                       for (Vertex x : piece) f2.points[x] = fw(x);
                       Framework f12{graph_union(f1.graph, f2.graph), d, {}};
                       for (Vertex x : f12.graph.vertices) f12.points[x] = fw(x);
                       const bool premise = glue_precondition(fw, current, piece) &&
                                            is_infinitesimally_rigid(f1).rigid && is_infinitesimally_rigid(f2).rigid;
                       if (premise) {
                         ++premises;
                         if (!is_infinitesimally_rigid(f12).rigid) ++violations;
                       }
                       current = next;
                     }
                     Json data;
                     data["steps"] = s.steps.size();
                     data["premises_met"] = premises;
                     data["violations"] = violations;
                     data["final_rigid"] = is_infinitesimally_rigid(fw).rigid;
                     return exact(violations == 0 && premises == s.steps.size(), std::move(data));
                   }});
  }
  for (int d = 3; d <= 4; ++d) {
    out.push_back({key_of({{"family", "cross-sum"}, {"d", std::to_string(d)}}), [d](const RunContext& ctx) {
                     const auto c1 = cross_polytope_boundary(d).complex;
                     const auto c2 = shift_labels(c1, c1.max_vertex());
                     std::map<Vertex, Vertex> gamma;
                     const Face f1 = c1.facets().front(), f2 = c2.facets().back();
                     for (std::size_t i = 0; i < f1.size(); ++i) gamma[f1[i]] = f2[i];
                     const auto sum = connected_sum(c1, c2, f1, f2, gamma);
                     const Graph g = graph_of(sum.complex);
                     const Framework fw = sample_sparse(g, free_support(g.vertices, d), ctx.seed);
                     std::vector<Vertex> second;
                     for (const auto& [from, to] : sum.second_to_result) second.push_back(to);
                     const Framework a = fw.restricted(c1.vertices());
                     const Framework b = fw.restricted(second);
                     const bool premise = glue_precondition(fw, c1.vertices(), second) &&
                                          is_infinitesimally_rigid(a).rigid && is_infinitesimally_rigid(b).rigid;
                     const bool union_is_all = graph_union(a.graph, b.graph) == g;
                     const bool conclusion = is_infinitesimally_rigid(fw).rigid;
                     Json data;
                     data["premise"] = premise;
                     data["union_is_whole_graph"] = union_is_all;
                     data["union_rigid"] = conclusion;
                     return exact(premise && union_is_all && conclusion, std::move(data));
                   }});
  }
  return out;
}

/// Stacking a vertex over a facet F is a vertex split of u ∈ F with
/// C = F - u; every step must extend a rigid framework to a rigid one.
inline std::vector<Instance> splitting_replay(int) {
  std::vector<Instance> out;
  for (int d = 3; d <= 5; ++d) {
    out.push_back({key_of({{"d", std::to_string(d)}}), [d](const RunContext& ctx) {
                     const auto s = stacked_sphere_with_history(d, d + 7, ctx.seed);
                     Rng rng(ctx.seed);
                     auto generic = [&](std::size_t len) {
                       Point p;
                       for (std::size_t k = 0; k < len; ++k)
                         p.emplace_back(static_cast<long>(uniform_in(rng, 1, kSampleBound - 1)));
                       return p;
                     };
                     const Complex start = simplex_boundary(d);
                     Framework fw{graph_of(start), d, {}};
                     for (Vertex x : fw.graph.vertices) fw.points[x] = generic(static_cast<std::size_t>(d));
                     bool ok = is_infinitesimally_rigid(fw).rigid;
                     Json steps = Json::array();
                     for (const auto& step : s.steps) {
                       const Vertex u = step.facet.front();
                       const auto c = face_minus(step.facet, u);
                       auto piece = step.facet;
                       piece.push_back(step.apex);
                       std::vector<Edge> es = fw.graph.edges;
                       for (Vertex w : step.facet) es.emplace_back(w, step.apex);
                       const Graph g = make_graph(fw.graph.vertices, es);
                       const auto split = vertex_split(fw, g, u, step.apex, c, generic(static_cast<std::size_t>(d)));
                       steps.push_back({{"apex", step.apex}, {"t", to_string(split.t)}, {"trials", split.trials}});
                       if (!split.applicable || !split.framework) {
                         ok = false;
                         break;
                       }
                       fw = *split.framework;
                     }
                     Json data;
                     data["steps"] = std::move(steps);
                     const bool matches = fw.graph == graph_of(s.complex);
                     data["final_graph_matches"] = matches;
                     return exact(ok && matches, std::move(data));
                   }});
  }
  return out;
}

// ---------------------------------------------------------------- determinism

inline std::vector<Instance> determinism(int) {
  std::vector<Instance> out;
  for (const std::string id : {"cross-sum-equality", "example-7.4", "thm-7.1", "cor-5.3", "lemma-3.2-verifier"}) {
    out.push_back({key_of({{"claim", id}}), [id](const RunContext& ctx) {
                     const auto& reg = claim_registry();
                     const auto it = std::find_if(reg.begin(), reg.end(), [&](const Claim& c) { return c.id == id; });
                     const auto first = run_claim(*it, ctx.seed, ctx.trials, 1).report.dump(2);
                     const auto second = run_claim(*it, ctx.seed, ctx.trials, 2).report.dump(2);
                     Json data;
                     data["bytes"] = first.size();
                     data["identical"] = first == second;
                     return exact(first == second, std::move(data));
                   }});
  }
  return out;
}

}  // namespace claims

inline const std::vector<Claim>& claim_registry() {
  static const std::vector<Claim> registry{
      {"cross-sum-equality", "stacked cross-polytopal spheres satisfy 2 h2 = (d-1) h1",
       "stacked cross-polytopal spheres, d=3 n in {6,9,12}, d=4 n in {8,12}", claims::cross_sum_equality},
      {"cor-4.3", "balanced minimal cycle complexes satisfy 2 h2 >= (d-1) h1",
       "30 stacked cross-polytopal spheres, d in {3,4}, varied sizes and seeds", claims::balanced_lbt},
      {"thm-4.1", "for |T| >= 3 the T-rank-selected subgraph is rigid in R^|T|",
       "boundary of the 4-cross-polytope, cross-polytopal sums (4,12) and (3,9)", claims::rank_selected_rigidity},
      {"thm-7.1", "balanced 2-spheres are (kappa,(1,1,1))-sparse rigid",
       "octahedron and 3-dimensional cross-polytopal sums", claims::balanced_two_spheres},
      {"thm-6.1", "a-balanced minimal cycle complexes with all a_i >= 2 are (kappa,a)-sparse rigid",
       "cross-polytope boundaries and sums, d in {4,5,6}", claims::blocks_at_least_two},
      {"thm-7.3", "a-balanced members of Kalai's class C_d with a not (d-1,1),(1,d-1) are sparse rigid",
       "cross-polytope boundaries d in {4,5} and a (4,12) sum", claims::class_cd_spheres},
      {"example-7.4",
       "subdivided stacked spheres under the (d-1,1)-coloring carry >= f0(Gamma)-d stresses and are flexible",
       "Gamma stacked, d=3 f0 in {4,6,8}, d=4 f0 in {5,7}; >= 5 sparse samples each", claims::subdivided_flexible},
      {"cor-5.3",
       "for an l.s.o.p. p: dim1 = h1, dim2 = h2, and x omega is injective iff (G,p) is infinitesimally rigid",
       "cross-polytopes, stacked spheres and a subdivided stacked sphere with colored s.o.p.s", claims::lee_identities},
      {"lemma-6.2-oracle", "Hall condition <=> affine independence of generic sparse points",
       "1000 random (L,U) per d in {3,4,5}, 3 samples each", claims::hall_oracle},
      {"lemma-2.3-equivalence", "a cone is rigid in R^{d+1} iff its central projection is rigid in R^d",
       "100 random cone frameworks per d in {3,4}, small integer coordinates", claims::cone_equivalence},
      {"minimal-cycle-oracle", "Z2 kernel minimality agrees with facet-subset enumeration",
       "complexes with at most 20 facets, including non-cycles and non-orientable surfaces",
       claims::minimal_cycle_oracle},
      {"lemma-3.1", "nontrivial minimal cycle complexes are strongly connected, ridges lie in >= 2 facets, |V| >= d+1",
       "generated pseudomanifolds d in {3,4,5}, torus, projective plane", claims::basic_lemma},
      {"lemma-3.2-verifier", "the decomposition verifier accepts valid decompositions and pinpoints broken ones",
       "hand-built decompositions of the octahedron and of a stacked 2-sphere", claims::decomposition_verifier},
      {"lemma-2.1-gluing", "two rigid frameworks sharing a (d-1)-spanning set glue to a rigid framework",
       "stacked-sphere and cross-sum constructions at generic points", claims::gluing_replay},
      {"lemma-2.2-splitting", "vertex splitting extends rigid frameworks for some t in {1, 1/2, ...}",
       "stacked-sphere constructions d in {3,4,5} as split sequences", claims::splitting_replay},
      {"cor-6.4", "a (d+1)-set meets the Hall condition under L_(kappa,a) iff its type is a + e_j; splits lift",
       "all color types for eight a; same-color splits of cross-polytopes", claims::hall_types},
      {"lemma-7.5", "G * {v} is L-sparse rigid iff G is L'-sparse rigid",
       "colored cross-polytopes and random small graphs with admissible supports", claims::sparse_cone},
      {"cor-7.6", "coning a (kappa,a)-sparse rigid graph with a new color or an existing color stays sparse rigid",
       "octahedron, 4-cross-polytope (2,2), a (3,9) sum", claims::cone_colorings},
      {"prop-8.1", "minimal cycle complexes with facet types a + e_j - e_1 (a_1 >= 4) are sparse rigid",
       "4-cross-polytope and stacked 3-sphere with a=(4); 6-cross-polytope with a=(4,2), balanced and twisted",
       claims::near_balanced},
      {"prop-8.2", "full support on an (>= a)-transversal set plus capped colors gives sparse rigidity",
       "cross-polytopes with free color classes; stacked 3-sphere with a greedy transversal",
       claims::transversal_free},
      {"conj-equivalence", "x omega injectivity agrees with the rigidity verdict on the same sparse configuration",
       "the colored s.o.p. corpus of cor-5.3", claims::conjecture_equivalence},
      {"determinism", "verify reports are byte-identical across runs and thread counts",
       "five claims re-run with 1 and 2 workers", claims::determinism},
  };
  return registry;
}

inline const Claim& find_claim(const std::string& id) {
  const auto& reg = claim_registry();
  auto it = std::find_if(reg.begin(), reg.end(), [&](const Claim& c) { return c.id == id; });
  if (it == reg.end()) throw UsageError("unknown claim '" + id + "' (see list-claims)");
  return *it;
}

/// The acceptance criteria, numbered 1..10, and the claims that settle each.
struct Criterion {
  int number;
  std::string summary;
  std::vector<std::string> claims;
};

inline const std::vector<Criterion>& acceptance_criteria() {
  static const std::vector<Criterion> criteria{
      {1, "stacked cross-polytopal spheres: 2 h2 = (d-1) h1 exactly", {"cross-sum-equality"}},
      {2, "balanced lower bound 2 h2 >= (d-1) h1 on 30 balanced spheres", {"cor-4.3"}},
      {3, "rank-selected subcomplexes are rigid with rank |T| f0 - C(|T|+1,2)", {"thm-4.1"}},
      {4, "sparse rigidity witnesses within the trial budget", {"thm-7.1", "thm-6.1", "thm-7.3"}},
      {5, "subdivided stacked spheres are flexible with the predicted stresses", {"example-7.4"}},
      {6, "graded dimensions dim1 = h1 and dim2 = h2 for verified l.s.o.p.s", {"cor-5.3"}},
      {7, "Hall condition agrees with exact affine independence", {"lemma-6.2-oracle"}},
      {8, "cone rigidity agrees with projection rigidity", {"lemma-2.3-equivalence"}},
      {9, "minimal-cycle oracle and basic properties of minimal cycle complexes",
       {"minimal-cycle-oracle", "lemma-3.1"}},
      {10, "verify reports are byte-stable under fixed seeds", {"determinism"}},
  };
  return criteria;
}

/// Registry dump: one object per claim, registry order.
inline Json list_claims() {
  Json out = Json::array();
  for (const auto& c : claim_registry())
    out.push_back({{"id", c.id}, {"statement", c.statement}, {"corpus", c.corpus}});
  return out;
}

inline RunOutcome run(const ExperimentSpec& spec) {
  return run_claim(find_claim(spec.claim), spec.seed, spec.trials);
}

}  // namespace rigidlab
