#pragma once

// Chains over Z2 and Q, the boundary operator, cycle / minimal-cycle tests,
// minimal cycle complex recognition and verifiers for the structural
// properties of minimal cycle complexes and of Fogelsanger decompositions.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rigidlab/complex.hpp"
#include "rigidlab/errors.hpp"
#include "rigidlab/linalg.hpp"
#include "rigidlab/random.hpp"

namespace rigidlab {

enum class Ring { z2, q };

inline const char* ring_name(Ring r) { return r == Ring::z2 ? "Z2" : "Q"; }

/// Formal sum of faces of one fixed size.  Zero coefficients are never
/// stored; over Z2 coefficients are reduced mod 2 on insertion.
class Chain {
 public:
  Chain(Ring ring, std::size_t face_size) : ring_(ring), face_size_(face_size) {}

  Ring ring() const noexcept { return ring_; }
  std::size_t face_size() const noexcept { return face_size_; }
  const std::map<Face, Rational>& terms() const noexcept { return terms_; }

  void add(const Face& f, const Rational& coeff) {
    Face face = make_face(f);
    if (face.size() != face_size_) throw ParamError("Chain: face has the wrong size");
    Rational& slot = terms_[face];
    slot += coeff;
    if (ring_ == Ring::z2) {
      if (slot.get_den() != 1) throw ParamError("Chain: Z2 coefficients must be integers");
      Integer r;
      mpz_fdiv_r_ui(r.get_mpz_t(), slot.get_num_mpz_t(), 2);
      slot = Rational(r);
    }
    if (sgn(slot) == 0) terms_.erase(face);
  }

  bool is_zero() const { return terms_.empty(); }

  std::vector<Face> support() const {
    std::vector<Face> out;
    for (const auto& [f, c] : terms_) out.push_back(f);
    return out;
  }

  bool operator==(const Chain& o) const {
    return ring_ == o.ring_ && face_size_ == o.face_size_ && terms_ == o.terms_;
  }

 private:
  Ring ring_;
  std::size_t face_size_;
  std::map<Face, Rational> terms_;
};

/// Sum of all facets with coefficient 1.
inline Chain facet_chain(const Complex& c, Ring ring) {
  if (c.is_empty() || !is_pure(c)) throw PurityError("facet_chain requires a pure complex");
  Chain ch(ring, c.facets().front().size());
  for (const auto& f : c.facets()) ch.add(f, 1);
  return ch;
}

/// ∂F = Σ_{j=1}^{k} (-1)^j F \ {x_j} for F = {x_1 < ... < x_k}; signs are
/// dropped over Z2.
inline Chain boundary(const Chain& ch) {
  if (ch.face_size() == 0) throw ParamError("boundary of a chain of empty faces");
  Chain out(ch.ring(), ch.face_size() - 1);
  for (const auto& [f, coeff] : ch.terms()) {
    for (std::size_t j = 0; j < f.size(); ++j) {
      const bool negative = (j + 1) % 2 == 1;
      out.add(face_minus(f, f[j]), negative ? Rational(-coeff) : coeff);
    }
  }
  return out;
}

inline bool is_cycle(const Chain& ch) { return boundary(ch).is_zero(); }

namespace detail {

/// Sparse boundary columns of `faces`: for each face the (ridge index,
/// sign) pairs, with ridges numbered in lexicographic order.
struct BoundaryColumns {
  std::vector<Face> ridges;
  std::vector<std::vector<std::pair<std::size_t, int>>> columns;
};

inline BoundaryColumns boundary_columns(const std::vector<Face>& faces) {
  std::map<Face, std::size_t> index;
  for (const auto& f : faces)
    for (std::size_t j = 0; j < f.size(); ++j) index.emplace(face_minus(f, f[j]), 0);
  BoundaryColumns bc;
  for (auto& [r, i] : index) {
    i = bc.ridges.size();
    bc.ridges.push_back(r);
  }
  for (const auto& f : faces) {
    std::vector<std::pair<std::size_t, int>> col;
    for (std::size_t j = 0; j < f.size(); ++j)
      col.emplace_back(index.at(face_minus(f, f[j])), (j + 1) % 2 == 1 ? -1 : 1);
    bc.columns.push_back(std::move(col));
  }
  return bc;
}

/// dim { x ∈ ker ∂ over Z2 : supp x ⊆ faces }.
inline std::size_t z2_restricted_kernel_dim(const std::vector<Face>& faces) {
  const auto bc = boundary_columns(faces);
  BitMatrix m(bc.ridges.size(), faces.size());
  for (std::size_t c = 0; c < faces.size(); ++c)
    for (const auto& [r, s] : bc.columns[c]) m.flip(r, c);
  return m.nullity();
}

/// True iff some proper nonempty subset of the terms is itself a cycle.
/// Gray-code enumeration; each step updates the ridge sums of one face.
template <typename Acc>
bool has_proper_subcycle(const BoundaryColumns& bc, const std::vector<Acc>& coeffs) {
  const std::size_t n = coeffs.size();
  std::vector<Acc> sums(bc.ridges.size(), Acc(0));
  std::size_t nonzero = 0;
  std::uint64_t in_set = 0;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    const auto bit = static_cast<std::size_t>(std::countr_zero(step));
    const bool adding = !((in_set >> bit) & 1U);
    in_set ^= std::uint64_t{1} << bit;
    for (const auto& [r, s] : bc.columns[bit]) {
      const bool was_zero = sums[r] == 0;
      if ((s > 0) == adding)
        sums[r] += coeffs[bit];
      else
        sums[r] -= coeffs[bit];
      const bool is_zero = sums[r] == 0;
      if (was_zero && !is_zero) ++nonzero;
      if (!was_zero && is_zero) --nonzero;
    }
    if (nonzero == 0 && in_set != full) return true;
  }
  return false;
}

}  // namespace detail

inline constexpr std::size_t kDefaultCycleBudget = 24;

/// Minimality of a nonzero cycle: its only cycle subchains are 0 and itself.
/// Over Z2 these subchains form the kernel of ∂ restricted to the support,
/// so minimality is kernel dimension 1.  Over Q every proper nonempty subset
/// of the support is tried, up to `budget` faces.  Zero chains and
/// non-cycles are not minimal.
inline bool is_minimal_cycle(const Chain& ch, std::size_t budget = kDefaultCycleBudget) {
  if (ch.is_zero() || !is_cycle(ch)) return false;
  const auto faces = ch.support();
  if (ch.ring() == Ring::z2) return detail::z2_restricted_kernel_dim(faces) == 1;
  if (faces.size() > budget)
    throw BudgetError("is_minimal_cycle: support of " + std::to_string(faces.size()) +
                          " faces exceeds budget " + std::to_string(budget),
                      "nonzero cycle; minimality undetermined");
  const auto bc = detail::boundary_columns(faces);
  // Scale to a common integer multiple; subchain cycles are unaffected.
  Integer den = 1;
  for (const auto& [f, c] : ch.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  bool small = true;
  for (const auto& [f, c] : ch.terms()) {
    ints.push_back(Integer(c * den));
    small = small && mpz_sizeinbase(ints.back().get_mpz_t(), 2) <= 58;
  }
  if (small) {
    std::vector<std::int64_t> c64;
    for (const auto& x : ints) c64.push_back(x.get_si());
    return !detail::has_proper_subcycle(bc, c64);
  }
  return !detail::has_proper_subcycle(bc, ints);
}

/// Whether Δ is spanned by a single facet or by the support of a nonzero
/// minimal (d-1)-cycle over `ring`.
///
/// Z2: the facet indicator must be a cycle with restricted kernel dimension
/// 1.  Q: a cycle supported on all facets is taken from the kernel of ∂
/// restricted to the facets (the basis vector when that kernel is a line,
/// otherwise a seeded random combination) and checked with is_minimal_cycle.
inline bool is_minimal_cycle_complex(const Complex& c, Ring ring,
                                     std::size_t budget = kDefaultCycleBudget,
                                     std::uint64_t seed = 0) {
  if (c.is_empty() || !is_pure(c)) throw PurityError("is_minimal_cycle_complex requires a pure complex");
  const auto& facets = c.facets();
  if (facets.size() == 1) return !facets.front().empty();
  if (ring == Ring::z2) {
    if (!is_cycle(facet_chain(c, Ring::z2))) return false;
    return detail::z2_restricted_kernel_dim(facets) == 1;
  }
  const auto bc = detail::boundary_columns(facets);
  Matrix<Rational> m(bc.ridges.size(), facets.size());
  for (std::size_t col = 0; col < facets.size(); ++col)
    for (const auto& [r, s] : bc.columns[col]) m(r, col) = s;
  const auto basis = nullspace(m);
  if (basis.empty()) return false;
  for (std::size_t col = 0; col < facets.size(); ++col) {
    const bool covered = std::any_of(basis.begin(), basis.end(),
                                     [&](const auto& b) { return sgn(b[col]) != 0; });
    if (!covered) return false;
  }
  auto full_support = [](const std::vector<Rational>& x) {
    return std::all_of(x.begin(), x.end(), [](const Rational& r) { return sgn(r) != 0; });
  };
  if (basis.size() == 1) return full_support(basis.front());
  Rng rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Rational> x(facets.size(), Rational(0));
    for (const auto& b : basis) {
      const Rational w(static_cast<long>(uniform_in(rng, 1, 1 << 20)));
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += w * b[i];
    }
    if (!full_support(x)) continue;
    Chain ch(Ring::q, facets.front().size());
    for (std::size_t i = 0; i < x.size(); ++i) ch.add(facets[i], x[i]);
    if (facets.size() > budget)
      throw BudgetError("is_minimal_cycle_complex: " + std::to_string(facets.size()) +
                            " facets exceed budget " + std::to_string(budget),
                        "a full-support cycle exists; minimality undetermined");
    return is_minimal_cycle(ch, budget);
  }
  return false;
}

/// Outcome of checking the structural conclusions for a nontrivial minimal
/// cycle complex.
struct BasicLemmaReport {
  bool precondition = false;  ///< nontrivial minimal cycle complex over Z2
  bool strongly_connected = false;
  bool ridges_in_two_facets = false;  ///< every (d-2)-face in >= 2 facets
  bool enough_vertices = false;       ///< |V| >= d+1
  std::vector<std::string> violations;

  bool all() const { return strongly_connected && ridges_in_two_facets && enough_vertices; }
};

inline BasicLemmaReport verify_basic_lemma(const Complex& c, Ring ring = Ring::z2) {
  BasicLemmaReport r;
  r.precondition = c.facets().size() > 1 && is_minimal_cycle_complex(c, ring);
  const int d = c.dim() + 1;
  r.strongly_connected = is_strongly_connected(c);
  if (!r.strongly_connected) r.violations.push_back("not strongly connected");
  r.ridges_in_two_facets = true;
  for (const auto& [ridge, owners] : ridge_map(c)) {
    if (owners.size() < 2) {
      r.ridges_in_two_facets = false;
      r.violations.push_back("a ridge lies in a single facet");
      break;
    }
  }
  r.enough_vertices = static_cast<int>(c.vertices().size()) >= d + 1;
  if (!r.enough_vertices) r.violations.push_back("fewer than d+1 vertices");
  return r;
}

/// Per-property outcome for a claimed decomposition Δ_1^+, ..., Δ_m^+ of Δ
/// with respect to the edge uv.
struct FogelsangerReport {
  bool parts_valid = false;  ///< every part is a nontrivial minimal cycle complex
  bool a = false;            ///< uv is an edge of every part
  bool b = false;            ///< facets outside Δ contain u, v and F-u, F-v are faces of Δ
  bool c = false;            ///< every contraction Δ_i^+/uv is a minimal cycle complex
  bool d = false;            ///< the part graphs cover G(Δ) exactly
  bool e = false;            ///< each part shares a facet with the union of the earlier ones
  std::vector<std::string> violations;

  bool all() const { return parts_valid && a && b && c && d && e; }
};

inline FogelsangerReport verify_fogelsanger(const Complex& delta, Vertex u, Vertex v,
                                            const std::vector<Complex>& parts, Ring ring = Ring::z2) {
  FogelsangerReport r;
  auto note = [&](const std::string& what, std::size_t i) {
    std::ostringstream os;
    os << what << " (part " << i + 1 << ")";
    r.violations.push_back(os.str());
  };
  const Face uv = make_face({u, v});
  const std::size_t d = static_cast<std::size_t>(delta.dim() + 1);

  r.parts_valid = true;
  r.a = r.b = r.c = true;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Complex& p = parts[i];
    const bool valid = !p.is_empty() && is_pure(p) && p.dim() == delta.dim() && p.facets().size() > 1 &&
                       is_minimal_cycle_complex(p, ring);
    if (!valid) {
      r.parts_valid = false;
      note("not a nontrivial minimal cycle complex of the right dimension", i);
    }
    if (!p.contains(uv)) {
      r.a = false;
      note("uv is not an edge", i);
    }
    for (const auto& f : p.facets()) {
      if (delta.contains(f)) continue;
      const bool has_uv = is_subface(uv, f);
      const bool ok = has_uv && f.size() == d && delta.contains(face_minus(f, u)) &&
                      delta.contains(face_minus(f, v));
      if (!ok) {
        r.b = false;
        note("facet outside the complex violates the u/v condition", i);
        break;
      }
    }
    bool contracted_ok = false;
    if (p.contains(uv)) {
      const Complex q = contract_edge(p, u, v);
      contracted_ok = is_pure(q) && q.dim() == delta.dim() && is_minimal_cycle_complex(q, ring);
    }
    if (!contracted_ok) {
      r.c = false;
      note("contraction is not a minimal cycle complex", i);
    }
  }
  if (parts.empty()) {
    r.parts_valid = r.a = r.b = r.c = true;
  }

  std::set<Vertex> verts;
  std::set<Edge> edges;
  for (const auto& p : parts) {
    verts.insert(p.vertices().begin(), p.vertices().end());
    for (const auto& e : p.edges()) edges.insert(e);
  }
  const auto de = delta.edges();
  r.d = verts == std::set<Vertex>(delta.vertices().begin(), delta.vertices().end()) &&
        edges == std::set<Edge>(de.begin(), de.end());
  if (!r.d) r.violations.push_back("part graphs do not cover G exactly");

  r.e = true;
  std::set<Face> seen;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) {
      const auto& fs = parts[i].facets();
      const bool shares = std::any_of(fs.begin(), fs.end(), [&](const Face& f) { return seen.count(f) != 0; });
      if (!shares) {
        r.e = false;
        note("shares no facet with the earlier parts", i);
      }
    }
    seen.insert(parts[i].facets().begin(), parts[i].facets().end());
  }
  return r;
}

}  // namespace rigidlab
