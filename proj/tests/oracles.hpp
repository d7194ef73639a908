#pragma once

// Test-side oracles, written independently of the library's algorithms:
// plain Gauss-Jordan rank over Q, face enumeration by bitmask, h-vectors by
// the alternating-sum formula, and Z2 cycle minimality by subset search.

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;
using Row = std::vector<Q>;

/// Gauss-Jordan rank with rational pivots.
inline std::size_t rank(std::vector<Row> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const Q f = m[i][c] / m[r][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    ++r;
  }
  return r;
}

/// Rigidity matrix rank from scratch: row ij holds p(i)-p(j) in block i and
/// p(j)-p(i) in block j (the sign convention does not affect the rank).
inline std::size_t rigidity_rank(const std::vector<std::pair<int, int>>& edges, const std::map<int, Row>& p) {
  std::map<int, std::size_t> index;
  for (const auto& [v, x] : p) index.emplace(v, index.size());
  const std::size_t d = p.begin()->second.size();
  std::vector<Row> m;
  for (auto [a, b] : edges) {
    Row row(d * p.size(), Q(0));
    for (std::size_t k = 0; k < d; ++k) {
      row[index[a] * d + k] = p.at(a)[k] - p.at(b)[k];
      row[index[b] * d + k] = p.at(b)[k] - p.at(a)[k];
    }
    m.push_back(std::move(row));
  }
  return rank(std::move(m));
}

/// Affine dimension of a point set (-1 when empty).
inline int affine_dim(const std::vector<Row>& pts) {
  if (pts.empty()) return -1;
  std::vector<Row> diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Row r(pts[0].size());
    for (std::size_t k = 0; k < r.size(); ++k) r[k] = pts[i][k] - pts[0][k];
    diffs.push_back(std::move(r));
  }
  return static_cast<int>(rank(std::move(diffs)));
}

/// f-vector (f_{-1}, f_0, ...) by listing every nonempty subset of every
/// facet as a bitmask over the facet's positions.
inline std::vector<std::int64_t> f_vector(const std::vector<std::vector<int>>& facets) {
  std::set<std::vector<int>> faces;
  std::size_t top = 0;
  for (const auto& f : facets) {
    top = std::max(top, f.size());
    for (std::uint32_t mask = 1; mask < (1U << f.size()); ++mask) {
      std::vector<int> s;
      for (std::size_t i = 0; i < f.size(); ++i)
        if ((mask >> i) & 1U) s.push_back(f[i]);
      faces.insert(s);
    }
  }
  std::vector<std::int64_t> out(top + 1, 0);
  out[0] = 1;
  for (const auto& s : faces) ++out[s.size()];
  return out;
}

inline std::int64_t choose(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// h_j = sum_{i=0}^{j} (-1)^{j-i} C(d-i, j-i) f_{i-1}.
inline std::vector<std::int64_t> h_vector(const std::vector<std::int64_t>& f) {
  const auto d = static_cast<std::int64_t>(f.size()) - 1;
  std::vector<std::int64_t> h(static_cast<std::size_t>(d + 1), 0);
  for (std::int64_t j = 0; j <= d; ++j)
    for (std::int64_t i = 0; i <= j; ++i)
      h[static_cast<std::size_t>(j)] +=
          ((j - i) % 2 ? -1 : 1) * choose(d - i, j - i) * f[static_cast<std::size_t>(i)];
  return h;
}

/// Whether the Z2 sum over the facet subset `mask` has zero boundary.
inline bool z2_cycle(const std::vector<std::vector<int>>& facets, std::uint64_t mask) {
  std::map<std::vector<int>, int> count;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (!((mask >> i) & 1U)) continue;
    for (std::size_t drop = 0; drop < facets[i].size(); ++drop) {
      auto r = facets[i];
      r.erase(r.begin() + static_cast<std::ptrdiff_t>(drop));
      count[r] ^= 1;
    }
  }
  for (const auto& [r, c] : count)
    if (c) return false;
  return true;
}

/// Minimal cycle complex over Z2 by trying every facet subset.
inline bool z2_minimal(const std::vector<std::vector<int>>& facets) {
  const std::size_t n = facets.size();
  if (n == 1) return true;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  if (!z2_cycle(facets, all)) return false;
  for (std::uint64_t mask = 1; mask < all; ++mask)
    if (z2_cycle(facets, mask)) return false;
  return true;
}

}  // namespace oracle
