#include <gtest/gtest.h>

#include "rigidlab/claims.hpp"
#include "rigidlab/sr_bridge.hpp"

namespace {

using namespace rigidlab;

const auto kOct = cross_polytope_boundary(3);
const std::vector<int> kOnes{1, 1, 1};

TEST(SrBridge, LsopRecognition) {
  const auto cand = colored_sop(kOct.complex, kOct.coloring, kOnes, 1);
  EXPECT_TRUE(is_lsop(kOct.complex, cand).ok);
  auto zero = cand;
  zero.points[1] = Point(3, Rational(0));
  const auto bad = is_lsop(kOct.complex, zero);
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.violating.has_value());
  EXPECT_TRUE(std::binary_search(bad.violating->begin(), bad.violating->end(), 1));
  auto wrong_dim = cand;
  wrong_dim.dim = 2;
  EXPECT_THROW(is_lsop(kOct.complex, wrong_dim), ParamError);
}

TEST(SrBridge, ColoredSop) {
  const auto c4 = cross_polytope_boundary(4);
  const std::vector<int> a{2, 2};
  EXPECT_TRUE(is_lsop(c4.complex, colored_sop(c4.complex, merge_colors(c4.coloring, a), a, 2)).ok);
  ColorMap one{{}, 1};
  for (Vertex v : kOct.complex.vertices()) one.color[v] = 1;
  EXPECT_THROW(colored_sop(kOct.complex, one, kOnes, 0), ParamError);
}

TEST(SrBridge, GradedDimensions) {
  const auto cand = colored_sop(kOct.complex, kOct.coloring, kOnes, 3);
  const auto g = graded_dims(kOct.complex, cand);
  EXPECT_EQ(g.degree1, 3);
  EXPECT_EQ(g.degree2, 3);
  EXPECT_EQ(g.degree2_mod_omega, 0);
}

TEST(SrBridge, OmegaInjectivity) {
  EXPECT_TRUE(omega_injective(kOct.complex, colored_sop(kOct.complex, kOct.coloring, kOnes, 4)).injective);
  const auto t = simplex_boundary(3);
  ColorMap one{{}, 1};
  for (Vertex v : t.vertices()) one.color[v] = 1;
  EXPECT_TRUE(omega_injective(t, colored_sop(t, one, std::vector<int>{3}, 5)).injective);
  const auto sub = subdivide_all_facets(stacked_sphere(3, 6, 1));
  const auto k = claims::apex_coloring(sub);
  const std::vector<int> a{2, 1};
  const auto o = omega_injective(sub.complex, colored_sop(sub.complex, k, a, 6));
  EXPECT_FALSE(o.injective);
  EXPECT_TRUE(o.bookkeeping_ok);
  const auto bowtie = Complex::from_facets({{1, 2, 3}, {3, 4, 5}});
  LsopCandidate any{3, {}, std::nullopt};
  EXPECT_THROW(omega_injective(bowtie, any), ParamError);
}

}  // namespace
