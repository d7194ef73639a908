#include <gtest/gtest.h>

#include "oracles.hpp"
#include "rigidlab/coloring.hpp"
#include "rigidlab/generators.hpp"

namespace {

using namespace rigidlab;

std::vector<std::int64_t> fv(const Complex& c) {
  const auto f = f_vector(c);
  return {f.values.begin(), f.values.end()};
}

TEST(Generators, SimplexBoundaries) {
  EXPECT_EQ(fv(simplex_boundary(2)), (std::vector<std::int64_t>{1, 3, 3}));
  EXPECT_EQ(fv(simplex_boundary(3)), (std::vector<std::int64_t>{1, 4, 6, 4}));
  EXPECT_EQ(fv(simplex_boundary(4)), (std::vector<std::int64_t>{1, 5, 10, 10, 5}));
  EXPECT_THROW(simplex_boundary(0), ParamError);
}

TEST(Generators, CrossPolytopes) {
  EXPECT_EQ(fv(cross_polytope_boundary(3).complex), (std::vector<std::int64_t>{1, 6, 12, 8}));
  const auto c4 = f_vector(cross_polytope_boundary(4).complex);
  EXPECT_EQ(c4.at(0), 8);
  EXPECT_EQ(c4.at(3), 16);
  EXPECT_EQ(cross_polytope_boundary(1).complex.facets(), (std::vector<Face>{{1}, {2}}));
}

TEST(Generators, ConnectedSums) {
  const auto t = simplex_boundary(3);
  EXPECT_THROW(connected_sum(t, t, {1, 2, 3}, {1, 2, 3}, {{1, 1}, {2, 2}, {3, 3}}), ConstructionError);
  const auto s = connected_sum(t, shift_labels(t, 4), {1, 2, 3}, {5, 6, 7}, {{1, 5}, {2, 6}, {3, 7}});
  EXPECT_EQ(fv(s.complex), (std::vector<std::int64_t>{1, 5, 9, 6}));
  const auto o = cross_polytope_boundary(3).complex;
  // {1,2,3} contains the antipodal pair 1,2, so it is not a facet.
  EXPECT_THROW(connected_sum(o, o, {1, 3, 5}, {1, 2, 3}, {{1, 1}, {3, 2}, {5, 3}}), ConstructionError);
  const auto x = stacked_cross_polytopal_sphere(3, 9, 0);
  EXPECT_EQ(f_vector(x.complex).at(0), 9);
  EXPECT_EQ(h_vector(x.complex).at(1), 6);
  EXPECT_EQ(h_vector(x.complex).at(2), 6);
}

TEST(Generators, ConnectedSumFVectorIdentity) {
  for (int d = 3; d <= 5; ++d) {
    const auto a = cross_polytope_boundary(d).complex;
    const auto b = shift_labels(simplex_boundary(d), 100);
    const Face fa = a.facets().front(), fb = b.facets().front();
    std::map<Vertex, Vertex> gamma;
    for (std::size_t i = 0; i < fa.size(); ++i) gamma[fa[i]] = fb[i];
    const auto s = connected_sum(a, b, fa, fb, gamma);
    const auto fs = f_vector(s.complex), f1 = f_vector(a), f2 = f_vector(b);
    for (int i = 0; i <= d - 2; ++i) EXPECT_EQ(fs.at(i), f1.at(i) + f2.at(i) - binomial(d, i + 1));
    EXPECT_EQ(fs.at(d - 1), f1.at(d - 1) + f2.at(d - 1) - 2);
  }
}

TEST(Generators, StackedSpheres) {
  EXPECT_EQ(stacked_sphere(3, 4, 7), simplex_boundary(3));
  EXPECT_EQ(f_vector(stacked_sphere(3, 6, 1)).at(1), 12);
  EXPECT_EQ(f_vector(stacked_sphere(4, 6, 1)).at(1), 14);
  EXPECT_EQ(f_vector(stacked_sphere(2, 7, 1)).at(1), 7);  // polygons
  for (int d = 3; d <= 5; ++d)
    for (int n = d + 1; n <= d + 8; ++n) {
      const auto c = stacked_sphere(d, n, static_cast<std::uint64_t>(n));
      EXPECT_EQ(f_vector(c).at(0), n);
      EXPECT_EQ(f_vector(c).at(1), d * n - binomial(d + 1, 2));
      EXPECT_TRUE(is_pseudomanifold(c));
      EXPECT_TRUE(is_normal(c));
      EXPECT_TRUE(in_class_Cd(c));
    }
  EXPECT_THROW(stacked_sphere(3, 3, 0), ParamError);
}

TEST(Generators, StackedCrossPolytopalSpheres) {
  EXPECT_EQ(stacked_cross_polytopal_sphere(3, 6, 0).complex, cross_polytope_boundary(3).complex);
  for (auto [d, n] : std::vector<std::pair<int, int>>{{3, 9}, {3, 12}, {4, 8}, {4, 12}, {5, 15}}) {
    const auto x = stacked_cross_polytopal_sphere(d, n, 4);
    const auto h = h_vector(x.complex);
    EXPECT_EQ(2 * h.at(2), (d - 1) * h.at(1));
    EXPECT_TRUE(is_pseudomanifold(x.complex));
    EXPECT_TRUE(in_class_Cd(x.complex));
    EXPECT_TRUE(verify_a_coloring(x.complex, x.coloring, std::vector<int>(static_cast<std::size_t>(d), 1)));
  }
  EXPECT_THROW(stacked_cross_polytopal_sphere(3, 10, 0), ParamError);
}

TEST(Generators, Subdivision) {
  const auto s = subdivide_all_facets(simplex_boundary(3));
  EXPECT_EQ(f_vector(s.complex).at(0), 8);
  EXPECT_EQ(s.complex.facets().size(), 12U);
  EXPECT_EQ(subdivide_all_facets(Complex::from_facets({{1, 2, 3}})).complex.facets().size(), 3U);
  const auto gamma = stacked_sphere(3, 7, 2);
  const auto sub = subdivide_all_facets(gamma);
  const auto fd = f_vector(sub.complex), fg = f_vector(gamma);
  EXPECT_EQ(fd.at(0), fg.at(0) + fg.at(2));
  EXPECT_EQ(fd.at(1), 3 * fd.at(0) - 6);
}

TEST(Generators, Cones) {
  EXPECT_EQ(cone_complex(simplex_boundary(2)).facets().size(), 3U);
  EXPECT_EQ(f_vector(cone_complex(cross_polytope_boundary(3).complex)).at(0), 7);
}

}  // namespace
