#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "periodmap/errors.hpp"
#include "periodmap/permutahedron.hpp"

using namespace periodmap;

TEST(Subsets, ParseAndPrint) {
  const Subset s = Subset::parse("{1,3,4}");
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(3));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.elements(), (std::vector<int>{1, 3, 4}));
  EXPECT_TRUE(Subset::of({3, 4}).subset_of(s));
}

TEST(NestedSequences, Validation) {
  EXPECT_THROW(NestedSequence(2, {Subset::of({1, 2, 3})}), InputError);
  EXPECT_THROW(NestedSequence(2, {Subset::of({1, 2}), Subset::of({1})}), InputError);
  EXPECT_THROW(NestedSequence(2, {}), InputError);
  const NestedSequence ns = NestedSequence::parse(3, "{3,4};{1,3,4}");
  EXPECT_EQ(ns.length(), 2u);
  EXPECT_EQ(ns.to_short_string(), "3,4;1,3,4");
}

TEST(Faces, EnumerationCounts) {
  const auto facets = enumerate_faces(2, 1);
  EXPECT_EQ(facets.size(), 6u);
  const auto corners = enumerate_faces(2, 2);
  ASSERT_EQ(corners.size(), 6u);
  for (const auto& c : corners) EXPECT_EQ(c.chain()[0].size(), 1);
  EXPECT_EQ(enumerate_faces(3, 1).size(), 14u);
  EXPECT_EQ(enumerate_faces(3, 2).size(), 36u);
  EXPECT_EQ(enumerate_faces(3, 3).size(), 24u);
  for (int m = 2; m <= 6; ++m)
    for (int l = 1; l < m; ++l)
      EXPECT_EQ(static_cast<long>(enumerate_faces(m - 1, l).size()), oracle::chain_count(m, l)) << m << " " << l;
}

TEST(Faces, Order) {
  const NestedSequence a = NestedSequence::parse(3, "{3,4};{1,3,4}");
  const NestedSequence b = NestedSequence::parse(3, "{1,3,4}");
  EXPECT_TRUE(face_leq(a, b));
  EXPECT_FALSE(face_leq(b, a));
  EXPECT_TRUE(face_leq(a, a));
  const NestedSequence one = NestedSequence::parse(2, "{1}"), two = NestedSequence::parse(2, "{2}");
  EXPECT_FALSE(face_leq(one, two));
  EXPECT_FALSE(face_leq(two, one));
}

TEST(Faces, Forgetful) {
  EXPECT_EQ(forgetful(NestedSequence::parse(3, "{3,4};{1,3,4}")).I, Subset::of({1, 3, 4}));
  EXPECT_EQ(forgetful(NestedSequence::parse(2, "{1}")).I, Subset::of({1}));
  EXPECT_EQ(forgetful(NestedSequence::parse(2, "{2};{2,3}")).I, Subset::of({2, 3}));
}

TEST(Faces, ForgetfulIsMonotone) {
  for (int c1 = 1; c1 <= 3; ++c1)
    for (int c2 = 1; c2 <= 3; ++c2)
      for (const auto& a : enumerate_faces(3, c1))
        for (const auto& b : enumerate_faces(3, c2))
          if (face_leq(a, b)) {
            EXPECT_TRUE(simplex_face_leq(forgetful(a), forgetful(b)));
          }
}

TEST(Realization, VerticesAndIncidences) {
  EXPECT_EQ(realize(1).vertices.size(), 2u);
  const PermRealization p2 = realize(2);
  ASSERT_EQ(p2.vertices.size(), 6u);
  std::set<std::vector<int>> perms(p2.vertices.begin(), p2.vertices.end());
  std::vector<int> v{1, 2, 3};
  do EXPECT_TRUE(perms.count(v)); while (std::next_permutation(v.begin(), v.end()));

  const PermRealization p3 = realize(3);
  EXPECT_EQ(p3.vertices.size(), 24u);
  std::size_t edges = 0;
  for (const auto& e : enumerate_faces(3, 2)) {
    EXPECT_EQ(p3.face_vertices(e).size(), 2u);
    ++edges;
  }
  EXPECT_EQ(edges, 36u);
  for (const auto& v3 : enumerate_faces(3, 3)) EXPECT_EQ(p3.face_vertices(v3).size(), 1u);
}

TEST(Maps, ClosestPoint) {
  const PermRealization r = realize(2);
  const Vec inside{2, 2, 2};
  EXPECT_EQ(closest_point_map(inside, r), inside);
  const Vec corner = closest_point_map(realize_simplex(2).vertex(0), r);
  EXPECT_NEAR(corner[0], 3.0, 1e-12);
  EXPECT_NEAR(corner[1], 1.5, 1e-12);
  EXPECT_NEAR(corner[2], 1.5, 1e-12);
  EXPECT_THROW(closest_point_map(Vec{0, 3, 3}, r), DomainError);
}

TEST(Maps, ForgetfulSendsFacesToFaces) {
  const PermRealization r = realize(2);
  for (const auto& v : r.vertices) {
    const Vec x(v.begin(), v.end());
    const Vec y = forgetful_map(x, 2);
    EXPECT_TRUE(in_simplex(y, 2));
    // Vertex with chain {i} c {i,j}: collapses to the corner opposite the facet {i,j}.
    int zeros = 0;
    for (double c : to_barycentric(y, 2)) zeros += std::abs(c) < 1e-12;
    EXPECT_EQ(zeros, 2);
  }
  const Vec centre = forgetful_map(Vec{2, 2, 2}, 2);
  for (double c : centre) EXPECT_NEAR(c, 2.0, 1e-12);
}

TEST(Maps, ForgetfulOfClosestPointOnBoundary) {
  // Holds on the open parts of the simplex facets that meet no truncated
  // corner; checked here away from the corners.
  const PermRealization r = realize(2);
  const Vec x = from_barycentric({0, 0.5, 0.5}, 2);
  const Vec back = forgetful_map(closest_point_map(x, r), 2);
  EXPECT_TRUE(in_simplex(back, 2));
  EXPECT_NEAR(to_barycentric(back, 2)[0], 0.0, 1e-12);
}

TEST(Maps, BarycentricRoundTrip) {
  const Vec lam{0.2, 0.3, 0.5};
  const Vec back = to_barycentric(from_barycentric(lam, 2), 2);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(back[i], lam[i], 1e-14);
}

TEST(Coverage, ForgetfulCovers) {
  const CoverageReport rep = check_face_mapping_surjectivity([](const Vec& x) { return forgetful_map(x, 2); }, 2, 0.05);
  EXPECT_TRUE(rep.ok());
  EXPECT_GT(rep.grid_points, 0u);
}

TEST(Coverage, BoundaryCollapseIsRejectedWithInteriorWitness) {
  // Push every point radially from the centroid onto the simplex boundary.
  const PolytopeMap collapse = [](const Vec& x) {
    Vec lam = to_barycentric(forgetful_map(x, 2), 2);
    double lo = *std::min_element(lam.begin(), lam.end());
    if (lo >= 1.0 / 3 - 1e-12) return from_barycentric({0, 0.5, 0.5}, 2);
    const double s = 1.0 / (1.0 - 3 * lo);
    for (auto& l : lam) l = 1.0 / 3 + s * (l - 1.0 / 3);
    return from_barycentric(lam, 2);
  };
  const CoverageReport rep = check_face_mapping_surjectivity(collapse, 2, 0.05);
  EXPECT_FALSE(rep.ok());
  ASSERT_TRUE(rep.uncovered_witness.has_value());
  for (double c : *rep.uncovered_witness) EXPECT_GT(c, 0.0);
}

TEST(Coverage, SerialMatchesParallel) {
  CoverageOptions serial;
  serial.parallel = false;
  const PolytopeMap f = [](const Vec& x) { return forgetful_map(x, 2); };
  const CoverageReport a = check_face_mapping_surjectivity(f, 2, 0.05, serial);
  const CoverageReport b = check_face_mapping_surjectivity(f, 2, 0.05);
  EXPECT_EQ(a.ok(), b.ok());
  EXPECT_DOUBLE_EQ(a.worst_gap, b.worst_gap);
}
