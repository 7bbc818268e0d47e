#include <gtest/gtest.h>

#include "pfb/errors.hpp"
#include "pfb/simplicial.hpp"
#include "support/corpus.hpp"

namespace pfb {
namespace {

TEST(Simplicial, ClosureUnderFaces) {
  const auto K = corpus::filled_triangle();
  EXPECT_EQ(K.dimension(), 2);
  EXPECT_EQ(K.count(0), 3u);
  EXPECT_EQ(K.count(1), 3u);
  EXPECT_EQ(K.count(2), 1u);
  EXPECT_EQ(K.size(), 7u);
  EXPECT_TRUE(K.contains({0, 2}));
  EXPECT_FALSE(K.contains({0, 3}));
  EXPECT_EQ(K.euler_characteristic(), 1);
  EXPECT_EQ(K.maximal_simplices(), (std::vector<Simplex>{{0, 1, 2}}));
}

TEST(Simplicial, RejectsMalformedInput) {
  EXPECT_THROW(SimplicialComplex::from_simplices({0, 1}, {{0, 2}}), InvalidComplex);
  EXPECT_THROW(SimplicialComplex::from_simplices({{1, 1}}), InvalidComplex);
  EXPECT_THROW(nlohmann::json::parse(R"({"simplices": [[0, "x"]]})").get<SimplicialComplex>(),
               InvalidComplex);
}

TEST(Simplicial, IsolatedVerticesAndEmpty) {
  const auto K = SimplicialComplex::from_simplices({0, 1}, {});
  EXPECT_EQ(K.dimension(), 0);
  EXPECT_EQ(K.count(0), 2u);
  const SimplicialComplex E;
  EXPECT_TRUE(E.empty());
  EXPECT_EQ(E.dimension(), -1);
  EXPECT_TRUE(E.is_subcomplex_of(K));
}

TEST(Simplicial, SetOperations) {
  const auto a = SimplicialComplex::from_simplices({{0, 1}, {1, 2}});
  const auto b = SimplicialComplex::from_simplices({{1, 2}, {2, 3}});
  const auto u = unite(a, b);
  const auto i = intersect(a, b);
  EXPECT_EQ(u.count(1), 3u);
  EXPECT_EQ(i, SimplicialComplex::from_simplices({{1, 2}}));
  EXPECT_TRUE(a.is_subcomplex_of(u));
  const std::vector<Vertex> keep{0, 1};
  EXPECT_EQ(full_subcomplex(corpus::filled_triangle(), keep), SimplicialComplex::from_simplices({{0, 1}}));
  EXPECT_TRUE(is_full_subcomplex(SimplicialComplex::from_simplices({{0, 1}}), corpus::filled_triangle()));
  EXPECT_FALSE(is_full_subcomplex(corpus::hollow_triangle(), corpus::filled_triangle()));
}

TEST(Simplicial, JsonRoundTrip) {
  const auto K = corpus::annulus();
  const nlohmann::json j = K;
  EXPECT_EQ(j.get<SimplicialComplex>(), K);
  const auto loose = nlohmann::json::parse(R"({"vertices": [0, 1, 7], "simplices": [[0, 1]]})");
  const auto L = loose.get<SimplicialComplex>();
  EXPECT_TRUE(L.has_vertex(7));
  EXPECT_EQ(L.count(0), 3u);
}

TEST(Simplicial, TriangulatedCube) {
  const TriangulatedCube sq = triangulated_cube(2, 2);
  EXPECT_EQ(sq.complex.count(0), 25u);  // (2m + 1)^2 cubical faces
  EXPECT_EQ(sq.complex.dimension(), 2);
  EXPECT_EQ(sq.complex.euler_characteristic(), 1);
  EXPECT_EQ(sq.boundary.euler_characteristic(), 0);
  EXPECT_TRUE(sq.boundary.is_subcomplex_of(sq.complex));
  const std::vector<unsigned> mid{2, 3};
  const Vertex v = sq.vertex_of(mid);
  EXPECT_EQ(sq.face_of(v), mid);
  EXPECT_EQ(sq.closed_face(mid).size(), 3u);
  const auto cell = sq.cubical_subcomplex({{1, 1}});
  EXPECT_EQ(cell.count(0), 9u);
  EXPECT_EQ(cell.euler_characteristic(), 1);
  EXPECT_TRUE(is_full_subcomplex(cell, sq.complex));

  const TriangulatedCube cube = triangulated_cube(3, 1);
  EXPECT_EQ(cube.complex.count(0), 27u);
  EXPECT_EQ(cube.complex.count(3), 48u);  // 3! chains per vertex of the top cube, 8 vertices
  EXPECT_EQ(cube.boundary.euler_characteristic(), 2);
}

}  // namespace
}  // namespace pfb
