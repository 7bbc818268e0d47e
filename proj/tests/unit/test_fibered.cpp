#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <map>
#include <set>

#include "pfb/errors.hpp"
#include "pfb/fibered.hpp"
#include "pfb/homology.hpp"
#include "support/corpus.hpp"

namespace pfb {
namespace {

using B = std::vector<std::uint64_t>;

nlohmann::json load(const std::string& rel) {
  std::ifstream in(std::string(PFB_TEST_DATA_DIR) + "/" + rel);
  return nlohmann::json::parse(in);
}

TEST(Fibered, ZerothProductIsTheSource) {
  for (const auto& [name, f] : corpus::surjections()) {
    const FiberedProduct w = fibered_product(f, 0);
    EXPECT_EQ(betti(w.complex), betti(f.source)) << name;
    EXPECT_EQ(w.complex.size(), f.source.size()) << name;
  }
}

TEST(Fibered, TwoPointsOverOne) {
  const auto f = corpus::make_map(SimplicialComplex::from_simplices({0, 1}, {}),
                                  SimplicialComplex::from_simplices({{0}}), {{0, 0}, {1, 0}});
  const FiberedProduct w = fibered_product(f, 1);
  EXPECT_EQ(w.complex.count(0), 4u);
  EXPECT_EQ(w.complex.dimension(), 0);
  EXPECT_EQ(betti(w.complex).b, (B{4}));
  EXPECT_EQ(betti(fibered_product(f, 2).complex).b, (B{8}));
}

TEST(Fibered, IdentityProductsAreDiagonal) {
  const auto id = corpus::identity(corpus::hollow_triangle());
  for (std::size_t p = 0; p <= 2; ++p) {
    const FiberedProduct w = fibered_product(id, p);
    EXPECT_EQ(betti(w.complex).b, (B{1, 1})) << p;
    EXPECT_EQ(betti_simplicial_set(w.simplicial_set()).b, (B{1, 1})) << p;
  }
}

TEST(Fibered, TuplesLieInOneFibreAndArePermutationClosed) {
  for (const auto& [name, f] : corpus::surjections()) {
    const FiberedProduct w = fibered_product(f, 2);
    std::set<std::vector<Vertex>> tuples(w.tuples.begin(), w.tuples.end());
    for (const auto& t : w.tuples) {
      ASSERT_EQ(t.size(), 3u);
      EXPECT_EQ(f(t[0]), f(t[1])) << name;
      EXPECT_EQ(f(t[1]), f(t[2])) << name;
      auto perm = t;
      std::sort(perm.begin(), perm.end());
      do {
        EXPECT_TRUE(tuples.count(perm)) << name;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
}

TEST(Fibered, SwappingFactorsPreservesBetti) {
  for (const auto& [name, f] : corpus::surjections()) {
    const FiberedProduct w = fibered_product(f, 1);
    // Relabel (a, b) -> (b, a) and rebuild from the maximal simplices.
    std::map<std::vector<Vertex>, Vertex> id;
    for (std::size_t v = 0; v < w.tuples.size(); ++v) id[w.tuples[v]] = static_cast<Vertex>(v);
    std::vector<Simplex> swapped;
    for (const auto& s : w.complex.maximal_simplices()) {
      Simplex t;
      for (Vertex v : s) t.push_back(id.at({w.tuples[v][1], w.tuples[v][0]}));
      std::sort(t.begin(), t.end());
      swapped.push_back(t);
    }
    const auto W2 = SimplicialComplex::from_simplices(w.complex.vertices(), swapped);
    EXPECT_EQ(betti(W2), betti(w.complex)) << name;
  }
}

TEST(Fibered, DiagonalEmbedsSoComponentsDoNotDrop) {
  for (const auto& [name, f] : corpus::surjections()) {
    const auto b0 = betti(f.source)[0];
    for (std::size_t p = 1; p <= 2; ++p) EXPECT_GE(betti(fibered_product(f, p).complex)[0], b0) << name;
  }
}

TEST(Fibered, SpectralInequalityOnTheCorpus) {
  for (const auto& [name, f] : corpus::surjections()) {
    for (Field field : {Field::Rational, Field::GF2}) {
      const SpectralReport r = verify_spectral_inequality(f, 2, field);
      EXPECT_TRUE(r.ok) << name;
      ASSERT_EQ(r.lhs.size(), 3u);
      for (std::size_t k = 0; k < r.lhs.size(); ++k) EXPECT_LE(r.lhs[k], r.rhs[k]) << name;
    }
  }
}

TEST(Fibered, ArcsOverCircleNeedTheFirstProduct) {
  const auto f = corpus::arcs_over_circle();
  EXPECT_EQ(betti(f.source)[1], 0u);
  EXPECT_EQ(betti(f.target)[1], 1u);
  const SpectralReport r = verify_spectral_inequality(f, 1);
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.lhs, (B{1, 1}));
  EXPECT_GE(r.terms.at(1).at(0), 2u);
  EXPECT_EQ(r.terms.at(1).at(0), 6u);

  const auto from_file = load("maps/arcs_over_circle.json").get<SimplicialMap>();
  EXPECT_EQ(verify_spectral_inequality(from_file, 1).lhs, r.lhs);
}

TEST(Fibered, IdentityAndCollapseAreTight) {
  const SpectralReport id = verify_spectral_inequality(corpus::identity(corpus::hollow_triangle()), 1);
  EXPECT_EQ(id.lhs[0], id.rhs[0]);
  const auto collapse = corpus::make_map(SimplicialComplex::from_simplices({{0, 1}}),
                                         SimplicialComplex::from_simplices({{0}}), {{0, 0}, {1, 0}});
  const SpectralReport c = verify_spectral_inequality(collapse, 0);
  EXPECT_EQ(c.lhs, (B{1}));
  EXPECT_EQ(c.rhs, (B{1}));
}

TEST(Fibered, RejectsBadMaps) {
  EXPECT_THROW(fibered_product(load("maps/not_surjective.json").get<SimplicialMap>(), 1), NotSurjective);
  auto bad = nlohmann::json::parse(R"({"source": {"simplices": [[0, 1]]},
                                       "target": {"simplices": [[0], [1]]},
                                       "vertex_map": {"0": 0, "1": 1}})");
  EXPECT_THROW(bad.get<SimplicialMap>(), InvalidComplex);
  bad["target"] = nlohmann::json::parse(R"({"simplices": [[0, 1]]})");
  bad["vertex_map"] = nlohmann::json::parse(R"([[0, 0], [1, 1]])");
  EXPECT_NO_THROW(bad.get<SimplicialMap>());
  bad["vertex_map"] = nlohmann::json::parse(R"({"0": 0})");
  EXPECT_THROW(bad.get<SimplicialMap>(), InvalidComplex);
}

DiagonalSample chain_sample(std::vector<int> tenths, std::size_t p, Rational delta) {
  DiagonalSample s;
  for (int t : tenths) s.points.push_back({Rational(t, 10)});
  for (std::size_t i = 0; i + 1 < tenths.size(); ++i)
    if (tenths[i + 1] - tenths[i] == 1) s.adjacency.emplace_back(i, i + 1);
  s.p = p;
  s.delta = delta;
  return s;
}

TEST(Fibered, ExpandedDiagonal) {
  const auto sample = load("samples/two_clusters.json").get<DiagonalSample>();
  EXPECT_EQ(sample.delta, Rational(1, 10));
  EXPECT_EQ(expanded_diagonal_components(sample), 2u);

  const DiagonalSample s0 = chain_sample({0, 1, 2, 10, 11, 20}, 0, 5);
  EXPECT_EQ(expanded_diagonal_components(s0), 3u);
  const DiagonalSample d0 = chain_sample({0, 1, 2, 10, 11, 20}, 2, 0);
  EXPECT_EQ(expanded_diagonal_components(d0), 3u);

  DiagonalSample wide = chain_sample({0, 1, 2, 10, 11, 12}, 1, 0);
  std::uint64_t prev = expanded_diagonal_components(wide);
  for (int k = 1; k <= 20; ++k) {
    wide.delta = Rational(k, 100);
    const std::uint64_t cur = expanded_diagonal_components(wide);
    EXPECT_LE(cur, prev) << "delta " << k << "/100";
    prev = cur;
  }

  DiagonalSample bad = wide;
  bad.delta = -1;
  EXPECT_THROW(expanded_diagonal_components(bad), InvalidFormat);
}

}  // namespace
}  // namespace pfb
