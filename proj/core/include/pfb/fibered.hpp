#pragma once

// Fibered products of simplicial surjections and the descent inequality
// b_k(Y) <= sum_{p+q=k} b_q(W^p); plus a b_0-level counter for expanded
// diagonals of point samples.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfb/bigint.hpp"
#include "pfb/homology.hpp"
#include "pfb/simplicial.hpp"

namespace pfb {

struct SimplicialMap {
  SimplicialComplex source;
  SimplicialComplex target;
  std::map<Vertex, Vertex> vertex_map;

  Vertex operator()(Vertex v) const { return vertex_map.at(v); }

  /// Throws InvalidComplex unless every source vertex is mapped into the
  /// target and every simplex goes to a simplex.
  void validate() const;
  bool surjective() const;
};

/// {"source": <complex>, "target": <complex>, "vertex_map": {"v": w, ...}}.
void to_json(nlohmann::json& j, const SimplicialMap& f);
void from_json(const nlohmann::json& j, SimplicialMap& f);

/// W^p = X x_Y ... x_Y X (p + 1 factors).
///
/// Source vertices are ranked by (f(v), v), which makes f monotone. The
/// vertices of W^p are fibre tuples (x_0..x_p) with f(x_i) all equal; its
/// simplices are chains t_0 < ... < t_k in the componentwise order such that
/// for every i the entries {t_0[i], ..., t_k[i]} span a simplex of X. This is
/// the staircase triangulation of each product of simplices, so the
/// realization is the topological fibered product. W^0 is X itself.
struct FiberedProduct {
  std::size_t p = 0;
  SimplicialComplex complex;
  std::vector<std::vector<Vertex>> tuples;  ///< vertex id -> fibre tuple

  /// Nondegenerate simplices with face maps, for betti_simplicial_set.
  SimplicialSet simplicial_set() const { return to_simplicial_set(complex); }
};

/// Throws NotSurjective when f misses a simplex of the target. With
/// `max_dim`, simplices above that dimension are not generated.
FiberedProduct fibered_product(const SimplicialMap& f, std::size_t p,
                               std::optional<std::size_t> max_dim = std::nullopt);

struct SpectralReport {
  bool ok = true;
  std::vector<std::uint64_t> lhs;               ///< b_k(Y), k <= k_max
  std::vector<std::uint64_t> rhs;               ///< sum_{p+q=k} b_q(W^p)
  std::vector<std::vector<std::uint64_t>> terms;  ///< terms[p][q] = b_q(W^p)
};

void to_json(nlohmann::json& j, const SpectralReport& r);

SpectralReport verify_spectral_inequality(const SimplicialMap& f, std::size_t k_max,
                                          Field field = Field::Rational);

/// Points with exact rational coordinates and a symmetric adjacency relation.
struct DiagonalSample {
  std::vector<std::vector<Rational>> points;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency;
  std::size_t p = 0;
  Rational delta = 0;
};

/// {"points": [[x, y, ...], ...], "adjacency": [[i, j], ...], "p": 1,
/// "delta": "1/10"}; coordinates and delta may be numbers or rational strings.
void to_json(nlohmann::json& j, const DiagonalSample& s);
void from_json(const nlohmann::json& j, DiagonalSample& s);

/// b_0 of the graph on (p+1)-tuples with sum_{i<j} |x_i - x_j|^2 <= delta.
/// Two tuples are joined when every coordinate either stays or moves along
/// one adjacency edge (the 1-skeleton of the product). Not monotone in delta
/// in general: a growing delta can admit tuples isolated from the diagonal.
std::uint64_t expanded_diagonal_components(const DiagonalSample& sample);

}  // namespace pfb
