#pragma once

// Finite abstract simplicial complexes.
//
// A complex stores every face explicitly, grouped by dimension and sorted
// lexicographically; a simplex is a strictly increasing vector of vertex ids.
// The empty simplex is never stored. Complexes are immutable once built.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

namespace pfb {

using Vertex = std::int64_t;
using Simplex = std::vector<Vertex>;

class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Closure of `simplices` under taking faces. Every vertex of every simplex
  /// must be listed in `vertices`; listed vertices that lie in no simplex are
  /// added as 0-simplices. Throws InvalidComplex.
  static SimplicialComplex from_simplices(std::vector<Vertex> vertices,
                                          const std::vector<Simplex>& simplices);
  /// Same, with the vertex list taken from the simplices.
  static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// -1 for the empty complex.
  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  /// Simplices of dimension k, sorted; empty outside 0..dimension().
  std::span<const Simplex> simplices(int k) const;
  std::size_t count(int k) const { return simplices(k).size(); }
  std::size_t size() const;
  bool empty() const { return vertices_.empty(); }

  /// Position of `s` (sorted) among the simplices of its dimension.
  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }
  bool has_vertex(Vertex v) const;

  std::int64_t euler_characteristic() const;
  bool is_subcomplex_of(const SimplicialComplex& other) const;
  std::vector<Simplex> maximal_simplices() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Vertex> vertices_;            // sorted, unique
  std::vector<std::vector<Simplex>> by_dim_;  // by_dim_[k] sorted
};

SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);
/// Simplices of K all of whose vertices lie in `keep`.
SimplicialComplex full_subcomplex(const SimplicialComplex& K, std::span<const Vertex> keep);
bool is_full_subcomplex(const SimplicialComplex& sub, const SimplicialComplex& K);

/// {"vertices": [...], "simplices": [[...], ...]}; faces may be omitted.
void to_json(nlohmann::json& j, const SimplicialComplex& K);
void from_json(const nlohmann::json& j, SimplicialComplex& K);

/// Barycentric subdivision of the cubical grid with `m` intervals per axis on
/// I^n. Cubical faces are named by doubled coordinates c in {0..2m}^n (odd
/// entry = open interval, even = endpoint) and serve as the vertices of the
/// triangulation; simplices are chains of faces. Every cubical subcomplex is
/// therefore a full subcomplex.
struct TriangulatedCube {
  unsigned n = 0;
  unsigned m = 0;
  SimplicialComplex complex;
  SimplicialComplex boundary;

  Vertex vertex_of(std::span<const unsigned> doubled) const;
  std::vector<unsigned> face_of(Vertex v) const;
  /// Closed cubical face: all faces of the face named by `doubled`.
  std::vector<Vertex> closed_face(std::span<const unsigned> doubled) const;
  /// Triangulation of the union of the given closed cubical faces.
  SimplicialComplex cubical_subcomplex(const std::vector<std::vector<unsigned>>& faces) const;
};

TriangulatedCube triangulated_cube(unsigned n, unsigned m);

}  // namespace pfb
