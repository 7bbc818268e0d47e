#pragma once

// Betti numbers over Q or GF(2) by boundary-matrix rank, plus the
// Mayer-Vietoris and cube-duality checks built on them.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfb/simplicial.hpp"

namespace pfb {

enum class Field { Rational, GF2 };

Field parse_field(const std::string& name);  ///< "q" or "gf2"
std::string to_string(Field f);

struct BettiVector {
  std::vector<std::uint64_t> b;  ///< b[k] for k <= top nonzero chain degree

  /// 0 for k < 0 or beyond the stored range.
  std::uint64_t operator[](int k) const;
  std::uint64_t total() const;
  std::int64_t euler_characteristic() const;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

void to_json(nlohmann::json& j, const BettiVector& b);

/// dims[k] = dim C_k; ranks[k] = rank of d_k : C_k -> C_{k-1} (ranks[0] = 0).
struct ChainComplexRanks {
  std::vector<std::uint64_t> dims;
  std::vector<std::uint64_t> ranks;

  BettiVector betti() const;
};

/// A sparse integer matrix, column-major: column j lists (row, coefficient).
using SparseColumn = std::vector<std::pair<std::size_t, std::int64_t>>;
using SparseMatrix = std::vector<SparseColumn>;

/// Exact rank. Over Q the elimination is fraction-free on arbitrary-precision
/// integers; over GF(2) coefficients are reduced mod 2 first.
std::uint64_t rank(const SparseMatrix& columns, Field field);

/// Boundary matrices of K (d_k for k = 1..dim) with the alternating-sign
/// convention on sorted vertex lists.
std::vector<SparseMatrix> boundary_matrices(const SimplicialComplex& K);

ChainComplexRanks chain_ranks(const SimplicialComplex& K, Field field);
BettiVector betti(const SimplicialComplex& K, Field field = Field::Rational);

/// A finite simplicial set given by its nondegenerate simplices. faces[k][j]
/// lists the k + 1 faces d_0..d_k of the j-th nondegenerate k-simplex as
/// indices into level k - 1, or kDegenerate when that face is degenerate.
/// faces[0] holds one empty list per vertex.
struct SimplicialSet {
  static constexpr std::size_t kDegenerate = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::vector<std::size_t>>> faces;

  std::size_t count(std::size_t k) const { return k < faces.size() ? faces[k].size() : 0; }
};

/// Normalized chain complex of `S`: degenerate faces are dropped. Throws
/// InconsistentFaces when an index is out of range, a face list has the wrong
/// length, or the boundary does not square to zero.
ChainComplexRanks chain_ranks(const SimplicialSet& S, Field field);
BettiVector betti_simplicial_set(const SimplicialSet& S, Field field = Field::Rational);

/// Nondegenerate simplices of K in the order of K.simplices(k).
SimplicialSet to_simplicial_set(const SimplicialComplex& K);

// Inequality checks -----------------------------------------------------------

struct InequalityReport {
  bool ok = true;
  std::vector<std::string> violations;
  nlohmann::json detail;
};

void to_json(nlohmann::json& j, const InequalityReport& r);

/// b_i(K1) + b_i(K2) <= b_i(K1 u K2) + b_i(K1 n K2) and
/// b_i(K1 u K2) <= b_i(K1) + b_i(K2) + b_{i-1}(K1 n K2) for every i.
InequalityReport mayer_vietoris_check(const SimplicialComplex& K1, const SimplicialComplex& K2,
                                      Field field = Field::Rational);

/// Generalised forms for 1 <= m <= 4 parts, J over nonempty index sets:
/// b_i(u_j X_j) <= sum_J b_{i-|J|+1}(n_J X_j) and
/// b_i(n_j X_j) <= sum_J b_{i+|J|-1}(u_J X_j).
InequalityReport mayer_vietoris_check(std::span<const SimplicialComplex> parts,
                                      Field field = Field::Rational);

enum class DualityStatus { Holds, Mismatch, Inconclusive };

struct DualityReport {
  DualityStatus status = DualityStatus::Holds;
  std::vector<std::uint64_t> complement_betti;  ///< b_q(I^n \ X), q < n
  std::vector<std::uint64_t> dual_betti;        ///< reduced b^{n-q-1}(X u dI^n), q < n
  std::string note;
};

void to_json(nlohmann::json& j, const DualityReport& r);

/// Compares b_q(I^n \ X) with reduced b^{n-q-1}(X u dI^n) for q <= n - 1.
/// I^n \ X is modelled by the full subcomplex on the cube vertices outside
/// X, a deformation retract when X is full; for a non-full X the model is
/// not trusted and the verdict is Inconclusive.
DualityReport alexander_cube_check(const TriangulatedCube& cube, const SimplicialComplex& X,
                                   Field field = Field::Rational);

}  // namespace pfb
