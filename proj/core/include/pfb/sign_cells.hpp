#pragma once

// Grid oracle for sign conditions of small polynomial systems (n <= 3).
//
// Every evaluation is exact. A resolution R splits each box edge into R
// equal intervals, giving (R + 1)^n nodes and R^n closed grid boxes.
// Strict sign vectors are read at nodes and their cells are the components
// of the node graph with axis adjacency. A sign vector with zero entries is
// supported by exact node witnesses and by every box on which each required
// zero polynomial takes both strict signs at the corners while every other
// polynomial keeps the required strict sign at all corners; its cells are the
// components of the union of these closed pieces. Cells thinner than a grid
// step can be missed or merged; the counts are estimates of b_0, not proofs.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfb/bigint.hpp"
#include "pfb/exact_bounds.hpp"

namespace pfb {

inline constexpr std::uint64_t kMaxGridNodes = 10'000'000;

struct Monomial {
  std::vector<unsigned> exponents;
  Rational coefficient;
};

struct Polynomial {
  std::vector<Monomial> terms;

  unsigned degree() const;
  Rational operator()(const std::vector<Rational>& x) const;
};

struct PolynomialSystem {
  unsigned n = 1;
  std::vector<Polynomial> polys;
  std::vector<std::pair<Rational, Rational>> box;  ///< [lo, hi] per axis

  /// Throws InvalidFormat on n outside 1..3, a term with the wrong number of
  /// exponents, or an empty or reversed box side.
  void validate() const;
  unsigned max_degree() const;
};

/// {"n": 2, "box": [["-2", "2"], ["-2", "2"]],
///  "polys": [[[[2, 0], "1"], [[0, 2], "1"], [[0, 0], "-1"]], ...]}
void to_json(nlohmann::json& j, const PolynomialSystem& s);
void from_json(const nlohmann::json& j, PolynomialSystem& s);

/// Sign vectors are strings over {'-', '0', '+'}, one character per polynomial.
using SignVector = std::string;

struct SignCellReport {
  std::uint64_t resolution = 0;
  std::uint64_t nodes = 0;
  std::set<SignVector> realized;
  std::map<SignVector, std::uint64_t> components_per_sign;
  std::vector<std::string> notes;
};

void to_json(nlohmann::json& j, const SignCellReport& r);

/// Throws InvalidFormat when resolution < 2 or the grid exceeds kMaxGridNodes.
SignCellReport enumerate_signs(const PolynomialSystem& sys, std::uint64_t resolution);

/// Sum of components over all realized sign vectors.
std::uint64_t count_components(const SignCellReport& report);

enum class Verdict { Holds, Violated, Inconclusive };

struct BoundCheck {
  Verdict verdict = Verdict::Holds;
  std::uint64_t measured = 0;
  ExactBound cells;
  std::uint64_t variety_components = 0;  ///< components of the all-zero sign vector
  ExactBound optm_bound;
  Natural cells_margin;     ///< bound - measured (0 when violated)
  Natural variety_margin;
  bool stable = true;  ///< counts unchanged at twice the resolution
  std::uint64_t refined_measured = 0;
};

void to_json(nlohmann::json& j, const BoundCheck& c);

/// measured <= cells_bound(polynomial_format(n, max degree, s)) with the
/// variety taken as the whole box (d = n), and variety components <=
/// optm(n, max degree). The system is re-measured at twice the resolution; a
/// violation that refinement changes is Inconclusive rather than Violated.
BoundCheck check_against_bound(const PolynomialSystem& sys, const SignCellReport& report);

}  // namespace pfb
