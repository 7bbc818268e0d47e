#pragma once

// Closed-form, constant-free topological complexity bounds evaluated exactly.
//
// Every function validates its inputs (throwing InvalidFormat) and returns an
// ExactBound whose value is an integer upper bound. Formulas containing the
// factor gamma/2 (or beta* = max(beta, gamma/2)) are evaluated over the
// rationals and rounded up once at the end; `flags` records when that rounding
// actually changed something.

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfb/bigint.hpp"
#include "pfb/formats.hpp"

namespace pfb {

struct ExactBound {
  Natural value;
  std::string formula_id;
  nlohmann::json inputs;
  std::vector<std::string> flags;

  std::uint64_t bit_length() const { return pfb::bit_length(value); }
};

void to_json(nlohmann::json& j, const ExactBound& b);

// Khovanskii-type root counts -------------------------------------------------

/// Isolated common zeros of n Pfaffian functions of degrees betas[i] in a
/// chain of length ell and degree alpha on R^n.
ExactBound khovanskii(Nat n, Nat ell, Nat alpha, std::span<const Nat> betas);
ExactBound khovanskii(Nat n, Nat ell, Nat alpha, Nat beta);

/// Same count inside a domain of bounded complexity gamma.
ExactBound khovanskii_domain(Nat n, Nat ell, Nat alpha, std::span<const Nat> betas, Nat gamma);

/// Non-degenerate positive solutions of n polynomials with r monomials in total.
ExactBound fewnomial_system(Nat n, Nat r);

/// Real roots of a univariate polynomial of additive complexity k.
ExactBound additive_complexity(Nat k);

/// Positive roots of a univariate polynomial with r monomials (Descartes' rule).
ExactBound descartes(Nat r);

/// Sum of Betti numbers of a real algebraic variety of degree d in R^n.
ExactBound optm(Nat n, Nat d);

// Betti numbers of varieties and semi-Pfaffian sets -------------------------

/// The basic quantity V(n, ell, alpha, beta, gamma) bounding b(V) for a compact
/// variety defined by functions of degree <= beta.
ExactBound variety_V(const ChainFormat& chain, Nat beta);
ExactBound variety_V(Nat n, Nat ell, Nat alpha, Nat beta, Nat gamma);

/// Non-compact variety: beta replaced by max(beta, ceil(gamma / 2)).
ExactBound variety_noncompact(const ChainFormat& chain, Nat beta);

/// Basic closed sets at combinatorial level m: 2^m C(s, m) V. Requires fmt.m.
ExactBound basic_set_B0(const SetFormat& fmt);

/// Value of the P-closed recursion B(s, m) <= B0(2beta, s, m) + 3s B(3s, m - 1)
/// unrolled down to B(., 0) = V(n, ell, alpha, 2beta, gamma). Requires fmt.m.
ExactBound pclosed_recursive(const SetFormat& fmt);

/// (5s)^m V(n, ell, alpha, 2beta, gamma). Requires fmt.m.
ExactBound pclosed_closed_level(const SetFormat& fmt);
/// (10s)^d V(n, ell, alpha, 2beta, gamma). Requires fmt.d and s >= 1.
ExactBound pclosed_closed_dim(const SetFormat& fmt);
/// Level variant when fmt.m is present, dimension variant otherwise.
ExactBound pclosed_closed(const SetFormat& fmt);

/// Sigma(s, d) = sum_{i <= d} C(4s + 1, i).
ExactBound sigma(Nat s, Nat d);

/// Number of sign cells of s functions on a variety of dimension d.
ExactBound cells_bound(const SetFormat& fmt);

/// Borel-Moore Betti bound composed from its proof: cells x 2 x P-closed bound
/// (dimension variant, s + 1 functions).
ExactBound bm_composed(const SetFormat& fmt);

// Relative closures and limit sets --------------------------------------------

/// Connected components of (X, Y)_0 in the effectively non-singular case;
/// d = couple.x.d, k = couple.y.d.
ExactBound smooth_cc(const CoupleFormat& couple);

/// Connected components of (X, Y)_0 for unions of M and N basic sets.
ExactBound singular_cc(const CoupleFormat& couple);

/// singular_cc specialised to fewnomial chains (ell = n + r, alpha = 2, beta = 1).
ExactBound fewnomial_cc(const CoupleFormat& couple, Nat r);

/// b_k of the Hausdorff limit of a family with compact fibres. Requires fmt.d and s >= 1.
ExactBound hausdorff_betti(const SetFormat& fmt, Nat k);

}  // namespace pfb
