#pragma once

// O(.)-form bounds as structured descriptors, and the recursion engine that
// reduces an alternation of nu quantifier blocks to the one-block case.
//
// A descriptor is a product of factors base^exponent. The exponent is either
// exact or an O-class: BigO(c) stands for "at most C * c" for a constant C
// nobody has computed. Shapes like O(b)^e are stored as b^{O(e)}, which
// dominates them for b >= 2. Nothing here guesses a value for C; evaluation
// takes it as a parameter, and log2_lower() uses C = 1.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfb/bigint.hpp"
#include "pfb/formats.hpp"

namespace pfb {

enum class ExponentClass { Exact, BigO };

struct Exponent {
  ExponentClass cls = ExponentClass::Exact;
  Natural value = 0;

  static Exponent exact(Natural v) { return {ExponentClass::Exact, std::move(v)}; }
  static Exponent big_o(Natural v) { return {ExponentClass::BigO, std::move(v)}; }

  friend bool operator==(const Exponent&, const Exponent&) = default;
};

struct Factor {
  Natural base;
  Exponent exponent;

  /// Bases below 2 contribute nothing to log2 and are flagged.
  bool degenerate() const { return base < 2; }

  friend bool operator==(const Factor&, const Factor&) = default;
};

struct AsymptoticBound {
  std::vector<Factor> factors;
  bool unknown_constant = false;
  std::string formula_id;
  nlohmann::json inputs;

  /// Appends base^exponent unless the exponent is zero.
  AsymptoticBound& times(Natural base, Exponent exponent);

  /// log2 of the product with every O-class exponent scaled by `constant`.
  double log2_value(double constant) const;
  double log2_lower() const { return log2_value(1.0); }
};

void to_json(nlohmann::json& j, const AsymptoticBound& b);

enum class Winner { First, Equal, Second };

struct CompareReport {
  Winner smaller = Winner::Equal;
  double log2_first = 0;
  double log2_second = 0;
  double constant = 1;
  /// True when either side hides a constant; the ordering is then only a proxy.
  bool indicative_only = false;
};

void to_json(nlohmann::json& j, const CompareReport& r);

/// Orders two descriptors by log2_value(constant). Relative differences below
/// 1e-12 count as Equal.
CompareReport compare(const AsymptoticBound& a, const AsymptoticBound& b, double constant = 1.0);

/// Smallest C >= 1 with b.log2_value(C) >= a.log2_lower(); nullopt if no C
/// works (b has no O-class part and is already smaller).
std::optional<double> dominating_constant(const AsymptoticBound& a, const AsymptoticBound& b);

// Descriptors ---------------------------------------------------------------

/// Betti numbers of a variety with fixed chain and domain:
/// 2^{ell(ell-1)/2} O(n beta + min(n, ell) alpha)^{n + ell}.
AsymptoticBound variety_asymptotic(const ChainFormat& chain, Nat beta);

/// P-closed set in a compact variety of dimension d: s^d times the above.
AsymptoticBound pclosed_asymptotic(const SetFormat& fmt);

/// Borel-Moore Betti numbers of a locally closed set: s^{2d} 2^{ell(ell-1)} O(.)^{2(n+ell)}.
AsymptoticBound bm_asymptotic(const SetFormat& fmt);

/// Any semi-Pfaffian set: 2^{ell(ell-1)/2} s^{2n} O(n beta + min(n, ell) alpha)^{n + ell}.
AsymptoticBound gv_qf(const SetFormat& fmt);

/// b_k of the projection of a P-closed set in I^{n0 + n1}.
AsymptoticBound existential(Nat n0, Nat n1, Nat ell, Nat alpha, Nat beta, Nat s, Nat k);

/// b_k of the universal projection; requires k <= n0.
AsymptoticBound universal(Nat n0, Nat n1, Nat ell, Nat alpha, Nat beta, Nat s, Nat k);

/// Connected components of a relative closure for unions of M and N basic sets.
AsymptoticBound singular_cc_asymptotic(const CoupleFormat& couple);

/// b_k of a Hausdorff limit: s^{d(k+1)} 2^{(k ell)^2} O(k n beta + k min(n, ell) alpha)^{(k+1)(n+ell)}.
AsymptoticBound hausdorff_asymptotic(const SetFormat& fmt, Nat k);

// Quantifier recursion --------------------------------------------------------

/// Parameters after i applications of the block-elimination step. The bound
/// being tracked is  E <= F_i * E^{M_i}(N_i free variables, nu - i blocks,
/// chain length ell_i, s_i functions).
struct RecursionState {
  Nat i = 0;
  Natural N;
  Natural s;
  Natural M;
  Natural F;
  Natural ell;

  friend bool operator==(const RecursionState&, const RecursionState&) = default;
};

void to_json(nlohmann::json& j, const RecursionState& st);

RecursionState initial_state(const QuantifierFormat& qf);

/// One elimination step. `blocks` holds n_1..n_nu; `ell` is the original chain
/// length. Throws RecursionExhausted once i == nu - 1.
RecursionState recursion_step(const RecursionState& state, std::span<const Nat> blocks, Nat ell);

/// 2^i n0 n_nu ... n_{nu-i+1}, the closed majorant of N_i.
Natural free_variable_majorant(const QuantifierFormat& qf, Nat i);

struct QuantifierReport {
  std::vector<RecursionState> states;  ///< states[0] .. states[nu - 1]
  AsymptoticBound engine;              ///< F_{nu-1} times the one-block closure
  AsymptoticBound closed;              ///< the closed-form descriptor in u_nu, v_nu
  Natural u_nu;
  Natural v_nu;
};

void to_json(nlohmann::json& j, const QuantifierReport& r);

/// One-block closure E^M(n0, 1, ell, alpha, beta, s) <=
/// 2^{n0 ell (n0 ell - 1)/2} (sM)^{2 n0 (n1 + 1)} O(n0 n1 (alpha + beta))^{n0 (n1 + 1 + ell)}.
AsymptoticBound one_block_closure(const Natural& n0, Nat n1, const Natural& ell, Nat alpha,
                                  Nat beta, const Natural& s, const Natural& M);

QuantifierReport quantifier_bound(const QuantifierFormat& qf);

/// Semi-algebraic specialisation: [2^{nu^2} d s n0 ... n_nu]^{O(2^nu n0 ... n_nu)}
/// with d = inner.beta. Requires inner.chain.ell == 0.
AsymptoticBound algebraic_quantifier(const QuantifierFormat& qf);

/// Bound obtained through quantifier elimination:
/// s^{4 n0 (n0 + 1) prod_{i>=0} (n_i + 1)} d^{O(n0^2 n1 ... n_nu)}.
AsymptoticBound qe_comparison(const QuantifierFormat& qf);

}  // namespace pfb
