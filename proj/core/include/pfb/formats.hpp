#pragma once

// Discrete complexity parameters ("formats") consumed by every bound.
//
// A format never describes actual Pfaffian functions; it only records the
// integers the bounds depend on. All types are plain aggregates: construct,
// then call validate() (or rely on the bound functions, which validate).

#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

namespace pfb {

using Nat = std::uint64_t;

/// Pfaffian chain on a domain of bounded complexity.
struct ChainFormat {
  Nat n = 1;      ///< ambient dimension
  Nat ell = 0;    ///< chain length; 0 is the polynomial case
  Nat alpha = 1;  ///< chain degree
  Nat gamma = 2;  ///< degree of the exhausting function of the domain

  friend bool operator==(const ChainFormat&, const ChainFormat&) = default;
};

/// Exhausting-function degree used for polynomial (ell = 0) formats unless
/// the caller overrides it: g = 1 - |x|^2 on a ball has degree 2.
inline constexpr Nat kPolynomialGamma = 2;

struct SetFormat {
  ChainFormat chain;
  Nat beta = 1;  ///< degree bound for the functions in the chain
  Nat s = 0;     ///< number of functions
  std::optional<Nat> m;  ///< combinatorial level
  std::optional<Nat> d;  ///< dimension of the ambient variety
  std::optional<Nat> r;  ///< number of equations, or of monomials for fewnomials

  friend bool operator==(const SetFormat&, const SetFormat&) = default;
};

/// Semi-Pfaffian couple (X, Y); both members share one chain.
struct CoupleFormat {
  SetFormat x;
  SetFormat y;
  Nat M = 1;  ///< basic sets in X
  Nat N = 1;  ///< basic sets in Y

  /// Component-wise maximum of the two member formats (chain taken from x).
  SetFormat fiberwise() const;

  friend bool operator==(const CoupleFormat&, const CoupleFormat&) = default;
};

/// Alternating-quantifier formula over the cube I^{n0 + n1 + ... + n_nu}.
/// blocks[i - 1] holds n_i, so blocks.front() is the innermost block.
struct QuantifierFormat {
  Nat n0 = 1;
  std::vector<Nat> blocks;
  SetFormat inner;
  Nat M = 1;

  Nat nu() const { return blocks.size(); }
  /// n_i for 0 <= i <= nu.
  Nat block(Nat i) const { return i == 0 ? n0 : blocks.at(i - 1); }

  friend bool operator==(const QuantifierFormat&, const QuantifierFormat&) = default;
};

void validate(const ChainFormat& f);
void validate(const SetFormat& f);
void validate(const CoupleFormat& f);
void validate(const QuantifierFormat& f);

/// ell = 0 format for s polynomials of degree <= degree in n variables.
SetFormat polynomial_format(Nat n, Nat degree, Nat s, Nat gamma = kPolynomialGamma);

/// Format of s fewnomial functions with r monomials and the given
/// pseudo-degree. The standard chain (x_i^{-1}, monomials) has length n + r
/// and degree 2; after the logarithmic change of variables the chain keeps
/// only the r exponentials (reduced_chain = true).
SetFormat fewnomial_format(Nat n, Nat r, Nat pseudo_degree, Nat s, bool reduced_chain = false,
                           Nat gamma = kPolynomialGamma);

void to_json(nlohmann::json& j, const ChainFormat& f);
void from_json(const nlohmann::json& j, ChainFormat& f);
void to_json(nlohmann::json& j, const SetFormat& f);
void from_json(const nlohmann::json& j, SetFormat& f);
void to_json(nlohmann::json& j, const CoupleFormat& f);
void from_json(const nlohmann::json& j, CoupleFormat& f);
void to_json(nlohmann::json& j, const QuantifierFormat& f);
void from_json(const nlohmann::json& j, QuantifierFormat& f);

}  // namespace pfb
