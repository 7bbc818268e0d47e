#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pfb {

using Natural = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Largest result, in bits, that pow() will materialize. Keeps a typo in a
/// parameter file from exhausting memory.
inline constexpr std::uint64_t kMaxResultBits = std::uint64_t{1} << 26;

/// base^exp; throws InvalidFormat when the result would exceed kMaxResultBits.
Natural pow(const Natural& base, std::uint64_t exp);
Rational pow(const Rational& base, std::uint64_t exp);

Natural binomial(std::uint64_t n, std::uint64_t k);

/// Smallest integer >= x.
Natural ceil(const Rational& x);

/// Number of bits in the binary representation (0 for zero).
std::uint64_t bit_length(const Natural& x);

/// log2(x) as a double; -infinity for zero. Accurate to double precision even
/// for values far beyond the double range.
double log2(const Natural& x);

std::string to_string(const Natural& x);

/// Parses "p", "p/q", or a decimal literal like "-0.25" or "1e-3" into an exact rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);

}  // namespace pfb
