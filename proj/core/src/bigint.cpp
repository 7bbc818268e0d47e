#include "pfb/bigint.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "pfb/errors.hpp"

namespace pfb {

namespace mp = boost::multiprecision;

std::uint64_t bit_length(const Natural& x) {
  if (x == 0) return 0;
  return static_cast<std::uint64_t>(mp::msb(mp::abs(x))) + 1;
}

Natural pow(const Natural& base, std::uint64_t exp) {
  if (exp == 0) return 1;
  if (base == 0 || base == 1) return base;
  const std::uint64_t bits = bit_length(base);
  if (exp > kMaxResultBits || (bits - 1) * exp > kMaxResultBits) {
    throw InvalidFormat("result exceeds " + std::to_string(kMaxResultBits) + " bits");
  }
  Natural result = 1;
  Natural b = base;
  while (exp != 0) {
    if (exp & 1U) result *= b;
    exp >>= 1U;
    if (exp != 0) b *= b;
  }
  return result;
}

Rational pow(const Rational& base, std::uint64_t exp) {
  return Rational(pow(mp::numerator(base), exp), pow(mp::denominator(base), exp));
}

Natural binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  Natural result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

Natural ceil(const Rational& x) {
  const Natural num = mp::numerator(x);
  const Natural den = mp::denominator(x);
  Natural q = num / den;  // truncates toward zero
  if (num % den != 0 && num > 0) ++q;
  return q;
}

double log2(const Natural& x) {
  if (x <= 0) return -std::numeric_limits<double>::infinity();
  const std::uint64_t bits = bit_length(x);
  if (bits <= 60) return std::log2(x.convert_to<double>());
  // Keep the top 60 bits; the discarded tail changes the result by < 2^-59.
  const std::uint64_t shift = bits - 60;
  const Natural top = x >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

std::string to_string(const Natural& x) { return x.str(); }

std::string to_string(const Rational& x) {
  if (mp::denominator(x) == 1) return mp::numerator(x).str();
  return mp::numerator(x).str() + "/" + mp::denominator(x).str();
}

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  }
  if (t.empty()) throw InvalidFormat("empty rational literal");
  if (const auto e = t.find_first_of("eE"); e != std::string::npos && t.find('/') == std::string::npos) {
    const std::string exp_text = t.substr(e + 1);
    long exp = 0;
    try {
      std::size_t used = 0;
      exp = std::stol(exp_text, &used);
      if (used != exp_text.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw InvalidFormat("malformed rational literal '" + text + "'");
    }
    if (exp > 4096 || exp < -4096) throw InvalidFormat("exponent out of range in '" + text + "'");
    const Rational mantissa = parse_rational(t.substr(0, e));
    const Rational scale(pow(Natural(10), static_cast<std::uint64_t>(exp < 0 ? -exp : exp)));
    return exp < 0 ? Rational(mantissa / scale) : Rational(mantissa * scale);
  }
  auto parse_int = [&](const std::string& s) -> Natural {
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw InvalidFormat("malformed rational literal '" + text + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
      if (!std::isdigit(static_cast<unsigned char>(s[j]))) {
        throw InvalidFormat("malformed rational literal '" + text + "'");
      }
    }
    Natural v(s.substr(i));
    return s[0] == '-' ? Natural(-v) : v;
  };
  if (const auto slash = t.find('/'); slash != std::string::npos) {
    const Natural den = parse_int(t.substr(slash + 1));
    if (den == 0) throw InvalidFormat("zero denominator in '" + text + "'");
    return Rational(parse_int(t.substr(0, slash)), den);
  }
  if (const auto dot = t.find('.'); dot != std::string::npos) {
    const std::string frac = t.substr(dot + 1);
    std::string whole = t.substr(0, dot);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    const Natural scale = pow(Natural(10), frac.size());
    const Natural w = mp::abs(parse_int(whole));
    const Natural f = frac.empty() ? Natural(0) : parse_int(frac);
    Rational r(w * scale + f, scale);
    return negative ? Rational(-r) : r;
  }
  return Rational(parse_int(t));
}

}  // namespace pfb
