#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "pfb/bigint.hpp"
#include "pfb/errors.hpp"

namespace pfb::detail {

/// Integers and rational strings are exact; JSON floats go through their
/// shortest decimal text, so 0.1 means 1/10.
inline Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(Natural(j.dump()));
  if (j.is_number_float() || j.is_string()) {
    return parse_rational(j.is_string() ? j.get<std::string>() : j.dump());
  }
  throw InvalidFormat("expected a number or a rational string, got " + j.dump());
}

inline nlohmann::json rational_to_json(const Rational& r) { return to_string(r); }

}  // namespace pfb::detail
