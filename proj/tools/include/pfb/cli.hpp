#pragma once

// Command-line front end. run() is the whole program minus process setup, so
// tests drive it with in-memory streams.

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace pfb::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitInputError = 2;

/// `args` excludes the program name. The JSON report goes to `out` (or to
/// the --output file); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Evaluates a named bound. Exact ids return an ExactBound document,
/// asymptotic ids an AsymptoticBound document (quantifier_bound returns the
/// full recursion report). Throws pfb::Error on unknown ids or bad params.
nlohmann::json evaluate_bound(const std::string& id, const nlohmann::json& params);

std::vector<std::string> exact_bound_ids();
std::vector<std::string> asymptotic_bound_ids();

/// Sweep over the parameter grid described by `spec`; see README for the schema.
nlohmann::json table(const nlohmann::json& spec);
std::string table_to_csv(const nlohmann::json& table);

}  // namespace pfb::cli
