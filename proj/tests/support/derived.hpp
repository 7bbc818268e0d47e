#pragma once

// Frozen values from tests/oracle/derive_values.py, replayed against the
// library. Entries carry flat parameter objects; couple-shaped operations
// build both members over one chain with x.d = d and y.d = k.

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "pfb/exact_bounds.hpp"

namespace pfb::derived {

struct Entry {
  std::string op;
  nlohmann::json params;
  Natural value;
};

inline std::vector<Entry> load() {
  std::ifstream in(PFB_TEST_DATA_DIR "/derived_values.json");
  if (!in) throw std::runtime_error("cannot open derived_values.json");
  const auto doc = nlohmann::json::parse(in);
  std::vector<Entry> out;
  for (const auto& e : doc) {
    out.push_back({e.at("op").get<std::string>(), e.at("params"),
                   Natural(e.at("value").get<std::string>())});
  }
  return out;
}

inline Nat get(const nlohmann::json& p, const char* key, Nat fallback = 0) {
  return p.contains(key) ? p.at(key).get<Nat>() : fallback;
}

inline ChainFormat chain_of(const nlohmann::json& p) {
  return {get(p, "n"), get(p, "ell"), get(p, "alpha", 1), get(p, "gamma", 2)};
}

inline SetFormat set_of(const nlohmann::json& p) {
  SetFormat f;
  f.chain = chain_of(p);
  f.beta = get(p, "beta", 1);
  f.s = get(p, "s");
  if (p.contains("m")) f.m = get(p, "m");
  if (p.contains("d")) f.d = get(p, "d");
  return f;
}

inline CoupleFormat couple_of(const nlohmann::json& p) {
  CoupleFormat c;
  c.x = set_of(p);
  c.x.m.reset();
  c.y = c.x;
  if (p.contains("d")) c.x.d = get(p, "d");
  if (p.contains("k")) c.y.d = get(p, "k");
  c.M = get(p, "M", 1);
  c.N = get(p, "N", 1);
  return c;
}

inline ExactBound evaluate(const std::string& op, const nlohmann::json& p) {
  if (op == "khovanskii") {
    const auto betas = p.at("betas").get<std::vector<Nat>>();
    return khovanskii(get(p, "n"), get(p, "ell"), get(p, "alpha", 1), betas);
  }
  if (op == "khovanskii_domain") {
    const auto betas = p.at("betas").get<std::vector<Nat>>();
    return khovanskii_domain(get(p, "n"), get(p, "ell"), get(p, "alpha", 1), betas,
                             get(p, "gamma", 2));
  }
  if (op == "fewnomial_system") return fewnomial_system(get(p, "n"), get(p, "r"));
  if (op == "additive_complexity") return additive_complexity(get(p, "k"));
  if (op == "descartes") return descartes(get(p, "r"));
  if (op == "optm") return optm(get(p, "n"), get(p, "d"));
  if (op == "variety_V") return variety_V(chain_of(p), get(p, "beta", 1));
  if (op == "variety_noncompact") return variety_noncompact(chain_of(p), get(p, "beta", 1));
  if (op == "basic_set_B0") return basic_set_B0(set_of(p));
  if (op == "pclosed_recursive") return pclosed_recursive(set_of(p));
  if (op == "pclosed_closed") return pclosed_closed(set_of(p));
  if (op == "sigma") return sigma(get(p, "s"), get(p, "d"));
  if (op == "cells_bound") return cells_bound(set_of(p));
  if (op == "bm_composed") return bm_composed(set_of(p));
  if (op == "smooth_cc") return smooth_cc(couple_of(p));
  if (op == "singular_cc") return singular_cc(couple_of(p));
  if (op == "fewnomial_cc") {
    const Nat n = get(p, "n");
    const Nat r = get(p, "r");
    CoupleFormat c;
    c.x = fewnomial_format(n, r, 1, 1);
    c.y = c.x;
    c.M = get(p, "M", 1);
    c.N = get(p, "N", 1);
    return fewnomial_cc(c, r);
  }
  if (op == "hausdorff_betti") return hausdorff_betti(set_of(p), get(p, "k"));
  throw std::invalid_argument("unknown derived op " + op);
}

}  // namespace pfb::derived
