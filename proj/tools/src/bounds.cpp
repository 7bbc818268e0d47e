#include <functional>
#include <map>
#include <sstream>

#include "pfb/asymptotic.hpp"
#include "pfb/cli.hpp"
#include "pfb/errors.hpp"
#include "pfb/exact_bounds.hpp"
#include "pfb/formats.hpp"

namespace pfb::cli {

namespace {

using json = nlohmann::json;

Nat nat(const json& p, const char* key) {
  auto it = p.find(key);
  if (it == p.end()) throw InvalidFormat(std::string("missing field '") + key + "'");
  if (!it->is_number_integer() || it->get<long long>() < 0)
    throw InvalidFormat(std::string("field '") + key + "' must be a natural number");
  return it->get<Nat>();
}

Nat nat_or(const json& p, const char* key, Nat fallback) {
  return p.contains(key) ? nat(p, key) : fallback;
}

// Chain fields may be given flat ({"n":..,"ell":..}) or under "chain".
ChainFormat chain_of(const json& p) {
  if (p.contains("chain")) return p.at("chain").get<ChainFormat>();
  ChainFormat c;
  c.n = nat(p, "n");
  c.ell = nat_or(p, "ell", c.ell);
  c.alpha = nat_or(p, "alpha", c.alpha);
  c.gamma = nat_or(p, "gamma", c.gamma);
  return c;
}

SetFormat set_of(const json& p) {
  if (!p.is_object()) throw InvalidFormat("params must be a JSON object");
  SetFormat f;
  f.chain = chain_of(p);
  f.beta = nat(p, "beta");
  f.s = nat(p, "s");
  if (p.contains("m")) f.m = nat(p, "m");
  if (p.contains("d")) f.d = nat(p, "d");
  if (p.contains("r")) f.r = nat(p, "r");
  validate(f);
  return f;
}

// {"x", "y", "M", "N"}, or flat: one chain, beta, optional s, "d" = dim X, "k" = dim Y.
CoupleFormat couple_of(const json& p) {
  CoupleFormat c;
  if (p.contains("x") || p.contains("y")) {
    if (!p.contains("x") || !p.contains("y")) throw InvalidFormat("missing field 'x' or 'y'");
    c.x = set_of(p.at("x"));
    c.y = set_of(p.at("y"));
  } else {
    c.x.chain = chain_of(p);
    c.x.beta = nat(p, "beta");
    c.x.s = nat_or(p, "s", 0);
    c.y = c.x;
    if (p.contains("d")) c.x.d = nat(p, "d");
    if (p.contains("k")) c.y.d = nat(p, "k");
  }
  c.M = nat_or(p, "M", 1);
  c.N = nat_or(p, "N", 1);
  validate(c);
  return c;
}

// {"n0", "blocks" | ("nu", "block"), "inner" | flat inner fields, "M"}.
// Flat inner fields: "d" (or "beta") is the degree, "s", optional ell/alpha/gamma.
QuantifierFormat quantifier_of(const json& p) {
  QuantifierFormat q;
  q.n0 = nat(p, "n0");
  if (p.contains("blocks")) {
    q.blocks = p.at("blocks").get<std::vector<Nat>>();
  } else {
    q.blocks.assign(nat(p, "nu"), nat(p, "block"));
  }
  q.M = nat_or(p, "M", 1);
  Nat total = q.n0;
  for (Nat b : q.blocks) total += b;
  if (p.contains("inner")) {
    q.inner = set_of(p.at("inner"));
  } else {
    q.inner.chain = ChainFormat{total, nat_or(p, "ell", 0), nat_or(p, "alpha", 1),
                                nat_or(p, "gamma", kPolynomialGamma)};
    q.inner.beta = p.contains("d") ? nat(p, "d") : nat(p, "beta");
    q.inner.s = nat(p, "s");
  }
  validate(q);
  return q;
}

std::vector<Nat> betas_of(const json& p) {
  if (p.contains("betas")) return p.at("betas").get<std::vector<Nat>>();
  return std::vector<Nat>(nat(p, "n"), nat(p, "beta"));
}

using ExactFn = std::function<ExactBound(const json&)>;
using AsymFn = std::function<AsymptoticBound(const json&)>;

const std::map<std::string, ExactFn>& exact_registry() {
  static const std::map<std::string, ExactFn> reg{
      {"khovanskii",
       [](const json& p) {
         const auto b = betas_of(p);
         return khovanskii(nat(p, "n"), nat(p, "ell"), nat(p, "alpha"), b);
       }},
      {"khovanskii_domain",
       [](const json& p) {
         const auto b = betas_of(p);
         return khovanskii_domain(nat(p, "n"), nat(p, "ell"), nat(p, "alpha"), b, nat(p, "gamma"));
       }},
      {"fewnomial_system", [](const json& p) { return fewnomial_system(nat(p, "n"), nat(p, "r")); }},
      {"additive_complexity", [](const json& p) { return additive_complexity(nat(p, "k")); }},
      {"descartes", [](const json& p) { return descartes(nat(p, "r")); }},
      {"optm", [](const json& p) { return optm(nat(p, "n"), nat(p, "d")); }},
      {"variety_V", [](const json& p) { return variety_V(chain_of(p), nat(p, "beta")); }},
      {"variety_noncompact",
       [](const json& p) { return variety_noncompact(chain_of(p), nat(p, "beta")); }},
      {"basic_set_B0", [](const json& p) { return basic_set_B0(set_of(p)); }},
      {"pclosed_recursive", [](const json& p) { return pclosed_recursive(set_of(p)); }},
      {"pclosed_closed", [](const json& p) { return pclosed_closed(set_of(p)); }},
      {"pclosed_closed_level", [](const json& p) { return pclosed_closed_level(set_of(p)); }},
      {"pclosed_closed_dim", [](const json& p) { return pclosed_closed_dim(set_of(p)); }},
      {"sigma", [](const json& p) { return sigma(nat(p, "s"), nat(p, "d")); }},
      {"cells_bound", [](const json& p) { return cells_bound(set_of(p)); }},
      {"bm_composed", [](const json& p) { return bm_composed(set_of(p)); }},
      {"smooth_cc", [](const json& p) { return smooth_cc(couple_of(p)); }},
      {"singular_cc", [](const json& p) { return singular_cc(couple_of(p)); }},
      {"fewnomial_cc",
       [](const json& p) {
         if (p.contains("x")) return fewnomial_cc(couple_of(p), nat(p, "r"));
         CoupleFormat c;
         c.x = fewnomial_format(nat(p, "n"), nat(p, "r"), 1, nat_or(p, "s", 1));
         c.y = c.x;
         c.M = nat_or(p, "M", 1);
         c.N = nat_or(p, "N", 1);
         return fewnomial_cc(c, nat(p, "r"));
       }},
      {"hausdorff_betti", [](const json& p) { return hausdorff_betti(set_of(p), nat(p, "k")); }},
  };
  return reg;
}

const std::map<std::string, AsymFn>& asymptotic_registry() {
  static const std::map<std::string, AsymFn> reg{
      {"variety_asymptotic",
       [](const json& p) { return variety_asymptotic(chain_of(p), nat(p, "beta")); }},
      {"pclosed_asymptotic", [](const json& p) { return pclosed_asymptotic(set_of(p)); }},
      {"bm_asymptotic", [](const json& p) { return bm_asymptotic(set_of(p)); }},
      {"gv_qf", [](const json& p) { return gv_qf(set_of(p)); }},
      {"existential",
       [](const json& p) {
         return existential(nat(p, "n0"), nat(p, "n1"), nat(p, "ell"), nat(p, "alpha"),
                            nat(p, "beta"), nat(p, "s"), nat(p, "k"));
       }},
      {"universal",
       [](const json& p) {
         return universal(nat(p, "n0"), nat(p, "n1"), nat(p, "ell"), nat(p, "alpha"),
                          nat(p, "beta"), nat(p, "s"), nat(p, "k"));
       }},
      {"singular_cc_asymptotic",
       [](const json& p) { return singular_cc_asymptotic(couple_of(p)); }},
      {"hausdorff_asymptotic",
       [](const json& p) { return hausdorff_asymptotic(set_of(p), nat(p, "k")); }},
      {"one_block_closure",
       [](const json& p) {
         return one_block_closure(nat(p, "n0"), nat(p, "n1"), nat(p, "ell"), nat(p, "alpha"),
                                  nat(p, "beta"), nat(p, "s"), nat_or(p, "M", 1));
       }},
      {"quantifier_bound", [](const json& p) { return quantifier_bound(quantifier_of(p)).engine; }},
      {"quantifier_closed", [](const json& p) { return quantifier_bound(quantifier_of(p)).closed; }},
      {"algebraic_quantifier", [](const json& p) { return algebraic_quantifier(quantifier_of(p)); }},
      {"qe_comparison", [](const json& p) { return qe_comparison(quantifier_of(p)); }},
  };
  return reg;
}

template <class Map>
std::vector<std::string> keys(const Map& m) {
  std::vector<std::string> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return out;
}

std::string known_ids() {
  std::string s;
  for (const auto& id : exact_bound_ids()) s += (s.empty() ? "" : ", ") + id;
  for (const auto& id : asymptotic_bound_ids()) s += ", " + id;
  return s;
}

bool is_asymptotic(const std::string& id) { return asymptotic_registry().count(id) > 0; }

AsymptoticBound asymptotic(const std::string& id, const json& params) {
  auto it = asymptotic_registry().find(id);
  if (it == asymptotic_registry().end())
    throw InvalidFormat("unknown asymptotic bound '" + id + "'; known: " + known_ids());
  return it->second(params);
}

std::vector<json> range_values(const json& r) {
  std::vector<json> out;
  if (r.is_array()) {
    for (const auto& v : r) out.push_back(v);
  } else if (r.is_object()) {
    const long long from = r.at("from").get<long long>();
    const long long to = r.at("to").get<long long>();
    const long long step = r.value("step", 1LL);
    if (step < 1) throw InvalidFormat("range step >= 1");
    for (long long v = from; v <= to; v += step) out.emplace_back(v);
  } else {
    out.push_back(r);
  }
  return out;
}

json::json_pointer pointer(const std::string& key) {
  std::string path = "/";
  for (char c : key) path += c == '.' ? '/' : c;
  return json::json_pointer(path);
}

}  // namespace

std::vector<std::string> exact_bound_ids() { return keys(exact_registry()); }
std::vector<std::string> asymptotic_bound_ids() { return keys(asymptotic_registry()); }

json evaluate_bound(const std::string& id, const json& params) {
  if (!params.is_object()) throw InvalidFormat("params must be a JSON object");
  try {
    if (auto it = exact_registry().find(id); it != exact_registry().end()) return it->second(params);
    if (id == "quantifier_bound") return quantifier_bound(quantifier_of(params));
    if (is_asymptotic(id)) return asymptotic(id, params);
  } catch (const json::exception& e) {
    throw InvalidFormat(std::string("malformed params: ") + e.what());
  }
  throw InvalidFormat("unknown bound '" + id + "'; known: " + known_ids());
}

json table(const json& spec) {
  if (!spec.is_object() || !spec.contains("op"))
    throw InvalidFormat("table spec needs \"op\" (a bound id or \"compare\")");
  const std::string op = spec.at("op").get<std::string>();
  const json base = spec.value("base", json::object());
  const json vary = spec.value("vary", json::object());
  const double constant = spec.value("constant", 1.0);

  std::vector<std::pair<std::string, std::vector<json>>> axes;
  for (const auto& [key, r] : vary.items()) axes.emplace_back(key, range_values(r));

  json rows = json::array();
  std::vector<std::size_t> digit(axes.size(), 0);
  const bool empty = std::any_of(axes.begin(), axes.end(), [](const auto& a) { return a.second.empty(); });
  while (!empty) {
    json params = base;
    json varied = json::object();
    for (std::size_t a = 0; a < axes.size(); ++a) {
      params[pointer(axes[a].first)] = axes[a].second[digit[a]];
      varied[axes[a].first] = axes[a].second[digit[a]];
    }
    json row{{"params", varied}};
    try {
      if (op == "compare") {
        const auto first = asymptotic(spec.at("first").get<std::string>(), params);
        const auto second = asymptotic(spec.at("second").get<std::string>(), params);
        json cmp = compare(first, second, constant);
        row.update(cmp);
      } else if (is_asymptotic(op)) {
        const auto b = asymptotic(op, params);
        row["log2_lower"] = b.log2_lower();
        row["log2_value"] = b.log2_value(constant);
      } else {
        const json b = evaluate_bound(op, params);
        row["value"] = b.at("value");
        row["bit_length"] = b.at("bit_length");
      }
    } catch (const json::exception& e) {
      throw InvalidFormat(std::string("malformed table spec: ") + e.what());
    }
    rows.push_back(std::move(row));

    std::size_t a = axes.size();
    while (a > 0 && digit[a - 1] + 1 == axes[a - 1].second.size()) digit[--a] = 0;
    if (a == 0) break;
    ++digit[a - 1];
  }
  json columns = json::array();
  for (const auto& [key, values] : axes) columns.push_back(key);
  return json{{"op", op}, {"columns", columns}, {"rows", rows}};
}

std::string table_to_csv(const json& t) {
  std::vector<std::string> params = t.at("columns").get<std::vector<std::string>>();
  std::vector<std::string> results;
  for (const auto& row : t.at("rows"))
    for (const auto& [k, v] : row.items())
      if (k != "params" && std::find(results.begin(), results.end(), k) == results.end())
        results.push_back(k);
  auto cell = [](const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return std::string();
    return v.dump();
  };
  std::ostringstream out;
  bool first = true;
  for (const auto& c : params) out << (first ? "" : ",") << c, first = false;
  for (const auto& c : results) out << (first ? "" : ",") << c, first = false;
  out << '\n';
  for (const auto& row : t.at("rows")) {
    first = true;
    for (const auto& c : params) out << (first ? "" : ",") << cell(row.at("params").value(c, json())), first = false;
    for (const auto& c : results) out << (first ? "" : ",") << cell(row.value(c, json())), first = false;
    out << '\n';
  }
  return out.str();
}

}  // namespace pfb::cli
