#include "pfb/formats.hpp"

#include <algorithm>
#include <numeric>

#include "pfb/errors.hpp"

namespace pfb {

namespace {

void require(bool condition, const char* invariant) {
  if (!condition) throw InvalidFormat(invariant);
}

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  if (v) j[key] = *v;
}

template <class T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (auto it = j.find(key); it != j.end() && !it->is_null()) {
    v = it->template get<T>();
  } else {
    v.reset();
  }
}

Nat get_nat(const nlohmann::json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw InvalidFormat(std::string("missing field '") + key + "'");
  if (!it->is_number_integer() || it->get<long long>() < 0) {
    throw InvalidFormat(std::string("field '") + key + "' must be a natural number");
  }
  return it->get<Nat>();
}

}  // namespace

void validate(const ChainFormat& f) {
  require(f.n >= 1, "n >= 1");
  require(f.alpha >= 1, "alpha >= 1");
  require(f.gamma >= 1, "gamma >= 1");
}

void validate(const SetFormat& f) {
  validate(f.chain);
  require(f.beta >= 1, "beta >= 1");
  if (f.d) require(*f.d <= f.chain.n, "d <= n");
  if (f.m) require(*f.m <= f.s, "m <= s");
}

void validate(const CoupleFormat& f) {
  validate(f.x);
  validate(f.y);
  require(f.x.chain == f.y.chain, "x.chain == y.chain");
}

void validate(const QuantifierFormat& f) {
  require(!f.blocks.empty(), "nu >= 1");
  require(f.n0 >= 1, "n0 >= 1");
  require(std::all_of(f.blocks.begin(), f.blocks.end(), [](Nat b) { return b >= 1; }),
          "every block n_i >= 1");
  validate(f.inner);
  require(f.M >= 1, "M >= 1");
  const Nat total = std::accumulate(f.blocks.begin(), f.blocks.end(), f.n0);
  require(f.inner.chain.n == total, "inner.n == n0 + sum(blocks)");
}

SetFormat CoupleFormat::fiberwise() const {
  SetFormat out = x;
  out.beta = std::max(x.beta, y.beta);
  out.s = std::max(x.s, y.s);
  return out;
}

SetFormat polynomial_format(Nat n, Nat degree, Nat s, Nat gamma) {
  if (degree < 1) throw InvalidFormat("degree >= 1");
  SetFormat f;
  f.chain = ChainFormat{n, 0, 1, gamma};
  f.beta = degree;
  f.s = s;
  validate(f);
  return f;
}

SetFormat fewnomial_format(Nat n, Nat r, Nat pseudo_degree, Nat s, bool reduced_chain, Nat gamma) {
  if (r < 1) throw InvalidFormat("r >= 1");
  SetFormat f;
  f.chain = ChainFormat{n, reduced_chain ? r : n + r, 2, gamma};
  f.beta = pseudo_degree;
  f.s = s;
  f.r = r;
  validate(f);
  return f;
}

void to_json(nlohmann::json& j, const ChainFormat& f) {
  j = nlohmann::json{{"n", f.n}, {"ell", f.ell}, {"alpha", f.alpha}, {"gamma", f.gamma}};
}

void from_json(const nlohmann::json& j, ChainFormat& f) {
  f.n = get_nat(j, "n");
  f.ell = get_nat(j, "ell");
  f.alpha = get_nat(j, "alpha");
  f.gamma = get_nat(j, "gamma");
}

void to_json(nlohmann::json& j, const SetFormat& f) {
  j = nlohmann::json{{"chain", f.chain}, {"beta", f.beta}, {"s", f.s}};
  put_optional(j, "m", f.m);
  put_optional(j, "d", f.d);
  put_optional(j, "r", f.r);
}

void from_json(const nlohmann::json& j, SetFormat& f) {
  if (!j.contains("chain")) throw InvalidFormat("missing field 'chain'");
  f.chain = j.at("chain").get<ChainFormat>();
  f.beta = get_nat(j, "beta");
  f.s = get_nat(j, "s");
  get_optional(j, "m", f.m);
  get_optional(j, "d", f.d);
  get_optional(j, "r", f.r);
}

void to_json(nlohmann::json& j, const CoupleFormat& f) {
  j = nlohmann::json{{"x", f.x}, {"y", f.y}, {"M", f.M}, {"N", f.N}};
}

void from_json(const nlohmann::json& j, CoupleFormat& f) {
  if (!j.contains("x") || !j.contains("y")) throw InvalidFormat("missing field 'x' or 'y'");
  f.x = j.at("x").get<SetFormat>();
  f.y = j.at("y").get<SetFormat>();
  f.M = get_nat(j, "M");
  f.N = get_nat(j, "N");
}

void to_json(nlohmann::json& j, const QuantifierFormat& f) {
  j = nlohmann::json{
      {"n0", f.n0}, {"blocks", f.blocks}, {"nu", f.nu()}, {"inner", f.inner}, {"M", f.M}};
}

void from_json(const nlohmann::json& j, QuantifierFormat& f) {
  f.n0 = get_nat(j, "n0");
  if (!j.contains("blocks") || !j.at("blocks").is_array()) {
    throw InvalidFormat("missing field 'blocks'");
  }
  f.blocks = j.at("blocks").get<std::vector<Nat>>();
  if (j.contains("nu") && get_nat(j, "nu") != f.blocks.size()) {
    throw InvalidFormat("nu == len(blocks)");
  }
  if (!j.contains("inner")) throw InvalidFormat("missing field 'inner'");
  f.inner = j.at("inner").get<SetFormat>();
  f.M = j.contains("M") ? get_nat(j, "M") : 1;
}

}  // namespace pfb
