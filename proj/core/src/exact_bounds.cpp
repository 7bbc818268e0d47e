#include "pfb/exact_bounds.hpp"

#include <algorithm>
#include <numeric>

#include "pfb/errors.hpp"

namespace pfb {

namespace {

constexpr const char* kGammaRounded = "gamma/2 factor rounded up";
constexpr const char* kBetaStarRounded = "beta* = max(beta, gamma/2) rounded up";
constexpr const char* kExponentRounded = "half-integral exponent rounded up";
constexpr const char* kPolynomialGamma = "polynomial case uses the gamma = 2 convention";

void require(bool condition, const char* invariant) {
  if (!condition) throw InvalidFormat(invariant);
}

void add_flag(std::vector<std::string>& flags, const std::string& flag) {
  if (std::find(flags.begin(), flags.end(), flag) == flags.end()) flags.push_back(flag);
}

void merge_flags(std::vector<std::string>& into, const std::vector<std::string>& from) {
  for (const auto& f : from) add_flag(into, f);
}

Natural two_pow_triangle(Nat ell) { return pow(Natural(2), ell * (ell == 0 ? 0 : ell - 1) / 2); }

nlohmann::json chain_inputs(const ChainFormat& c, Nat beta) {
  return {{"n", c.n}, {"ell", c.ell}, {"alpha", c.alpha}, {"beta", beta}, {"gamma", c.gamma}};
}

ExactBound make(Natural value, const char* id, nlohmann::json inputs) {
  return ExactBound{std::move(value), id, std::move(inputs), {}};
}

// V(n, ell, alpha, beta, gamma) before rounding.
Rational variety_rational(const ChainFormat& c, Nat beta) {
  const Nat ab = c.alpha + beta - 1;
  Rational v = Rational(two_pow_triangle(c.ell) * beta * pow(Natural(ab), c.n - 1));
  v *= Rational(c.gamma, 2);
  v *= pow(Natural(c.n * ab + c.gamma + std::min(c.n, c.ell) * c.alpha), c.ell);
  return v;
}

ExactBound variety_checked(const ChainFormat& chain, Nat beta) {
  validate(chain);
  require(beta >= 1, "beta >= 1");
  const Rational exact = variety_rational(chain, beta);
  ExactBound b = make(ceil(exact), "variety_V", chain_inputs(chain, beta));
  if (b.value != exact) add_flag(b.flags, kGammaRounded);
  if (chain.ell == 0 && chain.gamma == pfb::kPolynomialGamma) add_flag(b.flags, kPolynomialGamma);
  return b;
}

Nat level_of(const SetFormat& fmt) {
  if (!fmt.m) throw InvalidFormat("combinatorial level m is required");
  return *fmt.m;
}

Nat dim_of(const SetFormat& fmt) {
  if (!fmt.d) throw InvalidFormat("variety dimension d is required");
  return *fmt.d;
}

// B(s, m) with both the B0 term and the m = 0 base expressed through V(2beta).
Natural recursive_value(Nat s, Nat m, const Natural& v2beta) {
  if (m == 0) return v2beta;
  const Natural b0 = pow(Natural(2), m) * binomial(s, m) * v2beta;
  return b0 + Natural(3 * s) * recursive_value(3 * s, m - 1, v2beta);
}

}  // namespace

void to_json(nlohmann::json& j, const ExactBound& b) {
  j = nlohmann::json{{"formula_id", b.formula_id},
                     {"inputs", b.inputs},
                     {"value", to_string(b.value)},
                     {"bit_length", b.bit_length()}};
  if (!b.flags.empty()) j["flags"] = b.flags;
}

ExactBound khovanskii(Nat n, Nat ell, Nat alpha, std::span<const Nat> betas) {
  require(!betas.empty(), "betas non-empty");
  require(n >= 1, "n >= 1");
  require(betas.size() == n, "len(betas) == n");
  require(std::all_of(betas.begin(), betas.end(), [](Nat b) { return b >= 1; }), "beta_i >= 1");
  Natural product = 1;
  for (Nat b : betas) product *= b;
  const Nat sum = std::accumulate(betas.begin(), betas.end(), Nat{0});
  const Natural bracket = Natural(sum) - n + std::min(n, ell) * alpha + 1;
  return make(two_pow_triangle(ell) * product * pow(bracket, ell), "khovanskii",
              {{"n", n}, {"ell", ell}, {"alpha", alpha},
               {"betas", std::vector<Nat>(betas.begin(), betas.end())}});
}

ExactBound khovanskii(Nat n, Nat ell, Nat alpha, Nat beta) {
  const std::vector<Nat> betas(n, beta);
  return khovanskii(n, ell, alpha, betas);
}

ExactBound khovanskii_domain(Nat n, Nat ell, Nat alpha, std::span<const Nat> betas, Nat gamma) {
  require(!betas.empty(), "betas non-empty");
  require(n >= 1, "n >= 1");
  require(betas.size() == n, "len(betas) == n");
  require(gamma >= 1, "gamma >= 1");
  require(std::all_of(betas.begin(), betas.end(), [](Nat b) { return b >= 1; }), "beta_i >= 1");
  Natural product = 1;
  for (Nat b : betas) product *= b;
  const Nat sum = std::accumulate(betas.begin(), betas.end(), Nat{0});
  const Natural bracket = Natural(sum) + gamma - n + std::min(n + 1, ell) * alpha;
  const Rational exact = Rational(two_pow_triangle(ell) * product * pow(bracket, ell)) *
                         Rational(gamma, 2);
  ExactBound b = make(ceil(exact), "khovanskii_domain",
                      {{"n", n}, {"ell", ell}, {"alpha", alpha},
                       {"betas", std::vector<Nat>(betas.begin(), betas.end())}, {"gamma", gamma}});
  if (b.value != exact) add_flag(b.flags, kGammaRounded);
  return b;
}

ExactBound fewnomial_system(Nat n, Nat r) {
  require(n >= 1, "n >= 1");
  require(r >= 1, "r >= 1");
  return make(two_pow_triangle(r) * pow(Natural(n + 1), r), "fewnomial_system",
              {{"n", n}, {"r", r}});
}

ExactBound additive_complexity(Nat k) {
  return make(pow(Natural(k + 2), 2 * k + 1) * pow(Natural(2), 2 * k * k + 2 * k + 1),
              "additive_complexity", {{"k", k}});
}

ExactBound descartes(Nat r) {
  require(r >= 1, "r >= 1");
  return make(Natural(2 * r - 1), "descartes", {{"r", r}});
}

ExactBound optm(Nat n, Nat d) {
  require(n >= 1, "n >= 1");
  require(d >= 1, "d >= 1");
  return make(Natural(d) * pow(Natural(2 * d - 1), n - 1), "optm", {{"n", n}, {"d", d}});
}

ExactBound variety_V(const ChainFormat& chain, Nat beta) { return variety_checked(chain, beta); }

ExactBound variety_V(Nat n, Nat ell, Nat alpha, Nat beta, Nat gamma) {
  return variety_checked(ChainFormat{n, ell, alpha, gamma}, beta);
}

ExactBound variety_noncompact(const ChainFormat& chain, Nat beta) {
  validate(chain);
  const Nat half_gamma = (chain.gamma + 1) / 2;
  ExactBound v = variety_checked(chain, std::max(beta, half_gamma));
  v.formula_id = "variety_noncompact";
  v.inputs = chain_inputs(chain, beta);
  if (chain.gamma % 2 == 1 && half_gamma > beta) add_flag(v.flags, kBetaStarRounded);
  return v;
}

ExactBound basic_set_B0(const SetFormat& fmt) {
  validate(fmt);
  const Nat m = level_of(fmt);
  ExactBound v = variety_checked(fmt.chain, fmt.beta);
  ExactBound b = make(pow(Natural(2), m) * binomial(fmt.s, m) * v.value, "basic_set_B0", fmt);
  merge_flags(b.flags, v.flags);
  return b;
}

ExactBound pclosed_recursive(const SetFormat& fmt) {
  validate(fmt);
  const Nat m = level_of(fmt);
  const ExactBound v2 = variety_checked(fmt.chain, 2 * fmt.beta);
  ExactBound b = make(recursive_value(fmt.s, m, v2.value),
                      "pclosed_recursive", fmt);
  merge_flags(b.flags, v2.flags);
  return b;
}

ExactBound pclosed_closed_level(const SetFormat& fmt) {
  validate(fmt);
  const Nat m = level_of(fmt);
  const ExactBound v2 = variety_checked(fmt.chain, 2 * fmt.beta);
  ExactBound b = make(pow(Natural(5 * fmt.s), m) * v2.value, "pclosed_closed", fmt);
  merge_flags(b.flags, v2.flags);
  return b;
}

ExactBound pclosed_closed_dim(const SetFormat& fmt) {
  validate(fmt);
  const Nat d = dim_of(fmt);
  require(fmt.s >= 1, "s >= 1");  // (10s)^d collapses to 0 otherwise
  const ExactBound v2 = variety_checked(fmt.chain, 2 * fmt.beta);
  ExactBound b = make(pow(Natural(10 * fmt.s), d) * v2.value, "pclosed_closed", fmt);
  merge_flags(b.flags, v2.flags);
  return b;
}

ExactBound pclosed_closed(const SetFormat& fmt) {
  return fmt.m ? pclosed_closed_level(fmt) : pclosed_closed_dim(fmt);
}

ExactBound sigma(Nat s, Nat d) {
  Natural total = 0;
  for (Nat i = 0; i <= d; ++i) total += binomial(4 * s + 1, i);
  return make(std::move(total), "sigma", {{"s", s}, {"d", d}});
}

ExactBound cells_bound(const SetFormat& fmt) {
  validate(fmt);
  const Nat d = dim_of(fmt);
  const ExactBound v = variety_checked(fmt.chain, std::max(fmt.beta, fmt.chain.gamma));
  ExactBound b = make(sigma(fmt.s, d).value * v.value, "cells_bound", fmt);
  merge_flags(b.flags, v.flags);
  return b;
}

ExactBound bm_composed(const SetFormat& fmt) {
  validate(fmt);
  SetFormat widened = fmt;
  widened.s = fmt.s + 1;
  widened.m.reset();
  const ExactBound cells = cells_bound(fmt);
  const ExactBound closed = pclosed_closed_dim(widened);
  ExactBound b = make(cells.value * 2 * closed.value, "bm_composed", fmt);
  merge_flags(b.flags, cells.flags);
  merge_flags(b.flags, closed.flags);
  return b;
}

ExactBound smooth_cc(const CoupleFormat& couple) {
  validate(couple);
  const SetFormat f = couple.fiberwise();
  const Nat n = f.chain.n;
  const Nat d = dim_of(couple.x);
  const Nat k = dim_of(couple.y);
  const Nat ab = f.chain.alpha + f.beta - 1;
  Natural total = 0;
  std::vector<std::string> flags;
  for (Nat p = 0; p <= d; ++p) {
    const Nat beta_p = std::max(1 + (n - k) * ab, 1 + (n - d + p) * ab);
    const ChainFormat lifted{(p + 2) * n, (p + 2) * f.chain.ell, f.chain.alpha, f.chain.gamma};
    const ExactBound v = variety_checked(lifted, beta_p);
    total += v.value;
    merge_flags(flags, v.flags);
  }
  ExactBound b = make(2 * total, "smooth_cc", couple);
  b.flags = std::move(flags);
  return b;
}

ExactBound singular_cc(const CoupleFormat& couple) {
  validate(couple);
  require(couple.M >= 1, "M >= 1");
  require(couple.N >= 1, "N >= 1");
  const SetFormat f = couple.fiberwise();
  const Nat n = f.chain.n;
  Natural total = 0;
  std::vector<std::string> flags;
  for (Nat p = 0; p < n; ++p) {
    const Nat beta_p = 1 + (p + 1) * (f.chain.alpha + 2 * f.beta - 1);
    const ChainFormat lifted{(p + 2) * n, (p + 2) * f.chain.ell, f.chain.alpha, f.chain.gamma};
    const ExactBound v = variety_checked(lifted, beta_p);
    total += v.value;
    merge_flags(flags, v.flags);
  }
  ExactBound b = make(2 * Natural(couple.M) * couple.N * total, "singular_cc", couple);
  b.flags = std::move(flags);
  return b;
}

ExactBound fewnomial_cc(const CoupleFormat& couple, Nat r) {
  validate(couple);
  const SetFormat f = couple.fiberwise();
  const Nat n = f.chain.n;
  require(r >= 1, "r >= 1");
  require(f.chain.ell == n + r && f.chain.alpha == 2 && f.beta == 1,
          "fewnomial chain (ell = n + r, alpha = 2, beta = 1)");
  Natural total = 0;
  bool rounded = false;
  for (Nat p = 0; p < n; ++p) {
    const Nat q = p + 2;
    const Nat twice = q * q * (n + r) * (n + r);
    rounded = rounded || (twice % 2 == 1);
    total += pow(Natural(2), (twice + 1) / 2) * pow(Natural(6 * n + 6), q * (3 * n + 2 * r)) *
             pow(Natural(q), q * (n + r));
  }
  nlohmann::json inputs = couple;
  inputs["r"] = r;
  ExactBound b = make(Natural(couple.M) * couple.N * total, "fewnomial_cc", std::move(inputs));
  if (rounded) add_flag(b.flags, kExponentRounded);
  return b;
}

ExactBound hausdorff_betti(const SetFormat& fmt, Nat k) {
  validate(fmt);
  const Nat d = dim_of(fmt);
  require(k <= d, "k <= d");
  require(fmt.s >= 1, "s >= 1");
  const ChainFormat& c = fmt.chain;
  Natural total = 0;
  std::vector<std::string> flags;
  for (Nat p = 0; p <= k; ++p) {
    const ChainFormat lifted{(p + 1) * c.n, (p + 1) * c.ell, c.alpha, c.gamma};
    const ExactBound v = variety_checked(lifted, 2 * fmt.beta);
    total += pow(Natural(10 * fmt.s), (p + 1) * d) * v.value;
    merge_flags(flags, v.flags);
  }
  nlohmann::json inputs = fmt;
  inputs["k"] = k;
  ExactBound b = make(std::move(total), "hausdorff_betti", std::move(inputs));
  b.flags = std::move(flags);
  return b;
}

}  // namespace pfb
