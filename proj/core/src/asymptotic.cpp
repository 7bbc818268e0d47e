#include "pfb/asymptotic.hpp"

#include <algorithm>
#include <cmath>

#include "pfb/errors.hpp"

namespace pfb {

namespace {

Natural triangle(const Natural& x) { return x == 0 ? Natural(0) : x * (x - 1) / 2; }

Natural product_of_blocks(const QuantifierFormat& qf) {
  Natural p = 1;
  for (Nat b : qf.blocks) p *= b;
  return p;
}

AsymptoticBound start(const char* id, nlohmann::json inputs) {
  AsymptoticBound b;
  b.formula_id = id;
  b.inputs = std::move(inputs);
  b.unknown_constant = true;
  return b;
}

void finish(AsymptoticBound& b) {
  if (b.factors.empty()) b.factors.push_back({Natural(1), Exponent::exact(1)});
}

double to_double(const Natural& x) { return x.convert_to<double>(); }

}  // namespace

AsymptoticBound& AsymptoticBound::times(Natural base, Exponent exponent) {
  if (exponent.value != 0) factors.push_back({std::move(base), std::move(exponent)});
  return *this;
}

double AsymptoticBound::log2_value(double constant) const {
  double total = 0;
  for (const auto& f : factors) {
    if (f.degenerate()) continue;
    double e = to_double(f.exponent.value);
    if (f.exponent.cls == ExponentClass::BigO) e *= constant;
    total += e * pfb::log2(f.base);
  }
  return total;
}

void to_json(nlohmann::json& j, const AsymptoticBound& b) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : b.factors) {
    nlohmann::json jf{{"base", to_string(f.base)},
                      {"exponent",
                       {{"class", f.exponent.cls == ExponentClass::Exact ? "exact" : "O"},
                        {"value", to_string(f.exponent.value)}}}};
    if (f.degenerate()) jf["degenerate"] = true;
    factors.push_back(std::move(jf));
  }
  j = nlohmann::json{{"formula_id", b.formula_id},
                     {"inputs", b.inputs},
                     {"factors", std::move(factors)},
                     {"unknown_constant", b.unknown_constant},
                     {"log2_lower", b.log2_lower()}};
}

void to_json(nlohmann::json& j, const CompareReport& r) {
  const char* winner = r.smaller == Winner::First ? "first"
                       : r.smaller == Winner::Second ? "second"
                                                      : "equal";
  j = nlohmann::json{{"smaller", winner},
                     {"log2_first", r.log2_first},
                     {"log2_second", r.log2_second},
                     {"constant", r.constant},
                     {"indicative_only", r.indicative_only}};
}

CompareReport compare(const AsymptoticBound& a, const AsymptoticBound& b, double constant) {
  CompareReport r;
  r.constant = constant;
  r.log2_first = a.log2_value(constant);
  r.log2_second = b.log2_value(constant);
  r.indicative_only = a.unknown_constant || b.unknown_constant;
  const double scale = std::max({1.0, std::abs(r.log2_first), std::abs(r.log2_second)});
  if (a.factors == b.factors || std::abs(r.log2_first - r.log2_second) <= 1e-12 * scale) {
    r.smaller = Winner::Equal;
  } else {
    r.smaller = r.log2_first < r.log2_second ? Winner::First : Winner::Second;
  }
  return r;
}

std::optional<double> dominating_constant(const AsymptoticBound& a, const AsymptoticBound& b) {
  const double target = a.log2_lower();
  const double exact_part = b.log2_value(0.0);
  const double o_part = b.log2_value(1.0) - exact_part;
  if (exact_part + o_part >= target) return 1.0;
  if (o_part <= 0) return std::nullopt;
  return (target - exact_part) / o_part;
}

AsymptoticBound variety_asymptotic(const ChainFormat& chain, Nat beta) {
  validate(chain);
  if (beta < 1) throw InvalidFormat("beta >= 1");
  const Nat n = chain.n, ell = chain.ell;
  AsymptoticBound b = start("variety_asymptotic", {{"n", n}, {"ell", ell}, {"alpha", chain.alpha},
                                                   {"beta", beta}, {"gamma", chain.gamma}});
  b.times(2, Exponent::exact(triangle(ell)))
      .times(n * beta + std::min(n, ell) * chain.alpha, Exponent::big_o(n + ell));
  finish(b);
  return b;
}

AsymptoticBound pclosed_asymptotic(const SetFormat& fmt) {
  validate(fmt);
  if (!fmt.d) throw InvalidFormat("variety dimension d is required");
  const Nat n = fmt.chain.n, ell = fmt.chain.ell;
  AsymptoticBound b = start("pclosed_asymptotic", fmt);
  b.times(fmt.s, Exponent::exact(*fmt.d))
      .times(2, Exponent::exact(triangle(ell)))
      .times(n * fmt.beta + std::min(n, ell) * fmt.chain.alpha, Exponent::big_o(n + ell));
  finish(b);
  return b;
}

AsymptoticBound bm_asymptotic(const SetFormat& fmt) {
  validate(fmt);
  if (!fmt.d) throw InvalidFormat("variety dimension d is required");
  const Nat n = fmt.chain.n, ell = fmt.chain.ell;
  AsymptoticBound b = start("bm_asymptotic", fmt);
  b.times(fmt.s, Exponent::exact(2 * *fmt.d))
      .times(2, Exponent::exact(2 * triangle(ell)))
      .times(n * fmt.beta + std::min(n, ell) * fmt.chain.alpha, Exponent::big_o(2 * (n + ell)));
  finish(b);
  return b;
}

AsymptoticBound gv_qf(const SetFormat& fmt) {
  validate(fmt);
  const Nat n = fmt.chain.n, ell = fmt.chain.ell;
  AsymptoticBound b = start("gv_qf", fmt);
  b.times(2, Exponent::exact(triangle(ell)))
      .times(fmt.s, Exponent::exact(2 * n))
      .times(n * fmt.beta + std::min(n, ell) * fmt.chain.alpha, Exponent::big_o(n + ell));
  finish(b);
  return b;
}

AsymptoticBound existential(Nat n0, Nat n1, Nat ell, Nat alpha, Nat beta, Nat s, Nat k) {
  const Nat N = n0 + (k + 1) * n1;
  const Nat L = (k + 1) * ell;
  AsymptoticBound b = start("existential", {{"n0", n0}, {"n1", n1}, {"ell", ell}, {"alpha", alpha},
                                            {"beta", beta}, {"s", s}, {"k", k}, {"N", N}, {"L", L}});
  b.times(k * s + n0 + k * n1, Exponent::exact(N))
      .times(2, Exponent::exact(triangle(L)))
      .times(N * beta + std::min(N, L) * alpha, Exponent::big_o(N + L));
  finish(b);
  return b;
}

AsymptoticBound universal(Nat n0, Nat n1, Nat ell, Nat alpha, Nat beta, Nat s, Nat k) {
  if (k > n0) throw InvalidFormat("k <= n0");
  const Nat N = n0 + (n0 - k) * n1;
  const Nat L = (n0 - k) * ell;
  AsymptoticBound b = start("universal", {{"n0", n0}, {"n1", n1}, {"ell", ell}, {"alpha", alpha},
                                          {"beta", beta}, {"s", s}, {"k", k}, {"N", N}, {"L", L}});
  b.times(n0 + (n0 - k) * (s + n1), Exponent::exact(N))
      .times(2, Exponent::exact(triangle(L)))
      .times(N * beta + std::min(N, L) * alpha, Exponent::big_o(N + L));
  finish(b);
  return b;
}

AsymptoticBound singular_cc_asymptotic(const CoupleFormat& couple) {
  validate(couple);
  const SetFormat f = couple.fiberwise();
  const Nat n = f.chain.n, ell = f.chain.ell;
  AsymptoticBound b = start("singular_cc_asymptotic", couple);
  b.times(Natural(couple.M) * couple.N, Exponent::exact(1))
      .times(2, Exponent::exact(Natural(n * ell) * (n * ell)))
      .times(n * n * (f.chain.alpha + f.beta), Exponent::big_o((n + 1) * ell));
  finish(b);
  return b;
}

AsymptoticBound hausdorff_asymptotic(const SetFormat& fmt, Nat k) {
  validate(fmt);
  if (!fmt.d) throw InvalidFormat("variety dimension d is required");
  if (k > *fmt.d) throw InvalidFormat("k <= d");
  const Nat n = fmt.chain.n, ell = fmt.chain.ell, d = *fmt.d;
  nlohmann::json inputs = fmt;
  inputs["k"] = k;
  AsymptoticBound b = start("hausdorff_asymptotic", std::move(inputs));
  b.times(fmt.s, Exponent::exact(d * (k + 1)))
      .times(2, Exponent::exact(Natural(k * ell) * (k * ell)))
      .times(k * n * fmt.beta + k * std::min(n, ell) * fmt.chain.alpha,
             Exponent::big_o((k + 1) * (n + ell)));
  finish(b);
  return b;
}

void to_json(nlohmann::json& j, const RecursionState& st) {
  j = nlohmann::json{{"i", st.i},
                     {"N", to_string(st.N)},
                     {"s", to_string(st.s)},
                     {"M", to_string(st.M)},
                     {"F", to_string(st.F)},
                     {"ell", to_string(st.ell)}};
}

RecursionState initial_state(const QuantifierFormat& qf) {
  validate(qf);
  return RecursionState{0, qf.n0, qf.inner.s, qf.M, 1, qf.inner.chain.ell};
}

RecursionState recursion_step(const RecursionState& state, std::span<const Nat> blocks, Nat ell) {
  const Nat nu = blocks.size();
  if (nu == 0 || state.i + 1 >= nu) {
    throw RecursionExhausted("recursion step requested at i = " + std::to_string(state.i) +
                             " with nu = " + std::to_string(nu));
  }
  const Nat outer = blocks[nu - state.i - 1];  // n_{nu - i}
  RecursionState next;
  next.i = state.i + 1;
  next.N = (outer + 1) * state.N;
  next.s = state.N * state.s;
  next.M = state.N;
  next.F = state.F * pow(Natural(4 * state.M * state.N), state.N.convert_to<std::uint64_t>());
  // ell_{i+1} = (N_0 + ... + N_i) ell; ell_0 is the input length, not part of the sum.
  next.ell = (state.i == 0 ? Natural(0) : state.ell) + state.N * ell;
  return next;
}

Natural free_variable_majorant(const QuantifierFormat& qf, Nat i) {
  Natural bound = pow(Natural(2), i) * qf.n0;
  for (Nat j = 0; j < i; ++j) bound *= qf.block(qf.nu() - j);
  return bound;
}

AsymptoticBound one_block_closure(const Natural& n0, Nat n1, const Natural& ell, Nat alpha,
                                  Nat beta, const Natural& s, const Natural& M) {
  AsymptoticBound b = start("one_block_closure", {{"n0", to_string(n0)}, {"n1", n1},
                                                  {"ell", to_string(ell)}, {"alpha", alpha},
                                                  {"beta", beta}, {"s", to_string(s)},
                                                  {"M", to_string(M)}});
  b.times(2, Exponent::exact(triangle(n0 * ell)))
      .times(s * M, Exponent::exact(2 * n0 * (n1 + 1)))
      .times(n0 * n1 * (alpha + beta), Exponent::big_o(n0 * (n1 + 1 + ell)));
  finish(b);
  return b;
}

void to_json(nlohmann::json& j, const QuantifierReport& r) {
  j = nlohmann::json{{"states", r.states},
                     {"engine", r.engine},
                     {"closed", r.closed},
                     {"u_nu", to_string(r.u_nu)},
                     {"v_nu", to_string(r.v_nu)}};
}

QuantifierReport quantifier_bound(const QuantifierFormat& qf) {
  validate(qf);
  const Nat nu = qf.nu();
  const Nat ell = qf.inner.chain.ell;
  const Nat alpha = qf.inner.chain.alpha;
  const Nat beta = qf.inner.beta;

  QuantifierReport report;
  report.states.push_back(initial_state(qf));
  while (report.states.back().i + 1 < nu) {
    report.states.push_back(recursion_step(report.states.back(), qf.blocks, ell));
  }
  const RecursionState& last = report.states.back();

  const AsymptoticBound closure =
      one_block_closure(last.N, qf.block(1), last.ell, alpha, beta, last.s, last.M);
  report.engine = start("quantifier_bound", qf);
  if (last.F > 1) report.engine.times(last.F, Exponent::exact(1));
  for (const auto& f : closure.factors) {
    if (!(f.base == 1 && f.exponent == Exponent::exact(1))) report.engine.factors.push_back(f);
  }
  finish(report.engine);

  // u = 2^nu n0 n_nu ... n_1;  v = 2^{2nu} n0^2 n_nu^2 ... n_3^2 n_2.
  report.u_nu = pow(Natural(2), nu) * qf.n0 * product_of_blocks(qf);
  report.v_nu = pow(Natural(2), 2 * nu) * Natural(qf.n0) * qf.n0;
  for (Nat i = 3; i <= nu; ++i) report.v_nu *= Natural(qf.block(i)) * qf.block(i);
  if (nu >= 2) report.v_nu *= qf.block(2);

  const Natural& u = report.u_nu;
  const Natural& v = report.v_nu;
  report.closed = start("quantifier_closed", qf);
  report.closed.times(2, Exponent::big_o(Natural(nu) * u + Natural(ell) * ell * v * v))
      .times(qf.inner.s, Exponent::big_o(u))
      .times(u * (alpha + beta), Exponent::big_o(u + Natural(ell) * v));
  finish(report.closed);
  return report;
}

AsymptoticBound algebraic_quantifier(const QuantifierFormat& qf) {
  validate(qf);
  if (qf.inner.chain.ell != 0) throw InvalidFormat("inner format must be polynomial (ell = 0)");
  const Nat nu = qf.nu();
  const Natural blocks = Natural(qf.n0) * product_of_blocks(qf);
  AsymptoticBound b = start("algebraic_quantifier", qf);
  b.times(pow(Natural(2), nu * nu) * qf.inner.beta * qf.inner.s * blocks,
          Exponent::big_o(pow(Natural(2), nu) * blocks));
  finish(b);
  return b;
}

AsymptoticBound qe_comparison(const QuantifierFormat& qf) {
  validate(qf);
  if (qf.inner.chain.ell != 0) throw InvalidFormat("inner format must be polynomial (ell = 0)");
  Natural shifted = Natural(qf.n0) + 1;
  for (Nat b : qf.blocks) shifted *= b + 1;
  AsymptoticBound b = start("qe_comparison", qf);
  b.times(qf.inner.s, Exponent::exact(4 * Natural(qf.n0) * (qf.n0 + 1) * shifted))
      .times(qf.inner.beta, Exponent::big_o(Natural(qf.n0) * qf.n0 * product_of_blocks(qf)));
  finish(b);
  return b;
}

}  // namespace pfb
