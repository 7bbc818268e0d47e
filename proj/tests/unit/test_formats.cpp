#include <gtest/gtest.h>

#include "pfb/errors.hpp"
#include "pfb/formats.hpp"

namespace pfb {
namespace {

std::string violated(auto&& f) {
  try {
    validate(f);
  } catch (const InvalidFormat& e) {
    return e.invariant();
  }
  return "";
}

TEST(Formats, ValidateNamesTheInvariant) {
  EXPECT_EQ(violated(ChainFormat{1, 1, 1, 2}), "");
  EXPECT_EQ(violated(ChainFormat{0, 1, 1, 2}), "n >= 1");
  EXPECT_EQ(violated(ChainFormat{1, 1, 0, 2}), "alpha >= 1");
  SetFormat f;
  f.chain = {3, 0, 1, 2};
  f.d = 5;
  EXPECT_EQ(violated(f), "d <= n");
  f.d = 3;
  f.s = 1;
  f.m = 2;
  EXPECT_EQ(violated(f), "m <= s");
}

TEST(Formats, CoupleMembersShareTheChain) {
  CoupleFormat c;
  c.y.chain.ell = 3;
  EXPECT_EQ(violated(c), "x.chain == y.chain");
  c.y.chain = c.x.chain;
  c.x.beta = 2;
  c.y.s = 5;
  EXPECT_EQ(violated(c), "");
  const SetFormat f = c.fiberwise();
  EXPECT_EQ(f.beta, 2u);
  EXPECT_EQ(f.s, 5u);
}

TEST(Formats, QuantifierDimensionsAddUp) {
  QuantifierFormat q;
  q.n0 = 2;
  q.blocks = {1, 3};
  q.inner.chain.n = 6;
  EXPECT_EQ(violated(q), "");
  EXPECT_EQ(q.nu(), 2u);
  EXPECT_EQ(q.block(0), 2u);
  EXPECT_EQ(q.block(2), 3u);
  q.inner.chain.n = 5;
  EXPECT_EQ(violated(q), "inner.n == n0 + sum(blocks)");
  q.blocks.clear();
  EXPECT_EQ(violated(q), "nu >= 1");
}

TEST(Formats, PolynomialFormat) {
  const SetFormat f = polynomial_format(2, 3, 4);
  EXPECT_EQ(f.chain, (ChainFormat{2, 0, 1, 2}));
  EXPECT_EQ(f.beta, 3u);
  EXPECT_EQ(f.s, 4u);
  const SetFormat g = polynomial_format(1, 1, 1);
  EXPECT_EQ(g.chain, (ChainFormat{1, 0, 1, 2}));
  EXPECT_EQ(g.beta, 1u);
  EXPECT_THROW(polynomial_format(3, 0, 1), InvalidFormat);
}

TEST(Formats, FewnomialFormat) {
  const SetFormat f = fewnomial_format(2, 3, 1, 5);
  EXPECT_EQ(f.chain.ell, 5u);
  EXPECT_EQ(f.chain.alpha, 2u);
  EXPECT_EQ(f.beta, 1u);
  EXPECT_EQ(f.s, 5u);
  const SetFormat g = fewnomial_format(1, 1, 2, 1);
  EXPECT_EQ(g.chain.ell, 2u);
  EXPECT_EQ(g.beta, 2u);
  EXPECT_EQ(fewnomial_format(2, 3, 1, 5, true).chain.ell, 3u);
}

TEST(Formats, JsonRoundTrip) {
  SetFormat f = polynomial_format(2, 3, 4);
  f.m = 2;
  f.d = 1;
  const nlohmann::json j = f;
  EXPECT_EQ(j.get<SetFormat>(), f);
  QuantifierFormat q;
  q.n0 = 1;
  q.blocks = {1, 1};
  q.inner = polynomial_format(3, 2, 2);
  const nlohmann::json jq = q;
  EXPECT_EQ(jq.at("nu"), 2);
  EXPECT_EQ(jq.get<QuantifierFormat>(), q);
  EXPECT_THROW((nlohmann::json{{"n", -1}, {"ell", 0}, {"alpha", 1}, {"gamma", 2}}.get<ChainFormat>()),
               InvalidFormat);
  EXPECT_THROW(nlohmann::json::object().get<SetFormat>(), InvalidFormat);
}

}  // namespace
}  // namespace pfb
