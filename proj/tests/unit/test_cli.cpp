#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "pfb/bigint.hpp"
#include "pfb/cli.hpp"
#include "pfb/errors.hpp"

namespace pfb::cli {
namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(const std::string& rel) { return std::string(PFB_TEST_DATA_DIR) + "/" + rel; }

TEST(Cli, BoundVariety) {
  const Result r = call({"bound", "variety_V", "--params", R"({"n":1,"ell":1,"alpha":1,"beta":2,"gamma":2})"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.json().at("value"), "10");
  EXPECT_EQ(r.json().at("formula_id"), "variety_V");
  EXPECT_EQ(r.json().at("bit_length"), 4);
}

TEST(Cli, EveryRegisteredIdEvaluates) {
  const nlohmann::json exact_params{{"n", 2}, {"ell", 1}, {"alpha", 1}, {"beta", 2}, {"gamma", 2},
                                    {"s", 2}, {"m", 1}, {"d", 1}, {"k", 1}, {"r", 1}, {"betas", {1, 2}}};
  for (const auto& id : exact_bound_ids()) {
    nlohmann::json p = exact_params;
    if (id == "fewnomial_cc") p = {{"n", 1}, {"r", 1}};
    EXPECT_NO_THROW(evaluate_bound(id, p)) << id;
  }
  const nlohmann::json asym_params{{"n", 2}, {"ell", 0}, {"alpha", 1}, {"beta", 2}, {"gamma", 2},
                                   {"s", 2}, {"d", 1}, {"k", 1}, {"n0", 1}, {"n1", 1},
                                   {"blocks", {1}}, {"M", 1}, {"N", 1}};
  for (const auto& id : asymptotic_bound_ids()) EXPECT_NO_THROW(evaluate_bound(id, asym_params)) << id;
  EXPECT_THROW(evaluate_bound("no_such_bound", {}), Error);
}

TEST(Cli, AsymptoticBound) {
  const Result r = call({"bound", "--asymptotic", "gv_qf", "--params",
                         R"({"n":1,"ell":0,"beta":3,"s":5})", "--constant", "2"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto j = r.json();
  EXPECT_EQ(j.at("factors").size(), 2u);
  EXPECT_EQ(j.at("factors")[1].at("exponent").at("class"), "O");
  EXPECT_NEAR(j.at("log2_value").get<double>(), 2 * std::log2(5.0) + 2 * std::log2(3.0), 1e-9);
}

TEST(Cli, Compare) {
  const Result r = call({"compare", "algebraic_quantifier", "qe_comparison", "--params",
                         R"({"n0":8,"blocks":[1],"d":2,"s":2})"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.json().at("smaller"), "first");
  EXPECT_EQ(r.json().at("indicative_only"), true);
}

TEST(Cli, VerifySpectralSequence) {
  const Result r = call({"verify-ss", data("maps/arcs_over_circle.json"), "--kmax", "1"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.json().at("ok"), true);
  EXPECT_EQ(r.json().at("lhs"), nlohmann::json({1, 1}));
  const Result bad = call({"verify-ss", data("maps/not_surjective.json")});
  EXPECT_EQ(bad.status, kExitInputError);
  EXPECT_TRUE(bad.json().contains("hint"));
}

TEST(Cli, VerifyCells) {
  const Result r = call({"verify-cells", data("systems/quarter.json"), "--resolution", "40"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.json().at("report").at("total_components"), 5);
  EXPECT_EQ(r.json().at("check").at("verdict"), "holds");
  EXPECT_EQ(call({"verify-cells", data("systems/quarter.json")}).status, kExitInputError);
}

TEST(Cli, Homology) {
  const Result r = call({"homology", data("complexes/sphere2.json"), "--field", "gf2"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.json().at("betti"), nlohmann::json({1, 0, 1}));
  EXPECT_EQ(r.json().at("euler_characteristic"), 2);
  EXPECT_EQ(call({"homology", data("complexes/annulus.json")}).json().at("betti"), nlohmann::json({1, 1, 0}));
  EXPECT_EQ(call({"homology", data("complexes/sphere2.json"), "--field", "z"}).status, kExitInputError);
}

TEST(Cli, Diagonal) {
  const Result r = call({"diagonal", data("samples/two_clusters.json")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_EQ(r.json().at("components"), 2);
  const Result p0 = call({"diagonal", data("samples/two_clusters.json"), "--p", "0", "--delta", "0"});
  EXPECT_EQ(p0.json().at("components"), 2);
}

TEST(Cli, TableSweep) {
  const Result r = call({"table", "--params", "@" + data("sweeps/variety_beta.json")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  const auto rows = r.json().at("rows");
  ASSERT_EQ(rows.size(), 10u);
  pfb::Natural prev = 0;
  for (const auto& row : rows) {
    const pfb::Natural v(row.at("value").get<std::string>());
    EXPECT_GE(v, prev);
    prev = v;
  }
  const Result csv = call({"--format", "csv", "table", "--params", "@" + data("sweeps/variety_beta.json")});
  ASSERT_EQ(csv.status, kExitOk) << csv.err;
  EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 11);
}

TEST(Cli, TableComparisonFlips) {
  const Result r = call({"table", "--params", "@" + data("sweeps/ealg_vs_bqe.json")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  std::set<std::string> winners;
  const auto table = r.json();
  for (const auto& row : table.at("rows")) winners.insert(row.at("smaller").get<std::string>());
  EXPECT_TRUE(winners.count("first"));
  EXPECT_TRUE(winners.count("second"));
}

TEST(Cli, EmptyTable) {
  const Result r = call({"table", "--params", "@" + data("sweeps/empty.json")});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_TRUE(r.json().at("rows").empty());
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(call({"frobnicate"}).status, kExitInputError);
  EXPECT_EQ(call({}).status, kExitInputError);
  EXPECT_EQ(call({"bound", "variety_V", "--params", "{not json"}).status, kExitInputError);
  const Result invalid = call({"bound", "variety_V", "--params", R"({"n":0,"beta":1})"});
  EXPECT_EQ(invalid.status, kExitInputError);
  EXPECT_NE(invalid.json().at("error").get<std::string>().find("n >= 1"), std::string::npos);
  EXPECT_FALSE(invalid.err.empty());
  EXPECT_EQ(call({"--format", "csv", "bound", "descartes", "--params", R"({"r":2})"}).status, kExitInputError);
  EXPECT_EQ(call({"homology", data("does_not_exist.json")}).status, kExitInputError);
}

TEST(Cli, OutputFile) {
  const std::string path = testing::TempDir() + "pfb_cli_output.json";
  const Result r = call({"--output", path, "bound", "descartes", "--params", R"({"r":3})"});
  ASSERT_EQ(r.status, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  EXPECT_EQ(nlohmann::json::parse(in).at("value"), "5");
  std::remove(path.c_str());
}

TEST(Cli, Deterministic) {
  const std::vector<std::vector<std::string>> commands{
      {"verify-ss", data("maps/arcs_over_circle.json"), "--kmax", "2"},
      {"verify-cells", data("systems/circle.json"), "--resolution", "24"},
      {"table", "--params", "@" + data("sweeps/ealg_vs_bqe.json")},
      {"bound", "quantifier_bound", "--params", R"({"n0":2,"blocks":[1,2],"ell":1,"beta":2,"s":3})"}};
  for (const auto& c : commands) {
    const Result a = call(c);
    const Result b = call(c);
    EXPECT_EQ(a.status, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
}  // namespace pfb::cli
