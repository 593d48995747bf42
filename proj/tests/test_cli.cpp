#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "json.hpp"
#include "run_cli.hpp"

using namespace hhcross::testing;
using nlohmann::json;

TEST(Cli, GroupInfo) {
  auto r = run_cli("--spec " + problem("minus_id.toml") + " group-info");
  ASSERT_EQ(r.exit_code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["group_order"], 2);
  EXPECT_EQ(j["elements"][1]["codim"], 2);
  EXPECT_TRUE(j["elements"][1].contains("s_g"));

  r = run_cli("--spec " + problem("swap.toml") + " group-info");
  j = json::parse(r.out);
  EXPECT_EQ(j["elements"][1]["codim"], 1);
  EXPECT_EQ(j["elements"][1]["fixed_basis"], json({{1, 1}}));

  r = run_cli("--spec " + problem("s3.toml") + " group-info");
  j = json::parse(r.out);
  EXPECT_EQ(j["group_order"], 6);
  int t = 0, c = 0;
  for (const auto& e : j["elements"]) {
    if (e["order"] == 2) t += e["codim"] == 1;
    if (e["order"] == 3) c += e["codim"] == 2;
  }
  EXPECT_EQ(t, 3);
  EXPECT_EQ(c, 2);
}

TEST(Cli, SuggestPrime) {
  auto r = run_cli("--spec " + problem("s3_auto.toml") + " suggest-prime");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["p"], 7);
  EXPECT_EQ(j["minimal_p"], 7);
}

TEST(Cli, HhBasis) {
  auto r = run_cli("--spec " + problem("swap.toml") + " hh-basis --degree 1 --poly-degree 0");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(json::parse(r.out)["size"], 3);
}

TEST(Cli, MultiplyExamples) {
  auto r = run_cli("--spec " + problem("swap.toml") + " multiply " + problem("unit_swap.json") + " " +
                   problem("unit_swap.json"));
  ASSERT_EQ(r.exit_code, 0);
  auto unit = json::parse(r.out);
  EXPECT_EQ(unit["degree"], 0);
  EXPECT_EQ(unit["terms"].size(), 1u);
  EXPECT_EQ(unit["terms"][0]["poly_text"], "1");

  r = run_cli("--spec " + problem("minus_id.toml") + " multiply " + problem("minus_id_top.json") + " " +
              problem("minus_id_top.json") + " --oracle");
  ASSERT_EQ(r.exit_code, 0);
  auto j = json::parse(r.out);
  EXPECT_TRUE(j["product"]["terms"].empty());
  EXPECT_TRUE(j["equal"].get<bool>());
}

TEST(Cli, SwapGolden) {
  const auto tmp = std::filesystem::temp_directory_path() / "hhcross_swap_product.json";
  auto r = run_cli("--spec " + problem("swap.toml") + " multiply " + problem("swap_alpha.json") + " " +
                   problem("swap_gamma.json") + " --oracle --out \"" + tmp.string() + "\"");
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_TRUE(json::parse(r.out)["equal"].get<bool>());
  std::ifstream written(tmp), golden(std::string(HHCROSS_PROBLEMS_DIR) + "/swap_alpha_gamma.golden.json");
  ASSERT_TRUE(golden.good());
  EXPECT_EQ(json::parse(written), json::parse(golden));

  // the written product re-parses: project it, which loads it against the group
  r = run_cli("--spec " + problem("swap.toml") + " invariant-project \"" + tmp.string() + "\"");
  EXPECT_EQ(r.exit_code, 0);
  std::filesystem::remove(tmp);
}

TEST(Cli, Verify) {
  auto r = run_cli("--spec " + problem("swap.toml") + " verify --property koszul-dims");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(json::parse(r.out)["all_pass"].get<bool>());
  r = run_cli("--spec " + problem("s3.toml") +
              " verify --property graded-commutativity --property oracle-equivalence --trials 30 --seed 42 --max-poly-degree 1");
  EXPECT_EQ(r.exit_code, 0);
}

TEST(Cli, ValidationErrorsExitOne) {
  EXPECT_EQ(run_cli("--spec /nonexistent.toml group-info").exit_code, 1);
  EXPECT_EQ(run_cli("--spec " + problem("swap.toml") + " verify --property nope").exit_code, 1);
  EXPECT_EQ(run_cli("--spec " + problem("swap.toml") + " multiply " + problem("minus_id_top.json") + " " +
                    problem("swap_alpha.json"))
                .exit_code,
            1);
}
