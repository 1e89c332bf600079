#include <gtest/gtest.h>

#include <sstream>

#include "cli_harness.hpp"
#include "qseries/catalog/report_json.hpp"

using namespace qseries::catalog;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run_cli("verify euler --params L=4").exit_code, 0);
  EXPECT_EQ(run_cli("verify RR1 --order 30 --json").exit_code, 0);
  EXPECT_EQ(run_cli("verify nonsense").exit_code, 2);
  EXPECT_EQ(run_cli("verify euler --params L=x").exit_code, 2);
  EXPECT_EQ(run_cli("verify euler --params L").exit_code, 2);
  EXPECT_EQ(run_cli("verify euler --params L=-1").exit_code, 2);
  EXPECT_EQ(run_cli("verify euler --params L=1,M=2").exit_code, 2);
  EXPECT_EQ(run_cli("verify euler").exit_code, 2);
  EXPECT_EQ(run_cli("verify RR1 --order -1").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("sweep euler --range L=0..x").exit_code, 2);
  EXPECT_EQ(run_cli("sweep euler --range L0..3").exit_code, 2);
}

TEST(Cli, HumanFormat) {
  const CliResult r = run_cli("verify euler --params L=4");
  ASSERT_EQ(lines(r.out).size(), 1u);
  EXPECT_EQ(r.out.rfind("PASS euler(L=4) [exact@", 0), 0u) << r.out;
  EXPECT_NE(r.out.find(" ms)"), std::string::npos);
}

TEST(Cli, JsonReportSchema) {
  const CliResult r = run_cli("verify RR1 --order 30 --json");
  ASSERT_EQ(r.exit_code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(report_schema_error(j), "");
  EXPECT_EQ(j["identity"], "RR1");
  EXPECT_EQ(j["mode"], "truncated");
  EXPECT_EQ(j["order"], 30);
  EXPECT_EQ(j["equal"], true);

  const auto k = nlohmann::json::parse(run_cli("verify superid --params L1=3,L2=2,ell=1 --json").out);
  EXPECT_EQ(report_schema_error(k), "");
  EXPECT_EQ(k["mode"], "exact");
  EXPECT_EQ(k["params"]["L1"], 3);
}

TEST(Cli, SweepIsSortedAndDeterministic) {
  const std::string args = "sweep strong --params L=2 --range t=-3..3 --range a=0..3 --range ell=0..1 --json";
  const CliResult a = run_cli(args + " --jobs 1");
  const CliResult b = run_cli(args + " --jobs 3");
  ASSERT_EQ(a.exit_code, 0);
  ASSERT_EQ(b.exit_code, 0);
  const auto la = lines(a.out), lb = lines(b.out);
  ASSERT_EQ(la.size(), lb.size());
  std::vector<std::vector<int>> keys;
  for (std::size_t i = 0; i < la.size(); ++i) {
    auto ja = nlohmann::json::parse(la[i]), jb = nlohmann::json::parse(lb[i]);
    EXPECT_EQ(report_schema_error(ja), "");
    EXPECT_EQ(ja["params"], jb["params"]);
    keys.push_back({ja["params"]["L"], ja["params"]["a"], ja["params"]["ell"], ja["params"]["t"]});
  }
  EXPECT_TRUE(std::is_sorted(keys.begin(), keys.end()));
  EXPECT_EQ(run_cli("sweep euler --range L=3..2").out, "0/0 passed\n");
}

TEST(Cli, ListAndExpand) {
  const auto l = lines(run_cli("list").out);
  EXPECT_EQ(l.size(), catalog_entries().size());
  for (const Entry& e : catalog_entries()) {
    bool found = false;
    for (const std::string& line : l) found = found || line.rfind(e.id + "(", 0) == 0;
    EXPECT_TRUE(found) << e.id;
  }
  const CliResult x = run_cli("expand RR1 --order 10");
  EXPECT_EQ(x.exit_code, 0);
  EXPECT_EQ(x.out, "lhs 0 10 0 1 1 1 1 2 2 3 3 4 5 6\nrhs 0 10 0 1 1 1 1 2 2 3 3 4 5 6\n");
}
