#include "cli_runner.hpp"

#include <json.hpp>

#include <gtest/gtest.h>

namespace pgw::test {
namespace {

using Json = nlohmann::json;

TEST(Cli, RankHeisenberg) {
  const auto r = run_cli("rank " + data_file("heisenberg.json"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find('2'), std::string::npos);
  const auto j = run_cli("--json rank " + data_file("heisenberg.json"));
  EXPECT_EQ(Json::parse(j.out)["rank"], 2);
}

TEST(Cli, BuiltinIdFallback) {
  EXPECT_EQ(run_cli("--json closure heisenberg").out, run_cli("--json closure " + data_file("heisenberg.json")).out);
}

TEST(Cli, ClosureJson) {
  const auto r = run_cli("--json closure " + data_file("heisenberg_extended.json"));
  ASSERT_EQ(r.exit_code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["command"], "closure");
  EXPECT_EQ(j["order"], 81);
}

TEST(Cli, FixedPointsEmpty) {
  const auto r = run_cli("--json fixed-points " + data_file("c3c3_pgl2.json"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_TRUE(Json::parse(r.out)["subspaces"].empty());
}

TEST(Cli, SemiInvariantWitness) {
  const auto r = run_cli("--json semi-invariant " + data_file("cA1_group.json") + " " + data_file("cA1_poly.json"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_FALSE(Json::parse(r.out)["semi_invariant"].get<bool>());
}

TEST(Cli, InvariantLattice) {
  const auto r = run_cli("--json invariant-lattice " + data_file("perm3_gl3z.json"));
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["rank"], 1);
}

TEST(Cli, Orbit) {
  const auto r = run_cli("--json orbit " + data_file("fermat_group.json") + " --point '[1,1,1,1]'");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["points"].size(), 27U);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("closure " + data_file("unipotent.json")).exit_code, 3);
  EXPECT_EQ(run_cli("rank " + data_file("sylow_example.json")).exit_code, 2);
  EXPECT_EQ(run_cli("closure /no/such/file.json").exit_code, 2);
  EXPECT_EQ(run_cli("frobnicate").exit_code, 2);
  EXPECT_EQ(run_cli("--max-order 10 closure heisenberg").exit_code, 3);
  EXPECT_EQ(run_cli("verify cA1-semiinvariance").exit_code, 4);
  EXPECT_EQ(run_cli("verify heisenberg-center-scalar").exit_code, 0);
  EXPECT_EQ(run_cli("verify no-such-check").exit_code, 2);
  EXPECT_EQ(run_cli("orbit heisenberg --point '[1,'").exit_code, 2);
}

TEST(Cli, EnvironmentCap) {
  EXPECT_EQ(run_cli("closure heisenberg").exit_code, 0);
  EXPECT_EQ(system((std::string("PGW_MAX_ORDER=5 ") + PGW_CLI_PATH + " closure heisenberg >/dev/null 2>&1").c_str()) >>
                8,
            3);
  EXPECT_EQ(system((std::string("PGW_MAX_ORDER=abc ") + PGW_CLI_PATH + " closure heisenberg >/dev/null 2>&1").c_str()) >>
                8,
            2);
}

TEST(Cli, JsonErrorObject) {
  const auto r = run_cli("--json rank " + data_file("sylow_example.json"));
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_EQ(Json::parse(r.out)["error"]["kind"], "NotAPGroup");
}

TEST(Cli, VerifyJson) {
  const auto r = run_cli("--json verify");
  EXPECT_EQ(r.exit_code, 4);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["summary"]["fail"], 0);
  EXPECT_EQ(j["summary"]["discrepancy"], 1);
}

TEST(Cli, ExportMatchesDataFile) {
  const auto r = run_cli("export heisenberg");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(Json::parse(r.out)["dimension"], 3);
}

}  // namespace
}  // namespace pgw::test
