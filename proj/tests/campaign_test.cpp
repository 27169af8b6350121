#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "folkman/campaign.hpp"
#include "folkman/constructions.hpp"

namespace fs = std::filesystem;

namespace folkman {
namespace {

class CampaignTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("folkman_campaign_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    options_.out_dir = dir_;
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path script(const std::string& name, const std::string& body) {
    const fs::path path = dir_ / name;
    std::ofstream(path) << "#!/bin/sh\n" << body;
    fs::permissions(path, fs::perms::owner_all);
    return path;
  }

  static std::string slurp(const fs::path& path) {
    std::ifstream in(path);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
  CampaignOptions options_;
};

TEST_F(CampaignTest, R33) {
  const auto r = run_campaign("r33", options_);
  EXPECT_EQ(r.outcome, CampaignOutcome::pass);
  EXPECT_EQ(r.report.get("K6.verdict"), "ARROWS");
  EXPECT_EQ(r.report.get("K5.verdict"), "NOT-ARROWS");
  EXPECT_EQ(r.report.get("verdict"), "PASS");
  std::ifstream cert(dir_ / "k5_33.cert");
  const EdgeColoring c = read_certificate(cert, complete(5));
  EXPECT_FALSE(check_coloring(ArrowingProblem(complete(5), {3, 3}), c).has_value());
}

TEST_F(CampaignTest, Graham) {
  const auto r = run_campaign("graham", options_);
  EXPECT_EQ(r.outcome, CampaignOutcome::pass);
  EXPECT_EQ(r.report.get("K3+C5.clique_number"), "5");
}

TEST_F(CampaignTest, R333Lower) {
  const auto r = run_campaign("r333-lower", options_);
  EXPECT_EQ(r.outcome, CampaignOutcome::pass);
  std::ifstream cert(dir_ / "k16_333.cert");
  const EdgeColoring c = read_certificate(cert, complete(16));
  EXPECT_FALSE(check_coloring(ArrowingProblem(complete(16), {3, 3, 3}), c).has_value());
}

TEST_F(CampaignTest, FolkmanClique) {
  const auto r = run_campaign("folkman-13-clique", options_);
  EXPECT_EQ(r.outcome, CampaignOutcome::pass);
  EXPECT_EQ(r.report.get("H.clique_number"), "12");
}

TEST_F(CampaignTest, UnknownCampaign) { EXPECT_THROW(run_campaign("r44", options_), std::invalid_argument); }

TEST_F(CampaignTest, FullScaleWithoutSolverIsInconclusive) {
  const std::pair<const char*, const char*> cases[] = {{"lemma1", "lemma1"}, {"lemma3", "lemma3"}, {"theorem", "h"}};
  for (const auto& [name, stem] : cases) {
    const auto r = run_campaign(name, options_);
    EXPECT_EQ(r.outcome, CampaignOutcome::inconclusive) << name;
    EXPECT_TRUE(fs::exists(dir_ / (std::string(stem) + ".cnf")));
    EXPECT_TRUE(fs::exists(dir_ / (std::string(stem) + ".map")));
  }
  EXPECT_NE(slurp(dir_ / "h.cnf").find("p cnf 1215 10155\n"), std::string::npos);
  EXPECT_NE(slurp(dir_ / "lemma3.cnf").find("p cnf 837 6633\n"), std::string::npos);
}

TEST_F(CampaignTest, UnsatAnswerPassesWithTrace) {
  options_.external_solver = script("unsat.sh", "echo 'c fake'\necho 's UNSATISFIABLE'\nexit 20\n").string();
  const auto r = run_campaign("lemma3", options_);
  EXPECT_EQ(r.outcome, CampaignOutcome::pass);
  EXPECT_EQ(r.report.get("solver.exit_status"), "20");
  EXPECT_EQ(r.report.get("solver.status"), "UNSATISFIABLE");
  EXPECT_TRUE(fs::exists(dir_ / "lemma3.out"));
}

TEST_F(CampaignTest, EmbeddedSolverAsExternalCommand) {
  options_.external_solver = std::string(FOLKMAN_CLI) + " solve";
  const auto k6 = run_unsat_check("k6", encode_arrowing(ArrowingProblem(complete(6), {3, 3})), "k6", options_);
  EXPECT_EQ(k6.outcome, CampaignOutcome::pass);
  EXPECT_EQ(k6.report.get("solver.exit_status"), "20");
}

TEST_F(CampaignTest, SatAnswerIsLoudFailWithCertificate) {
  options_.external_solver = std::string(FOLKMAN_CLI) + " solve";
  const ArrowingProblem p(complete(5), {3, 3});
  const auto r = run_unsat_check("k5", encode_arrowing(p), "k5", options_);
  EXPECT_EQ(r.outcome, CampaignOutcome::fail);
  EXPECT_EQ(r.report.get("solver.status"), "SATISFIABLE");
  ASSERT_TRUE(r.report.get("counterexample").has_value());
  std::ifstream in(dir_ / "k5.counterexample");
  const EdgeColoring c = read_certificate(in, complete(5));
  EXPECT_FALSE(check_coloring(p, c).has_value());
  EXPECT_NE(r.report.get("note")->find("COUNTEREXAMPLE"), std::string::npos);
}

TEST_F(CampaignTest, BogusModelIsRejected) {
  options_.external_solver = script("liar.sh", "echo 's SATISFIABLE'\necho 'v -1 -2 -3 -4 -5 -6 -7 -8 -9 -10 0'\n").string();
  EXPECT_THROW(run_unsat_check("c5", encode_arrowing(ArrowingProblem(cycle(5), {3, 3})), "c5", options_), DecodeError);
  EXPECT_FALSE(fs::exists(dir_ / "c5.counterexample"));
}

TEST_F(CampaignTest, SilentSolverIsInconclusive) {
  options_.external_solver = script("quiet.sh", "exit 0\n").string();
  const auto r = run_unsat_check("c5", encode_arrowing(ArrowingProblem(cycle(5), {3, 3})), "c5", options_);
  EXPECT_EQ(r.outcome, CampaignOutcome::inconclusive);
}

TEST_F(CampaignTest, MissingSolverThrows) {
  options_.external_solver = (dir_ / "no-such-solver").string();
  EXPECT_THROW(run_campaign("lemma1", options_), ExternalSolverError);
}

TEST(RunReportTest, TextAndJson) {
  RunReport r("graph H");
  r.add("n", 30LL);
  r.add("elapsed_s", 0.25);
  r.add("n", 31LL);
  EXPECT_EQ(r.to_text(), "command=graph H\ntool_version=" + std::string(kToolVersion) +
                             "\nn=30\nelapsed_s=0.250\nn=31\n");
  EXPECT_EQ(r.get("n"), "31");
  const auto j = nlohmann::json::parse(r.to_json());
  EXPECT_EQ(j["command"], "graph H");
  EXPECT_EQ(j["n"].size(), 2u);
}

}  // namespace
}  // namespace folkman
