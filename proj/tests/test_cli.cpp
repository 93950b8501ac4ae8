#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fixtures.hpp"
#include "pareto_lens/cli.hpp"
#include "pareto_lens/momkp.hpp"
#include "pareto_lens/set_io.hpp"

namespace pareto_lens {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pareto_lens_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write_example(const std::string& name) const {
    const auto path = dir_ / name;
    std::ofstream out(path);
    write_approximation_set(out, fixtures::three_way_set());
    return path.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, UsageErrorsExitTwo) {
  EXPECT_EQ(invoke({}).code, cli::kExitUsageError);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitUsageError);
  EXPECT_EQ(invoke({"analyze", "corr"}).code, cli::kExitUsageError);
  const auto bad_kind = invoke({"generate", "--kind", "Z", "--out-dir", path("gen")});
  EXPECT_EQ(bad_kind.code, cli::kExitUsageError);
  EXPECT_FALSE(fs::exists(path("gen")) && !fs::is_empty(path("gen")));
  EXPECT_EQ(invoke({"analyze", "corr", "-i", write_example("a.csv"), "--tie-policy", "tau-c"}).code,
            cli::kExitUsageError);
}

TEST_F(CliTest, HelpAndVersionExitZero) {
  const auto help = invoke({"--help"});
  EXPECT_EQ(help.code, cli::kExitOk);
  EXPECT_NE(help.out.find("analyze"), std::string::npos);
  const auto version = invoke({"--version"});
  EXPECT_EQ(version.code, cli::kExitOk);
  EXPECT_FALSE(version.out.empty());
}

TEST_F(CliTest, DataErrorsExitOneAndNameTheLine) {
  {
    std::ofstream bad(path("bad.csv"));
    bad << "# objectives: Z1:max,Z2:max,Z3:max\n1,2,3\n4,5\n";
  }
  const auto r = invoke({"analyze", "corr", "-i", path("bad.csv")});
  EXPECT_EQ(r.code, cli::kExitDataError);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  EXPECT_EQ(invoke({"analyze", "corr", "-i", path("missing.csv")}).code, cli::kExitDataError);
}

TEST_F(CliTest, CorrWritesJsonWithMeta) {
  const auto r = invoke({"analyze", "corr", "-i", write_example("ex.csv"), "-o", path("corr.json")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(slurp(path("corr.json")));
  EXPECT_EQ(j["meta"]["tool"], "pareto_lens");
  EXPECT_EQ(j["meta"]["command"].get<std::string>().find("analyze"), 0u);
  ASSERT_EQ(j["pairs"].size(), 3u);
  EXPECT_EQ(j["pairs"][0]["i"], 1);
  EXPECT_EQ(j["pairs"][0]["j"], 2);
  for (const auto& pair : j["pairs"]) EXPECT_EQ(pair["kind"], "independent");
}

TEST_F(CliTest, RegionMapAtExplicitThreshold) {
  const auto r = invoke({"analyze", "regionmap", "-i", write_example("ex.csv"), "--threshold", "50,50,50", "-o",
                         path("rm.json"), "--svg", path("rm.svg")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(slurp(path("rm.json")));
  const std::vector<int> expected{0, 6, 7, 0, 4, 2, 0, 0};
  EXPECT_EQ(j["counts"].get<std::vector<int>>(), expected);
  EXPECT_TRUE(fs::exists(path("rm.svg")));
  EXPECT_NE(slurp(path("rm.svg")).find("meta:"), std::string::npos);
}

TEST_F(CliTest, GenerateWritesLoadableInstances) {
  const auto r = invoke({"generate", "--kind", "C", "--n", "30", "--count", "3", "--seed", "5", "--out-dir",
                         path("inst"), "--prefix", "c"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  for (int i = 1; i <= 3; ++i) {
    const auto file = path("inst/c-" + std::to_string(i) + ".momkp");
    ASSERT_TRUE(fs::exists(file)) << file;
    const auto inst = read_instance(file);
    EXPECT_EQ(inst.n, 30u);
    EXPECT_EQ(inst.kind, SetKind::C);
    EXPECT_EQ(slurp(file).rfind("# meta:", 0), 0u);
  }
  EXPECT_FALSE(fs::exists(path("inst/c-4.momkp")));
}

TEST_F(CliTest, SolveThenReport) {
  ASSERT_EQ(invoke({"generate", "--kind", "A", "--n", "20", "--count", "1", "--out-dir", path("i"), "--prefix", "a"})
                .code,
            cli::kExitOk);
  const auto solve = invoke({"solve", "--instance", path("i/a-1.momkp"), "--budget", "400", "--population", "20",
                             "--stage", "nsga2:1,2", "--out", path("a.set.csv")});
  ASSERT_EQ(solve.code, cli::kExitOk) << solve.err;
  std::ifstream in(path("a.set.csv"));
  const auto set = parse_approximation_set(in);
  EXPECT_FALSE(set.empty());
  EXPECT_EQ(set.objective_count(), 4u);
  EXPECT_EQ(invoke({"solve", "--instance", path("i/a-1.momkp"), "--stage", "nope:1"}).code, cli::kExitUsageError);
}

TEST_F(CliTest, ReportProducesEveryArtifactAndIsReproducible) {
  const auto a = write_example("first.csv");
  const auto b = write_example("second.csv");
  const auto r1 = invoke({"report", "--input", a, b, "--out-dir", path("r1")});
  ASSERT_EQ(r1.code, cli::kExitOk) << r1.err;
  for (const char* f : {"corr.json", "ranges.json", "regionmap.json", "regionmap.svg", "sweep.csv", "scatter.svg",
                        "scatter.csv"}) {
    EXPECT_TRUE(fs::exists(dir_ / "r1" / "first" / f)) << f;
    EXPECT_TRUE(fs::exists(dir_ / "r1" / "second" / f)) << f;
  }
  for (const char* f : {"frequency.json", "frequency.svg", "sweep.csv", "index.html"}) {
    EXPECT_TRUE(fs::exists(dir_ / "r1" / f)) << f;
  }
  const auto freq = nlohmann::json::parse(slurp(dir_ / "r1" / "frequency.json"));
  EXPECT_EQ(freq["meta"]["tool"], "pareto_lens");

  ASSERT_EQ(invoke({"report", "--input", a, b, "--out-dir", path("r2")}).code, cli::kExitOk);
  for (const auto& entry : fs::recursive_directory_iterator(dir_ / "r1")) {
    if (!entry.is_regular_file()) continue;
    const auto twin = dir_ / "r2" / fs::relative(entry.path(), dir_ / "r1");
    EXPECT_EQ(slurp(entry.path()), slurp(twin)) << entry.path();
  }
}

TEST_F(CliTest, ScatterAutoPivotIsAnnounced) {
  const auto r = invoke({"analyze", "scatter", "-i", write_example("ex.csv"), "--out-dir", path("sc")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("pivot auto-chosen"), std::string::npos);
  EXPECT_NE(slurp(path("sc/three-way.scatter.svg")).find("pivot auto-chosen"), std::string::npos);
  EXPECT_TRUE(fs::exists(path("sc/three-way.scatter.csv")));
  const auto fixed = invoke({"analyze", "scatter", "-i", path("ex.csv"), "--pivot", "2", "-o", path("p2.svg")});
  ASSERT_EQ(fixed.code, cli::kExitOk) << fixed.err;
  EXPECT_EQ(fixed.out.find("auto-chosen"), std::string::npos);
}

TEST_F(CliTest, RefusesToOverwriteAnInput) {
  const auto input = write_example("plot.csv");
  const auto before = slurp(input);
  const auto r = invoke({"analyze", "scatter", "-i", input, "-o", path("plot.svg")});
  EXPECT_EQ(r.code, cli::kExitUsageError);
  EXPECT_FALSE(fs::exists(path("plot.svg")));
  EXPECT_EQ(slurp(input), before);
  EXPECT_EQ(invoke({"analyze", "corr", "-i", input, "-o", input}).code, cli::kExitUsageError);
  EXPECT_EQ(slurp(input), before);
  fs::create_directories(dir_ / "rep" / "corr");
  const auto nested = (dir_ / "rep" / "corr" / "corr.json").string();
  fs::copy_file(input, nested);
  EXPECT_EQ(invoke({"report", "-i", nested, "--out-dir", path("rep")}).code, cli::kExitUsageError);
  EXPECT_EQ(slurp(nested), before);
}

TEST_F(CliTest, SweepCsvHasMetaAndHeader) {
  const auto r = invoke({"analyze", "sweep", "-i", write_example("ex.csv"), "--alpha", "50", "-o", path("s.csv")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream lines(slurp(path("s.csv")));
  std::string first, second;
  std::getline(lines, first);
  std::getline(lines, second);
  EXPECT_EQ(first.rfind("# meta:", 0), 0u);
  EXPECT_EQ(second, "level,instances_with_r0");
  EXPECT_NE(first.find("per-instance"), std::string::npos);
}

TEST_F(CliTest, RangesFlagTheStandInRule) {
  const auto r = invoke({"analyze", "ranges", "-i", write_example("ex.csv"), "-o", path("r.json")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto j = nlohmann::json::parse(slurp(path("r.json")));
  EXPECT_EQ(j["policy"], "range_fraction>=0.05");
  EXPECT_NE(j["policy_note"].get<std::string>().find("stand-in"), std::string::npos);
  ASSERT_EQ(j["ranges"].size(), 3u);
  EXPECT_EQ(j["ranges"][0]["min"], 6.0);
  EXPECT_EQ(j["ranges"][0]["meaningful"], true);
}

}  // namespace
}  // namespace pareto_lens
