// Exercises the rogers-sim binary end to end: subcommands, files and exit codes.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <sys/wait.h>

#include <gtest/gtest.h>

namespace {

namespace fs = std::filesystem;

int run_cli(const std::string& args) {
  const std::string cmd = std::string(ROGERS_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("rogers_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  fs::path write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p;
  }

  fs::path dir_;
};

TEST_F(Cli, RunWritesDeterministicCsv) {
  const auto cfg = write("s.toml", "[learning]\nmode = \"AI_CRITICAL\"\n[run]\nt_total = 500\nequilibrium_window = 100\n");
  ASSERT_EQ(run_cli("run --config " + cfg.string() + " --seed 5 --out " + (dir_ / "a").string()), 0);
  ASSERT_EQ(run_cli("run --config " + cfg.string() + " --seed 5 --out " + (dir_ / "b").string()), 0);
  const auto a = slurp(dir_ / "a" / "timeseries.csv");
  EXPECT_EQ(std::count(a.begin(), a.end(), '\n'), 501);
  EXPECT_EQ(a, slurp(dir_ / "b" / "timeseries.csv"));
}

TEST_F(Cli, GoldenScenarioMatches) {
  const fs::path golden(ROGERS_GOLDEN_DIR);
  ASSERT_EQ(run_cli("run --config " + (golden / "ten_steps.toml").string() + " --out " + dir_.string()), 0);
  EXPECT_EQ(slurp(dir_ / "timeseries.csv"), slurp(golden / "ten_steps.csv"));
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("run --config " + write("bad.toml", "[environment]\nu = 2.0\n").string() + " --out " + dir_.string()), 2);
  EXPECT_EQ(run_cli("run --config " + write("empty.toml", "").string() + " --out " + dir_.string()), 2);
  EXPECT_EQ(run_cli("run --config " + write("typo.toml", "[environment]\nuu = 0.1\n").string() + " --out " + dir_.string()), 2);
  EXPECT_EQ(run_cli("run --config " + (dir_ / "missing.toml").string() + " --out " + dir_.string()), 4);
  EXPECT_EQ(run_cli("bogus"), 2);
  const auto dead = write("dead.toml", "[environment]\ns_ok = 0.0\ns_not_ok = 0.0\n[run]\nt_total = 10\nequilibrium_window = 5\n");
  EXPECT_EQ(run_cli("run --config " + dead.string() + " --out " + (dir_ / "dead").string()), 3);
  EXPECT_TRUE(fs::exists(dir_ / "dead" / "timeseries.csv"));
  const auto ok = write("ok.toml", "[run]\nt_total = 10\nequilibrium_window = 5\n");
  write("blocker", "x");
  EXPECT_EQ(run_cli("run --config " + ok.string() + " --out " + (dir_ / "blocker" / "sub").string()), 4);
}

TEST_F(Cli, SweepAcrossWorkerCounts) {
  const auto cfg = write("sw.toml",
                         "[learning]\nmode = \"AI_CRITICAL\"\n[run]\nt_total = 400\nequilibrium_window = 100\n"
                         "[sweep]\nseeds_per_cell = 2\naxis1 = \"environment.u\"\naxis1_values = [0.01, 0.5]\n"
                         "axis2 = \"learning.c_i\"\naxis2_values = [0.05, 0.2]\n");
  ASSERT_EQ(run_cli("sweep --config " + cfg.string() + " --workers 1 --out " + (dir_ / "w1").string()), 0);
  ASSERT_EQ(run_cli("sweep --config " + cfg.string() + " --workers 4 --out " + (dir_ / "w4").string()), 0);
  const auto csv = slurp(dir_ / "w1" / "sweep.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  EXPECT_EQ(csv, slurp(dir_ / "w4" / "sweep.csv"));
  // A scenario file is not a sweep.
  EXPECT_EQ(run_cli("sweep --config preset:ai_social --out " + dir_.string()), 2);
}

TEST_F(Cli, PredictAndPresets) {
  EXPECT_EQ(run_cli("predict --config preset:baseline_individual"), 0);
  EXPECT_EQ(run_cli("presets"), 0);
  EXPECT_EQ(run_cli("presets --dump ai_critical"), 0);
  EXPECT_EQ(run_cli("presets --dump nope"), 2);
}

TEST_F(Cli, FigureBatteryWritesItsCsvs) {
  ASSERT_EQ(run_cli("paper --figure 2 --steps 400 --out " + dir_.string()), 0);
  EXPECT_TRUE(fs::exists(dir_ / "fig2_individual.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "fig2_ai_social.csv"));
  ASSERT_EQ(run_cli("paper --figure 4 --steps 200 --seeds 1 --out " + dir_.string()), 0);
  const auto csv = slurp(dir_ / "fig4_update_schedule.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 3 * 7);
  EXPECT_EQ(run_cli("paper --figure 9 --out " + dir_.string()), 2);
}

}  // namespace
