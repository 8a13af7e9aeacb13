#include "rogers/config.hpp"
#include "rogers/csv.hpp"
#include "rogers/engine.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

namespace rogers {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Small seeded scenario whose CSV is frozen under tests/golden/.
SimParams golden_params() {
  return std::get<SimParams>(parse_config(slurp(fs::path(ROGERS_GOLDEN_DIR) / "ten_steps.toml")));
}

TEST(TimeSeriesCsv, HeaderIsStable) {
  TimeSeries empty;
  EXPECT_EQ(timeseries_csv(empty),
            "t,q_ok,frac_individual,mean_ai_propensity,ai_level,mean_kappa,env_changed\n");
}

TEST(TimeSeriesCsv, RowCount) {
  auto p = golden_params();
  p.t_total = 3;
  p.equilibrium_window = 3;
  const auto csv = timeseries_csv(run_simulation(p));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 4);
}

TEST(TimeSeriesCsv, GoldenTenStepRun) {
  EXPECT_EQ(timeseries_csv(run_simulation(golden_params())), slurp(fs::path(ROGERS_GOLDEN_DIR) / "ten_steps.csv"));
}

TEST(TimeSeriesCsv, NineDigitRendering) {
  EXPECT_EQ(format_double9(0.58311), "0.58311");
  EXPECT_EQ(format_double9(1.0), "1");
  EXPECT_EQ(format_double9(0.0), "0");
  EXPECT_EQ(format_double9(2.0 / 3.0), "0.666666667");
}

TEST(TimeSeriesCsv, WriteThenReadBack) {
  auto p = golden_params();
  p.t_total = 200;
  p.equilibrium_window = 100;
  const auto ts = run_simulation(p);
  const auto path = fs::temp_directory_path() / "rogers_ts_roundtrip.csv";
  write_timeseries_csv(ts, path);
  const auto back = read_timeseries_csv(path);
  fs::remove(path);
  ASSERT_EQ(back.size(), ts.steps.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    const auto &a = ts.steps[i], &b = back[i];
    EXPECT_EQ(a.t, b.t);
    EXPECT_EQ(a.env_changed, b.env_changed);
    for (const auto& [x, y] : {std::pair{a.q_ok, b.q_ok}, {a.frac_individual, b.frac_individual},
                               {a.mean_ai_propensity, b.mean_ai_propensity}, {a.ai_level, b.ai_level},
                               {a.mean_kappa, b.mean_kappa}})
      EXPECT_NEAR(x, y, 5e-9 * std::max(1.0, std::abs(x)));
  }
}

TEST(TimeSeriesCsv, UnwritableDestinationIsIo) {
  try {
    write_timeseries_csv(TimeSeries{}, "/nonexistent-dir/x/ts.csv");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Io);
  }
}

TEST(SweepCsv, HeaderAndRowShape) {
  SweepResult r;
  SweepRow row;
  row.axis_names = {"environment.u"};
  row.axis_values = {0.1};
  row.equilibrium = {0.5, 0.001};
  row.seeds = 10;
  r.rows.push_back(row);
  EXPECT_EQ(sweep_csv(r),
            "axis1_name,axis1_value,axis2_name,axis2_value,equilibrium_mean,std_error,seeds,status\n"
            "environment.u,0.1,,,0.5,0.001,10,ok\n");
}

}  // namespace
}  // namespace rogers
