// Command-line front end.
//
//   rogers-sim run     --config F [--seed S] --out D
//   rogers-sim sweep   --config F --out D [--workers K]
//   rogers-sim predict --config F
//   rogers-sim paper   --figure {2,3,4,5,6,A1,A2} --out D [--seeds N] [--steps T] [--workers K]
//   rogers-sim presets [--dump NAME]
//
// F is a file path or "preset:NAME". Exit codes: 0 success, 2 validation or
// parse error, 3 extinction, 4 I/O error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rogers/rogers.hpp"

namespace fs = std::filesystem;
using namespace rogers;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitExtinction = 3;
constexpr int kExitIo = 4;

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Extinction: return kExitExtinction;
    case ErrorKind::Io: return kExitIo;
    default: return kExitValidation;
  }
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorKind::Io, "cannot create '" + dir.string() + "': " + ec.message());
}

void print_summary(const TimeSeries& ts) {
  const auto window = std::min(ts.params.equilibrium_window, ts.steps.size());
  const auto eq = estimate_equilibrium(ts, window);
  const auto frac_ind =
      trailing_mean(column(ts, [](const StepStats& s) { return s.frac_individual; }), window);
  std::printf("steps=%zu equilibrium_q_ok=%s std_error=%s frac_individual=%s ai_use=%s\n", ts.steps.size(),
              format_double9(eq.mean).c_str(), format_double9(eq.std_error).c_str(),
              format_double9(frac_ind).c_str(), format_double9(trailing_mean(ts.ai_use_fraction, window)).c_str());
}

int cmd_run(const std::string& config, std::optional<std::uint64_t> seed, const fs::path& out) {
  auto cfg = load_config_ref(config);
  if (!std::holds_alternative<SimParams>(cfg))
    throw ValidationError("config", "run expects a scenario, not a sweep");
  auto params = std::get<SimParams>(cfg);
  if (seed) params.seed = *seed;
  ensure_dir(out);
  try {
    const auto ts = run_simulation(params);
    write_timeseries_csv(ts, out / "timeseries.csv");
    print_summary(ts);
  } catch (const ExtinctionError& e) {
    write_timeseries_csv(e.partial(), out / "timeseries.csv");
    throw;
  }
  return kExitOk;
}

int cmd_sweep(const std::string& config, const fs::path& out, std::size_t workers) {
  const auto cfg = load_config_ref(config);
  if (!std::holds_alternative<SweepSpec>(cfg))
    throw ValidationError("config", "sweep expects a [sweep] section");
  ensure_dir(out);
  const auto result = run_sweep(std::get<SweepSpec>(cfg), workers);
  write_sweep_csv(result, out / "sweep.csv");
  std::fputs(sweep_csv(result).c_str(), stdout);
  return kExitOk;
}

int cmd_predict(const std::string& config) {
  const auto cfg = load_config_ref(config);
  const SimParams p = std::holds_alternative<SimParams>(cfg) ? std::get<SimParams>(cfg)
                                                             : std::get<SweepSpec>(cfg).base;
  const double p_ss = 1.0 - p.u;
  std::printf("individual_only %s\n", format_double9(predict_individual_only(p.c_i, p.z_i, p.s_ok)).c_str());
  std::printf("q_i,mixed_equilibrium,social_equilibrium,three_way_half_ai\n");
  for (const double q_i : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const double social = 1.0 - q_i;
    std::printf("%s,%s,%s,%s\n", format_double9(q_i).c_str(),
                format_double9(predict_mixed_equilibrium(q_i, p.c_i, p.z_i, p.c_s_human, p_ss, p.s_ok)).c_str(),
                format_double9(predict_social_equilibrium(q_i, p.c_i, p.z_i, p.c_s_human, p_ss, p.s_ok)).c_str(),
                format_double9(predict_three_way(q_i, social / 2, social / 2, p)).c_str());
  }
  return kExitOk;
}

int cmd_paper(const std::string& figure, const fs::path& out, const FigureOptions& opt, std::size_t workers) {
  const auto jobs = figure_jobs(figure, opt);
  ensure_dir(out);
  for (const auto& job : jobs) {
    const fs::path path = out / job.csv_name;
    if (const auto* p = std::get_if<SimParams>(&job.config)) {
      write_timeseries_csv(run_simulation(*p), path);
    } else {
      write_sweep_csv(run_sweep(std::get<SweepSpec>(job.config), workers), path);
    }
    std::printf("wrote %s\n", path.string().c_str());
  }
  return kExitOk;
}

int cmd_presets(const std::string& dump) {
  if (!dump.empty()) {
    const Preset* p = find_preset(dump);
    if (!p) throw Error(ErrorKind::UnknownKey, "no preset named '" + dump + "'");
    const auto cfg = parse_config(p->text);
    std::fputs(std::visit([](const auto& c) { return to_config_text(c); }, cfg).c_str(), stdout);
    return kExitOk;
  }
  for (const auto& p : kPresets) std::printf("%-24s %s\n", std::string(p.name).c_str(), std::string(p.description).c_str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monte Carlo simulator of individual, social and AI-assisted learners"};
  app.require_subcommand(1);

  std::string config;
  fs::path out;
  std::optional<std::uint64_t> seed;
  std::size_t workers = 0;

  auto* run = app.add_subcommand("run", "run one scenario and write timeseries.csv");
  run->add_option("--config", config, "config file or preset:NAME")->required();
  run->add_option("--seed", seed, "override the RNG seed");
  run->add_option("--out", out, "output directory")->required();

  auto* sweep = app.add_subcommand("sweep", "run a parameter grid and write sweep.csv");
  sweep->add_option("--config", config, "sweep config file or preset:NAME")->required();
  sweep->add_option("--out", out, "output directory")->required();
  sweep->add_option("--workers", workers, "worker threads (0 = all cores)");

  auto* predict = app.add_subcommand("predict", "print closed-form equilibrium predictions");
  predict->add_option("--config", config, "config file or preset:NAME")->required();

  std::string figure;
  FigureOptions fig_opt;
  std::optional<std::size_t> steps;
  auto* paper = app.add_subcommand("paper", "run the scenario battery behind a figure");
  paper->add_option("--figure", figure, "figure id")->required()->check(CLI::IsMember(
      std::vector<std::string>(std::begin(kFigureIds), std::end(kFigureIds))));
  paper->add_option("--out", out, "output directory")->required();
  paper->add_option("--seeds", fig_opt.seeds_per_cell, "replicates per sweep cell");
  paper->add_option("--steps", steps, "run length override (window = min(50000, steps/4))");
  paper->add_option("--seed", fig_opt.seed, "base seed");
  paper->add_option("--workers", workers, "worker threads (0 = all cores)");

  std::string dump;
  auto* presets = app.add_subcommand("presets", "list bundled presets");
  presets->add_option("--dump", dump, "print the full config of one preset");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*run) return cmd_run(config, seed, out);
    if (*sweep) return cmd_sweep(config, out, workers);
    if (*predict) return cmd_predict(config);
    if (*paper) {
      fig_opt.t_total = steps;
      return cmd_paper(figure, out, fig_opt, workers);
    }
    if (*presets) return cmd_presets(dump);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  }
  return kExitOk;
}
