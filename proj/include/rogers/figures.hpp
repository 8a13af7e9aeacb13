#pragma once

// The scenario batteries behind each figure. A battery is a list of named
// jobs; each job yields one CSV (a time series or a sweep table) whose file
// name is part of the plotting scripts' input contract.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rogers/config.hpp"
#include "rogers/presets.hpp"

namespace rogers {

inline constexpr std::string_view kFigureIds[] = {"2", "3", "4", "5", "6", "A1", "A2"};

struct FigureJob {
  std::string csv_name;
  std::variant<SimParams, SweepSpec> config;
};

struct FigureOptions {
  std::size_t seeds_per_cell = 10;
  std::optional<std::size_t> t_total;  // overrides the default run length
  std::uint64_t seed = 1;
};

namespace detail {

inline SimParams figure_params(std::string_view preset, const FigureOptions& opt) {
  SimParams p = std::get<SimParams>(load_preset(preset));
  p.seed = opt.seed;
  if (opt.t_total) {
    p.t_total = *opt.t_total;
    p.equilibrium_window = std::max<std::size_t>(1, std::min(p.equilibrium_window, *opt.t_total / 4));
  }
  return p;
}

inline std::vector<ConfigScalar> reals(std::initializer_list<double> v) { return {v.begin(), v.end()}; }

inline std::vector<ConfigScalar> unit_grid() {
  std::vector<ConfigScalar> v;
  for (int i = 0; i <= 10; ++i) v.emplace_back(i / 10.0);
  return v;
}

}  // namespace detail

/// Jobs for one figure id; throws ValidationError for an unknown id.
inline std::vector<FigureJob> figure_jobs(std::string_view id, const FigureOptions& opt = {}) {
  using detail::figure_params;
  const auto sweep = [&](SimParams base, std::vector<SweepAxis> axes) {
    SweepSpec s;
    s.base = base;
    s.axes = std::move(axes);
    s.seeds_per_cell = opt.seeds_per_cell;
    return s;
  };
  const auto with = [](SimParams p, std::string_view path, ConfigScalar v) {
    set_param(p, path, v);
    return p;
  };

  if (id == "2")
    return {{"fig2_individual.csv", figure_params("baseline_individual", opt)},
            {"fig2_ai_social.csv", figure_params("ai_social", opt)}};
  if (id == "3")
    return {{"fig3_critical.csv",
             sweep(figure_params("ai_social", opt),
                   {{"learning.mode", {std::string("AI_SOCIAL"), std::string("AI_CRITICAL")}},
                    {"environment.u", detail::reals({0.01, 0.1, 0.5})}})}};
  if (id == "4")
    return {{"fig4_update_schedule.csv",
             sweep(with(figure_params("ai_critical", opt), "ai.mode", std::string("SCHEDULED_SOCIAL")),
                   {{"environment.u", detail::reals({0.01, 0.1, 0.5})},
                    {"ai.update_rate", detail::reals({0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0})}})}};
  if (id == "5") {
    const std::vector<SweepAxis> axes{{"ai.individual_update_cost", detail::unit_grid()},
                                      {"ai.z_ai", detail::unit_grid()}};
    return {{"fig5_baseline.csv", sweep(figure_params("ai_mixed_baseline", opt), axes)},
            {"fig5_critical.csv", sweep(figure_params("ai_mixed_critical", opt), axes)}};
  }
  if (id == "6")
    return {{"fig6_feedback_critical.csv", figure_params("feedback_ai_critical", opt)},
            {"fig6_two_source.csv", figure_params("feedback_two_source", opt)},
            {"fig6_no_feedback_critical.csv", figure_params("ai_critical", opt)}};
  if (id == "A1")
    return {{"figA1_individual.csv", figure_params("baseline_individual", opt)},
            {"figA1_human_social.csv", figure_params("baseline_human_social", opt)}};
  if (id == "A2")
    return {{"figA2_ai_social.csv", figure_params("ai_social", opt)},
            {"figA2_ai_gated.csv", figure_params("ai_gated", opt)}};
  throw ValidationError("figure", "unknown figure id '" + std::string(id) + "'");
}

}  // namespace rogers
