#pragma once

// CSV output. Reals are written with 9 significant digits (trailing zeros
// dropped); the column sets are fixed:
//   time series: t,q_ok,frac_individual,mean_ai_propensity,ai_level,mean_kappa,env_changed
//   sweep:       axis1_name,axis1_value,axis2_name,axis2_value,equilibrium_mean,std_error,seeds,status

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rogers/error.hpp"
#include "rogers/model.hpp"
#include "rogers/params_io.hpp"
#include "rogers/sweeps.hpp"

namespace rogers {

inline constexpr std::string_view kTimeSeriesHeader =
    "t,q_ok,frac_individual,mean_ai_propensity,ai_level,mean_kappa,env_changed";
inline constexpr std::string_view kSweepHeader =
    "axis1_name,axis1_value,axis2_name,axis2_value,equilibrium_mean,std_error,seeds,status";

namespace detail {

inline std::string csv_real(double v) { return std::isnan(v) ? "nan" : format_double9(v); }

inline void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::Io, "cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw Error(ErrorKind::Io, "failed writing '" + path.string() + "'");
}

}  // namespace detail

inline std::string timeseries_csv(const TimeSeries& series) {
  using detail::csv_real;
  std::string out(kTimeSeriesHeader);
  out += '\n';
  out.reserve(series.steps.size() * 64);
  for (const auto& s : series.steps) {
    out += std::to_string(s.t);
    for (const double v : {s.q_ok, s.frac_individual, s.mean_ai_propensity, s.ai_level, s.mean_kappa}) {
      out += ',';
      out += csv_real(v);
    }
    out += s.env_changed ? ",1\n" : ",0\n";
  }
  return out;
}

inline std::string sweep_csv(const SweepResult& result) {
  using detail::csv_real;
  std::string out(kSweepHeader);
  out += '\n';
  for (const auto& row : result.rows) {
    for (std::size_t a = 0; a < 2; ++a) {
      if (a < row.axis_names.size()) out += row.axis_names[a] + "," + to_text(row.axis_values[a]) + ",";
      else out += ",,";
    }
    out += csv_real(row.equilibrium.mean) + "," + csv_real(row.equilibrium.std_error) + "," +
           std::to_string(row.seeds) + "," + std::string(to_string(row.status)) + "\n";
  }
  return out;
}

inline void write_timeseries_csv(const TimeSeries& series, const std::filesystem::path& path) {
  detail::write_file(path, timeseries_csv(series));
}

inline void write_sweep_csv(const SweepResult& result, const std::filesystem::path& path) {
  detail::write_file(path, sweep_csv(result));
}

/// Reads a time-series CSV back into StepStats rows (params are not stored).
inline std::vector<StepStats> read_timeseries_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read '" + path.string() + "'");
  std::string line;
  if (!std::getline(in, line) || line != kTimeSeriesHeader)
    throw Error(ErrorKind::Parse, "'" + path.string() + "' is not a time-series CSV");
  std::vector<StepStats> rows;
  while (std::getline(in, line)) {
    std::vector<std::string_view> cells;
    std::string_view rest = line;
    for (std::size_t pos; (pos = rest.find(',')) != std::string_view::npos; rest.remove_prefix(pos + 1))
      cells.push_back(rest.substr(0, pos));
    cells.push_back(rest);
    if (cells.size() != 7) throw Error(ErrorKind::Parse, "bad row in '" + path.string() + "'");
    const auto real = [&](std::string_view c) {
      double v = 0.0;
      if (std::from_chars(c.data(), c.data() + c.size(), v).ec != std::errc{})
        throw Error(ErrorKind::Parse, "bad number '" + std::string(c) + "'");
      return v;
    };
    StepStats s;
    s.t = static_cast<std::size_t>(real(cells[0]));
    s.q_ok = real(cells[1]);
    s.frac_individual = real(cells[2]);
    s.mean_ai_propensity = real(cells[3]);
    s.ai_level = real(cells[4]);
    s.mean_kappa = real(cells[5]);
    s.env_changed = cells[6] == "1";
    rows.push_back(s);
  }
  return rows;
}

}  // namespace rogers
