#pragma once

// Parameter grids with per-cell replication. Cells are independent and may
// run on several threads; output order and every seed are fixed by the cell
// index, so results do not depend on the worker count.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "rogers/analytics.hpp"
#include "rogers/engine.hpp"
#include "rogers/params_io.hpp"

namespace rogers {

struct SweepAxis {
  std::string path;
  std::vector<ConfigScalar> values;

  friend bool operator==(const SweepAxis&, const SweepAxis&) = default;
};

struct SweepSpec {
  SimParams base{};
  std::vector<SweepAxis> axes;  // at most two
  std::size_t seeds_per_cell = 10;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

enum class CellStatus { Ok, Extinction };

constexpr std::string_view to_string(CellStatus s) noexcept {
  return s == CellStatus::Ok ? "ok" : "extinction";
}

struct SweepRow {
  std::vector<std::string> axis_names;   // one per axis
  std::vector<ConfigScalar> axis_values;
  Equilibrium equilibrium{};             // pooled over completed seeds
  std::size_t seeds = 0;                 // completed seeds
  CellStatus status = CellStatus::Ok;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // row-major over axes (first axis outermost)
};

inline std::size_t cell_count(const SweepSpec& spec) {
  std::size_t n = 1;
  for (const auto& a : spec.axes) n *= a.values.size();
  return n;
}

/// Parameters of cell `index` before the per-replicate seed is applied.
inline SimParams cell_params(const SweepSpec& spec, std::size_t index) {
  SimParams p = spec.base;
  std::size_t stride = cell_count(spec);
  for (const auto& axis : spec.axes) {
    stride /= axis.values.size();
    set_param(p, axis.path, axis.values[(index / stride) % axis.values.size()]);
  }
  return p;
}

/// seed = base seed + cell index * seeds_per_cell + replicate.
inline std::uint64_t cell_seed(const SweepSpec& spec, std::size_t cell, std::size_t replicate) {
  return spec.base.seed + static_cast<std::uint64_t>(cell) * spec.seeds_per_cell + replicate;
}

/// Checks axis count, axis paths and that every cell's parameters validate.
inline const SweepSpec& validate_sweep(const SweepSpec& spec) {
  validate_params(spec.base);
  if (spec.axes.size() > 2) throw ValidationError("sweep", "at most two axes are supported");
  if (spec.seeds_per_cell == 0) throw ValidationError("sweep.seeds_per_cell", "must be positive");
  for (const auto& axis : spec.axes) {
    if (!find_param_key(axis.path))
      throw Error(ErrorKind::UnknownKey, "unknown sweep axis '" + axis.path + "'");
    if (axis.values.empty()) throw ValidationError("sweep." + axis.path, "axis has no values");
  }
  for (std::size_t c = 0; c < cell_count(spec); ++c) validate_params(cell_params(spec, c));
  return spec;
}

/// Runs one cell's replicates sequentially and pools them.
inline SweepRow run_cell(const SweepSpec& spec, std::size_t cell) {
  SweepRow row;
  const SimParams p = cell_params(spec, cell);
  std::size_t stride = cell_count(spec);
  for (const auto& axis : spec.axes) {
    stride /= axis.values.size();
    row.axis_names.push_back(axis.path);
    row.axis_values.push_back(axis.values[(cell / stride) % axis.values.size()]);
  }
  std::vector<Equilibrium> runs;
  for (std::size_t r = 0; r < spec.seeds_per_cell; ++r) {
    SimParams pr = p;
    pr.seed = cell_seed(spec, cell, r);
    try {
      runs.push_back(estimate_equilibrium(run_simulation(pr), pr.equilibrium_window));
    } catch (const ExtinctionError&) {
      row.status = CellStatus::Extinction;
    }
  }
  row.seeds = runs.size();
  row.equilibrium = pool(runs);
  return row;
}

/// Runs every cell on up to `workers` threads (0 means hardware concurrency).
inline SweepResult run_sweep(const SweepSpec& spec, std::size_t workers = 1) {
  validate_sweep(spec);
  const std::size_t cells = cell_count(spec);
  SweepResult result;
  result.rows.resize(cells);
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, cells);

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t c = next++; c < cells; c = next++) result.rows[c] = run_cell(spec, c);
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool_threads;
    for (std::size_t w = 0; w < workers; ++w) pool_threads.emplace_back(work);
  }
  return result;
}

}  // namespace rogers
