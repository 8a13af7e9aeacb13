#pragma once

// Closed-form equilibrium predictions and Monte Carlo equilibrium estimates.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "rogers/error.hpp"
#include "rogers/model.hpp"

namespace rogers {

/// Expected adapted fraction of an all-individual population: (1 - c_i) z_i s_ok.
constexpr double predict_individual_only(double c_i, double z_i, double s_ok) noexcept {
  return (1.0 - c_i) * z_i * s_ok;
}

namespace detail {

inline double social_retention(double c_s, double p_s_ok_ok, double s_ok) noexcept {
  return (1.0 - c_s) * p_s_ok_ok * s_ok;
}

}  // namespace detail

/// Expected adapted fraction of a population with a fraction q_i of individual
/// learners and the rest copying random peers:
///   p_i s q_i / (1 - (1 - c_s) p_ss s (1 - q_i)),   p_i = (1 - c_i) z_i.
inline double predict_mixed_equilibrium(double q_i, double c_i, double z_i, double c_s,
                                        double p_s_ok_ok, double s_ok) {
  const double denom = 1.0 - detail::social_retention(c_s, p_s_ok_ok, s_ok) * (1.0 - q_i);
  if (!(denom > 0.0)) throw Error(ErrorKind::Degenerate, "mixed equilibrium denominator is not positive");
  return predict_individual_only(c_i, z_i, s_ok) * q_i / denom;
}

/// Expected adapted fraction among the social learners alone.
inline double predict_social_equilibrium(double q_i, double c_i, double z_i, double c_s,
                                         double p_s_ok_ok, double s_ok) {
  return detail::social_retention(c_s, p_s_ok_ok, s_ok) *
         predict_mixed_equilibrium(q_i, c_i, z_i, c_s, p_s_ok_ok, s_ok);
}

struct FixedPointOptions {
  double damping = 0.5;
  double tolerance = 1e-10;
  std::size_t max_iterations = 10'000;
};

/// Three-way population of individual learners (q_i), human-copying social
/// learners (q_s) and AI-copying social learners (q_ai). Both social sources
/// deliver the previous step's adapted fraction, discounted by (1 - u) for
/// staleness and by their own cost, so the mean adapted fraction q solves
///   q = p_i s q_i + (1-c_sh)(1-u) q s q_s + (1-c_sai)(1-u) q s q_ai,
/// found here by damped fixed-point iteration from q = p_i s.
inline double predict_three_way(double q_i, double q_s, double q_ai, const SimParams& p,
                                const FixedPointOptions& opt = {}) {
  if (std::abs(q_i + q_s + q_ai - 1.0) > 1e-9)
    throw ValidationError("fractions", "q_i + q_s + q_ai must sum to 1");
  for (const double f : {q_i, q_s, q_ai})
    if (!(f >= 0.0 && f <= 1.0)) throw ValidationError("fractions", "each fraction must lie in [0, 1]");

  const double stale = 1.0 - p.u;
  const double base = predict_individual_only(p.c_i, p.z_i, p.s_ok) * q_i;
  const double slope = ((1.0 - p.c_s_human) * q_s + (1.0 - p.c_s_ai) * q_ai) * stale * p.s_ok;
  const auto rhs = [&](double q) { return base + slope * q; };
  // The damped map contracts by k, so the distance left to the fixed point
  // after a step of size d is at most d k / (1 - k).
  const double k = (1.0 - opt.damping) + opt.damping * slope;

  double q = predict_individual_only(p.c_i, p.z_i, p.s_ok);
  for (std::size_t it = 0; it < opt.max_iterations; ++it) {
    const double next = (1.0 - opt.damping) * q + opt.damping * rhs(q);
    if (std::abs(next - q) * k <= opt.tolerance * (1.0 - k)) return next;
    q = next;
  }
  throw Error(ErrorKind::NoConvergence, "three-way fixed point did not converge");
}

struct Equilibrium {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Mean of the trailing `window` samples with a batch-means standard error
/// (up to `batches` equal batches; any remainder at the start of the window
/// is excluded from the error estimate, not from the mean).
inline Equilibrium batch_means(std::span<const double> values, std::size_t window,
                               std::size_t batches = 50) {
  if (window == 0 || window > values.size())
    throw ValidationError("window", "must lie in [1, series length]");
  const auto tail = values.subspan(values.size() - window);

  Equilibrium eq;
  double sum = 0.0;
  for (const double v : tail) sum += v;
  eq.mean = sum / static_cast<double>(window);

  const std::size_t nb = std::min(batches, window);
  const std::size_t len = window / nb;
  if (nb < 2) return eq;
  const auto used = tail.subspan(window - nb * len);
  std::vector<double> means(nb);
  for (std::size_t b = 0; b < nb; ++b) {
    double s = 0.0;
    for (std::size_t k = 0; k < len; ++k) s += used[b * len + k];
    means[b] = s / static_cast<double>(len);
  }
  double grand = 0.0;
  for (const double m : means) grand += m;
  grand /= static_cast<double>(nb);
  double ss = 0.0;
  for (const double m : means) ss += (m - grand) * (m - grand);
  eq.std_error = std::sqrt(ss / static_cast<double>(nb - 1) / static_cast<double>(nb));
  return eq;
}

/// Any StepStats column as a plain vector.
template <typename Projection>
std::vector<double> column(const TimeSeries& series, Projection proj) {
  std::vector<double> out;
  out.reserve(series.steps.size());
  for (const auto& s : series.steps) out.push_back(static_cast<double>(proj(s)));
  return out;
}

inline Equilibrium estimate_equilibrium(const TimeSeries& series, std::size_t window) {
  return batch_means(column(series, [](const StepStats& s) { return s.q_ok; }), window);
}

/// Plain mean of the trailing `window` entries of any per-step quantity.
inline double trailing_mean(std::span<const double> values, std::size_t window) {
  return batch_means(values, window, 1).mean;
}

/// Pools per-replicate estimates: mean of means, SE = sqrt(sum se^2) / n.
inline Equilibrium pool(std::span<const Equilibrium> runs) {
  Equilibrium out;
  if (runs.empty()) return {std::nan(""), std::nan("")};
  double var = 0.0;
  for (const auto& r : runs) {
    out.mean += r.mean;
    var += r.std_error * r.std_error;
  }
  const auto n = static_cast<double>(runs.size());
  out.mean /= n;
  out.std_error = std::sqrt(var) / n;
  return out;
}

}  // namespace rogers
