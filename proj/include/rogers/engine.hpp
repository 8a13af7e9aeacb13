#pragma once

// The per-timestep loop. One step runs, in order:
//   1. environment change (probability u): all adaptation and the AI level reset
//   2. learning: every agent learns afresh; social learners copy from the
//      previous step's adaptation snapshot or from the AI's current level
//   3. survival
//   4. measurement: q_ok = adapted survivors / n_agents
//   5. replenishment back to n_agents
//   6. AI update toward the q_ok just measured
// A run is single-threaded and fully determined by params.seed.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "rogers/ai_policies.hpp"
#include "rogers/error.hpp"
#include "rogers/feedback.hpp"
#include "rogers/model.hpp"
#include "rogers/rng.hpp"
#include "rogers/strategies.hpp"

namespace rogers {

struct PopulationState {
  std::vector<Agent> agents;
  std::vector<std::uint8_t> snapshot;  // teacher pool: adaptation flags from the last learning phase
  double prev_q_ok = 0.0;
};

/// Thrown when no agent survives a step. Carries the series up to and
/// including the fatal step.
class ExtinctionError : public Error {
public:
  ExtinctionError(std::size_t t, TimeSeries partial)
      : Error(ErrorKind::Extinction, "population went extinct at step " + std::to_string(t)),
        t_(t),
        partial_(std::move(partial)) {}

  std::size_t step() const noexcept { return t_; }
  const TimeSeries& partial() const noexcept { return partial_; }

private:
  std::size_t t_;
  TimeSeries partial_;
};

inline PopulationState initial_population(const SimParams& p, Rng& rng) {
  PopulationState state;
  state.agents.resize(p.n_agents);
  for (auto& a : state.agents) {
    const bool individual = p.learning_mode == LearningMode::IndividualOnly ||
                            rng.bernoulli(p.initial_frac_individual);
    a.strategy = individual ? Strategy::Individual : Strategy::Social;
    a.ai_propensity = p.initial_ai_propensity;
  }
  state.snapshot.assign(p.n_agents, 0);
  return state;
}

/// With probability u the optimum moves: every adaptation flag (including the
/// teacher snapshot) and the AI level drop to zero. Returns whether it moved.
inline bool step_environment(PopulationState& state, AiNode& ai, double u, Rng& rng) {
  if (!rng.bernoulli(u)) return false;
  for (auto& a : state.agents) a.adapted = false;
  std::fill(state.snapshot.begin(), state.snapshot.end(), std::uint8_t{0});
  ai.level = 0.0;
  return true;
}

/// Keeps each agent with probability s_ok if adapted else s_not_ok, preserving
/// order. Returns the number of survivors (now the vector's size).
inline std::size_t survival_phase(std::vector<Agent>& agents, double s_ok, double s_not_ok,
                                  Rng& rng) {
  std::size_t kept = 0;
  for (std::size_t i = 0; i < agents.size(); ++i) {
    // Branch-free compaction: survival is a coin flip the predictor cannot learn.
    const bool survives = rng.bernoulli(agents[i].adapted ? s_ok : s_not_ok);
    agents[kept] = agents[i];
    kept += survives ? 1 : 0;
  }
  agents.resize(kept);
  return kept;
}

/// Newborn descended from `parent`: inherits strategy and ai_propensity with
/// mutation, starts unadapted with fresh skill.
inline Agent make_newborn(const Agent& parent, const SimParams& p, Rng& rng) {
  Agent child;
  child.strategy = parent.strategy;
  if (p.learning_mode != LearningMode::IndividualOnly && rng.bernoulli(p.strategy_mutation_p))
    child.strategy = parent.strategy == Strategy::Individual ? Strategy::Social : Strategy::Individual;
  child.ai_propensity = parent.ai_propensity;
  if (rng.bernoulli(p.propensity_mutation_p))
    child.ai_propensity =
        std::clamp(child.ai_propensity + p.propensity_mutation_sigma * rng.normal(), 0.0, 1.0);
  child.adapted = false;
  child.kappa = 1.0;
  return child;
}

/// Refills `agents` (the survivors) to exactly n_agents. Parents are drawn
/// uniformly from the survivors only. Throws Error(Extinction) when empty.
inline void replenish(std::vector<Agent>& agents, const SimParams& p, Rng& rng) {
  const std::size_t survivors = agents.size();
  if (survivors == 0) throw Error(ErrorKind::Extinction, "no survivors to replenish from");
  agents.reserve(p.n_agents);
  while (agents.size() < p.n_agents) {
    const Agent& parent = agents[static_cast<std::size_t>(rng.index(survivors))];
    agents.push_back(make_newborn(parent, p, rng));
  }
}

/// Stepwise simulator. run_simulation() drives it to completion; tests use
/// it directly to inspect intermediate state.
class Simulation {
public:
  explicit Simulation(const SimParams& params)
      : params_(validate_params(params)), rng_(params.seed), state_(initial_population(params_, rng_)) {
    series_.params = params_;
    series_.steps.reserve(params_.t_total);
    series_.ai_use_fraction.reserve(params_.t_total);
    if (params_.ai_policy.mode == AiMode::Mixed) series_.ai_decisions.reserve(params_.t_total);
  }

  const SimParams& params() const noexcept { return params_; }
  const PopulationState& state() const noexcept { return state_; }
  const AiNode& ai() const noexcept { return ai_; }
  const TimeSeries& series() const noexcept { return series_; }
  std::size_t t() const noexcept { return t_; }
  bool done() const noexcept { return t_ >= params_.t_total; }

  /// Advances one step; throws ExtinctionError if nobody survives.
  const StepStats& step() {
    const SimParams& p = params_;
    const double n = static_cast<double>(p.n_agents);
    StepStats stats;
    stats.t = t_;

    stats.env_changed = step_environment(state_, ai_, p.u, rng_);

    // Learning. Teachers are read from last step's snapshot, which is only
    // overwritten once every agent has learned.
    std::size_t individual_count = 0, social_count = 0, ai_users = 0;
    double social_propensity = 0.0, kappa_sum = 0.0;
    for (auto& a : state_.agents) {
      const LearnOutcome out = learn(a, ai_, p, state_.snapshot, rng_);
      a.adapted = out.adapted;
      if (a.strategy == Strategy::Individual) {
        ++individual_count;
      } else {
        ++social_count;
        social_propensity += a.ai_propensity;
      }
      kappa_sum += a.kappa;
      if (out.used_ai) {
        ++ai_users;
        a = apply_feedback_penalty(a, p.feedback_decay);
      }
    }
    for (std::size_t i = 0; i < state_.agents.size(); ++i)
      state_.snapshot[i] = state_.agents[i].adapted ? 1 : 0;

    survival_phase(state_.agents, p.s_ok, p.s_not_ok, rng_);

    const auto adapted_survivors = static_cast<std::size_t>(
        std::count_if(state_.agents.begin(), state_.agents.end(), [](const Agent& a) { return a.adapted; }));
    stats.q_ok = static_cast<double>(adapted_survivors) / n;
    stats.frac_individual = static_cast<double>(individual_count) / n;
    stats.mean_ai_propensity =
        social_count ? social_propensity / static_cast<double>(social_count) : 0.0;
    stats.mean_kappa = kappa_sum / n;
    state_.prev_q_ok = stats.q_ok;

    if (state_.agents.empty()) {
      stats.ai_level = ai_.level;
      record(stats, static_cast<double>(ai_users) / n, {});
      throw ExtinctionError(stats.t, series_);
    }
    replenish(state_.agents, p, rng_);

    AiDecision decision;
    ai_ = ai_update(ai_, stats.q_ok, p.ai_policy, rng_, &decision);
    stats.ai_level = ai_.level;
    record(stats, static_cast<double>(ai_users) / n, decision);
    ++t_;
    return series_.steps.back();
  }

  void run() {
    while (!done()) step();
  }

  TimeSeries take_series() && { return std::move(series_); }

private:
  void record(const StepStats& stats, double ai_use, const AiDecision& decision) {
    series_.steps.push_back(stats);
    series_.ai_use_fraction.push_back(ai_use);
    if (params_.ai_policy.mode == AiMode::Mixed) series_.ai_decisions.push_back(decision);
  }

  SimParams params_;
  Rng rng_;
  PopulationState state_;
  AiNode ai_{};
  TimeSeries series_;
  std::size_t t_ = 0;
};

/// Runs params.t_total steps. Deterministic for a fixed params (incl. seed).
inline TimeSeries run_simulation(const SimParams& params) {
  Simulation sim(params);
  sim.run();
  return std::move(sim).take_series();
}

}  // namespace rogers
