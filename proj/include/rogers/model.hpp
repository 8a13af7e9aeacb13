#pragma once

// Domain types for the learner population, the AI node and per-step
// measurements. These are plain values; behaviour lives in the other headers.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rogers/error.hpp"

namespace rogers {

enum class LearningMode : std::uint8_t {
  IndividualOnly,      // every agent learns individually
  HumanSocial,         // social agents copy a random human teacher
  AiSocial,            // social agents copy the AI or a human, by ai_propensity
  AiGated,             // social agents copy the AI only when it beats individual learning
  AiCritical,          // social agents try the AI, fall back to individual learning
  AiAndHumanCritical,  // as AiCritical, but the source is AI or human by ai_propensity
};

enum class AiMode : std::uint8_t { SnapToMean, ScheduledSocial, Individual, Mixed };

enum class Strategy : std::uint8_t { Individual, Social };

inline constexpr LearningMode kAllLearningModes[] = {
    LearningMode::IndividualOnly, LearningMode::HumanSocial,  LearningMode::AiSocial,
    LearningMode::AiGated,        LearningMode::AiCritical,   LearningMode::AiAndHumanCritical};

inline constexpr AiMode kAllAiModes[] = {AiMode::SnapToMean, AiMode::ScheduledSocial,
                                         AiMode::Individual, AiMode::Mixed};

constexpr std::string_view to_string(LearningMode m) noexcept {
  switch (m) {
    case LearningMode::IndividualOnly: return "INDIVIDUAL_ONLY";
    case LearningMode::HumanSocial: return "HUMAN_SOCIAL";
    case LearningMode::AiSocial: return "AI_SOCIAL";
    case LearningMode::AiGated: return "AI_GATED";
    case LearningMode::AiCritical: return "AI_CRITICAL";
    case LearningMode::AiAndHumanCritical: return "AI_AND_HUMAN_CRITICAL";
  }
  return "?";
}

constexpr std::string_view to_string(AiMode m) noexcept {
  switch (m) {
    case AiMode::SnapToMean: return "SNAP_TO_MEAN";
    case AiMode::ScheduledSocial: return "SCHEDULED_SOCIAL";
    case AiMode::Individual: return "INDIVIDUAL";
    case AiMode::Mixed: return "MIXED";
  }
  return "?";
}

inline std::optional<LearningMode> parse_learning_mode(std::string_view s) noexcept {
  for (const auto m : kAllLearningModes)
    if (to_string(m) == s) return m;
  return std::nullopt;
}

inline std::optional<AiMode> parse_ai_mode(std::string_view s) noexcept {
  for (const auto m : kAllAiModes)
    if (to_string(m) == s) return m;
  return std::nullopt;
}

/// True when social learners in this mode may pick a human teacher as well as the AI.
constexpr bool has_both_sources(LearningMode m) noexcept {
  return m == LearningMode::AiSocial || m == LearningMode::AiAndHumanCritical;
}

/// True when social learners in this mode can only consult the AI.
constexpr bool is_ai_only(LearningMode m) noexcept {
  return m == LearningMode::AiGated || m == LearningMode::AiCritical;
}

constexpr bool is_critical(LearningMode m) noexcept {
  return m == LearningMode::AiCritical || m == LearningMode::AiAndHumanCritical;
}

struct AiPolicyParams {
  double social_update_cost = 0.0;      // probability of skipping a social update
  double individual_update_cost = 0.0;
  double z_ai = 0.0;                    // AI individual-learning success rate
  AiMode mode = AiMode::SnapToMean;

  /// Per-step probability that the AI refreshes from the population mean.
  constexpr double update_rate() const noexcept { return 1.0 - social_update_cost; }

  friend bool operator==(const AiPolicyParams&, const AiPolicyParams&) = default;
};

struct SimParams {
  // environment
  double u = 0.01;
  double s_ok = 0.93;
  double s_not_ok = 0.85;
  // learning
  LearningMode learning_mode = LearningMode::IndividualOnly;
  double c_i = 0.05;
  double z_i = 0.66;
  double c_s_human = 0.0;
  double c_s_ai = 0.0;
  double feedback_decay = 1.0;
  double initial_ai_propensity = 0.5;
  // evolution
  std::size_t n_agents = 1000;
  double strategy_mutation_p = 0.005;
  double propensity_mutation_p = 0.005;
  double propensity_mutation_sigma = 0.1;
  double initial_frac_individual = 0.5;
  // AI node
  AiPolicyParams ai_policy{};
  // run
  std::size_t t_total = 200'000;
  std::size_t equilibrium_window = 50'000;
  std::uint64_t seed = 1;

  /// Agent-independent individual learning success, (1 - c_i) z_i.
  constexpr double p_individual() const noexcept { return (1.0 - c_i) * z_i; }

  friend bool operator==(const SimParams&, const SimParams&) = default;
};

struct Agent {
  Strategy strategy = Strategy::Individual;
  bool adapted = false;
  double ai_propensity = 0.5;
  double kappa = 1.0;  // individual-learning skill multiplier, in (0, 1]

  friend bool operator==(const Agent&, const Agent&) = default;
};

struct AiNode {
  double level = 0.0;  // probability that a learner copying the AI becomes adapted

  friend bool operator==(const AiNode&, const AiNode&) = default;
};

struct StepStats {
  std::size_t t = 0;
  double q_ok = 0.0;
  double frac_individual = 0.0;
  double mean_ai_propensity = 0.0;
  double ai_level = 0.0;
  double mean_kappa = 1.0;
  bool env_changed = false;

  friend bool operator==(const StepStats&, const StepStats&) = default;
};

/// Which branch a MIXED-policy AI took at one step, with both expected levels.
struct AiDecision {
  bool individual = false;
  double expected_individual = 0.0;
  double expected_social = 0.0;

  friend bool operator==(const AiDecision&, const AiDecision&) = default;
};

struct TimeSeries {
  SimParams params{};
  std::vector<StepStats> steps;
  // Diagnostics kept alongside the CSV-visible columns.
  std::vector<double> ai_use_fraction;  // fraction of agents that consulted the AI
  std::vector<AiDecision> ai_decisions; // filled only under AiMode::Mixed

  friend bool operator==(const TimeSeries&, const TimeSeries&) = default;
};

namespace detail {

inline void require_unit(std::string_view field, double v) {
  if (!(v >= 0.0 && v <= 1.0))
    throw ValidationError(std::string(field), "must lie in [0, 1], got " + std::to_string(v));
}

}  // namespace detail

inline const AiPolicyParams& validate_ai_policy(const AiPolicyParams& p) {
  detail::require_unit("ai.social_update_cost", p.social_update_cost);
  detail::require_unit("ai.individual_update_cost", p.individual_update_cost);
  detail::require_unit("ai.z_ai", p.z_ai);
  return p;
}

/// Checks every SimParams invariant and throws ValidationError naming the
/// first violated field; returns the argument unchanged otherwise.
inline const SimParams& validate_params(const SimParams& p) {
  using detail::require_unit;
  require_unit("environment.u", p.u);
  require_unit("environment.s_ok", p.s_ok);
  require_unit("environment.s_not_ok", p.s_not_ok);
  if (p.s_ok < p.s_not_ok)
    throw ValidationError("environment.s_ok", "must be >= s_not_ok");
  require_unit("learning.c_i", p.c_i);
  require_unit("learning.z_i", p.z_i);
  require_unit("learning.c_s_human", p.c_s_human);
  require_unit("learning.c_s_ai", p.c_s_ai);
  if (!(p.feedback_decay > 0.0 && p.feedback_decay <= 1.0))
    throw ValidationError("learning.feedback_decay", "must lie in (0, 1]");
  require_unit("learning.initial_ai_propensity", p.initial_ai_propensity);
  if (p.n_agents < 2) throw ValidationError("evolution.n_agents", "must be >= 2");
  require_unit("evolution.strategy_mutation_p", p.strategy_mutation_p);
  require_unit("evolution.propensity_mutation_p", p.propensity_mutation_p);
  if (!(p.propensity_mutation_sigma >= 0.0) || !std::isfinite(p.propensity_mutation_sigma))
    throw ValidationError("evolution.propensity_mutation_sigma", "must be finite and >= 0");
  require_unit("evolution.initial_frac_individual", p.initial_frac_individual);
  validate_ai_policy(p.ai_policy);
  if (p.t_total == 0) throw ValidationError("run.t_total", "must be positive");
  if (p.equilibrium_window == 0 || p.equilibrium_window > p.t_total)
    throw ValidationError("run.equilibrium_window", "must lie in [1, t_total]");
  return p;
}

inline void validate_agent(const Agent& a) {
  if (!(a.kappa > 0.0 && a.kappa <= 1.0)) throw ValidationError("agent.kappa", "must lie in (0, 1]");
  detail::require_unit("agent.ai_propensity", a.ai_propensity);
}

inline void validate_ai_node(const AiNode& ai) { detail::require_unit("ai.level", ai.level); }

}  // namespace rogers
