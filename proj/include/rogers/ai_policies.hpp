#pragma once

// End-of-step update rules for the AI node. The engine calls exactly one of
// these per step with the adapted fraction it just measured.

#include "rogers/model.hpp"
#include "rogers/rng.hpp"

namespace rogers {

constexpr AiNode ai_snap_to_mean(AiNode ai, double q_ok) noexcept {
  ai.level = q_ok;
  return ai;
}

/// With probability 1 - c_lambda_s the AI copies the population mean; otherwise
/// it keeps its level (the environment step already zeroes it on change).
inline AiNode ai_scheduled_update(AiNode ai, double q_ok, double c_lambda_s, Rng& rng) noexcept {
  if (rng.bernoulli(1.0 - c_lambda_s)) ai.level = q_ok;
  return ai;
}

/// Exact expectation of the sampled scheduled update, including the
/// environment step that precedes it: lambda q + (1 - lambda)(1 - u) level.
constexpr double scheduled_expected_level(double level, double q_ok, double c_lambda_s,
                                          double u) noexcept {
  const double lambda = 1.0 - c_lambda_s;
  return lambda * q_ok + (1.0 - lambda) * (1.0 - u) * level;
}

/// The "either event leaves the AI adapted" recurrence, treating a social
/// refresh and a still-valid retained level as independent events.
constexpr double scheduled_recurrence(double level, double q_ok, double c_lambda_s,
                                      double u) noexcept {
  const double lambda = 1.0 - c_lambda_s;
  return 1.0 - (1.0 - lambda * q_ok) * (1.0 - level * c_lambda_s * (1.0 - u));
}

/// AI individual learning: level 1 with probability (1 - c_lambda_i) z_ai,
/// otherwise the AI has settled on a wrong answer and drops to 0.
inline AiNode ai_individual_update(AiNode ai, double c_lambda_i, double z_ai, Rng& rng) noexcept {
  ai.level = rng.bernoulli((1.0 - c_lambda_i) * z_ai) ? 1.0 : 0.0;
  return ai;
}

/// Greedy choice between individual learning and snapping to the mean, by
/// expected resulting level. Ties go to the social branch.
constexpr AiDecision ai_mixed_decision(double q_ok, const AiPolicyParams& policy) noexcept {
  AiDecision d;
  d.expected_individual = (1.0 - policy.individual_update_cost) * policy.z_ai;
  d.expected_social = q_ok;
  d.individual = d.expected_individual > d.expected_social;
  return d;
}

inline AiNode ai_mixed_update(AiNode ai, double q_ok, const AiPolicyParams& policy, Rng& rng,
                              AiDecision* decision = nullptr) noexcept {
  const AiDecision d = ai_mixed_decision(q_ok, policy);
  if (decision) *decision = d;
  return d.individual ? ai_individual_update(ai, policy.individual_update_cost, policy.z_ai, rng)
                      : ai_snap_to_mean(ai, q_ok);
}

/// Dispatches on policy.mode.
inline AiNode ai_update(AiNode ai, double q_ok, const AiPolicyParams& policy, Rng& rng,
                        AiDecision* decision = nullptr) noexcept {
  switch (policy.mode) {
    case AiMode::SnapToMean: return ai_snap_to_mean(ai, q_ok);
    case AiMode::ScheduledSocial:
      return ai_scheduled_update(ai, q_ok, policy.social_update_cost, rng);
    case AiMode::Individual:
      return ai_individual_update(ai, policy.individual_update_cost, policy.z_ai, rng);
    case AiMode::Mixed: return ai_mixed_update(ai, q_ok, policy, rng, decision);
  }
  return ai;
}

}  // namespace rogers
