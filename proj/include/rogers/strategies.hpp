#pragma once

// Per-agent learning procedures. Each returns whether the learner ends the
// attempt adapted; none of them mutate the agent.

#include <cstddef>
#include <span>
#include <variant>

#include "rogers/model.hpp"
#include "rogers/rng.hpp"

namespace rogers {

/// Success probability of one individual attempt: (1 - c_i) z_i kappa.
constexpr double individual_success_probability(double c_i, double z_i, double kappa) noexcept {
  return (1.0 - c_i) * z_i * kappa;
}

/// Success probability of a critical learner: social first, individual on failure.
constexpr double critical_success_probability(double p_social, double p_individual) noexcept {
  return 1.0 - (1.0 - p_social) * (1.0 - p_individual);
}

inline bool individual_learn(const Agent& agent, double c_i, double z_i, Rng& rng) noexcept {
  return rng.bernoulli(individual_success_probability(c_i, z_i, agent.kappa));
}

/// Copies a human teacher's previous-step behaviour.
inline bool social_learn_human(bool teacher_adapted, double c_s_human, Rng& rng) noexcept {
  return teacher_adapted && rng.bernoulli(1.0 - c_s_human);
}

inline bool social_learn_ai(const AiNode& ai, double c_s_ai, Rng& rng) noexcept {
  return rng.bernoulli((1.0 - c_s_ai) * ai.level);
}

/// Whether the AI is offered at all: its level must reach the agent-independent
/// individual success (1 - c_i) z_i. Ties count as available.
constexpr bool gate_ai_access(const AiNode& ai, const SimParams& p) noexcept {
  return ai.level >= p.p_individual();
}

struct HumanTeacher {
  std::size_t index;
  friend bool operator==(const HumanTeacher&, const HumanTeacher&) = default;
};
struct AiTeacher {
  friend bool operator==(const AiTeacher&, const AiTeacher&) = default;
};
using TeacherSource = std::variant<HumanTeacher, AiTeacher>;

/// Picks where a social learner copies from. In two-source modes the AI is
/// chosen with probability ai_propensity; AI-only modes always pick the AI,
/// HUMAN_SOCIAL always picks a uniformly random human from the snapshot.
inline TeacherSource choose_teacher(const Agent& agent, std::span<const std::uint8_t> snapshot,
                                    LearningMode mode, Rng& rng) noexcept {
  if (is_ai_only(mode)) return AiTeacher{};
  if (has_both_sources(mode) && rng.bernoulli(agent.ai_propensity)) return AiTeacher{};
  return HumanTeacher{static_cast<std::size_t>(rng.index(snapshot.size()))};
}

/// Outcome of one learning step for an agent; used_ai drives the deskilling penalty.
struct LearnOutcome {
  bool adapted = false;
  bool used_ai = false;
};

/// Critical social learning: try the chosen social source, and if that fails
/// learn individually at the usual cost and kappa. In AI_CRITICAL the source
/// is always the AI; in AI_AND_HUMAN_CRITICAL it is drawn by ai_propensity.
inline LearnOutcome critical_social_learn(const Agent& agent, const AiNode& ai, const SimParams& p,
                                          std::span<const std::uint8_t> snapshot, Rng& rng) noexcept {
  LearnOutcome out;
  const TeacherSource source = choose_teacher(agent, snapshot, p.learning_mode, rng);
  if (std::holds_alternative<AiTeacher>(source)) {
    out.used_ai = true;
    out.adapted = social_learn_ai(ai, p.c_s_ai, rng);
  } else {
    const auto idx = std::get<HumanTeacher>(source).index;
    out.adapted = social_learn_human(snapshot[idx] != 0, p.c_s_human, rng);
  }
  if (!out.adapted) out.adapted = individual_learn(agent, p.c_i, p.z_i, rng);
  return out;
}

/// Runs whatever learning procedure the agent's strategy and the scenario's
/// learning mode call for. `snapshot` holds the teachers' adaptation flags.
inline LearnOutcome learn(const Agent& agent, const AiNode& ai, const SimParams& p,
                          std::span<const std::uint8_t> snapshot, Rng& rng) noexcept {
  if (p.learning_mode == LearningMode::IndividualOnly || agent.strategy == Strategy::Individual)
    return {individual_learn(agent, p.c_i, p.z_i, rng), false};

  switch (p.learning_mode) {
    case LearningMode::AiGated:
      if (gate_ai_access(ai, p)) return {social_learn_ai(ai, p.c_s_ai, rng), true};
      return {individual_learn(agent, p.c_i, p.z_i, rng), false};
    case LearningMode::AiCritical:
    case LearningMode::AiAndHumanCritical:
      return critical_social_learn(agent, ai, p, snapshot, rng);
    default: break;
  }

  const TeacherSource source = choose_teacher(agent, snapshot, p.learning_mode, rng);
  if (std::holds_alternative<AiTeacher>(source)) return {social_learn_ai(ai, p.c_s_ai, rng), true};
  const auto idx = std::get<HumanTeacher>(source).index;
  return {social_learn_human(snapshot[idx] != 0, p.c_s_human, rng), false};
}

}  // namespace rogers
