#pragma once

#include <algorithm>
#include <limits>

#include "rogers/model.hpp"

namespace rogers {

/// Deskilling penalty for an agent that consulted the AI this step, whether or
/// not the attempt succeeded: kappa <- decay * kappa. decay = 1 disables it.
/// Kappa is floored at the smallest normal double so it stays positive.
constexpr Agent apply_feedback_penalty(Agent agent, double decay) noexcept {
  agent.kappa = std::max(agent.kappa * decay, std::numeric_limits<double>::min());
  return agent;
}

}  // namespace rogers
