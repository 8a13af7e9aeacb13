#pragma once

// Bundled scenarios. Every preset is ordinary config text, so a preset can be
// dumped, edited and loaded back as a file.

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "rogers/config.hpp"

namespace rogers {

struct Preset {
  std::string_view name;
  std::string_view description;
  std::string_view text;
};

inline constexpr std::array<Preset, 14> kPresets{{
    {"baseline_individual", "individual learners only",
     "[learning]\nmode = \"INDIVIDUAL_ONLY\"\n"},
    {"baseline_human_social", "individual and human-copying social learners",
     "[learning]\nmode = \"HUMAN_SOCIAL\"\n"},
    {"ai_social", "social learners copy the AI or a human; AI snaps to the mean",
     "[learning]\nmode = \"AI_SOCIAL\"\n[ai]\nmode = \"SNAP_TO_MEAN\"\n"},
    {"ai_gated", "AI offered only when it beats individual learning",
     "[learning]\nmode = \"AI_GATED\"\n"},
    {"ai_critical", "critical social learning from the AI",
     "[learning]\nmode = \"AI_CRITICAL\"\n"},
    {"ai_and_human_critical", "critical social learning from the AI or a human",
     "[learning]\nmode = \"AI_AND_HUMAN_CRITICAL\"\nc_s_human = 0.02\n"},
    {"ai_scheduled_critical", "critical learners; AI refreshes with probability 0.1 per step",
     "[learning]\nmode = \"AI_CRITICAL\"\n[ai]\nmode = \"SCHEDULED_SOCIAL\"\nupdate_rate = 0.1\n"},
    {"ai_individual", "AI learns individually every step",
     "[learning]\nmode = \"AI_SOCIAL\"\n[ai]\nmode = \"INDIVIDUAL\"\nindividual_update_cost = 0.1\nz_ai = 0.9\n"},
    {"ai_mixed_baseline", "AI picks individual or social updates; plain reliance",
     "[learning]\nmode = \"AI_SOCIAL\"\n[ai]\nmode = \"MIXED\"\nindividual_update_cost = 0.1\nz_ai = 0.9\n"},
    {"ai_mixed_critical", "AI picks individual or social updates; critical learners",
     "[learning]\nmode = \"AI_CRITICAL\"\n[ai]\nmode = \"MIXED\"\nindividual_update_cost = 0.1\nz_ai = 0.9\n"},
    {"feedback_ai_critical", "critical AI learners lose skill each time they consult the AI",
     "[learning]\nmode = \"AI_CRITICAL\"\nfeedback_decay = 0.9\n"},
    {"feedback_two_source", "costlier humans vs deskilling AI, critical learners",
     "[learning]\nmode = \"AI_AND_HUMAN_CRITICAL\"\nfeedback_decay = 0.9\nc_s_human = 0.02\n"},
    {"sweep_update_schedule", "AI update rate x environment change rate, critical learners",
     "[learning]\nmode = \"AI_CRITICAL\"\n[ai]\nmode = \"SCHEDULED_SOCIAL\"\n[sweep]\n"
     "axis1 = \"environment.u\"\naxis1_values = [0.01, 0.1, 0.5]\n"
     "axis2 = \"ai.update_rate\"\naxis2_values = [0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0]\n"},
    {"sweep_ai_individual", "AI individual-learning cost x success rate, plain reliance",
     "[learning]\nmode = \"AI_SOCIAL\"\n[ai]\nmode = \"MIXED\"\n[sweep]\n"
     "axis1 = \"ai.individual_update_cost\"\naxis1_values = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]\n"
     "axis2 = \"ai.z_ai\"\naxis2_values = [0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]\n"},
}};

inline const Preset* find_preset(std::string_view name) {
  for (const auto& p : kPresets)
    if (p.name == name) return &p;
  return nullptr;
}

/// Loads a preset by name; throws Error(UnknownKey) if there is none.
inline Config load_preset(std::string_view name) {
  const Preset* p = find_preset(name);
  if (!p) throw Error(ErrorKind::UnknownKey, "no preset named '" + std::string(name) + "'");
  return parse_config(p->text);
}

/// "preset:NAME" loads a bundled preset, anything else is a file path.
inline Config load_config_ref(std::string_view ref) {
  constexpr std::string_view prefix = "preset:";
  if (ref.starts_with(prefix)) return load_preset(ref.substr(prefix.size()));
  return load_config(std::filesystem::path(ref));
}

}  // namespace rogers
