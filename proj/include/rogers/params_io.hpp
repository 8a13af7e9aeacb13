#pragma once

// Named parameter paths ("section.key") and typed values. Shared by the
// config reader/writer and by sweep axes.

#include <array>
#include <charconv>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <variant>
#include <vector>

#include "rogers/error.hpp"
#include "rogers/model.hpp"

namespace rogers {

/// A scalar read from a config file: integer, real, boolean or string.
using ConfigScalar = std::variant<std::int64_t, double, bool, std::string>;

/// Shortest text that parses back to exactly `v`.
inline std::string format_double_exact(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), res.ptr);
}

/// `v` rounded to 9 significant digits, trailing zeros dropped.
inline std::string format_double9(double v) {
  std::array<char, 64> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 9);
  return std::string(buf.data(), res.ptr);
}

inline std::string to_text(const ConfigScalar& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, std::int64_t>) return std::to_string(x);
        else if constexpr (std::is_same_v<T, double>) return format_double9(x);
        else if constexpr (std::is_same_v<T, bool>) return x ? "true" : "false";
        else return x;
      },
      v);
}

namespace detail {

inline double as_real(std::string_view path, const ConfigScalar& v) {
  if (const auto* d = std::get_if<double>(&v)) return *d;
  if (const auto* i = std::get_if<std::int64_t>(&v)) return static_cast<double>(*i);
  throw ValidationError(std::string(path), "expected a number");
}

inline std::uint64_t as_count(std::string_view path, const ConfigScalar& v) {
  const auto* i = std::get_if<std::int64_t>(&v);
  if (!i || *i < 0) throw ValidationError(std::string(path), "expected a non-negative integer");
  return static_cast<std::uint64_t>(*i);
}

inline std::string_view as_string(std::string_view path, const ConfigScalar& v) {
  const auto* s = std::get_if<std::string>(&v);
  if (!s) throw ValidationError(std::string(path), "expected a string");
  return *s;
}

}  // namespace detail

struct ParamKey {
  std::string_view path;
  std::function<void(SimParams&, const ConfigScalar&)> set;
  // Null for derived keys that are never written out.
  std::function<std::string(const SimParams&)> render;
};

namespace detail {

template <double SimParams::*Field>
ParamKey real_key(std::string_view path) {
  return {path, [path](SimParams& p, const ConfigScalar& v) { p.*Field = as_real(path, v); },
          [](const SimParams& p) { return format_double_exact(p.*Field); }};
}

template <double AiPolicyParams::*Field>
ParamKey ai_real_key(std::string_view path) {
  return {path, [path](SimParams& p, const ConfigScalar& v) { p.ai_policy.*Field = as_real(path, v); },
          [](const SimParams& p) { return format_double_exact(p.ai_policy.*Field); }};
}

template <typename T, T SimParams::*Field>
ParamKey count_key(std::string_view path) {
  return {path, [path](SimParams& p, const ConfigScalar& v) { p.*Field = static_cast<T>(as_count(path, v)); },
          [](const SimParams& p) { return std::to_string(p.*Field); }};
}

inline std::string quoted(std::string_view s) { return "\"" + std::string(s) + "\""; }

}  // namespace detail

/// Every settable SimParams path, in canonical (serialization) order.
inline const std::vector<ParamKey>& param_keys() {
  using namespace detail;
  static const std::vector<ParamKey> keys = [] {
    std::vector<ParamKey> k;
    k.push_back(real_key<&SimParams::u>("environment.u"));
    k.push_back(real_key<&SimParams::s_ok>("environment.s_ok"));
    k.push_back(real_key<&SimParams::s_not_ok>("environment.s_not_ok"));
    k.push_back({"learning.mode",
                 [](SimParams& p, const ConfigScalar& v) {
                   const auto m = parse_learning_mode(as_string("learning.mode", v));
                   if (!m) throw ValidationError("learning.mode", "unknown learning mode");
                   p.learning_mode = *m;
                 },
                 [](const SimParams& p) { return quoted(to_string(p.learning_mode)); }});
    k.push_back(real_key<&SimParams::c_i>("learning.c_i"));
    k.push_back(real_key<&SimParams::z_i>("learning.z_i"));
    k.push_back(real_key<&SimParams::c_s_human>("learning.c_s_human"));
    k.push_back(real_key<&SimParams::c_s_ai>("learning.c_s_ai"));
    k.push_back(real_key<&SimParams::feedback_decay>("learning.feedback_decay"));
    k.push_back(real_key<&SimParams::initial_ai_propensity>("learning.initial_ai_propensity"));
    k.push_back(count_key<std::size_t, &SimParams::n_agents>("evolution.n_agents"));
    k.push_back(real_key<&SimParams::strategy_mutation_p>("evolution.strategy_mutation_p"));
    k.push_back(real_key<&SimParams::propensity_mutation_p>("evolution.propensity_mutation_p"));
    k.push_back(real_key<&SimParams::propensity_mutation_sigma>("evolution.propensity_mutation_sigma"));
    k.push_back(real_key<&SimParams::initial_frac_individual>("evolution.initial_frac_individual"));
    k.push_back({"ai.mode",
                 [](SimParams& p, const ConfigScalar& v) {
                   const auto m = parse_ai_mode(as_string("ai.mode", v));
                   if (!m) throw ValidationError("ai.mode", "unknown AI policy mode");
                   p.ai_policy.mode = *m;
                 },
                 [](const SimParams& p) { return quoted(to_string(p.ai_policy.mode)); }});
    k.push_back(ai_real_key<&AiPolicyParams::social_update_cost>("ai.social_update_cost"));
    k.push_back({"ai.update_rate",
                 [](SimParams& p, const ConfigScalar& v) {
                   p.ai_policy.social_update_cost = 1.0 - as_real("ai.update_rate", v);
                 },
                 nullptr});
    k.push_back(ai_real_key<&AiPolicyParams::individual_update_cost>("ai.individual_update_cost"));
    k.push_back(ai_real_key<&AiPolicyParams::z_ai>("ai.z_ai"));
    k.push_back(count_key<std::size_t, &SimParams::t_total>("run.t_total"));
    k.push_back(count_key<std::size_t, &SimParams::equilibrium_window>("run.equilibrium_window"));
    k.push_back(count_key<std::uint64_t, &SimParams::seed>("run.seed"));
    return k;
  }();
  return keys;
}

inline const ParamKey* find_param_key(std::string_view path) {
  for (const auto& k : param_keys())
    if (k.path == path) return &k;
  return nullptr;
}

/// Sets one parameter by path. Throws Error(UnknownKey) for an unknown path
/// and ValidationError for a value of the wrong type. Ranges are not checked
/// here; call validate_params once all keys are applied.
inline void set_param(SimParams& p, std::string_view path, const ConfigScalar& value) {
  const ParamKey* key = find_param_key(path);
  if (!key) throw Error(ErrorKind::UnknownKey, "unknown parameter '" + std::string(path) + "'");
  key->set(p, value);
}

}  // namespace rogers
