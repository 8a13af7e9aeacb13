#pragma once

// Scenario files: a small TOML-style subset.
//
//   # comment
//   [environment]
//   u = 0.01
//   [learning]
//   mode = "AI_CRITICAL"
//   [sweep]
//   axis1 = "environment.u"
//   axis1_values = [0.01, 0.1, 0.5]
//
// Sections: environment, learning, evolution, ai, run and (optionally) sweep.
// A file with a [sweep] section describes a SweepSpec, otherwise a SimParams.

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rogers/error.hpp"
#include "rogers/model.hpp"
#include "rogers/params_io.hpp"
#include "rogers/sweeps.hpp"

namespace rogers {

using ConfigValue = std::variant<ConfigScalar, std::vector<ConfigScalar>>;

struct ConfigEntry {
  std::string section;
  std::string key;
  ConfigValue value;
  std::size_t line = 0;

  std::string path() const { return section + "." + key; }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] inline void parse_fail(std::size_t line, const std::string& what) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + what);
}

inline std::string_view strip_comment(std::string_view s) {
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '"') in_string = !in_string;
    else if (s[i] == '#' && !in_string) return s.substr(0, i);
  }
  return s;
}

inline ConfigScalar parse_scalar(std::string_view tok, std::size_t line) {
  tok = trim(tok);
  if (tok.empty()) parse_fail(line, "missing value");
  if (tok.front() == '"') {
    if (tok.size() < 2 || tok.back() != '"') parse_fail(line, "unterminated string");
    const auto body = tok.substr(1, tok.size() - 2);
    if (body.find('"') != std::string_view::npos) parse_fail(line, "stray quote in string");
    return std::string(body);
  }
  if (tok == "true") return true;
  if (tok == "false") return false;
  std::string_view num = tok;
  if (!num.empty() && num.front() == '+') num.remove_prefix(1);
  const char* first = num.data();
  const char* last = num.data() + num.size();
  if (num.find_first_of(".eE") == std::string_view::npos &&
      num.find("inf") == std::string_view::npos && num.find("nan") == std::string_view::npos) {
    std::int64_t i = 0;
    const auto res = std::from_chars(first, last, i);
    if (res.ec == std::errc{} && res.ptr == last) return i;
    parse_fail(line, "malformed integer '" + std::string(tok) + "'");
  }
  double d = 0.0;
  const auto res = std::from_chars(first, last, d);
  if (res.ec != std::errc{} || res.ptr != last) parse_fail(line, "malformed value '" + std::string(tok) + "'");
  return d;
}

inline ConfigValue parse_value(std::string_view tok, std::size_t line) {
  tok = trim(tok);
  if (tok.empty() || tok.front() != '[') return parse_scalar(tok, line);
  if (tok.back() != ']') parse_fail(line, "unterminated array");
  std::vector<ConfigScalar> items;
  auto body = trim(tok.substr(1, tok.size() - 2));
  while (!body.empty()) {
    std::size_t end = 0;
    bool in_string = false;
    while (end < body.size() && (in_string || body[end] != ',')) {
      if (body[end] == '"') in_string = !in_string;
      ++end;
    }
    items.push_back(parse_scalar(body.substr(0, end), line));
    body = end < body.size() ? trim(body.substr(end + 1)) : std::string_view{};
  }
  return items;
}

inline bool is_known_section(std::string_view s) {
  for (const std::string_view known : {"environment", "learning", "evolution", "ai", "run", "sweep"})
    if (s == known) return true;
  return false;
}

}  // namespace detail

/// Tokenizes a config document. Throws Error(Parse) on malformed input,
/// including an empty document, and Error(UnknownKey) on unknown sections.
inline std::vector<ConfigEntry> parse_config_entries(std::string_view text) {
  using namespace detail;
  std::vector<ConfigEntry> entries;
  std::string section;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(strip_comment(raw));
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') parse_fail(line_no, "malformed section header");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (!is_known_section(section))
        throw Error(ErrorKind::UnknownKey, "line " + std::to_string(line_no) + ": unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) parse_fail(line_no, "expected 'key = value'");
    if (section.empty()) parse_fail(line_no, "key outside of any section");
    ConfigEntry e;
    e.section = section;
    e.key = std::string(trim(line.substr(0, eq)));
    if (e.key.empty()) parse_fail(line_no, "empty key");
    e.value = parse_value(line.substr(eq + 1), line_no);
    e.line = line_no;
    for (const auto& prior : entries)
      if (prior.path() == e.path()) parse_fail(line_no, "duplicate key '" + e.path() + "'");
    entries.push_back(std::move(e));
  }
  if (entries.empty()) throw Error(ErrorKind::Parse, "configuration is empty");
  return entries;
}

using Config = std::variant<SimParams, SweepSpec>;

namespace detail {

inline const ConfigScalar& scalar_of(const ConfigEntry& e) {
  const auto* s = std::get_if<ConfigScalar>(&e.value);
  if (!s) throw ValidationError(e.path(), "expected a scalar, not an array");
  return *s;
}

inline std::vector<ConfigScalar> array_of(const ConfigEntry& e) {
  if (const auto* a = std::get_if<std::vector<ConfigScalar>>(&e.value)) return *a;
  throw ValidationError(e.path(), "expected an array");
}

}  // namespace detail

/// Parses and validates a scenario (SimParams) or sweep (SweepSpec).
inline Config parse_config(std::string_view text, const SimParams& defaults = {}) {
  const auto entries = parse_config_entries(text);
  SimParams params = defaults;
  bool is_sweep = false;
  std::map<std::string, const ConfigEntry*> sweep_keys;
  for (const auto& e : entries) {
    if (e.section == "sweep") {
      is_sweep = true;
      static constexpr std::string_view kSweepKeys[] = {"axis1", "axis1_values", "axis2", "axis2_values",
                                                        "seeds_per_cell"};
      if (std::find(std::begin(kSweepKeys), std::end(kSweepKeys), e.key) == std::end(kSweepKeys))
        throw Error(ErrorKind::UnknownKey, "line " + std::to_string(e.line) + ": unknown key '" + e.path() + "'");
      sweep_keys[e.key] = &e;
      continue;
    }
    const ParamKey* key = find_param_key(e.path());
    if (!key)
      throw Error(ErrorKind::UnknownKey, "line " + std::to_string(e.line) + ": unknown key '" + e.path() + "'");
    key->set(params, detail::scalar_of(e));
  }
  validate_params(params);
  if (!is_sweep) return params;

  SweepSpec spec;
  spec.base = params;
  if (const auto it = sweep_keys.find("seeds_per_cell"); it != sweep_keys.end())
    spec.seeds_per_cell = detail::as_count("sweep.seeds_per_cell", detail::scalar_of(*it->second));
  for (const std::string axis : {"axis1", "axis2"}) {
    const auto name = sweep_keys.find(axis);
    const auto values = sweep_keys.find(axis + "_values");
    if (name == sweep_keys.end() && values == sweep_keys.end()) continue;
    if (name == sweep_keys.end() || values == sweep_keys.end())
      throw ValidationError("sweep." + axis, "needs both '" + axis + "' and '" + axis + "_values'");
    if (axis == "axis2" && spec.axes.empty())
      throw ValidationError("sweep.axis2", "axis2 given without axis1");
    spec.axes.push_back({std::string(detail::as_string("sweep." + axis, detail::scalar_of(*name->second))),
                         detail::array_of(*values->second)});
  }
  validate_sweep(spec);
  return spec;
}

/// Reads a config file. Throws Error(Io) if it cannot be read.
inline Config load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read config '" + path.string() + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

/// Canonical text for a scenario; parse_config(to_config_text(p)) == p.
inline std::string to_config_text(const SimParams& p) {
  std::string out;
  std::string current;
  for (const auto& key : param_keys()) {
    if (!key.render) continue;
    const auto dot = key.path.find('.');
    const auto section = key.path.substr(0, dot);
    if (section != current) {
      if (!out.empty()) out += '\n';
      out += "[" + std::string(section) + "]\n";
      current = std::string(section);
    }
    out += std::string(key.path.substr(dot + 1)) + " = " + key.render(p) + "\n";
  }
  return out;
}

inline std::string to_config_text(const SweepSpec& spec) {
  const auto render = [](const ConfigScalar& v) {
    if (const auto* d = std::get_if<double>(&v)) return format_double_exact(*d);
    if (const auto* s = std::get_if<std::string>(&v)) return "\"" + *s + "\"";
    return to_text(v);
  };
  std::string out = to_config_text(spec.base);
  out += "\n[sweep]\nseeds_per_cell = " + std::to_string(spec.seeds_per_cell) + "\n";
  for (std::size_t i = 0; i < spec.axes.size(); ++i) {
    const auto n = std::to_string(i + 1);
    out += "axis" + n + " = \"" + spec.axes[i].path + "\"\n";
    out += "axis" + n + "_values = [";
    for (std::size_t k = 0; k < spec.axes[i].values.size(); ++k)
      out += (k ? ", " : "") + render(spec.axes[i].values[k]);
    out += "]\n";
  }
  return out;
}

}  // namespace rogers
