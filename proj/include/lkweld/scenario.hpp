#pragma once

#include <filesystem>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lkweld/caratheodory.hpp"
#include "lkweld/expressions.hpp"

namespace lkweld {

inline const std::vector<double> kDefaultTimes{0.08, 0.04, 0.02, 0.01};
inline const std::vector<double> kDefaultEpsilons{0.04, 0.02, 0.01, 0.005};

// Line-oriented "key = value" text with optional "[section]" headers and
// '#' comments. Keys are stored as "section.key" ("key" before any header).
using ConfigMap = std::map<std::string, std::string>;

ConfigMap parse_config_text(std::string_view text);
ConfigMap read_config_file(const std::filesystem::path& path);

struct Scenario {
  std::string name = "scenario";
  std::string driving_text = "p = 1";
  DrivingFunction driving;
  double horizon = std::numeric_limits<double>::infinity();
  std::vector<double> t_list = kDefaultTimes;

  std::optional<DeltaShape> delta_shape;
  std::string delta_text;
  std::vector<double> eps_list = kDefaultEpsilons;

  std::size_t grid = 512;
  std::size_t steps = 256;
  double tol = 1e-12;
  int max_iter = 200;

  std::filesystem::path out_dir = "lkweld_out";
  bool plots = false;
  bool parallel = false;

  // Time (or epsilon) used by single-curve commands: the first list entry
  // unless overridden by "t" / "eps".
  std::optional<double> single_t;
  std::optional<double> single_eps;

  double time_point() const { return single_t.value_or(t_list.front()); }
  double eps_point() const { return single_eps.value_or(eps_list.front()); }
};

// Builds a scenario from config entries (unknown keys are rejected), then
// validates it. Throws InvalidArgument / ParseError.
Scenario scenario_from_config(const ConfigMap& config);

// Checks the invariants the verification runs rely on: lists strictly
// decreasing and positive, at least three values, times inside the
// horizon, power-of-two grid, steps >= 64.
void validate_scenario(const Scenario& s);

// Documented keys, for --help output and README.
const std::vector<std::pair<std::string, std::string>>& scenario_keys();

std::vector<double> parse_number_list(std::string_view text);

// Applies LKWELD_<KEY> environment overrides (KEY = upper-cased short key
// name, e.g. LKWELD_GRID, LKWELD_T_LIST; LKWELD_OUT aliases LKWELD_DIR).
// lookup returns nullptr for unset variables; defaults to std::getenv.
using EnvLookup = const char* (*)(const char*);
void apply_env_overrides(ConfigMap& config, EnvLookup lookup = nullptr);

}  // namespace lkweld
