#include "lkweld/scenario.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "lkweld/errors.hpp"

namespace lkweld {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

double parse_real(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v == "inf" || v == "infinity") return std::numeric_limits<double>::infinity();
  char* end = nullptr;
  const double d = std::strtod(v.c_str(), &end);
  if (v.empty() || end != v.c_str() + v.size()) {
    throw InvalidArgument("config key '" + key + "': not a number: '" + v + "'");
  }
  return d;
}

long parse_int(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  char* end = nullptr;
  const long i = std::strtol(v.c_str(), &end, 10);
  if (v.empty() || end != v.c_str() + v.size()) {
    throw InvalidArgument("config key '" + key + "': not an integer: '" + v + "'");
  }
  return i;
}

bool parse_bool(const std::string& key, const std::string& value) {
  std::string v = trim(value);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
  if (v == "0" || v == "false" || v == "no" || v == "off") return false;
  throw InvalidArgument("config key '" + key + "': not a boolean: '" + v + "'");
}

void require_decreasing(const std::vector<double>& v, const char* what) {
  if (v.size() < 3) {
    throw InvalidArgument(std::string(what) + " needs at least 3 values for order fitting");
  }
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0)) throw InvalidArgument(std::string(what) + " values must be positive");
    if (i > 0 && !(v[i] < v[i - 1])) {
      throw InvalidArgument(std::string(what) + " must be strictly decreasing");
    }
  }
}

}  // namespace

const std::vector<std::pair<std::string, std::string>>& scenario_keys() {
  static const std::vector<std::pair<std::string, std::string>> keys{
      {"scenario.name", "label used for output file names"},
      {"scenario.driving", "driving function, e.g. p = 1 + (0.0,0.3)*z^1"},
      {"scenario.horizon", "time horizon T of the driving function (default inf)"},
      {"scenario.t_list", "decreasing evolution times (default 0.08, 0.04, 0.02, 0.01)"},
      {"scenario.t", "time for single-curve commands (default: first of t_list)"},
      {"scenario.delta", "delta shape for welding runs, e.g. 1*cos(psi) + 0.5*sin(3*psi)"},
      {"scenario.eps_list", "decreasing amplitudes (default 0.04, 0.02, 0.01, 0.005)"},
      {"scenario.eps", "amplitude for single-curve commands (default: first of eps_list)"},
      {"numerics.grid", "boundary / oracle grid size, power of two >= 16 (default 512)"},
      {"numerics.steps", "RK4 steps per evolution, >= 64 (default 256)"},
      {"numerics.tol", "Theodorsen fixed-point tolerance (default 1e-12)"},
      {"numerics.max_iter", "Theodorsen iteration cap (default 200)"},
      {"output.dir", "output directory (default lkweld_out)"},
      {"output.plots", "write SVG plots (default false)"},
      {"output.parallel", "run t-values concurrently (default false)"},
  };
  return keys;
}

ConfigMap parse_config_text(std::string_view text) {
  ConfigMap out;
  std::string section = "scenario";
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '[') {
      if (t.back() != ']' || t.size() < 3) {
        throw InvalidArgument("config line " + std::to_string(lineno) + ": malformed section header");
      }
      section = trim(std::string_view(t).substr(1, t.size() - 2));
      continue;
    }
    const auto eq = t.find('=');
    if (eq == std::string::npos) {
      throw InvalidArgument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(t).substr(0, eq));
    if (key.empty()) throw InvalidArgument("config line " + std::to_string(lineno) + ": empty key");
    out[section + "." + key] = trim(std::string_view(t).substr(eq + 1));
  }
  return out;
}

ConfigMap read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoFailure("cannot read config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::vector<double> parse_number_list(std::string_view text) {
  std::vector<double> out;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) out.push_back(parse_real("list", item));
  return out;
}

void apply_env_overrides(ConfigMap& config, EnvLookup lookup) {
  if (lookup == nullptr) lookup = [](const char* name) -> const char* { return std::getenv(name); };
  for (const auto& [full, help] : scenario_keys()) {
    const std::string shortname = full.substr(full.find('.') + 1);
    std::string env = "LKWELD_";
    for (char c : shortname) env += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    const char* v = lookup(env.c_str());
    if (v == nullptr && shortname == "dir") v = lookup("LKWELD_OUT");
    if (v != nullptr) config[full] = v;
  }
}

Scenario scenario_from_config(const ConfigMap& config) {
  Scenario s;
  for (const auto& [key, value] : config) {
    if (key == "scenario.name") s.name = value;
    else if (key == "scenario.driving") s.driving_text = value;
    else if (key == "scenario.horizon") s.horizon = parse_real(key, value);
    else if (key == "scenario.t_list") s.t_list = parse_number_list(value);
    else if (key == "scenario.t") s.single_t = parse_real(key, value);
    else if (key == "scenario.delta") {
      s.delta_text = value;
      s.delta_shape = parse_delta_shape(value);
    }
    else if (key == "scenario.eps_list") s.eps_list = parse_number_list(value);
    else if (key == "scenario.eps") s.single_eps = parse_real(key, value);
    else if (key == "numerics.grid") s.grid = static_cast<std::size_t>(std::max(0L, parse_int(key, value)));
    else if (key == "numerics.steps") s.steps = static_cast<std::size_t>(std::max(0L, parse_int(key, value)));
    else if (key == "numerics.tol") s.tol = parse_real(key, value);
    else if (key == "numerics.max_iter") s.max_iter = static_cast<int>(parse_int(key, value));
    else if (key == "output.dir") s.out_dir = value;
    else if (key == "output.plots") s.plots = parse_bool(key, value);
    else if (key == "output.parallel") s.parallel = parse_bool(key, value);
    else throw InvalidArgument("unknown config key '" + key + "'");
  }
  s.driving = parse_driving(s.driving_text, s.horizon);
  validate_scenario(s);
  return s;
}

void validate_scenario(const Scenario& s) {
  require_grid_size(s.grid);
  if (s.steps < 64) throw InvalidArgument("numerics.steps must be >= 64");
  if (!(s.tol > 0.0)) throw InvalidArgument("numerics.tol must be positive");
  if (s.max_iter < 1) throw InvalidArgument("numerics.max_iter must be >= 1");
  require_decreasing(s.t_list, "t_list");
  require_decreasing(s.eps_list, "eps_list");
  if (!(s.t_list.front() < s.horizon)) throw InvalidArgument("t_list exceeds the driving horizon");
  if (s.single_t && !(*s.single_t >= 0.0 && *s.single_t < s.horizon)) {
    throw InvalidArgument("t must lie in [0, horizon)");
  }
}

}  // namespace lkweld
