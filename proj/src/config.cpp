#include "hwcns/config.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "hwcns/io.hpp"
#include "hwcns/problems.hpp"

namespace hwcns {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_double(std::string_view key, std::string_view v) {
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw ConfigError("'" + std::string(key) + "': expected a number, got '" + std::string(v) + "'");
  }
  return out;
}

long parse_long(std::string_view key, std::string_view v) {
  long out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw ConfigError("'" + std::string(key) + "': expected an integer, got '" + std::string(v) + "'");
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw ConfigError("'" + std::string(key) + "': expected true/false, got '" + std::string(v) + "'");
}

template <class E>
E parse_enum(std::string_view key, std::string_view v, std::initializer_list<std::pair<const char*, E>> options) {
  std::string known;
  for (const auto& [name, value] : options) {
    if (v == name) return value;
    known += (known.empty() ? "" : "|") + std::string(name);
  }
  throw ConfigError("'" + std::string(key) + "': expected one of " + known + ", got '" + std::string(v) + "'");
}

}  // namespace

std::string to_string(WeightMode v) { return v == WeightMode::linear ? "linear" : "nonlinear"; }
std::string to_string(DerivativeMode v) { return v == DerivativeMode::hermite ? "hermite" : "alt-low-order"; }
std::string to_string(Dissipation v) { return v == Dissipation::rusanov ? "rusanov" : "roe"; }
std::string to_string(Splitting v) { return v == Splitting::upwind ? "upwind" : "paper-absolute"; }
std::string to_string(Averaging v) { return v == Averaging::roe ? "roe" : "arithmetic"; }
std::string to_string(Variables v) {
  switch (v) {
    case Variables::characteristic: return "characteristic";
    case Variables::primitive: return "primitive";
    case Variables::conservative: return "conservative";
  }
  return "characteristic";
}

SchemeConfig RunConfig::scheme() const {
  SchemeConfig s;
  s.gas = GasModel(gamma);
  s.weights = weights;
  s.derivative = derivative;
  s.dissipation = dissipation;
  s.splitting = splitting;
  s.variables = variables;
  s.averaging = averaging;
  s.epsilon = epsilon;
  s.workers = workers;
  return s;
}

std::string RunConfig::resolved_output() const { return output.empty() ? problem + ".csv" : output; }
std::string RunConfig::resolved_manifest() const {
  return manifest.empty() ? resolved_output() + ".manifest" : manifest;
}

void RunConfig::validate() const {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigError("'cfl': must lie in (0, 1], got " + format_number(cfl));
  if (n != 0 && n < 11) throw ConfigError("'n': grids need at least 11 nodes, got " + std::to_string(n));
  if (!(gamma > 1.0)) throw ConfigError("'gamma': must exceed 1");
  if (!(epsilon > 0.0)) throw ConfigError("'epsilon': must be positive");
  if (t_end && !(*t_end >= 0.0)) throw ConfigError("'t_end': must be non-negative");
  if (workers < 1) throw ConfigError("'workers': must be at least 1");
  if (max_steps < 1) throw ConfigError("'max_steps': must be positive");
  const std::vector<std::string> names = builtin_names();
  if (std::find(names.begin(), names.end(), problem) == names.end()) {
    std::string known;
    for (const auto& name : names) known += (known.empty() ? "" : ", ") + name;
    throw ConfigError("'problem': unknown problem '" + problem + "' (known: " + known + ")");
  }
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "problem",   "n",          "cfl",      "t_end",    "gamma",     "weights", "derivative",
      "dissipation", "splitting", "variables", "averaging", "epsilon", "output",  "manifest",
      "vtk",       "snapshots",  "workers",  "max_steps"};
  return keys;
}

void apply_setting(RunConfig& cfg, std::string_view key, std::string_view raw) {
  const std::string_view v = trim(raw);
  if (key == "problem") {
    cfg.problem = std::string(v);
  } else if (key == "n") {
    cfg.n = static_cast<int>(parse_long(key, v));
  } else if (key == "cfl") {
    cfg.cfl = parse_double(key, v);
  } else if (key == "t_end") {
    if (v.empty() || v == "default") cfg.t_end.reset();
    else cfg.t_end = parse_double(key, v);
  } else if (key == "gamma") {
    cfg.gamma = parse_double(key, v);
  } else if (key == "weights") {
    cfg.weights = parse_enum<WeightMode>(key, v, {{"linear", WeightMode::linear}, {"nonlinear", WeightMode::nonlinear}});
  } else if (key == "derivative") {
    cfg.derivative = parse_enum<DerivativeMode>(
        key, v, {{"hermite", DerivativeMode::hermite}, {"alt-low-order", DerivativeMode::alt_low_order}});
  } else if (key == "dissipation") {
    cfg.dissipation = parse_enum<Dissipation>(key, v, {{"rusanov", Dissipation::rusanov}, {"roe", Dissipation::roe}});
  } else if (key == "splitting") {
    cfg.splitting =
        parse_enum<Splitting>(key, v, {{"upwind", Splitting::upwind}, {"paper-absolute", Splitting::paper_absolute}});
  } else if (key == "variables") {
    cfg.variables = parse_enum<Variables>(key, v,
                                          {{"characteristic", Variables::characteristic},
                                           {"primitive", Variables::primitive},
                                           {"conservative", Variables::conservative}});
  } else if (key == "averaging") {
    cfg.averaging = parse_enum<Averaging>(key, v, {{"roe", Averaging::roe}, {"arithmetic", Averaging::arithmetic}});
  } else if (key == "epsilon") {
    cfg.epsilon = parse_double(key, v);
  } else if (key == "output") {
    cfg.output = std::string(v);
  } else if (key == "manifest") {
    cfg.manifest = std::string(v);
  } else if (key == "vtk") {
    cfg.vtk = parse_bool(key, v);
  } else if (key == "snapshots") {
    cfg.snapshots.clear();
    std::string_view rest = v;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view item = trim(rest.substr(0, comma));
      if (!item.empty()) cfg.snapshots.push_back(parse_double(key, item));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  } else if (key == "workers") {
    cfg.workers = static_cast<int>(parse_long(key, v));
  } else if (key == "max_steps") {
    cfg.max_steps = parse_long(key, v);
  } else {
    throw ConfigError("unknown key '" + std::string(key) + "'");
  }
}

void parse_config_text(RunConfig& cfg, std::string_view text, std::string_view source) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const std::string where = std::string(source) + ":" + std::to_string(line_no) + ": ";
    if (eq == std::string_view::npos) throw ConfigError(where + "expected 'key = value', got '" + std::string(line) + "'");
    const std::string_view key = trim(line.substr(0, eq));
    try {
      apply_setting(cfg, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(where + e.what());
    }
  }
}

std::map<std::string, std::string> config_values(const RunConfig& cfg) {
  std::map<std::string, std::string> m;
  m["problem"] = cfg.problem;
  m["n"] = std::to_string(cfg.n);
  m["cfl"] = format_number(cfg.cfl);
  m["t_end"] = cfg.t_end ? format_number(*cfg.t_end) : "default";
  m["gamma"] = format_number(cfg.gamma);
  m["weights"] = to_string(cfg.weights);
  m["derivative"] = to_string(cfg.derivative);
  m["dissipation"] = to_string(cfg.dissipation);
  m["splitting"] = to_string(cfg.splitting);
  m["variables"] = to_string(cfg.variables);
  m["averaging"] = to_string(cfg.averaging);
  m["epsilon"] = format_number(cfg.epsilon);
  m["output"] = cfg.output;
  m["manifest"] = cfg.manifest;
  m["vtk"] = cfg.vtk ? "true" : "false";
  std::string snaps;
  for (double t : cfg.snapshots) snaps += (snaps.empty() ? "" : ",") + format_number(t);
  m["snapshots"] = snaps;
  m["workers"] = std::to_string(cfg.workers);
  m["max_steps"] = std::to_string(cfg.max_steps);
  return m;
}

std::string serialize_config(const RunConfig& cfg) {
  const auto values = config_values(cfg);
  std::ostringstream os;
  for (const auto& key : config_keys()) os << key << " = " << values.at(key) << '\n';
  return os.str();
}

}  // namespace hwcns
