// Run configuration: flat "key = value" text files plus command-line
// overrides, both funnelled through apply_setting().
#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hwcns/spatial_operator.hpp"

namespace hwcns {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RunConfig {
  std::string problem = "sod";
  int n = 0;  ///< nodes per axis; 0 selects the problem default
  double cfl = 0.5;
  std::optional<double> t_end;  ///< unset: problem default
  double gamma = 1.4;
  WeightMode weights = WeightMode::nonlinear;
  DerivativeMode derivative = DerivativeMode::hermite;
  Dissipation dissipation = Dissipation::rusanov;
  Splitting splitting = Splitting::upwind;
  Variables variables = Variables::characteristic;
  Averaging averaging = Averaging::roe;
  double epsilon = kDefaultEpsilon;
  std::string output;    ///< empty: "<problem>.csv"
  std::string manifest;  ///< empty: output + ".manifest"
  bool vtk = false;
  std::vector<double> snapshots;
  int workers = 1;
  long max_steps = 10'000'000;

  SchemeConfig scheme() const;
  std::string resolved_output() const;
  std::string resolved_manifest() const;
  void validate() const;
};

/// Keys accepted by apply_setting, in manifest order.
const std::vector<std::string>& config_keys();

/// Sets one field from its textual value. Throws ConfigError naming the key.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Parses "key = value" lines ('#' starts a comment) on top of `cfg`.
/// Errors carry the 1-based line number and the key.
void parse_config_text(RunConfig& cfg, std::string_view text, std::string_view source = "config");

/// Canonical textual value of every key, round-trippable through apply_setting.
std::map<std::string, std::string> config_values(const RunConfig& cfg);

/// Full "key = value" listing, one per line, in config_keys() order.
std::string serialize_config(const RunConfig& cfg);

std::string to_string(WeightMode v);
std::string to_string(DerivativeMode v);
std::string to_string(Dissipation v);
std::string to_string(Splitting v);
std::string to_string(Variables v);
std::string to_string(Averaging v);

}  // namespace hwcns
