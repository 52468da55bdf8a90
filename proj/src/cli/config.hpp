#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "floq/errors.hpp"

namespace floq::cli {

// Values accepted in scenario files:
//   scalar   key = 1.25
//   list     key = 0.3, 1.2, 3
//   range    key = -4 : 4 : 401        (start : stop : count, inclusive)
//   text     key = fig3.csv
struct ConfigValue {
  enum class Kind { scalar, list, range, text };
  Kind kind = Kind::scalar;
  double scalar = 0.0;
  std::vector<double> list;
  double start = 0.0, stop = 0.0;
  long count = 0;
  std::string text;

  bool operator==(const ConfigValue&) const = default;

  // expand to the sampled grid (scalar -> 1 point, list -> entries, range -> linspace)
  std::vector<double> points() const;
};

struct ScenarioConfig {
  std::string scenario;
  std::map<std::string, ConfigValue> values;

  bool operator==(const ScenarioConfig&) const = default;

  bool has(const std::string& key) const { return values.count(key) > 0; }
  double scalar(const std::string& key) const;
  long integer(const std::string& key) const;
  std::vector<double> points(const std::string& key) const;
  std::vector<long> integers(const std::string& key) const;
  std::string text(const std::string& key) const;
};

// Strict parser: unknown keys, malformed values, or a missing/unknown
// scenario raise config_error with the offending line number.
ScenarioConfig parse_config(const std::string& text);
ScenarioConfig load_config_file(const std::string& path);

// Canonical serialization; parse(serialize(parse(x))) == parse(x).
std::string serialize_config(const ScenarioConfig& cfg);

// Keys (with defaults filled in) the given scenario accepts; used by the
// parser for strict validation and by serialize_config for stable order.
const std::map<std::string, ConfigValue>& scenario_defaults(const std::string& scenario);

std::vector<std::string> known_scenarios();

std::string format_double(double x);  // 17 significant digits, round-trip exact

}  // namespace floq::cli
