#include "cli/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "floq/numeric.hpp"

namespace floq::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool parse_double(const std::string& s, double& out) {
  try {
    std::size_t pos = 0;
    out = std::stod(s, &pos);
    return pos == s.size();
  } catch (...) {
    return false;
  }
}

ConfigValue parse_value(const std::string& raw, int line) {
  const std::string s = trim(raw);
  ConfigValue v;
  if (s.find(':') != std::string::npos) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(trim(item));
    double start = 0, stop = 0, cnt = 0;
    if (parts.size() != 3 || !parse_double(parts[0], start) || !parse_double(parts[1], stop) ||
        !parse_double(parts[2], cnt) || cnt < 1 || cnt != std::floor(cnt))
      throw config_error("line " + std::to_string(line) + ": range must be start : stop : count");
    v.kind = ConfigValue::Kind::range;
    v.start = start;
    v.stop = stop;
    v.count = static_cast<long>(cnt);
    return v;
  }
  if (s.find(',') != std::string::npos) {
    std::vector<double> vals;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
      double x = 0;
      if (!parse_double(trim(item), x))
        throw config_error("line " + std::to_string(line) + ": bad list entry '" + trim(item) + "'");
      vals.push_back(x);
    }
    v.kind = ConfigValue::Kind::list;
    v.list = std::move(vals);
    return v;
  }
  double x = 0;
  if (parse_double(s, x)) {
    v.kind = ConfigValue::Kind::scalar;
    v.scalar = x;
    return v;
  }
  v.kind = ConfigValue::Kind::text;
  v.text = s;
  return v;
}

ConfigValue scalar_v(double x) {
  ConfigValue v;
  v.kind = ConfigValue::Kind::scalar;
  v.scalar = x;
  return v;
}

ConfigValue list_v(std::vector<double> xs) {
  ConfigValue v;
  v.kind = ConfigValue::Kind::list;
  v.list = std::move(xs);
  return v;
}

ConfigValue range_v(double a, double b, long n) {
  ConfigValue v;
  v.kind = ConfigValue::Kind::range;
  v.start = a;
  v.stop = b;
  v.count = n;
  return v;
}

ConfigValue text_v(std::string s) {
  ConfigValue v;
  v.kind = ConfigValue::Kind::text;
  v.text = std::move(s);
  return v;
}

std::map<std::string, std::map<std::string, ConfigValue>> build_schemas() {
  std::map<std::string, std::map<std::string, ConfigValue>> m;
  // Angles in radians, frequencies/energies in the same inverse-time unit as
  // the coupling J (hbar = 1); pulse areas dimensionless.
  m["single-qubit-quasienergy"] = {
      {"T", scalar_v(1.0)},
      {"OmegaT", list_v({2.0, 1.0, 0.5, 0.05})},
      {"theta", scalar_v(0.0)},
      {"F1", range_v(0.0, four_pi, 401)},
      {"out", text_v("single_qubit_quasienergy.csv")},
  };
  m["ramsey"] = {
      {"omega0", scalar_v(1.0)},
      {"periods_per_T", scalar_v(100)},
      {"nu1", scalar_v(two_pi / 3)},
      {"sigma_over_T", scalar_v(0.05)},
      {"k_max", scalar_v(9)},
      {"steps_per_period", scalar_v(2500)},
      {"out", text_v("ramsey.csv")},
  };
  m["resonant-pulse"] = {
      {"omega0", scalar_v(1.0)},
      {"periods_per_T", scalar_v(100)},
      {"F1", scalar_v(pi)},
      {"sigma_over_T", scalar_v(0.05)},
      {"k_max", scalar_v(9)},
      {"steps_per_period", scalar_v(2500)},
      {"out", text_v("resonant_pulse.csv")},
  };
  m["two-qubit-crossing"] = {
      {"J", scalar_v(1.0)},
      {"mu", scalar_v(0.6)},
      {"F", range_v(0.0, 2.0, 401)},
      {"k_max", scalar_v(8)},
      {"out", text_v("two_qubit_crossing.csv")},
  };
  m["chain-ed"] = {
      {"L", scalar_v(6)},
      {"omega0", scalar_v(100.0)},
      {"omegaF", scalar_v(198.8)},
      {"Jxx0", scalar_v(0.6)},
      {"Jyy", scalar_v(0.4)},
      {"F_amp", scalar_v(0.8)},
      {"out", text_v("chain_ed.csv")},
  };
  m["kitaev-fig3"] = {
      {"L", scalar_v(16)},
      {"J", scalar_v(1.0)},
      {"F_over_J", list_v({0.3, 1.2, 3.0})},
      {"mu_over_J", range_v(-4.0, 4.0, 401)},
      {"out", text_v("kitaev_fig3.csv")},
  };
  m["gap-scan"] = {
      {"J", scalar_v(1.0)},
      {"F", scalar_v(1.2)},
      {"mu", scalar_v(0.5)},
      {"L_list", list_v({8, 10, 12, 14, 16, 18, 20, 22, 24})},
      {"out", text_v("gap_scan.csv")},
  };
  m["disorder"] = {
      {"L", scalar_v(16)},
      {"J", scalar_v(1.0)},
      {"F", scalar_v(1.0)},
      {"mu", scalar_v(0.5)},
      {"site_sigma", scalar_v(0.1)},
      {"bond_sigma", scalar_v(0.0)},
      {"seeds", scalar_v(50)},          // count; seeds are 1..count
      {"seed_list", list_v({})},        // explicit list overrides `seeds`
      {"out", text_v("disorder.csv")},
  };
  return m;
}

const std::map<std::string, std::map<std::string, ConfigValue>>& schemas() {
  static const auto s = build_schemas();
  return s;
}

}  // namespace

std::vector<double> ConfigValue::points() const {
  switch (kind) {
    case Kind::scalar: return {scalar};
    case Kind::list: return list;
    case Kind::range: {
      std::vector<double> out;
      out.reserve(count);
      if (count == 1) {
        out.push_back(start);
      } else {
        for (long i = 0; i < count; ++i)
          out.push_back(start + (stop - start) * static_cast<double>(i) /
                                    static_cast<double>(count - 1));
      }
      return out;
    }
    case Kind::text: throw config_error("text value has no numeric points");
  }
  return {};
}

double ScenarioConfig::scalar(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end() || it->second.kind != ConfigValue::Kind::scalar)
    throw config_error("scenario '" + scenario + "': missing scalar key '" + key + "'");
  return it->second.scalar;
}

long ScenarioConfig::integer(const std::string& key) const {
  const double x = scalar(key);
  if (x != std::floor(x)) throw config_error("key '" + key + "' must be an integer");
  return static_cast<long>(x);
}

std::vector<double> ScenarioConfig::points(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) throw config_error("missing key '" + key + "'");
  return it->second.points();
}

std::vector<long> ScenarioConfig::integers(const std::string& key) const {
  std::vector<long> out;
  for (const double x : points(key)) {
    if (x != std::floor(x)) throw config_error("key '" + key + "' must hold integers");
    out.push_back(static_cast<long>(x));
  }
  return out;
}

std::string ScenarioConfig::text(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) throw config_error("missing key '" + key + "'");
  if (it->second.kind == ConfigValue::Kind::text) return it->second.text;
  throw config_error("key '" + key + "' must be text");
}

const std::map<std::string, ConfigValue>& scenario_defaults(const std::string& scenario) {
  const auto it = schemas().find(scenario);
  if (it == schemas().end()) throw config_error("unknown scenario '" + scenario + "'");
  return it->second;
}

std::vector<std::string> known_scenarios() {
  std::vector<std::string> out;
  for (const auto& [name, keys] : schemas()) out.push_back(name);
  return out;
}

ScenarioConfig parse_config(const std::string& text) {
  ScenarioConfig cfg;
  std::map<std::string, std::pair<ConfigValue, int>> seen;  // value + line
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error("line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string val = trim(line.substr(eq + 1));
    if (key.empty() || val.empty())
      throw config_error("line " + std::to_string(lineno) + ": empty key or value");
    if (seen.count(key))
      throw config_error("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    seen[key] = {parse_value(val, lineno), lineno};
  }

  const auto sc = seen.find("scenario");
  if (sc == seen.end()) throw config_error("config must set 'scenario'");
  if (sc->second.first.kind != ConfigValue::Kind::text)
    throw config_error("line " + std::to_string(sc->second.second) + ": scenario must be a name");
  cfg.scenario = sc->second.first.text;
  seen.erase("scenario");

  const auto& schema = scenario_defaults(cfg.scenario);  // throws on unknown scenario
  for (const auto& [key, vl] : seen) {
    if (!schema.count(key))
      throw config_error("line " + std::to_string(vl.second) + ": unknown key '" + key +
                         "' for scenario '" + cfg.scenario + "'");
    cfg.values[key] = vl.first;
  }
  for (const auto& [key, def] : schema) {
    if (!cfg.values.count(key)) cfg.values[key] = def;
  }
  return cfg;
}

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string serialize_config(const ScenarioConfig& cfg) {
  const auto& schema = scenario_defaults(cfg.scenario);
  std::ostringstream out;
  out << "scenario = " << cfg.scenario << "\n";
  for (const auto& [key, v] : cfg.values) {  // std::map iterates in key order
    const auto def = schema.find(key);
    if (def != schema.end() && def->second == v) continue;  // defaults are implicit
    out << key << " = ";
    switch (v.kind) {
      case ConfigValue::Kind::scalar: out << format_double(v.scalar); break;
      case ConfigValue::Kind::list:
        for (std::size_t i = 0; i < v.list.size(); ++i)
          out << (i ? ", " : "") << format_double(v.list[i]);
        break;
      case ConfigValue::Kind::range:
        out << format_double(v.start) << " : " << format_double(v.stop) << " : " << v.count;
        break;
      case ConfigValue::Kind::text: out << v.text; break;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace floq::cli
