#include "app/config.hpp"

#include "rhoqes/errors.hpp"

#include <fstream>
#include <set>

namespace rhoqes::app {

namespace {

using nlohmann::json;

template <class T>
T get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config key '") + key + "': " + e.what());
  }
}

// Accepts "p/q" strings and plain numbers.
std::string rational_text(const json& v, const std::string& key) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ConfigError("config key '" + key + "' must be a \"p/q\" string or an integer");
}

template <std::size_t K>
std::array<std::string, K> rational_array(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_array() || v.size() != K)
    throw ConfigError(std::string("config key '") + key + "' must be an array of " + std::to_string(K));
  std::array<std::string, K> out;
  for (std::size_t i = 0; i < K; ++i) out[i] = rational_text(v[i], key);
  return out;
}

Rational positive(const std::string& s, const char* what) {
  const Rational r = parse_rational(s);
  if (r <= 0) throw ConfigError(std::string(what) + " must be positive");
  return r;
}

int required_infinite(Variant v) {
  switch (v) {
    case Variant::atomic: return 1;
    case Variant::molecular: return 2;
    case Variant::three_center: return 3;
    default: return 0;
  }
}

}  // namespace

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::set<std::string> known{"masses", "d",       "omega",     "gauge",    "variant",
                                           "N",      "out",     "format",    "seed",     "p_representation",
                                           "direction", "nu",   "point",     "classical", "electron_masses"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw ConfigError("unknown config key '" + key + "'");

  RunConfig c;
  if (j.contains("masses")) c.masses = rational_array<4>(j, "masses");
  if (j.contains("d")) c.d = rational_text(j["d"], "d");
  if (j.contains("omega")) c.omega = rational_text(j["omega"], "omega");
  if (j.contains("gauge")) c.gauge = rational_array<6>(j, "gauge");
  if (j.contains("variant")) c.variant = get<std::string>(j, "variant");
  if (j.contains("N")) c.N = get<int>(j, "N");
  if (j.contains("out")) c.out = get<std::string>(j, "out");
  if (j.contains("format")) c.format = get<std::string>(j, "format");
  if (j.contains("seed")) c.seed = get<std::uint64_t>(j, "seed");
  if (j.contains("p_representation")) c.p_representation = get<bool>(j, "p_representation");
  if (j.contains("direction")) c.direction = get<std::string>(j, "direction");
  if (j.contains("nu")) c.nu = rational_array<6>(j, "nu");
  if (j.contains("point")) c.point = rational_array<6>(j, "point");
  if (j.contains("classical")) c.classical = rational_array<6>(j, "classical");
  if (j.contains("electron_masses")) {
    const json& v = j["electron_masses"];
    if (!v.is_array()) throw ConfigError("config key 'electron_masses' must be an array");
    c.electron_masses.clear();
    for (const auto& x : v) c.electron_masses.push_back(rational_text(x, "electron_masses"));
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  return parse_config(j);
}

json to_json(const RunConfig& c) {
  json j;
  j["masses"] = c.masses;
  j["d"] = c.d;
  j["omega"] = c.omega;
  if (c.gauge) j["gauge"] = *c.gauge;
  j["variant"] = c.variant;
  j["N"] = c.N;
  if (!c.out.empty()) j["out"] = c.out;
  j["format"] = c.format;
  j["seed"] = c.seed;
  j["p_representation"] = c.p_representation;
  j["direction"] = c.direction;
  if (c.nu) j["nu"] = *c.nu;
  if (c.point) j["point"] = *c.point;
  j["classical"] = c.classical;
  j["electron_masses"] = c.electron_masses;
  return j;
}

Rational parse_mass_inverse(const std::string& s) {
  if (s == "inf") return 0;
  return 1 / positive(s, "mass");
}

Model resolve(const RunConfig& c) {
  Model m;
  m.variant = parse_variant(c.variant);
  if (c.format != "json" && c.format != "csv") throw ConfigError("format must be json or csv");

  int inf = 0;
  for (int i = 0; i < 4; ++i) {
    m.masses.inv_m[i] = parse_mass_inverse(c.masses[i]);
    if (m.masses.infinite(i)) ++inf;
  }
  const int need = required_infinite(m.variant);
  if (inf != need)
    throw ConfigError("variant " + c.variant + " needs " + std::to_string(need) + " infinite masses, got " +
                      std::to_string(inf));
  for (int i = 0; i < need; ++i)
    if (!m.masses.infinite(i)) throw ConfigError("infinite masses must come first (m1, m2, m3)");
  if (m.variant != Variant::generic) {
    m.m = m.masses.mass(need);
    for (int i = need; i < 4; ++i)
      if (m.masses.mass(i) != m.m) throw ConfigError("variant " + c.variant + " needs equal finite masses");
  }

  m.d = positive(c.d, "d");
  m.gauge.omega = positive(c.omega, "omega");
  m.special = make_model(m.variant, m.masses, m.m);
  if (c.gauge) {
    for (int k = 0; k < kVars; ++k) m.gauge.g[k] = parse_rational(c.gauge->at(k));
  } else {
    for (int k : m.special.classical) m.gauge.g[k] = 0;
  }
  if (m.variant == Variant::molecular && m.gauge.g[0] != 0) throw ConfigError("molecular variant needs a = 0");
  try {
    weighted_gauge(m.masses, m.gauge);
  } catch (const BadLimit& e) {
    throw ConfigError(e.what());
  }
  for (int k = 0; k < kVars; ++k) m.classical[k] = parse_rational(c.classical[k]);
  return m;
}

}  // namespace rhoqes::app
