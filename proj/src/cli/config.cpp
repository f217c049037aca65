#include "semiwell/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace semiwell::cli {

namespace {

const std::set<std::string>& config_keys() {
  static const std::set<std::string> keys{"flat_symbol", "sphere_symbol", "wells",        "N_list",
                                          "N",           "cutoff",        "k",            "C",
                                          "cap_radius",  "predicted_gap", "bottom_multiplicity",
                                          "deltas",      "tolerances"};
  return keys;
}

// Line of the occurrence-th appearance of "key" used as an object key.
int line_of_key(const std::string& text, const std::string& key, int occurrence) {
  const std::string quoted = Json(key).dump();
  std::size_t pos = 0;
  int seen = 0;
  while ((pos = text.find(quoted, pos)) != std::string::npos) {
    std::size_t after = pos + quoted.size();
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (after < text.size() && text[after] == ':' && ++seen == occurrence) {
      return 1 + static_cast<int>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
    }
    pos = after;
  }
  return -1;
}

Json parse_strict(const std::string& text) {
  std::vector<std::set<std::string>> open_objects;
  std::map<std::string, int> occurrences;
  std::optional<std::string> duplicate;
  int duplicate_occurrence = 0;

  Json::parser_callback_t callback = [&](int, Json::parse_event_t event, Json& parsed) {
    switch (event) {
      case Json::parse_event_t::object_start:
        open_objects.emplace_back();
        break;
      case Json::parse_event_t::object_end:
        if (!open_objects.empty()) open_objects.pop_back();
        break;
      case Json::parse_event_t::key: {
        const std::string key = parsed.get<std::string>();
        const int occurrence = ++occurrences[key];
        if (!open_objects.empty() && !open_objects.back().insert(key).second && !duplicate) {
          duplicate = key;
          duplicate_occurrence = occurrence;
        }
        break;
      }
      default:
        break;
    }
    return true;
  };

  Json j;
  try {
    j = Json::parse(text, callback);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("config is not valid JSON: ") + e.what());
  }
  if (duplicate) {
    std::ostringstream os;
    os << "duplicate key '" << *duplicate << "' at line "
       << line_of_key(text, *duplicate, duplicate_occurrence);
    throw InputError(os.str());
  }
  return j;
}

template <typename T>
T get_number(const Json& j, const char* key) {
  const Json& v = j.at(key);
  if constexpr (std::is_integral_v<T>) {
    if (!v.is_number_integer()) throw InputError(std::string("'") + key + "' must be an integer");
  } else {
    if (!v.is_number()) throw InputError(std::string("'") + key + "' must be a number");
  }
  return v.get<T>();
}

SpherePoint point_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("well must be an object {\"x\", \"y\", \"z\"}");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() != "x" && it.key() != "y" && it.key() != "z") {
      throw InputError("well: unknown key '" + it.key() + "'");
    }
  }
  const SpherePoint p(get_number<double>(j, "x"), get_number<double>(j, "y"), get_number<double>(j, "z"));
  if (!(p.norm() > 0.0)) throw InputError("well point must be nonzero");
  return p;
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{"mu",        "flat-spectrum", "sphere-spectrum",
                                              "perturb",   "selection",     "theorem-b",
                                              "gap",       "concentration", "weyl-compare"};
  return names;
}

ExperimentConfig parse_config_text(const std::string& text) {
  const Json j = parse_strict(text);
  if (!j.is_object()) throw InputError("config must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!config_keys().contains(it.key())) throw InputError("unknown config key '" + it.key() + "'");
  }

  ExperimentConfig cfg;
  if (j.contains("flat_symbol") && j.contains("sphere_symbol")) {
    throw InputError("config holds both a flat_symbol and a sphere_symbol; exactly one is allowed");
  }
  if (j.contains("flat_symbol")) cfg.flat_symbol = flat_symbol_from_json(j["flat_symbol"]);
  if (j.contains("sphere_symbol")) cfg.sphere_symbol = sphere_symbol_from_json(j["sphere_symbol"]);
  if (!cfg.flat_symbol && !cfg.sphere_symbol) throw InputError("config needs a flat_symbol or a sphere_symbol");

  if (j.contains("wells")) {
    if (!j["wells"].is_array()) throw InputError("'wells' must be an array");
    for (const auto& w : j["wells"]) cfg.wells.push_back(point_from_json(w));
  }
  if (j.contains("N_list")) {
    if (!j["N_list"].is_array()) throw InputError("'N_list' must be an array");
    for (const auto& v : j["N_list"]) {
      if (!v.is_number_integer() || v.get<int>() < 1) throw InputError("'N_list' entries must be positive integers");
      cfg.n_list.push_back(v.get<int>());
    }
    for (std::size_t i = 1; i < cfg.n_list.size(); ++i) {
      if (cfg.n_list[i] <= cfg.n_list[i - 1]) throw InputError("'N_list' must be strictly ascending");
    }
  }
  if (j.contains("N")) {
    cfg.big_n = get_number<int>(j, "N");
    if (*cfg.big_n < 1) throw InputError("'N' must be positive");
  }
  if (j.contains("cutoff")) {
    cfg.cutoff = get_number<int>(j, "cutoff");
    if (*cfg.cutoff < 2) throw InputError("'cutoff' must be at least 2");
  }
  if (j.contains("k")) {
    cfg.count = get_number<int>(j, "k");
    if (*cfg.count < 1) throw InputError("'k' must be positive");
  }
  if (j.contains("C")) {
    cfg.window = get_number<double>(j, "C");
    if (*cfg.window < 0.0) throw InputError("'C' must be nonnegative");
  }
  if (j.contains("cap_radius")) {
    cfg.cap_radius = get_number<double>(j, "cap_radius");
    if (!(*cfg.cap_radius > 0.0 && *cfg.cap_radius < 3.141592653589793)) {
      throw InputError("'cap_radius' must lie in (0, pi)");
    }
  }
  if (j.contains("predicted_gap")) cfg.predicted_gap = get_number<double>(j, "predicted_gap");
  if (j.contains("bottom_multiplicity")) {
    cfg.bottom_multiplicity = get_number<int>(j, "bottom_multiplicity");
    if (*cfg.bottom_multiplicity < 1) throw InputError("'bottom_multiplicity' must be positive");
  }
  if (j.contains("deltas")) {
    if (!j["deltas"].is_array()) throw InputError("'deltas' must be an array");
    for (const auto& v : j["deltas"]) {
      if (!v.is_number()) throw InputError("'deltas' entries must be numbers");
      const double d = v.get<double>();
      if (!(d >= 0.0 && d < 0.5)) {
        std::ostringstream os;
        os << "delta " << d << " outside [0, 1/2)";
        throw InputError(os.str());
      }
      cfg.deltas.push_back(d);
    }
  }
  if (j.contains("tolerances")) {
    const Json& t = j["tolerances"];
    if (!t.is_object()) throw InputError("'tolerances' must be an object");
    Tolerances& tol = cfg.tolerances;
    const std::map<std::string, double*> slots{{"gap", &tol.gap},
                                               {"theorem_b", &tol.theorem_b},
                                               {"selection_threshold", &tol.selection_threshold},
                                               {"selection_min_mass", &tol.selection_min_mass},
                                               {"weyl", &tol.weyl}};
    for (auto it = t.begin(); it != t.end(); ++it) {
      auto slot = slots.find(it.key());
      if (slot == slots.end()) throw InputError("unknown tolerance '" + it.key() + "'");
      if (!it.value().is_number() || !(it.value().get<double>() >= 0.0)) {
        throw InputError("tolerance '" + it.key() + "' must be a nonnegative number");
      }
      *slot->second = it.value().get<double>();
    }
  }
  return cfg;
}

ExperimentConfig parse_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open config file " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return parse_config_text(os.str());
}

Json config_to_json(const ExperimentConfig& cfg) {
  Json j = Json::object();
  if (cfg.flat_symbol) j["flat_symbol"] = flat_symbol_to_json(*cfg.flat_symbol);
  if (cfg.sphere_symbol) j["sphere_symbol"] = sphere_symbol_to_json(*cfg.sphere_symbol);
  if (!cfg.wells.empty()) {
    Json wells = Json::array();
    for (const auto& p : cfg.wells) wells.push_back(Json{{"x", p.x()}, {"y", p.y()}, {"z", p.z()}});
    j["wells"] = wells;
  }
  if (!cfg.n_list.empty()) j["N_list"] = cfg.n_list;
  if (cfg.big_n) j["N"] = *cfg.big_n;
  if (cfg.cutoff) j["cutoff"] = *cfg.cutoff;
  if (cfg.count) j["k"] = *cfg.count;
  if (cfg.window) j["C"] = *cfg.window;
  if (cfg.cap_radius) j["cap_radius"] = *cfg.cap_radius;
  if (cfg.predicted_gap) j["predicted_gap"] = *cfg.predicted_gap;
  if (cfg.bottom_multiplicity) j["bottom_multiplicity"] = *cfg.bottom_multiplicity;
  if (!cfg.deltas.empty()) j["deltas"] = cfg.deltas;
  j["tolerances"] = Json{{"gap", cfg.tolerances.gap},
                         {"theorem_b", cfg.tolerances.theorem_b},
                         {"selection_threshold", cfg.tolerances.selection_threshold},
                         {"selection_min_mass", cfg.tolerances.selection_min_mass},
                         {"weyl", cfg.tolerances.weyl}};
  return j;
}

}  // namespace semiwell::cli
