#include "nitsche/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace nitsche {

namespace {

using nlohmann::json;

void allow_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

template <class T>
T get(const json& obj, const std::string& key, const std::string& where) {
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + "." + key + ": " + e.what());
  }
}

ProblemKind parse_kind(const std::string& s) {
  if (s == "poisson") return ProblemKind::Poisson;
  if (s == "biharmonic") return ProblemKind::Biharmonic;
  if (s == "plate") return ProblemKind::KirchhoffPlate;
  throw ConfigError("problem: expected poisson, biharmonic or plate, got '" + s + "'");
}

EnforcementVariant parse_variant(const std::string& s) {
  if (s == "nitsche") return EnforcementVariant::NitscheSymmetric;
  if (s == "penalty") return EnforcementVariant::PenaltyOnly;
  throw ConfigError("variants: expected nitsche or penalty, got '" + s + "'");
}

BoundaryPartition::SetLabels parse_labels(const json& obj, const std::string& where) {
  allow_keys(obj, {"south", "east", "north", "west"}, where);
  BoundaryPartition::SetLabels labels{BcType::Dirichlet, BcType::Dirichlet, BcType::Dirichlet, BcType::Dirichlet};
  for (Side side : kAllSides) {
    const std::string name = to_string(side);
    if (!obj.contains(name)) continue;
    const auto v = get<std::string>(obj, name, where);
    if (v == "dirichlet") {
      labels[static_cast<int>(side)] = BcType::Dirichlet;
    } else if (v == "neumann") {
      labels[static_cast<int>(side)] = BcType::Neumann;
    } else {
      throw ConfigError(where + "." + name + ": expected dirichlet or neumann");
    }
  }
  return labels;
}

std::vector<double> number_list(const json& v, const std::string& where) {
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array()) throw ConfigError(where + ": expected a number or an array of numbers");
  std::vector<double> out;
  for (const auto& x : v) {
    if (!x.is_number()) throw ConfigError(where + ": expected numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  allow_keys(root, {"name", "problem", "components", "degree", "domain", "meshes", "partition", "gamma", "variants",
                    "solution", "material", "constants", "output"},
             "config");
  RunConfig rc;
  StudyConfig& s = rc.study;
  if (root.contains("name")) rc.name = get<std::string>(root, "name", "config");
  if (root.contains("output")) rc.output_dir = get<std::string>(root, "output", "config");
  if (!root.contains("problem")) throw ConfigError("config: 'problem' is required");
  s.kind = parse_kind(get<std::string>(root, "problem", "config"));
  const int slots = num_constant_slots(s.kind);
  if (root.contains("components")) s.components = get<int>(root, "components", "config");
  if (root.contains("degree")) s.degree = get<int>(root, "degree", "config");

  if (root.contains("domain")) {
    const auto d = number_list(root["domain"], "domain");
    if (d.size() != 2) throw ConfigError("domain: expected [length_x, length_y]");
    try {
      s.domain = RectDomain(d[0], d[1]);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("domain: ") + e.what());
    }
  }

  if (!root.contains("meshes") || !root["meshes"].is_array()) throw ConfigError("config: 'meshes' array is required");
  for (const auto& m : root["meshes"]) {
    if (m.is_number_integer()) {
      s.meshes.emplace_back(m.get<int>(), m.get<int>());
    } else if (m.is_array() && m.size() == 2 && m[0].is_number_integer() && m[1].is_number_integer()) {
      s.meshes.emplace_back(m[0].get<int>(), m[1].get<int>());
    } else {
      throw ConfigError("meshes: each entry must be n or [nx, ny]");
    }
  }

  if (root.contains("partition")) {
    const json& p = root["partition"];
    allow_keys(p, {"set1", "set2"}, "partition");
    BoundaryPartition::SetLabels all_d{BcType::Dirichlet, BcType::Dirichlet, BcType::Dirichlet, BcType::Dirichlet};
    const auto set1 = p.contains("set1") ? parse_labels(p["set1"], "partition.set1") : all_d;
    const auto set2 = p.contains("set2") ? parse_labels(p["set2"], "partition.set2") : all_d;
    try {
      s.partition = BoundaryPartition(set1, set2);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("partition: ") + e.what());
    }
  }

  s.gamma.assign(slots, 2.0);
  if (root.contains("gamma")) {
    auto g = number_list(root["gamma"], "gamma");
    if (g.size() == 1) g.assign(slots, g[0]);
    s.gamma = g;
  }

  if (root.contains("variants")) {
    if (!root["variants"].is_array()) throw ConfigError("variants: expected an array");
    s.variants.clear();
    for (const auto& v : root["variants"]) {
      if (!v.is_string()) throw ConfigError("variants: expected strings");
      s.variants.push_back(parse_variant(v.get<std::string>()));
    }
  }

  if (root.contains("solution")) {
    const json& sol = root["solution"];
    try {
      if (sol.is_string()) {
        s.solution = SolutionChoice::parse(sol.get<std::string>());
      } else {
        allow_keys(sol, {"name", "a", "b", "amplitude"}, "solution");
        s.solution = SolutionChoice::parse(get<std::string>(sol, "name", "solution"));
        if (sol.contains("a")) s.solution.a = get<double>(sol, "a", "solution");
        if (sol.contains("b")) s.solution.b = get<double>(sol, "b", "solution");
        if (sol.contains("amplitude")) s.solution.amplitude = get<double>(sol, "amplitude", "solution");
      }
    } catch (const std::invalid_argument& e) {
      throw ConfigError(std::string("solution: ") + e.what());
    }
  }

  if (root.contains("material")) {
    const json& m = root["material"];
    allow_keys(m, {"E", "nu", "thickness"}, "material");
    if (m.contains("E")) s.material.youngs_modulus = get<double>(m, "E", "material");
    if (m.contains("nu")) s.material.poisson_ratio = get<double>(m, "nu", "material");
    if (m.contains("thickness")) s.material.thickness = get<double>(m, "thickness", "material");
  }

  if (root.contains("constants")) {
    const json& c = root["constants"];
    if (c.is_string()) {
      const auto mode = c.get<std::string>();
      if (mode == "estimate-coarsest") {
        s.constants_mode = ConstantsMode::EstimateCoarsest;
      } else if (mode == "estimate-each") {
        s.constants_mode = ConstantsMode::EstimateEach;
      } else {
        throw ConfigError("constants: expected estimate-coarsest, estimate-each or an explicit object");
      }
    } else {
      allow_keys(c, {"mode", "C_tr", "C_pen"}, "constants");
      if (get<std::string>(c, "mode", "constants") != "explicit") {
        throw ConfigError("constants: object form requires mode = explicit");
      }
      s.constants_mode = ConstantsMode::Explicit;
      if (!c.contains("C_tr") || !c.contains("C_pen")) throw ConfigError("constants: C_tr and C_pen are required");
      s.explicit_trace = number_list(c["C_tr"], "constants.C_tr");
      s.explicit_penalty = number_list(c["C_pen"], "constants.C_pen");
    }
  }

  try {
    s.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  return rc;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace nitsche
