#pragma once

#include <stdexcept>
#include <string>

#include "nitsche/study.hpp"

namespace nitsche {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string name = "study";
  StudyConfig study;
  std::string output_dir = ".";
};

/// Parses a JSON run configuration. Unknown keys, wrong types and violated
/// cross-field constraints raise ConfigError.
///
/// {
///   "name": "poisson_p2",
///   "problem": "poisson" | "biharmonic" | "plate",
///   "components": 1,
///   "degree": 2,
///   "domain": [1.0, 1.0],
///   "meshes": [[8, 8], [16, 16], [32, 32]],
///   "partition": {"set1": {"south": "dirichlet", ...}, "set2": {...}},
///   "gamma": 2.0 | [2.0, 2.0],
///   "variants": ["nitsche", "penalty"],
///   "solution": "trig" | "poly_3" | {"name": "trig", "a": 1, "b": 1, "amplitude": 1},
///   "material": {"E": 1.0, "nu": 0.3, "thickness": 1.0},
///   "constants": "estimate-coarsest" | "estimate-each" |
///                {"mode": "explicit", "C_tr": [...], "C_pen": [...]},
///   "output": "results"
/// }
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

}  // namespace nitsche
