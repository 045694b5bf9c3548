#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace mwcli {

using json = nlohmann::ordered_json;

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::vector<std::pair<double, double>> upper{{1.0, 1.0}};
  std::vector<std::pair<double, double>> lower{{1.0, 1.0}};
  std::optional<double> alpha;
  std::optional<double> eta;
  std::optional<std::vector<double>> coeffs;
  std::optional<std::vector<double>> partner;
  int k_max = 64;
  std::vector<double> plan_radii{0.5, 0.9, 0.99, 0.999};
  int angles = 720;
  bool include_ramp = true;
  double tol = 1e-6;
  double slack = 1e-12;
  double delta = 0.0;
  double kappa = 0.0;
  std::string format = "json";
};

// Merges a JSON config document into cfg. Unknown keys and wrong types throw.
void merge_config(const json& doc, RunConfig& cfg);
void load_config_file(const std::string& path, RunConfig& cfg);

// Range checks that do not depend on the library.
void validate(const RunConfig& cfg);

json to_json(const RunConfig& cfg);

std::vector<std::pair<double, double>> parse_pairs(const std::vector<std::string>& items);

}  // namespace mwcli
