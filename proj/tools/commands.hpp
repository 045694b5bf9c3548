#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "report.hpp"

namespace mwcli {

struct Arguments {
  int k_from = 1;
  int k_to = 10;
  int k = 1;
  std::vector<double> r;
  std::string mode = "hadamard";
  std::uint64_t seed = 1;
};

Outcome cmd_sigma(const RunConfig& cfg, const Arguments& args);
Outcome cmd_member(const RunConfig& cfg, const Arguments& args);
Outcome cmd_extremal(const RunConfig& cfg, const Arguments& args);
Outcome cmd_bounds(const RunConfig& cfg, const Arguments& args);
Outcome cmd_radii(const RunConfig& cfg, const Arguments& args);
Outcome cmd_convolve(const RunConfig& cfg, const Arguments& args);
Outcome cmd_verify(const RunConfig& cfg, const Arguments& args);

Outcome run_command(const std::string& name, const RunConfig& cfg, const Arguments& args);

}  // namespace mwcli
