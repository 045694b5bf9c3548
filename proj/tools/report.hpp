#pragma once

#include <string>
#include <vector>

#include "config.hpp"

namespace mwcli {

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<json>> rows;
};

struct Outcome {
  std::string command;
  json arguments = json::object();
  json summary = json::object();
  std::vector<Table> tables;
  Table checks{"checks",
               {"subject", "check", "passed", "margin", "samples", "singular_samples", "worst_radius",
                "worst_angle_index", "worst_re", "worst_im", "worst_observed", "worst_bound", "hypothesis_margin"},
               {}};
  std::string csv_table;  // table emitted by --format csv
  bool e1 = false;
  bool e2 = false;
  bool e3 = false;

  bool passed() const;
};

// %.17g for finite doubles, null for non-finite.
std::string format_number(double v);

// JSON text with every floating value printed at 17 significant digits.
std::string dump_json(const json& value, int indent = 2);

json report_json(const Outcome& outcome, const RunConfig& cfg);
std::string render(const Outcome& outcome, const RunConfig& cfg);

json error_json(const std::string& command, const std::string& message);

}  // namespace mwcli
