#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace mwcli {

namespace {

void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) throw ConfigError(where + " must be an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : obj.items()) {
    if (ok.count(key) == 0) throw ConfigError("unknown config key: " + (where.empty() ? key : where + "." + key));
  }
}

double number(const json& v, const std::string& where) {
  if (!v.is_number()) throw ConfigError(where + " must be a number");
  return v.get<double>();
}

int integer(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ConfigError(where + " must be an integer");
  return v.get<int>();
}

std::vector<double> numbers(const json& v, const std::string& where) {
  if (!v.is_array()) throw ConfigError(where + " must be an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<std::pair<double, double>> pair_list(const json& v, const std::string& where) {
  if (!v.is_array()) throw ConfigError(where + " must be an array of [value, weight] pairs");
  std::vector<std::pair<double, double>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string at = where + "[" + std::to_string(i) + "]";
    if (!v[i].is_array() || v[i].size() != 2) throw ConfigError(at + " must be a [value, weight] pair");
    out.emplace_back(number(v[i][0], at), number(v[i][1], at));
  }
  return out;
}

json pairs_json(const std::vector<std::pair<double, double>>& pairs) {
  json out = json::array();
  for (const auto& [value, weight] : pairs) out.push_back(json::array({value, weight}));
  return out;
}

}  // namespace

void merge_config(const json& doc, RunConfig& cfg) {
  only_keys(doc, "", {"wright", "class", "function", "partner", "plan", "tolerances", "radii", "k_max", "output"});
  if (doc.contains("wright")) {
    const auto& w = doc["wright"];
    only_keys(w, "wright", {"upper", "lower"});
    if (w.contains("upper")) cfg.upper = pair_list(w["upper"], "wright.upper");
    if (w.contains("lower")) cfg.lower = pair_list(w["lower"], "wright.lower");
  }
  if (doc.contains("class")) {
    const auto& c = doc["class"];
    only_keys(c, "class", {"alpha", "eta"});
    if (c.contains("alpha")) cfg.alpha = number(c["alpha"], "class.alpha");
    if (c.contains("eta")) cfg.eta = number(c["eta"], "class.eta");
  }
  if (doc.contains("function")) {
    only_keys(doc["function"], "function", {"coeffs"});
    if (doc["function"].contains("coeffs")) cfg.coeffs = numbers(doc["function"]["coeffs"], "function.coeffs");
  }
  if (doc.contains("partner")) {
    only_keys(doc["partner"], "partner", {"coeffs"});
    if (doc["partner"].contains("coeffs")) cfg.partner = numbers(doc["partner"]["coeffs"], "partner.coeffs");
  }
  if (doc.contains("plan")) {
    const auto& p = doc["plan"];
    only_keys(p, "plan", {"radii", "angles", "include_real_axis_ramp"});
    if (p.contains("radii")) cfg.plan_radii = numbers(p["radii"], "plan.radii");
    if (p.contains("angles")) cfg.angles = integer(p["angles"], "plan.angles");
    if (p.contains("include_real_axis_ramp")) {
      if (!p["include_real_axis_ramp"].is_boolean()) throw ConfigError("plan.include_real_axis_ramp must be a boolean");
      cfg.include_ramp = p["include_real_axis_ramp"].get<bool>();
    }
  }
  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    only_keys(t, "tolerances", {"bisection", "slack"});
    if (t.contains("bisection")) cfg.tol = number(t["bisection"], "tolerances.bisection");
    if (t.contains("slack")) cfg.slack = number(t["slack"], "tolerances.slack");
  }
  if (doc.contains("radii")) {
    const auto& r = doc["radii"];
    only_keys(r, "radii", {"delta", "kappa"});
    if (r.contains("delta")) cfg.delta = number(r["delta"], "radii.delta");
    if (r.contains("kappa")) cfg.kappa = number(r["kappa"], "radii.kappa");
  }
  if (doc.contains("k_max")) cfg.k_max = integer(doc["k_max"], "k_max");
  if (doc.contains("output")) {
    only_keys(doc["output"], "output", {"format"});
    if (doc["output"].contains("format")) {
      if (!doc["output"]["format"].is_string()) throw ConfigError("output.format must be a string");
      cfg.format = doc["output"]["format"].get<std::string>();
    }
  }
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  merge_config(doc, cfg);
}

void validate(const RunConfig& cfg) {
  if (cfg.k_max < 1) throw ConfigError("k_max must be at least 1");
  if (cfg.angles < 8) throw ConfigError("plan.angles must be at least 8");
  if (cfg.plan_radii.empty()) throw ConfigError("plan.radii must not be empty");
  for (double r : cfg.plan_radii) {
    if (!(r > 0.0 && r < 1.0)) throw ConfigError("plan.radii entries must lie in (0,1)");
  }
  if (!(cfg.tol > 0.0) || !std::isfinite(cfg.tol)) throw ConfigError("tolerances.bisection must be positive");
  if (!(cfg.slack >= 0.0) || !std::isfinite(cfg.slack)) throw ConfigError("tolerances.slack must be nonnegative");
  if (!(cfg.delta >= 0.0 && cfg.delta < 1.0)) throw ConfigError("radii.delta must lie in [0,1)");
  if (!(cfg.kappa >= 0.0 && cfg.kappa < 1.0)) throw ConfigError("radii.kappa must lie in [0,1)");
  if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text") {
    throw ConfigError("output.format must be json, csv or text");
  }
  for (const auto* list : {&cfg.coeffs, &cfg.partner}) {
    if (!*list) continue;
    for (double a : **list) {
      if (!std::isfinite(a)) throw ConfigError("coefficients must be finite");
    }
  }
}

json to_json(const RunConfig& cfg) {
  json out;
  out["wright"] = {{"upper", pairs_json(cfg.upper)}, {"lower", pairs_json(cfg.lower)}};
  out["class"] = {{"alpha", cfg.alpha ? json(*cfg.alpha) : json(nullptr)},
                  {"eta", cfg.eta ? json(*cfg.eta) : json(nullptr)}};
  out["function"] = {{"coeffs", cfg.coeffs ? json(*cfg.coeffs) : json::array()}};
  out["partner"] = {{"coeffs", cfg.partner ? json(*cfg.partner) : json::array()}};
  out["plan"] = {{"radii", cfg.plan_radii}, {"angles", cfg.angles}, {"include_real_axis_ramp", cfg.include_ramp}};
  out["tolerances"] = {{"bisection", cfg.tol}, {"slack", cfg.slack}};
  out["radii"] = {{"delta", cfg.delta}, {"kappa", cfg.kappa}};
  out["k_max"] = cfg.k_max;
  out["output"] = {{"format", cfg.format}};
  return out;
}

std::vector<std::pair<double, double>> parse_pairs(const std::vector<std::string>& items) {
  std::vector<std::pair<double, double>> out;
  for (const auto& item : items) {
    const auto colon = item.find(':');
    try {
      std::size_t used = 0;
      const std::string head = item.substr(0, colon);
      const double value = std::stod(head, &used);
      if (used != head.size()) throw std::invalid_argument(item);
      double weight = 1.0;
      if (colon != std::string::npos) {
        const std::string tail = item.substr(colon + 1);
        weight = std::stod(tail, &used);
        if (used != tail.size()) throw std::invalid_argument(item);
      }
      out.emplace_back(value, weight);
    } catch (const std::logic_error&) {
      throw ConfigError("expected value[:weight], got '" + item + "'");
    }
  }
  return out;
}

}  // namespace mwcli
