#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "handles.hpp"
#include "report.hpp"

namespace {

struct Overrides {
  std::string config_path;
  std::optional<double> alpha;
  std::optional<double> eta;
  std::optional<int> k_max;
  std::optional<double> delta;
  std::optional<double> kappa;
  std::optional<std::string> format;
  std::string out;
  std::optional<double> tol;
  std::optional<double> slack;
  std::optional<int> angles;
  std::optional<std::vector<double>> coeffs;
  std::optional<std::vector<double>> partner;
  std::vector<std::string> upper;
  std::vector<std::string> lower;
};

void add_common(CLI::App* sub, Overrides& ov) {
  sub->add_option("--config", ov.config_path, "JSON run configuration");
  sub->add_option("--alpha", ov.alpha, "class parameter alpha in (0,1)");
  sub->add_option("--eta", ov.eta, "class parameter eta in (0,1]");
  sub->add_option("--k-max", ov.k_max, "truncation index for closure orders and radii");
  sub->add_option("--delta", ov.delta, "starlikeness order in [0,1)");
  sub->add_option("--kappa", ov.kappa, "convexity order in [0,1)");
  sub->add_option("--format", ov.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--out", ov.out, "write output to this file instead of stdout");
  sub->add_option("--tol", ov.tol, "bisection tolerance");
  sub->add_option("--slack", ov.slack, "equality slack for envelope and closure checks");
  sub->add_option("--angles", ov.angles, "angles per sampled circle");
  sub->add_option("--coeffs", ov.coeffs, "coefficients a_1,a_2,... of f")->delimiter(',');
  sub->add_option("--partner", ov.partner, "coefficients of the second function or multiplier")->delimiter(',');
  sub->add_option("--upper", ov.upper, "upper Wright parameters value[:weight],...")->delimiter(',');
  sub->add_option("--lower", ov.lower, "lower Wright parameters value[:weight],...")->delimiter(',');
}

mwcli::RunConfig resolve(const Overrides& ov) {
  mwcli::RunConfig cfg;
  if (!ov.config_path.empty()) mwcli::load_config_file(ov.config_path, cfg);
  if (ov.alpha) cfg.alpha = ov.alpha;
  if (ov.eta) cfg.eta = ov.eta;
  if (ov.k_max) cfg.k_max = *ov.k_max;
  if (ov.delta) cfg.delta = *ov.delta;
  if (ov.kappa) cfg.kappa = *ov.kappa;
  if (ov.format) cfg.format = *ov.format;
  if (ov.tol) cfg.tol = *ov.tol;
  if (ov.slack) cfg.slack = *ov.slack;
  if (ov.angles) cfg.angles = *ov.angles;
  if (ov.coeffs) cfg.coeffs = ov.coeffs;
  if (ov.partner) cfg.partner = ov.partner;
  if (!ov.upper.empty()) cfg.upper = mwcli::parse_pairs(ov.upper);
  if (!ov.lower.empty()) cfg.lower = mwcli::parse_pairs(ov.lower);
  mwcli::validate(cfg);
  return cfg;
}

bool emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coefficient, envelope, closure and radius computations for the class V(alpha, eta)", "merowright"};
  app.require_subcommand(1);
  app.set_version_flag("--version", mw_version());

  Overrides ov;
  mwcli::Arguments args;

  auto* sigma = app.add_subcommand("sigma", "operator coefficients sigma_k over a k range");
  sigma->add_option("--k-from", args.k_from, "first k")->capture_default_str();
  sigma->add_option("--k-to", args.k_to, "last k (empty table when below --k-from)")->capture_default_str();
  auto* member = app.add_subcommand("member", "coefficient and sampled membership tests for f");
  auto* extremal = app.add_subcommand("extremal", "single-term extremal function for index k");
  extremal->add_option("--k", args.k, "index k")->capture_default_str();
  auto* bounds = app.add_subcommand("bounds", "growth and distortion envelopes");
  bounds->add_option("--r", args.r, "radii in (0,1)")->delimiter(',');
  auto* radii = app.add_subcommand("radii", "radii of starlikeness and convexity");
  auto* convolve = app.add_subcommand("convolve", "closure of f with the partner function");
  convolve->add_option("--mode", args.mode, "hadamard, quadratic or bounded")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "full certificate bundle");
  verify->add_option("--seed", args.seed, "seed for the random member")->capture_default_str();
  for (auto* sub : {sigma, member, extremal, bounds, radii, convolve, verify}) add_common(sub, ov);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  std::string format = ov.format.value_or("json");
  try {
    const mwcli::RunConfig cfg = resolve(ov);
    format = cfg.format;
    const mwcli::Outcome outcome = mwcli::run_command(command, cfg, args);
    if (!emit(mwcli::render(outcome, cfg), ov.out)) {
      std::cerr << "merowright: cannot write output\n";
      return 2;
    }
    return outcome.passed() ? 0 : 1;
  } catch (const mwcli::ConfigError& e) {
    std::cerr << "merowright: invalid configuration: " << e.what() << "\n";
    if (format == "json") emit(mwcli::dump_json(mwcli::error_json(command, e.what())) + "\n", ov.out);
    return 2;
  } catch (const mwcli::ApiError& e) {
    std::cerr << "merowright: invalid input: " << e.what() << "\n";
    if (format == "json") emit(mwcli::dump_json(mwcli::error_json(command, e.what())) + "\n", ov.out);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "merowright: " << e.what() << "\n";
    return 2;
  }
}
