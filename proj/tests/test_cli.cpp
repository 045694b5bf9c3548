#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "merowright/merowright.h"

using nlohmann::json;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(MEROWRIGHT_CLI) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (p == nullptr) return r;
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    rows.push_back(cells);
  }
  return rows;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path;
}

const std::string klass = "--alpha 0.5 --eta 1";

}  // namespace

TEST(Cli, Version) {
  const CliRun r = run("--version");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1.0.0"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("verify " + klass).code, 0);
  EXPECT_EQ(run("member " + klass + " --coeffs 0.6").code, 0);
  EXPECT_EQ(run("member " + klass + " --coeffs 0.7").code, 1);
  EXPECT_EQ(run("member --alpha 1.5 --eta 1 --coeffs 0.6").code, 2);
  EXPECT_EQ(run("member --eta 1 --coeffs 0.6").code, 2);
  EXPECT_EQ(run("member " + klass + " --coeffs 0.6,-0.1").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("member " + klass + " --format xml").code, 2);
  EXPECT_EQ(run("convolve " + klass + " --mode bounded --coeffs 0.7 --partner 0.5").code, 1);
}

TEST(Cli, InvalidInputReportsJson) {
  const CliRun r = run("member --alpha 1.5 --eta 1 --coeffs 0.6");
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["status"], "invalid");
  EXPECT_EQ(j["exit_code"], 2);
  EXPECT_NE(j["error"].get<std::string>().find("alpha"), std::string::npos);
}

TEST(Cli, UnknownConfigKeyRejected) {
  const auto ok = temp_file("mw_cli_ok.json", R"({"class": {"alpha": 0.5, "eta": 1}, "function": {"coeffs": [0.6]}})");
  const auto bad = temp_file("mw_cli_bad.json", R"({"class": {"alpha": 0.5, "eta": 1, "gamma": 2}})");
  const auto top = temp_file("mw_cli_top.json", R"({"class": {"alpha": 0.5, "eta": 1}, "colour": "red"})");
  EXPECT_EQ(run("member --config " + ok.string()).code, 0);
  EXPECT_EQ(run("member --config " + bad.string()).code, 2);
  EXPECT_EQ(run("member --config " + top.string()).code, 2);
  EXPECT_EQ(run("member --config /nonexistent/mw.json").code, 2);
}

TEST(Cli, ConfigFileMatchesFlags) {
  const auto cfg = temp_file("mw_cli_cfg.json",
                             R"({"wright": {"upper": [[2, 1]], "lower": [[1, 1]]},
                                 "class": {"alpha": 0.3, "eta": 0.7}, "k_max": 12})");
  const CliRun a = run("radii --config " + cfg.string());
  const CliRun b = run("radii --alpha 0.3 --eta 0.7 --upper 2:1 --lower 1 --k-max 12");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, FlagsOverrideConfig) {
  const auto cfg = temp_file("mw_cli_over.json", R"({"class": {"alpha": 0.5, "eta": 1}, "function": {"coeffs": [0.7]}})");
  EXPECT_EQ(run("member --config " + cfg.string()).code, 1);
  EXPECT_EQ(run("member --config " + cfg.string() + " --coeffs 0.6").code, 0);
}

TEST(Cli, JsonDocumentShape) {
  const CliRun r = run("member " + klass + " --coeffs 0.6");
  const json j = json::parse(r.out);
  for (const char* key : {"schema_version", "tool", "library_version", "command", "status", "exit_code", "config",
                          "arguments", "errata", "results", "checks"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["command"], "member");
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["config"]["class"]["alpha"], 0.5);
  EXPECT_EQ(j["errata"]["E1"]["applied"], true);
  ASSERT_EQ(j["checks"].size(), 2u);
  EXPECT_EQ(j["checks"][1]["samples"], 2883);
}

TEST(Cli, JsonValuesAreBitExact) {
  const CliRun r = run("sigma --upper 2 --k-to 6");
  const json j = json::parse(r.out);
  const auto& rows = j["results"]["tables"]["sigma"]["rows"];
  ASSERT_EQ(rows.size(), 6u);
  const double up[] = {2, 1};
  const double lo[] = {1, 1};
  mw_wright* wp = nullptr;
  ASSERT_EQ(mw_wright_create(up, 1, lo, 1, &wp), MW_OK);
  for (int k = 1; k <= 6; ++k) {
    double v = 0.0;
    double lv = 0.0;
    ASSERT_EQ(mw_sigma_k(wp, k, &v, &lv), MW_OK);
    EXPECT_EQ(rows[k - 1][1].get<double>(), v) << k;
    EXPECT_EQ(rows[k - 1][2].get<double>(), lv) << k;
  }
  mw_wright_destroy(wp);
}

TEST(Cli, FormatsAgree) {
  const std::string base = "radii --alpha 0.4 --eta 0.8 --upper 1.5 --k-max 8";
  const json j = json::parse(run(base + " --format json").out);
  const auto csv = csv_rows(run(base + " --format csv").out);
  const std::string text = run(base + " --format text").out;
  const auto& table = j["results"]["tables"]["radii"];
  ASSERT_EQ(csv.size(), table["rows"].size() + 1);
  for (size_t c = 0; c < csv[0].size(); ++c) EXPECT_EQ(csv[0][c], table["columns"][c].get<std::string>());
  for (size_t i = 0; i < table["rows"].size(); ++i) {
    for (size_t c = 1; c < 3; ++c) {
      const double from_json = table["rows"][i][c].get<double>();
      EXPECT_EQ(std::strtod(csv[i + 1][c].c_str(), nullptr), from_json);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g", from_json);
      EXPECT_NE(text.find(buf), std::string::npos) << buf;
    }
  }
  const double radius = j["results"]["starlike_radius"].get<double>();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", radius);
  EXPECT_NE(text.find(buf), std::string::npos);
}

TEST(Cli, OutFile) {
  const auto path = std::filesystem::temp_directory_path() / "mw_cli_out.csv";
  std::filesystem::remove(path);
  const CliRun r = run("extremal " + klass + " --k 2 --format csv --out " + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  EXPECT_FALSE(header.empty());
}

TEST(Cli, VerifyIsDeterministic) {
  const CliRun a = run("verify " + klass + " --seed 7");
  const CliRun b = run("verify " + klass + " --seed 7");
  EXPECT_EQ(a.out, b.out);
  const json j = json::parse(a.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_GE(j["checks"].size(), 18u);
}

TEST(Cli, ExtremalK2FailsVerification) {
  const CliRun r = run("verify " + klass + " --coeffs 0,1.2");
  EXPECT_EQ(r.code, 1);
  const json j = json::parse(r.out);
  bool saw = false;
  for (const auto& c : j["checks"])
    if (c["subject"] == "input" && c["check"] == "membership_analytic") {
      saw = true;
      EXPECT_FALSE(c["passed"].get<bool>());
    }
  EXPECT_TRUE(saw);
}

TEST(Cli, ClosureConvolution) {
  const CliRun r = run("convolve " + klass + " --upper 5 --k-max 5 --coeffs 0.02,0.01 --partner 0.04");
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
}
