#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "merowright/merowright.h"

namespace mwcli {

namespace {

void dump_into(const json& v, std::string& out, int indent, int depth) {
  const auto newline = [&](int level) {
    if (indent < 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * level), ' ');
  };
  switch (v.type()) {
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, item] : v.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(key).dump();
        out += indent < 0 ? ":" : ": ";
        dump_into(item, out, indent, depth + 1);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      const bool flat = std::none_of(v.begin(), v.end(), [](const json& e) { return e.is_structured(); });
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += flat ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        dump_into(item, out, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += format_number(v.get<double>());
      return;
    default:
      out += v.dump();
      return;
  }
}

std::string cell_text(const json& v, const char* null_text) {
  if (v.is_null()) return null_text;
  if (v.is_number_float()) {
    const double d = v.get<double>();
    return std::isfinite(d) ? format_number(d) : null_text;
  }
  if (v.is_string()) return v.get<std::string>();
  return dump_json(v, -1);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

json table_json(const Table& t) {
  json rows = json::array();
  for (const auto& row : t.rows) rows.push_back(json(row));
  return {{"columns", t.columns}, {"rows", rows}};
}

const Table* find_table(const Outcome& o, const std::string& name) {
  if (name == "checks") return &o.checks;
  for (const auto& t : o.tables) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

std::string render_csv(const Outcome& o) {
  const Table* t = find_table(o, o.csv_table);
  if (t == nullptr) return {};
  std::string out;
  for (std::size_t i = 0; i < t->columns.size(); ++i) out += (i ? "," : "") + csv_field(t->columns[i]);
  out += '\n';
  for (const auto& row : t->rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(cell_text(row[i], ""));
    out += '\n';
  }
  return out;
}

void text_table(const Table& t, std::string& out) {
  std::vector<std::size_t> width(t.columns.size());
  std::vector<std::vector<std::string>> cells;
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& row : t.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < row.size(); ++i) {
      line.push_back(cell_text(row[i], "-"));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  const auto emit = [&](const std::vector<std::string>& line) {
    std::string s = " ";
    for (std::size_t i = 0; i < line.size(); ++i) {
      s += ' ';
      s += line[i];
      if (i + 1 < line.size()) s.append(width[i] - line[i].size(), ' ');
    }
    out += s + '\n';
  };
  out += t.name + ":\n";
  emit(t.columns);
  for (const auto& line : cells) emit(line);
}

std::string render_text(const Outcome& o) {
  std::string out = "merowright " + o.command + ": " + (o.passed() ? "pass" : "fail") + "\n";
  for (const auto& [key, value] : o.summary.items()) out += "  " + key + " = " + cell_text(value, "-") + "\n";
  for (const auto& t : o.tables) {
    out += '\n';
    text_table(t, out);
  }
  if (!o.checks.rows.empty()) {
    out += '\n';
    text_table(o.checks, out);
  }
  return out;
}

}  // namespace

bool Outcome::passed() const {
  const auto col = std::find(checks.columns.begin(), checks.columns.end(), "passed") - checks.columns.begin();
  return std::all_of(checks.rows.begin(), checks.rows.end(),
                     [&](const std::vector<json>& row) { return row[static_cast<std::size_t>(col)] == true; });
}

std::string format_number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string dump_json(const json& value, int indent) {
  std::string out;
  dump_into(value, out, indent, 0);
  return out;
}

json report_json(const Outcome& o, const RunConfig& cfg) {
  json doc;
  doc["schema_version"] = MW_SCHEMA_VERSION;
  doc["tool"] = "merowright";
  doc["library_version"] = mw_version();
  doc["command"] = o.command;
  doc["status"] = o.passed() ? "pass" : "fail";
  doc["exit_code"] = o.passed() ? 0 : 1;
  doc["config"] = to_json(cfg);
  doc["arguments"] = o.arguments;
  doc["errata"] = {
      {"E1", {{"applied", o.e1}, {"note", "extremal principal part is 1/z"}}},
      {"E2", {{"applied", o.e2}, {"note", "closure order denominators use the sign-corrected form"}}},
      {"E3", {{"applied", o.e3}, {"note", "convexity radius carries the factor k"}}}};
  json results = o.summary;
  json tables = json::object();
  for (const auto& t : o.tables) tables[t.name] = table_json(t);
  results["tables"] = tables;
  doc["results"] = results;
  json checks = json::array();
  for (const auto& row : o.checks.rows) {
    json c = json::object();
    for (std::size_t i = 0; i < row.size(); ++i) c[o.checks.columns[i]] = row[i];
    checks.push_back(c);
  }
  doc["checks"] = checks;
  return doc;
}

std::string render(const Outcome& o, const RunConfig& cfg) {
  if (cfg.format == "csv") return render_csv(o);
  if (cfg.format == "text") return render_text(o);
  return dump_json(report_json(o, cfg)) + "\n";
}

json error_json(const std::string& command, const std::string& message) {
  json doc;
  doc["schema_version"] = MW_SCHEMA_VERSION;
  doc["tool"] = "merowright";
  doc["command"] = command;
  doc["status"] = "invalid";
  doc["exit_code"] = 2;
  doc["error"] = message;
  return doc;
}

}  // namespace mwcli
