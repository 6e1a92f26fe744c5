#include "fraclab_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "fraclab_cli/version.hpp"

namespace fraclab::cli {

double round10(double v) {
  if (!std::isfinite(v)) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return std::strtod(buf, nullptr);
}

void Report::add_row(std::vector<Json> row) {
  if (row.size() != columns.size()) throw std::logic_error("report row width mismatch");
  for (auto& c : row) {
    if (!c.is_number_float()) continue;
    const double v = c.get<double>();
    c = std::isfinite(v) ? Json(round10(v)) : Json(nullptr);
  }
  rows.push_back(std::move(row));
}

bool Report::operator==(const Report& o) const {
  return command == o.command && config == o.config && summary == o.summary &&
         columns == o.columns && rows == o.rows && flagged == o.flagged;
}

namespace {

std::string csv_cell(const Json& c) {
  if (c.is_null()) return "";
  if (c.is_boolean()) return c.get<bool>() ? "true" : "false";
  if (c.is_number_integer()) return std::to_string(c.get<long long>());
  if (c.is_number_unsigned()) return std::to_string(c.get<unsigned long long>());
  if (c.is_number_float()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", c.get<double>());
    return buf;
  }
  std::string s = c.is_string() ? c.get<std::string>() : c.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) {
    if (ch == '"') q += '"';
    q += ch;
  }
  return q + "\"";
}

Json to_json(const Report& r) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["version"] = kVersion;
  j["command"] = r.command;
  j["config"] = r.config;
  j["flagged"] = r.flagged;
  j["summary"] = r.summary;
  j["columns"] = r.columns;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) obj[r.columns[i]] = row[i];
    rows.push_back(std::move(obj));
  }
  j["rows"] = std::move(rows);
  return j;
}

}  // namespace

void emit(const Report& r, Format fmt, std::ostream& out) {
  if (fmt == Format::kJson) {
    out << to_json(r).dump(2) << '\n';
    return;
  }
  out << "# fraclab " << kVersion << " schema_version=" << kSchemaVersion
      << " command=" << r.command << '\n';
  out << "# config=" << r.config.dump() << '\n';
  if (!r.summary.empty()) out << "# summary=" << r.summary.dump() << '\n';
  if (r.flagged) out << "# flagged=true\n";
  for (std::size_t i = 0; i < r.columns.size(); ++i) out << (i ? "," : "") << r.columns[i];
  out << '\n';
  for (const auto& row : r.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
    out << '\n';
  }
}

std::string emit_string(const Report& r, Format fmt) {
  std::ostringstream os;
  emit(r, fmt, os);
  return os.str();
}

Report parse_json(const std::string& text) {
  const Json j = Json::parse(text);
  if (j.at("schema_version").get<int>() != kSchemaVersion) {
    throw std::runtime_error("unsupported schema_version");
  }
  Report r;
  r.command = j.at("command").get<std::string>();
  r.config = j.at("config");
  r.flagged = j.at("flagged").get<bool>();
  r.summary = j.at("summary");
  r.columns = j.at("columns").get<std::vector<std::string>>();
  for (const auto& obj : j.at("rows")) {
    std::vector<Json> row;
    for (const auto& c : r.columns) row.push_back(obj.at(c));
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace fraclab::cli
