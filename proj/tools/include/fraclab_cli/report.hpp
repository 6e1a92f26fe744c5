#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace fraclab::cli {

using Json = nlohmann::ordered_json;

enum class Format { kCsv, kJson };

/// A table plus run metadata. Cells are numbers, booleans, strings or null.
struct Report {
  std::string command;
  Json config = Json::object();
  Json summary = Json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;
  bool flagged = false;

  void add_row(std::vector<Json> row);
  bool operator==(const Report& o) const;
};

inline constexpr int kSchemaVersion = 1;

/// Rounds to 10 significant digits (the printed precision).
double round10(double v);

void emit(const Report& r, Format fmt, std::ostream& out);
std::string emit_string(const Report& r, Format fmt);

/// Inverse of emit(kJson).
Report parse_json(const std::string& text);

}  // namespace fraclab::cli
