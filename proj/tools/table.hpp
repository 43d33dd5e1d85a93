#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace symtrap::cli {

enum class Format { Text, Csv, Json };

// Which renderings show a column. Labels that CSV carries as separate integer
// columns are text-only; the integer columns are CSV-only.
enum class Show { Both, TextOnly, CsvOnly };

inline constexpr const char* kSchema = "symtrap/1";

// One rendered result. The grid drives text and CSV; `json` is the complete
// machine-readable document and is emitted verbatim.
struct Report {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> cells;
  std::vector<Show> show;  // per column, Both when missing
  std::vector<std::string> notes;
  // When set, text output is these lines (plus notes) instead of the grid.
  std::vector<std::string> text_lines;
  nlohmann::ordered_json json;

  void add_row(std::vector<std::string> row) { cells.push_back(std::move(row)); }
};

void render(const Report& report, Format format, std::ostream& out);

std::string csv_escape(const std::string& field);

}  // namespace symtrap::cli
