#include "table.hpp"

#include <algorithm>

namespace symtrap::cli {

namespace {

// Display width in code points, so that "ħ" and "−" count as one column.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

Show visibility(const Report& r, std::size_t column) { return column < r.show.size() ? r.show[column] : Show::Both; }

void render_text(const Report& r, std::ostream& out) {
  if (!r.title.empty()) out << r.title << "\n";
  if (!r.text_lines.empty()) {
    for (const auto& l : r.text_lines) out << l << "\n";
    for (const auto& note : r.notes) out << note << "\n";
    return;
  }
  std::vector<std::size_t> columns;
  for (std::size_t i = 0; i < r.header.size(); ++i)
    if (visibility(r, i) != Show::CsvOnly) columns.push_back(i);
  std::vector<std::size_t> widths(r.header.size(), 0);
  auto grow = [&](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size() && i < widths.size(); ++i) widths[i] = std::max(widths[i], width(row[i]));
  };
  grow(r.header);
  for (const auto& row : r.cells) grow(row);

  auto line = [&](const std::vector<std::string>& row) {
    std::string text;
    for (std::size_t i : columns) {
      if (i >= row.size()) break;
      if (i != columns.front()) text += "  ";
      // First column is a label and reads better left-aligned.
      const std::string pad(widths[i] - width(row[i]), ' ');
      text += i == columns.front() ? row[i] + pad : pad + row[i];
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << "\n";
  };
  if (!r.header.empty()) line(r.header);
  for (const auto& row : r.cells) line(row);
  for (const auto& note : r.notes) out << note << "\n";
}

void render_csv(const Report& r, std::ostream& out) {
  auto line = [&](const std::vector<std::string>& row) {
    bool first = true;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (visibility(r, i) == Show::TextOnly) continue;
      if (!first) out << ',';
      out << csv_escape(row[i]);
      first = false;
    }
    out << "\n";
  };
  line(r.header);
  for (const auto& row : r.cells) line(row);
}

}  // namespace

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::Text:
      render_text(report, out);
      break;
    case Format::Csv:
      render_csv(report, out);
      break;
    case Format::Json:
      out << report.json.dump(2) << "\n";
      break;
  }
}

}  // namespace symtrap::cli
