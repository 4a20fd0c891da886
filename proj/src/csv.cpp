#include "fairsel/csv.hpp"

#include <fstream>
#include <iterator>

#include "fairsel/error.hpp"
#include "fairsel/strings.hpp"

namespace fairsel {

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

  std::vector<CsvRow> raw;
  std::vector<std::string> fields;
  std::string field;
  bool in_quotes = false;
  bool row_has_quote = false;  // a quoted empty field still counts as content
  long line = 1;
  long row_line = 1;

  auto flush_row = [&]() {
    fields.push_back(field);
    field.clear();
    const bool blank = fields.size() == 1 && fields[0].empty() && !row_has_quote;
    if (!blank) raw.push_back(CsvRow{row_line, std::move(fields)});
    fields = {};
    row_has_quote = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      in_quotes = true;
      row_has_quote = true;
    } else if (c == ',') {
      fields.push_back(field);
      field.clear();
    } else if (c == '\r') {
      // dropped; the following '\n' (if any) terminates the row
    } else if (c == '\n') {
      flush_row();
      ++line;
      row_line = line;
    } else {
      field.push_back(c);
    }
  }
  if (in_quotes) {
    throw Error(ErrorCode::ParseError,
                path.string() + ": unterminated quoted field starting near line " +
                    std::to_string(row_line));
  }
  if (!field.empty() || !fields.empty() || row_has_quote) flush_row();

  if (raw.empty()) throw Error(ErrorCode::ParseError, path.string() + ": missing header row");

  CsvTable table;
  table.header = std::move(raw.front().fields);
  for (std::string& h : table.header) h = trim(h);
  table.rows.assign(std::make_move_iterator(raw.begin() + 1), std::make_move_iterator(raw.end()));
  return table;
}

std::string csv_escape(const std::string& field) {
  const bool needs_quotes = field.find_first_of(",\"\r\n") != std::string::npos;
  if (!needs_quotes) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out.push_back(c);
  }
  out.push_back('"');
  return out;
}

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.put(',');
    out << csv_escape(fields[i]);
  }
  out.put('\n');
}

}  // namespace fairsel
