#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace fairsel {

struct CsvRow {
  long line = 0;  // 1-based line number where the row starts, for error messages
  std::vector<std::string> fields;
};

struct CsvTable {
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};

// RFC-4180-style reader: quoted fields may contain commas, quotes ("" escape) and
// newlines; CRLF is accepted; blank lines are skipped. First row is the header.
CsvTable read_csv(const std::filesystem::path& path);

std::string csv_escape(const std::string& field);

void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

}  // namespace fairsel
