#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sedcore {

struct CsvRow {
  long line_no = 0;  // 1-based, counting every physical line
  std::vector<std::string> fields;
};

struct CsvContent {
  std::string source;
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};

/// Reads a comma-separated file. `#`-prefixed lines and blank lines are
/// skipped (fixture files carry provenance comments). Fields are plain,
/// unquoted tokens.
CsvContent read_csv(std::istream& in, const std::string& source_name);

std::vector<std::string> split_csv_line(const std::string& line);

std::optional<double> parse_double(const std::string& text);
std::optional<long> parse_long(const std::string& text);

/// Fixed-point formatting helper, locale-independent output.
std::string fixed(double value, int decimals);

/// Writes to a temp file in the same directory, then renames into place.
void write_text_file_atomic(const std::filesystem::path& path, const std::string& content);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace sedcore
