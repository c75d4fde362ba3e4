#pragma once

#include <optional>
#include <string>
#include <vector>

namespace windflex::io {

/// One delimited table: a header row plus string cells. Empty cells and the
/// literal tokens NA / NaN / nan are reported as missing.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;  // -1 when absent
};

CsvTable read_csv(const std::string& path, char delim = ',');
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows, char delim = ',');

bool cell_missing(const std::string& cell);
std::optional<double> parse_double(const std::string& cell);

/// Parses "YYYY-MM-DD HH:MM[:SS]" or the ISO-8601 'T' form (optional 'Z')
/// into seconds since the Unix epoch, calendar-exact, timezone-free.
std::optional<std::int64_t> parse_timestamp(const std::string& text);
std::string format_timestamp(std::int64_t epoch_seconds);

std::string format_double(double v);

}  // namespace windflex::io
