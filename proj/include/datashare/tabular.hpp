#pragma once

// Delimited plain-text tables: dialect sniffing, RFC 4180 style parsing and
// canonical serialization, and missing-value token profiling.

#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace datashare {

enum class LineEnding { lf, crlf };

struct Dialect {
  char delimiter = ',';
  char quote = '"';
  LineEnding line_ending = LineEnding::lf;
  bool has_header = true;

  friend bool operator==(const Dialect&, const Dialect&) = default;
};

// Throws UsageError unless the delimiter is one of comma, tab or semicolon
// and differs from the quote character.
void check_dialect(const Dialect& dialect);

struct DetectedDialect {
  Dialect dialect;
  // No candidate delimiter produced consistent field counts; the dialect
  // fell back to comma.
  bool inconsistent = false;
};

// Sniffs the first 20 records of `sample`. Throws FormatError on empty or
// non UTF-8 input.
DetectedDialect detect_dialect(std::string_view sample);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  Dialect dialect;
  std::optional<std::string> source;

  std::size_t width() const noexcept { return header.size(); }
  std::vector<std::string> column(std::size_t index) const;
  // Index of the column whose trimmed name equals `name`.
  std::optional<std::size_t> find_column(std::string_view name) const;

  // Source is provenance only and does not participate in equality.
  friend bool operator==(const CsvTable& a, const CsvTable& b) {
    return a.header == b.header && a.rows == b.rows && a.dialect == b.dialect;
  }
};

// Strips a UTF-8 BOM and rejects anything that is not valid UTF-8.
std::string_view require_utf8(std::string_view bytes);

// Parses `bytes` with the given dialect. Cells are kept byte-for-byte,
// including surrounding whitespace. Blank lines at the very end of the input
// are ignored. Throws FormatError for ragged rows, unterminated quotes and
// duplicate column names.
//
// When the dialect has no header, the columns are named column_1..column_n.
CsvTable parse_table(std::string_view bytes, const Dialect& dialect);

// Canonical form: LF line endings, a cell is quoted iff it contains the
// delimiter, the quote or a line break. A record consisting of a single
// empty cell is written as a quoted empty string so it survives reparsing.
std::string serialize_table(const CsvTable& table);

// Reads a data file the way every tool in this library does: the delimiter
// is sniffed (tab is preferred for .tsv files) and the first record is
// always the header.
CsvTable load_table(std::string_view bytes, std::string_view path_hint = {});

// True when a first record looks like data rather than column names: a cell
// is empty or numeric.
bool looks_headerless(std::span<const std::string> first_record);

// Tokens that commonly encode missing data.
const std::set<std::string>& missing_watchlist();

struct MissingProfile {
  std::size_t count = 0;               // cells matching a declared token
  std::set<std::string> seen;          // declared tokens that occurred
  std::set<std::string> suspects;      // undeclared watchlist tokens seen
  std::size_t suspect_count = 0;
};

// Exact, case-sensitive matching; "-99" does not match "-99.0".
MissingProfile detect_missing_tokens(std::span<const std::string> column,
                                     const std::set<std::string>& declared);

std::string trim(std::string_view text);

}  // namespace datashare
