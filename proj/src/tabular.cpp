#include "datashare/tabular.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <unordered_set>

#include "datashare/error.hpp"
#include "datashare/values.hpp"
#include "record_reader.hpp"

namespace datashare {

namespace detail {

bool RecordReader::next(RawRecord& record) {
  if (pos_ >= text_.size()) return false;
  record.cells.clear();
  record.number = ++count_;
  record.blank = false;
  record.crlf = false;

  if (text_[pos_] == '\n' ||
      (text_[pos_] == '\r' && pos_ + 1 < text_.size() &&
       text_[pos_ + 1] == '\n')) {
    record.blank = true;
    record.crlf = text_[pos_] == '\r';
    record.cells.emplace_back();
    pos_ += record.crlf ? 2 : 1;
    return true;
  }

  std::string cell;
  while (true) {
    cell.clear();
    if (pos_ < text_.size() && text_[pos_] == quote_) {
      ++pos_;
      while (true) {
        if (pos_ >= text_.size()) {
          throw FormatError("unterminated quoted field", record.number);
        }
        char c = text_[pos_];
        if (c == quote_) {
          if (pos_ + 1 < text_.size() && text_[pos_ + 1] == quote_) {
            cell += quote_;
            pos_ += 2;
            continue;
          }
          ++pos_;
          break;
        }
        cell += c;
        ++pos_;
      }
      record.cells.push_back(cell);
      if (pos_ >= text_.size()) return true;
      char c = text_[pos_];
      if (c == delimiter_) {
        ++pos_;
        continue;
      }
      if (c == '\n') {
        ++pos_;
        return true;
      }
      if (c == '\r' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '\n') {
        record.crlf = true;
        pos_ += 2;
        return true;
      }
      throw FormatError("unexpected character after closing quote",
                        record.number);
    }

    std::size_t end = pos_;
    while (end < text_.size() && text_[end] != delimiter_ &&
           text_[end] != '\n') {
      ++end;
    }
    cell.assign(text_.substr(pos_, end - pos_));
    pos_ = end;
    if (pos_ >= text_.size()) {
      record.cells.push_back(cell);
      return true;
    }
    if (text_[pos_] == delimiter_) {
      record.cells.push_back(cell);
      ++pos_;
      continue;
    }
    // newline
    if (!cell.empty() && cell.back() == '\r') {
      cell.pop_back();
      record.crlf = true;
    }
    record.cells.push_back(cell);
    ++pos_;
    return true;
  }
}

}  // namespace detail

namespace {

constexpr std::array<char, 3> kDelimiters = {',', '\t', ';'};
constexpr std::size_t kSniffRecords = 20;

bool is_numeric(std::string_view cell) {
  return is_integer_token(cell) || is_number_token(cell);
}

struct Candidate {
  std::vector<std::vector<std::string>> records;
  bool first_crlf = false;
  std::size_t mode = 0;
  std::size_t matching = 0;
};

Candidate sniff(std::string_view text, char delimiter) {
  Candidate c;
  detail::RecordReader reader(text, delimiter, '"');
  detail::RawRecord record;
  try {
    while (c.records.size() < kSniffRecords && reader.next(record)) {
      if (record.blank) continue;
      if (c.records.empty()) c.first_crlf = record.crlf;
      c.records.push_back(record.cells);
    }
  } catch (const FormatError&) {
    // A broken quote ends the sample; what was read so far still counts.
  }
  std::map<std::size_t, std::size_t> freq;
  for (const auto& r : c.records) ++freq[r.size()];
  for (const auto& [count, n] : freq) {
    if (n >= c.matching) {
      c.mode = count;
      c.matching = n;
    }
  }
  return c;
}

bool sniff_header(const std::vector<std::vector<std::string>>& records) {
  if (records.size() < 2) return false;
  const auto& first = records.front();
  for (const auto& cell : first) {
    if (is_numeric(cell)) return false;
  }
  const auto& watch = missing_watchlist();
  for (std::size_t col = 0; col < first.size(); ++col) {
    bool any = false;
    bool all_numeric = true;
    for (std::size_t r = 1; r < records.size(); ++r) {
      if (col >= records[r].size()) continue;
      const std::string& cell = records[r][col];
      if (watch.count(cell)) continue;
      any = true;
      if (!is_numeric(cell)) {
        all_numeric = false;
        break;
      }
    }
    if (any && all_numeric) return true;
  }
  return false;
}

// Byte sequence validation per RFC 3629: no overlongs, no surrogates,
// nothing above U+10FFFF.
std::optional<std::size_t> first_invalid_utf8(std::string_view text) {
  std::size_t i = 0;
  const auto* s = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char c = s[i];
    if (c < 0x80) {
      ++i;
      continue;
    }
    std::size_t len;
    std::uint32_t cp;
    if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return i;
    }
    if (i + len > n) return i;
    for (std::size_t k = 1; k < len; ++k) {
      if ((s[i + k] & 0xC0) != 0x80) return i;
      cp = (cp << 6) | (s[i + k] & 0x3F);
    }
    static constexpr std::uint32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
      return i;
    }
    i += len;
  }
  return std::nullopt;
}

bool needs_quotes(std::string_view cell, const Dialect& dialect) {
  for (char c : cell) {
    if (c == dialect.delimiter || c == dialect.quote || c == '\n' ||
        c == '\r') {
      return true;
    }
  }
  return false;
}

void write_record(std::string& out, const std::vector<std::string>& cells,
                  const Dialect& dialect) {
  if (cells.size() == 1 && cells[0].empty()) {
    out += dialect.quote;
    out += dialect.quote;
    out += '\n';
    return;
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out += dialect.delimiter;
    const std::string& cell = cells[i];
    if (!needs_quotes(cell, dialect)) {
      out += cell;
      continue;
    }
    out += dialect.quote;
    for (char c : cell) {
      if (c == dialect.quote) out += dialect.quote;
      out += c;
    }
    out += dialect.quote;
  }
  out += '\n';
}

}  // namespace

void check_dialect(const Dialect& dialect) {
  if (std::find(kDelimiters.begin(), kDelimiters.end(), dialect.delimiter) ==
      kDelimiters.end()) {
    throw UsageError("delimiter must be comma, tab or semicolon");
  }
  if (dialect.delimiter == dialect.quote) {
    throw UsageError("delimiter and quote character must differ");
  }
  if (dialect.quote == '\n' || dialect.quote == '\r') {
    throw UsageError("quote character cannot be a line break");
  }
}

std::string trim(std::string_view text) {
  constexpr std::string_view kSpace = " \t\r\n\f\v";
  std::size_t b = text.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  std::size_t e = text.find_last_not_of(kSpace);
  return std::string(text.substr(b, e - b + 1));
}

std::string_view require_utf8(std::string_view bytes) {
  if (bytes.starts_with("\xEF\xBB\xBF")) bytes.remove_prefix(3);
  if (bytes.starts_with("\xFF\xFE") || bytes.starts_with("\xFE\xFF")) {
    throw FormatError(
        "input is UTF-16 encoded; only UTF-8 text is supported");
  }
  if (auto bad = first_invalid_utf8(bytes)) {
    throw FormatError("input is not valid UTF-8 (byte offset " +
                      std::to_string(*bad) +
                      "); only UTF-8 text is supported");
  }
  return bytes;
}

DetectedDialect detect_dialect(std::string_view sample) {
  sample = require_utf8(sample);
  if (sample.empty()) throw FormatError("cannot detect dialect of empty input");

  std::vector<Candidate> candidates;
  for (char d : kDelimiters) candidates.push_back(sniff(sample, d));

  std::optional<std::size_t> best;
  bool any_consistent = false;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Candidate& c = candidates[i];
    if (c.records.empty()) continue;
    if (c.matching == c.records.size()) any_consistent = true;
    if (c.mode < 2) continue;
    // matching/size compared by cross multiplication; earlier candidates win
    // ties, which encodes comma > tab > semicolon.
    if (!best || c.matching * candidates[*best].records.size() >
                     candidates[*best].matching * c.records.size()) {
      best = i;
    }
  }

  DetectedDialect out;
  std::size_t chosen = best.value_or(0);
  const Candidate& c = candidates[chosen];
  out.dialect.delimiter = kDelimiters[chosen];
  out.dialect.line_ending = c.first_crlf ? LineEnding::crlf : LineEnding::lf;
  out.dialect.has_header = sniff_header(c.records);
  if (best) {
    out.inconsistent = c.matching != c.records.size();
  } else {
    out.inconsistent = !any_consistent;
  }
  return out;
}

std::vector<std::string> CsvTable::column(std::size_t index) const {
  std::vector<std::string> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(row.at(index));
  return out;
}

std::optional<std::size_t> CsvTable::find_column(std::string_view name) const {
  std::string key = trim(name);
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (trim(header[i]) == key) return i;
  }
  return std::nullopt;
}

CsvTable parse_table(std::string_view bytes, const Dialect& dialect) {
  check_dialect(dialect);
  bytes = require_utf8(bytes);

  std::vector<detail::RawRecord> records;
  detail::RecordReader reader(bytes, dialect.delimiter, dialect.quote);
  detail::RawRecord record;
  while (reader.next(record)) records.push_back(record);
  while (!records.empty() && records.back().blank) records.pop_back();

  CsvTable table;
  table.dialect = dialect;
  if (!records.empty()) {
    table.dialect.line_ending =
        records.front().crlf ? LineEnding::crlf : LineEnding::lf;
  }
  if (records.empty()) {
    if (dialect.has_header) throw FormatError("table is empty (no header row)");
    return table;
  }

  std::size_t first_row = 0;
  if (dialect.has_header) {
    table.header = records.front().cells;
    first_row = 1;
    std::unordered_set<std::string> names;
    for (const auto& name : table.header) {
      if (!names.insert(trim(name)).second) {
        throw FormatError("duplicate column name '" + trim(name) + "'", 1);
      }
    }
  } else {
    for (std::size_t i = 0; i < records.front().cells.size(); ++i) {
      table.header.push_back("column_" + std::to_string(i + 1));
    }
  }

  table.rows.reserve(records.size() - first_row);
  for (std::size_t r = first_row; r < records.size(); ++r) {
    auto& cells = records[r].cells;
    if (cells.size() != table.header.size()) {
      throw FormatError("ragged row: expected " +
                            std::to_string(table.header.size()) +
                            " fields, found " + std::to_string(cells.size()),
                        records[r].number);
    }
    table.rows.push_back(std::move(cells));
  }
  return table;
}

std::string serialize_table(const CsvTable& table) {
  std::string out;
  if (table.dialect.has_header) write_record(out, table.header, table.dialect);
  for (const auto& row : table.rows) write_record(out, row, table.dialect);
  return out;
}

bool looks_headerless(std::span<const std::string> first_record) {
  return std::any_of(first_record.begin(), first_record.end(),
                     [](const std::string& cell) {
                       std::string t = trim(cell);
                       return t.empty() || is_numeric(t);
                     });
}

const std::set<std::string>& missing_watchlist() {
  static const std::set<std::string> kWatch = {"NA",   "N/A",     "",
                                               "-99",  "-999",    "unknown",
                                               "NULL", "."};
  return kWatch;
}

MissingProfile detect_missing_tokens(std::span<const std::string> column,
                                     const std::set<std::string>& declared) {
  MissingProfile profile;
  const auto& watch = missing_watchlist();
  for (const auto& cell : column) {
    if (declared.count(cell)) {
      ++profile.count;
      profile.seen.insert(cell);
    } else if (watch.count(cell)) {
      ++profile.suspect_count;
      profile.suspects.insert(cell);
    }
  }
  return profile;
}

}  // namespace datashare
