#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace datashare::detail {

struct RawRecord {
  std::vector<std::string> cells;
  std::size_t number = 0;  // 1-based
  bool blank = false;      // physical empty line
  bool crlf = false;
};

// Splits text into RFC 4180 records. Quoted fields may span lines; a doubled
// quote inside a quoted field is one literal quote.
class RecordReader {
 public:
  RecordReader(std::string_view text, char delimiter, char quote)
      : text_(text), delimiter_(delimiter), quote_(quote) {}

  // False once the input is exhausted. Throws FormatError on an unterminated
  // quote or stray bytes after a closing quote.
  bool next(RawRecord& record);

 private:
  std::string_view text_;
  char delimiter_;
  char quote_;
  std::size_t pos_ = 0;
  std::size_t count_ = 0;
};

}  // namespace datashare::detail
