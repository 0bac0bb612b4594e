#include "datashare/values.hpp"

#include <cstddef>

namespace datashare {

namespace {

bool is_digit(char c) noexcept { return c >= '0' && c <= '9'; }

std::size_t skip_sign(std::string_view text) noexcept {
  return !text.empty() && (text[0] == '+' || text[0] == '-') ? 1 : 0;
}

std::size_t count_digits(std::string_view text, std::size_t pos) noexcept {
  std::size_t n = 0;
  while (pos + n < text.size() && is_digit(text[pos + n])) ++n;
  return n;
}

int parse_fixed(std::string_view text) noexcept {
  int value = 0;
  for (char c : text) value = value * 10 + (c - '0');
  return value;
}

}  // namespace

bool is_integer_token(std::string_view text) noexcept {
  std::size_t pos = skip_sign(text);
  std::size_t digits = count_digits(text, pos);
  return digits > 0 && pos + digits == text.size();
}

bool is_number_token(std::string_view text) noexcept {
  std::size_t pos = skip_sign(text);
  std::size_t int_digits = count_digits(text, pos);
  pos += int_digits;
  std::size_t frac_digits = 0;
  if (pos < text.size() && text[pos] == '.') {
    ++pos;
    frac_digits = count_digits(text, pos);
    pos += frac_digits;
  }
  if (int_digits + frac_digits == 0) return false;
  if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
    ++pos;
    pos += skip_sign(text.substr(pos));
    std::size_t exp_digits = count_digits(text, pos);
    if (exp_digits == 0) return false;
    pos += exp_digits;
  }
  return pos == text.size();
}

bool is_boolean_token(std::string_view text) noexcept {
  return text == "true" || text == "false" || text == "TRUE" ||
         text == "FALSE";
}

bool is_iso_date(std::string_view text) noexcept {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!is_digit(text[i])) return false;
  }
  int year = parse_fixed(text.substr(0, 4));
  int month = parse_fixed(text.substr(5, 2));
  int day = parse_fixed(text.substr(8, 2));
  if (month < 1 || month > 12 || day < 1) return false;
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30,
                                  31, 31, 30, 31, 30, 31};
  bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  int limit = kDays[month - 1] + (month == 2 && leap ? 1 : 0);
  return day <= limit;
}

bool looks_like_date(std::string_view text) noexcept {
  std::size_t pos = 0;
  for (int group = 0; group < 3; ++group) {
    std::size_t digits = count_digits(text, pos);
    if (digits == 0 || digits > 4) return false;
    pos += digits;
    if (group < 2) {
      if (pos >= text.size()) return false;
      char sep = text[pos];
      if (sep != '-' && sep != '/' && sep != '.') return false;
      ++pos;
    }
  }
  return pos == text.size();
}

bool has_leading_zero(std::string_view text) noexcept {
  if (!is_integer_token(text)) return false;
  std::size_t pos = skip_sign(text);
  return text.size() - pos > 1 && text[pos] == '0';
}

namespace {

bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

// Length of the DOI starting at `pos`, or 0.
std::size_t doi_length(std::string_view text, std::size_t pos) noexcept {
  if (text.substr(pos, 3) != "10.") return 0;
  std::size_t i = pos + 3;
  std::size_t digits = count_digits(text, i);
  if (digits < 4) return 0;
  i += digits;
  if (i >= text.size() || text[i] != '/') return 0;
  std::size_t end = ++i;
  while (end < text.size() && !is_space(text[end])) ++end;
  return end > i ? end - pos : 0;
}

}  // namespace

bool is_doi(std::string_view text) noexcept {
  return !text.empty() && doi_length(text, 0) == text.size();
}

bool contains_doi(std::string_view text) noexcept {
  for (std::size_t pos = text.find("10."); pos != std::string_view::npos;
       pos = text.find("10.", pos + 1)) {
    if (doi_length(text, pos)) return true;
  }
  return false;
}

}  // namespace datashare
