#pragma once

// Locale-free syntax of the cell value types.

#include <string_view>

namespace datashare {

// Optional sign followed by one or more ASCII digits.
bool is_integer_token(std::string_view text) noexcept;

// Decimal number with optional sign, fraction and exponent. No thousands
// separators, no "inf"/"nan".
bool is_number_token(std::string_view text) noexcept;

// true, false, TRUE or FALSE.
bool is_boolean_token(std::string_view text) noexcept;

// Exactly YYYY-MM-DD naming a real calendar day.
bool is_iso_date(std::string_view text) noexcept;

// Looks like an attempt at a date: three digit groups separated by '-', '/'
// or '.', e.g. "22-01-2019" or "2019/1/22".
bool looks_like_date(std::string_view text) noexcept;

// An integer with a redundant leading zero, e.g. "007". Such columns are
// often identifiers that should be kept as strings.
bool has_leading_zero(std::string_view text) noexcept;

// "10." followed by four or more digits, '/', and a suffix without
// whitespace, e.g. "10.5281/zenodo.1234567". Pattern only; nothing is
// resolved.
bool is_doi(std::string_view text) noexcept;

// True when a DOI as above occurs anywhere in `text`.
bool contains_doi(std::string_view text) noexcept;

}  // namespace datashare
