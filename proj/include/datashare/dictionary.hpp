#pragma once

// Human-readable data dictionaries: one record per variable, rendered as a
// CSV file for the repository and as a markdown table for the README.

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "datashare/schema.hpp"

namespace datashare {

struct DictionaryEntry {
  std::string variable_name;
  std::string label;
  std::string class_name;
  std::string description;
  std::map<std::string, std::string> codes;
  std::set<std::string> missing_codes;

  friend bool operator==(const DictionaryEntry&,
                         const DictionaryEntry&) = default;
};

struct DataDictionary {
  std::vector<DictionaryEntry> entries;

  const DictionaryEntry* find(std::string_view variable) const;

  friend bool operator==(const DataDictionary&,
                         const DataDictionary&) = default;
};

// Throws FormatError unless variable names are nonempty and distinct, every
// class is nonempty, and codes and missing tokens can be written in the
// "0 = no; 1 = yes" / "NA; -99" cell syntax (no ';' anywhere, no '=' in a
// code, no surrounding whitespace).
void check_dictionary(const DataDictionary& dict);

// Maps R classes onto the Table Schema vocabulary: character and factor to
// string, double and numeric to number, integer (including "integer (date)")
// to integer, logical to boolean, Date to date. Table Schema names pass
// through; anything else is returned unchanged.
std::string normalize_class(std::string_view class_name);

DataDictionary dictionary_from_schema(const TableSchema& schema);

// Header `variable,class,description,codes,missing_codes`; a `label` column
// is inserted after `variable` only when some entry has a label.
std::string dictionary_to_csv(const DataDictionary& dict);

// Reads a dictionary CSV. Column names are matched case-insensitively, so
// exports with `Variable,Class,Description` headers load as well; classes are
// normalized on import.
DataDictionary dictionary_from_csv(std::string_view bytes);

// Pipe table with header `| Variable | Class | Description |`, followed by
// Label, Codes and Missing columns when any entry uses them.
std::string dictionary_to_markdown(const DataDictionary& dict);

// "0 = no; 1 = yes"
std::string format_codes(const std::map<std::string, std::string>& codes);
std::map<std::string, std::string> parse_codes(std::string_view cell);

}  // namespace datashare
