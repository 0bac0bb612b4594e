#pragma once

// Table Schema metadata: the machine-readable description of one table.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "datashare/tabular.hpp"

namespace datashare {

enum class FieldType { string, integer, number, boolean, date };

std::string_view to_string(FieldType type) noexcept;
// Throws FormatError listing the allowed names for anything else.
FieldType parse_field_type(std::string_view name);
// "string,integer,number,boolean,date"
std::string_view allowed_field_types() noexcept;

// True when `cell` is a valid value of `type`.
bool accepts(FieldType type, std::string_view cell) noexcept;

struct FieldDescriptor {
  std::string name;
  FieldType type = FieldType::string;
  std::string description;                // empty when not documented
  std::map<std::string, std::string> codes;  // code -> label

  friend bool operator==(const FieldDescriptor&,
                         const FieldDescriptor&) = default;
};

struct TableSchema {
  std::string name;
  std::optional<std::string> path;
  std::vector<FieldDescriptor> fields;
  std::set<std::string> missing_values{"NA"};
  std::optional<std::string> license_id;

  const FieldDescriptor* find_field(std::string_view field_name) const;

  friend bool operator==(const TableSchema&, const TableSchema&) = default;
};

// Throws FormatError when field names are empty or repeated, or codes are
// attached to a type other than string or integer.
void check_schema(const TableSchema& schema);

// Narrowest type accepting every non-missing value, on the lattice
// integer < number < string, boolean < string, date < string. Vacuous input
// is string.
FieldType infer_field_type(std::span<const std::string> values,
                           const std::set<std::string>& missing_values);

// One field per column, in column order, named by the trimmed header.
// Throws FormatError for headerless tables and empty column names.
TableSchema infer_schema(const CsvTable& table,
                         const std::set<std::string>& missing_values = {"NA"});

enum class ViolationKind {
  type_mismatch,
  unknown_column,
  missing_column,
  bad_date_format,
  undeclared_missing_token,
};

std::string_view to_string(ViolationKind kind) noexcept;

struct Violation {
  std::optional<std::size_t> row;  // 1-based data row; none for column issues
  std::string field;
  ViolationKind kind;
  std::string value;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

// Column problems come first (row none), then cell problems ordered by
// data row and column position. Cells holding a declared missing value are
// never checked.
ValidationReport validate_table(const CsvTable& table,
                                const TableSchema& schema);

// Canonical JSON: keys in the order name, path, schema.fields, missingValues,
// license; two-space indentation, LF line endings, trailing newline. Optional
// members are omitted when empty. Field objects carry name, type,
// description and codes in that order.
std::string schema_to_json(const TableSchema& schema);

// Accepts the canonical form and any JSON object with the same keys. Throws
// FormatError naming the first absent key or unknown type.
TableSchema schema_from_json(std::string_view bytes);

}  // namespace datashare
