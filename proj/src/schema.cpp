#include "datashare/schema.hpp"

#include <algorithm>
#include <array>
#include <filesystem>
#include <unordered_set>

#include "datashare/error.hpp"
#include "datashare/values.hpp"
#include "schema_json.hpp"

namespace datashare {

namespace {

constexpr std::array<FieldType, 5> kTypes = {
    FieldType::string, FieldType::integer, FieldType::number,
    FieldType::boolean, FieldType::date};

using Json = nlohmann::ordered_json;

const Json& require_key(const Json& object, const char* key,
                        const std::string& display) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw FormatError("table schema is missing required key \"" + display +
                      "\"");
  }
  return *it;
}

std::string require_string(const Json& value, const std::string& display) {
  if (!value.is_string()) {
    throw FormatError("table schema key \"" + display + "\" must be a string");
  }
  return value.get<std::string>();
}

}  // namespace

std::string_view to_string(FieldType type) noexcept {
  switch (type) {
    case FieldType::string: return "string";
    case FieldType::integer: return "integer";
    case FieldType::number: return "number";
    case FieldType::boolean: return "boolean";
    case FieldType::date: return "date";
  }
  return "string";
}

std::string_view allowed_field_types() noexcept {
  return "string,integer,number,boolean,date";
}

FieldType parse_field_type(std::string_view name) {
  for (FieldType t : kTypes) {
    if (to_string(t) == name) return t;
  }
  throw FormatError("unknown field type '" + std::string(name) +
                    "' (allowed: " + std::string(allowed_field_types()) + ")");
}

bool accepts(FieldType type, std::string_view cell) noexcept {
  switch (type) {
    case FieldType::string: return true;
    case FieldType::integer: return is_integer_token(cell);
    case FieldType::number: return is_number_token(cell);
    case FieldType::boolean: return is_boolean_token(cell);
    case FieldType::date: return is_iso_date(cell);
  }
  return false;
}

const FieldDescriptor* TableSchema::find_field(
    std::string_view field_name) const {
  for (const auto& f : fields) {
    if (f.name == field_name) return &f;
  }
  return nullptr;
}

void check_schema(const TableSchema& schema) {
  std::unordered_set<std::string> seen;
  for (const auto& field : schema.fields) {
    if (field.name.empty()) throw FormatError("field with empty name");
    if (!seen.insert(field.name).second) {
      throw FormatError("duplicate field name '" + field.name + "'");
    }
    if (!field.codes.empty() && field.type != FieldType::string &&
        field.type != FieldType::integer) {
      throw FormatError("field '" + field.name + "' of type " +
                        std::string(to_string(field.type)) +
                        " cannot carry value codes");
    }
  }
}

FieldType infer_field_type(std::span<const std::string> values,
                           const std::set<std::string>& missing_values) {
  bool any = false;
  bool integer = true, number = true, boolean = true, date = true;
  for (const auto& cell : values) {
    if (missing_values.count(cell)) continue;
    any = true;
    integer = integer && is_integer_token(cell);
    number = number && is_number_token(cell);
    boolean = boolean && is_boolean_token(cell);
    date = date && is_iso_date(cell);
    if (!number && !boolean && !date) break;
  }
  if (!any) return FieldType::string;
  if (integer) return FieldType::integer;
  if (number) return FieldType::number;
  if (boolean) return FieldType::boolean;
  if (date) return FieldType::date;
  return FieldType::string;
}

TableSchema infer_schema(const CsvTable& table,
                         const std::set<std::string>& missing_values) {
  if (!table.dialect.has_header) {
    throw FormatError(
        "schema inference needs a header row naming every column");
  }
  TableSchema schema;
  schema.missing_values = missing_values;
  if (table.source) {
    schema.name = std::filesystem::path(*table.source).stem().string();
  }
  for (std::size_t i = 0; i < table.width(); ++i) {
    FieldDescriptor field;
    field.name = trim(table.header[i]);
    if (field.name.empty()) {
      throw FormatError("column " + std::to_string(i + 1) +
                        " has an empty name");
    }
    auto values = table.column(i);
    field.type = infer_field_type(values, missing_values);
    schema.fields.push_back(std::move(field));
  }
  return schema;
}

std::string_view to_string(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::type_mismatch: return "type_mismatch";
    case ViolationKind::unknown_column: return "unknown_column";
    case ViolationKind::missing_column: return "missing_column";
    case ViolationKind::bad_date_format: return "bad_date_format";
    case ViolationKind::undeclared_missing_token:
      return "undeclared_missing_token";
  }
  return "type_mismatch";
}

ValidationReport validate_table(const CsvTable& table,
                                const TableSchema& schema) {
  ValidationReport report;

  // Column-level problems, in table order then schema order.
  std::vector<const FieldDescriptor*> bound(table.width(), nullptr);
  for (std::size_t i = 0; i < table.width(); ++i) {
    bound[i] = schema.find_field(trim(table.header[i]));
    if (!bound[i]) {
      report.violations.push_back({std::nullopt, trim(table.header[i]),
                                   ViolationKind::unknown_column, ""});
    }
  }
  for (const auto& field : schema.fields) {
    if (!table.find_column(field.name)) {
      report.violations.push_back(
          {std::nullopt, field.name, ViolationKind::missing_column, ""});
    }
  }

  const auto& watch = missing_watchlist();
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    for (std::size_t c = 0; c < table.width(); ++c) {
      const FieldDescriptor* field = bound[c];
      if (!field) continue;
      const std::string& cell = row[c];
      if (schema.missing_values.count(cell)) continue;
      if (accepts(field->type, cell)) continue;
      ViolationKind kind = ViolationKind::type_mismatch;
      if (watch.count(cell)) {
        kind = ViolationKind::undeclared_missing_token;
      } else if (field->type == FieldType::date) {
        kind = ViolationKind::bad_date_format;
      }
      report.violations.push_back({r + 1, field->name, kind, cell});
    }
  }
  return report;
}

namespace detail {

Json schema_to_json_value(const TableSchema& schema) {
  Json doc = Json::object();
  doc["name"] = schema.name;
  if (schema.path) doc["path"] = *schema.path;
  Json fields = Json::array();
  for (const auto& field : schema.fields) {
    Json f = Json::object();
    f["name"] = field.name;
    f["type"] = std::string(to_string(field.type));
    if (!field.description.empty()) f["description"] = field.description;
    if (!field.codes.empty()) {
      Json codes = Json::object();
      for (const auto& [code, label] : field.codes) codes[code] = label;
      f["codes"] = std::move(codes);
    }
    fields.push_back(std::move(f));
  }
  doc["schema"] = Json{{"fields", std::move(fields)}};
  Json missing = Json::array();
  for (const auto& token : schema.missing_values) missing.push_back(token);
  doc["missingValues"] = std::move(missing);
  if (schema.license_id) doc["license"] = *schema.license_id;
  return doc;
}

TableSchema schema_from_json_value(const Json& doc) {
  if (!doc.is_object()) throw FormatError("table schema must be a JSON object");
  TableSchema schema;
  schema.name = require_string(require_key(doc, "name", "name"), "name");

  if (auto it = doc.find("path"); it != doc.end() && !it->is_null()) {
    schema.path = require_string(*it, "path");
  }

  const Json& body = require_key(doc, "schema", "schema.fields");
  if (!body.is_object()) {
    throw FormatError("table schema key \"schema\" must be an object");
  }
  const Json& fields = require_key(body, "fields", "schema.fields");
  if (!fields.is_array()) {
    throw FormatError("table schema key \"schema.fields\" must be an array");
  }
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const Json& f = fields[i];
    std::string where = "schema.fields[" + std::to_string(i) + "]";
    if (!f.is_object()) throw FormatError(where + " must be an object");
    FieldDescriptor field;
    field.name = require_string(require_key(f, "name", where + ".name"),
                                where + ".name");
    if (auto it = f.find("type"); it != f.end()) {
      field.type = parse_field_type(require_string(*it, where + ".type"));
    }
    if (auto it = f.find("description"); it != f.end() && !it->is_null()) {
      field.description = require_string(*it, where + ".description");
    }
    if (auto it = f.find("codes"); it != f.end() && !it->is_null()) {
      if (!it->is_object()) {
        throw FormatError(where + ".codes must be an object");
      }
      for (const auto& [code, label] : it->items()) {
        field.codes[code] = require_string(label, where + ".codes." + code);
      }
    }
    schema.fields.push_back(std::move(field));
  }

  if (auto it = doc.find("missingValues"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) {
      throw FormatError("table schema key \"missingValues\" must be an array");
    }
    schema.missing_values.clear();
    for (const auto& token : *it) {
      schema.missing_values.insert(require_string(token, "missingValues[]"));
    }
  }
  if (auto it = doc.find("license"); it != doc.end() && !it->is_null()) {
    schema.license_id = require_string(*it, "license");
  }
  check_schema(schema);
  return schema;
}

}  // namespace detail

std::string schema_to_json(const TableSchema& schema) {
  check_schema(schema);
  return detail::schema_to_json_value(schema).dump(2) + "\n";
}

TableSchema schema_from_json(std::string_view bytes) {
  bytes = require_utf8(bytes);
  Json doc;
  try {
    doc = Json::parse(bytes);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("invalid JSON: ") + e.what());
  }
  return detail::schema_from_json_value(doc);
}

}  // namespace datashare
