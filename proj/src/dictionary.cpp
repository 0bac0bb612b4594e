#include "datashare/dictionary.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_set>

#include "datashare/error.hpp"
#include "datashare/tabular.hpp"

namespace datashare {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool padded(std::string_view text) { return trim(text) != text; }

std::string format_missing(const std::set<std::string>& tokens) {
  std::string out;
  for (const auto& token : tokens) {
    if (!out.empty()) out += "; ";
    out += token.empty() ? std::string("\"\"") : token;
  }
  return out;
}

std::set<std::string> parse_missing(std::string_view cell) {
  std::set<std::string> out;
  std::size_t pos = 0;
  if (trim(cell).empty()) return out;
  while (pos <= cell.size()) {
    std::size_t semi = cell.find(';', pos);
    std::string part = trim(cell.substr(
        pos, semi == std::string_view::npos ? std::string_view::npos
                                            : semi - pos));
    out.insert(part == "\"\"" ? std::string() : part);
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return out;
}

std::string markdown_cell(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n') {
      out += "<br>";
    } else if (c != '\r') {
      out += c;
    }
  }
  return out;
}

void markdown_row(std::string& out, const std::vector<std::string>& cells) {
  out += '|';
  for (const auto& cell : cells) {
    out += ' ';
    out += markdown_cell(cell);
    out += " |";
  }
  out += '\n';
}

std::optional<std::size_t> find_header(const CsvTable& table,
                                       std::initializer_list<const char*> names) {
  for (std::size_t i = 0; i < table.width(); ++i) {
    std::string key = lower(trim(table.header[i]));
    for (const char* name : names) {
      if (key == name) return i;
    }
  }
  return std::nullopt;
}

}  // namespace

const DictionaryEntry* DataDictionary::find(std::string_view variable) const {
  for (const auto& e : entries) {
    if (e.variable_name == variable) return &e;
  }
  return nullptr;
}

void check_dictionary(const DataDictionary& dict) {
  std::unordered_set<std::string> names;
  for (const auto& e : dict.entries) {
    if (e.variable_name.empty()) {
      throw FormatError("dictionary entry with empty variable name");
    }
    if (!names.insert(e.variable_name).second) {
      throw FormatError("duplicate dictionary variable '" + e.variable_name +
                        "'");
    }
    if (padded(e.variable_name) || padded(e.class_name)) {
      throw FormatError("dictionary variable '" + e.variable_name +
                        "' has surrounding whitespace in its name or class");
    }
    if (e.class_name.empty()) {
      throw FormatError("dictionary variable '" + e.variable_name +
                        "' has no class");
    }
    for (const auto& [code, label] : e.codes) {
      if (code.empty() || padded(code) || padded(label) ||
          code.find_first_of("=;") != std::string::npos ||
          label.find(';') != std::string::npos) {
        throw FormatError("dictionary variable '" + e.variable_name +
                          "' has a code that cannot be written as "
                          "'code = label'");
      }
    }
    for (const auto& token : e.missing_codes) {
      if (padded(token) || token == "\"\"" ||
          token.find(';') != std::string::npos) {
        throw FormatError("dictionary variable '" + e.variable_name +
                          "' has an unrepresentable missing code '" + token +
                          "'");
      }
    }
  }
}

std::string normalize_class(std::string_view class_name) {
  std::string key = trim(class_name);
  std::string folded = lower(key);
  if (folded == "character" || folded == "factor" || folded == "string") {
    return "string";
  }
  if (folded == "double" || folded == "numeric" || folded == "number") {
    return "number";
  }
  if (folded == "integer" || folded.starts_with("integer (")) return "integer";
  if (folded == "logical" || folded == "boolean") return "boolean";
  if (folded == "date") return "date";
  return key;
}

DataDictionary dictionary_from_schema(const TableSchema& schema) {
  DataDictionary dict;
  for (const auto& field : schema.fields) {
    DictionaryEntry e;
    e.variable_name = field.name;
    e.class_name = std::string(to_string(field.type));
    e.description = field.description;
    e.codes = field.codes;
    e.missing_codes = schema.missing_values;
    dict.entries.push_back(std::move(e));
  }
  return dict;
}

std::string format_codes(const std::map<std::string, std::string>& codes) {
  std::string out;
  for (const auto& [code, label] : codes) {
    if (!out.empty()) out += "; ";
    out += code;
    out += " = ";
    out += label;
  }
  return out;
}

std::map<std::string, std::string> parse_codes(std::string_view cell) {
  std::map<std::string, std::string> out;
  if (trim(cell).empty()) return out;
  std::size_t pos = 0;
  while (pos <= cell.size()) {
    std::size_t semi = cell.find(';', pos);
    std::string_view part = cell.substr(
        pos, semi == std::string_view::npos ? std::string_view::npos
                                            : semi - pos);
    std::size_t eq = part.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError("code '" + trim(part) +
                        "' is not written as 'code = label'");
    }
    out[trim(part.substr(0, eq))] = trim(part.substr(eq + 1));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  return out;
}

std::string dictionary_to_csv(const DataDictionary& dict) {
  check_dictionary(dict);
  bool labels = std::any_of(dict.entries.begin(), dict.entries.end(),
                            [](const auto& e) { return !e.label.empty(); });
  CsvTable table;
  table.header = {"variable"};
  if (labels) table.header.push_back("label");
  table.header.insert(table.header.end(),
                      {"class", "description", "codes", "missing_codes"});
  for (const auto& e : dict.entries) {
    std::vector<std::string> row = {e.variable_name};
    if (labels) row.push_back(e.label);
    row.insert(row.end(), {e.class_name, e.description, format_codes(e.codes),
                           format_missing(e.missing_codes)});
    table.rows.push_back(std::move(row));
  }
  return serialize_table(table);
}

DataDictionary dictionary_from_csv(std::string_view bytes) {
  CsvTable table = load_table(bytes, "dictionary.csv");
  auto variable = find_header(table, {"variable", "variable_name", "name"});
  auto klass = find_header(table, {"class", "type"});
  if (!variable) throw FormatError("dictionary has no 'variable' column");
  if (!klass) throw FormatError("dictionary has no 'class' column");
  auto label = find_header(table, {"label", "variable_label"});
  auto description = find_header(table, {"description"});
  auto codes = find_header(table, {"codes", "value_codes"});
  auto missing = find_header(table, {"missing_codes", "missing"});

  DataDictionary dict;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    DictionaryEntry e;
    e.variable_name = trim(row[*variable]);
    e.class_name = normalize_class(row[*klass]);
    if (label) e.label = row[*label];
    if (description) e.description = row[*description];
    try {
      if (codes) e.codes = parse_codes(row[*codes]);
    } catch (const FormatError& err) {
      throw FormatError(err.what(), r + 2);
    }
    if (missing) e.missing_codes = parse_missing(row[*missing]);
    dict.entries.push_back(std::move(e));
  }
  check_dictionary(dict);
  return dict;
}

std::string dictionary_to_markdown(const DataDictionary& dict) {
  bool labels = false, codes = false, missing = false;
  for (const auto& e : dict.entries) {
    labels = labels || !e.label.empty();
    codes = codes || !e.codes.empty();
    missing = missing || !e.missing_codes.empty();
  }
  std::vector<std::string> header = {"Variable", "Class", "Description"};
  if (labels) header.push_back("Label");
  if (codes) header.push_back("Codes");
  if (missing) header.push_back("Missing");

  std::string out;
  markdown_row(out, header);
  out += '|';
  for (std::size_t i = 0; i < header.size(); ++i) out += "---|";
  out += '\n';
  for (const auto& e : dict.entries) {
    std::vector<std::string> row = {e.variable_name, e.class_name,
                                    e.description};
    if (labels) row.push_back(e.label);
    if (codes) row.push_back(format_codes(e.codes));
    if (missing) row.push_back(format_missing(e.missing_codes));
    markdown_row(out, row);
  }
  return out;
}

}  // namespace datashare
