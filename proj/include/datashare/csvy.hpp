#pragma once

// csvy: a CSV body preceded by an optional YAML front-matter block fenced by
// lines consisting exactly of "---".

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "datashare/schema.hpp"
#include "datashare/tabular.hpp"

namespace datashare {

struct FrontMatter {
  // Text between the fences, byte for byte, including its final newline.
  std::string raw_yaml;
  // Extracted from `schema.fields` (or a top-level `fields` list) when the
  // front matter carries one.
  std::optional<TableSchema> schema;
  // Set instead of `schema` when the front matter has fields that do not
  // form a valid Table Schema.
  std::optional<std::string> schema_error;

  bool empty() const noexcept { return raw_yaml.empty(); }

  friend bool operator==(const FrontMatter&, const FrontMatter&) = default;
};

// Interprets front matter text. Supports mappings, sequences and plain or
// quoted scalars; anchors, aliases, tags and multiple documents are
// rejected. Throws FormatError carrying the YAML parser message when the
// text is not a mapping.
FrontMatter parse_front_matter(std::string raw_yaml);

// Without an explicit dialect the delimiter comes from the front matter's
// `dialect.delimiter` when present, otherwise it is sniffed; the body always
// has a header row.
std::pair<FrontMatter, CsvTable> parse_csvy(
    std::string_view bytes, std::optional<Dialect> dialect = std::nullopt);

// Empty front matter emits no fences. Throws FormatError when the front
// matter itself contains a fence line.
std::string serialize_csvy(const FrontMatter& front, const CsvTable& table);

}  // namespace datashare
