#include "datashare/csvy.hpp"

#include "datashare/error.hpp"
#include "schema_json.hpp"
#include "yaml_subset.hpp"

namespace datashare {

namespace {

using Json = nlohmann::ordered_json;

struct Line {
  std::string_view text;  // without terminator
  std::size_t next = 0;   // offset just past the terminator
};

Line line_at(std::string_view text, std::size_t pos) {
  std::size_t nl = text.find('\n', pos);
  Line line;
  if (nl == std::string_view::npos) {
    line.text = text.substr(pos);
    line.next = text.size();
  } else {
    line.text = text.substr(pos, nl - pos);
    line.next = nl + 1;
  }
  if (line.text.ends_with('\r')) line.text.remove_suffix(1);
  return line;
}

bool is_fence(std::string_view line) { return line == "---"; }

struct Split {
  std::optional<std::string> raw_yaml;
  std::string_view body;
};

Split split_front_matter(std::string_view text) {
  Split split;
  if (text.empty()) return split;
  Line first = line_at(text, 0);
  if (!is_fence(first.text)) {
    split.body = text;
    return split;
  }
  std::size_t pos = first.next;
  while (pos < text.size()) {
    Line line = line_at(text, pos);
    if (is_fence(line.text)) {
      split.raw_yaml = std::string(text.substr(first.next, pos - first.next));
      split.body = text.substr(line.next);
      return split;
    }
    pos = line.next;
  }
  throw FormatError("unterminated front matter: no closing '---' line");
}

std::optional<char> declared_delimiter(const Json& doc) {
  if (!doc.is_object()) return std::nullopt;
  auto it = doc.find("dialect");
  if (it == doc.end() || !it->is_object()) return std::nullopt;
  auto d = it->find("delimiter");
  if (d == it->end() || !d->is_string()) return std::nullopt;
  std::string value = d->get<std::string>();
  if (value.size() != 1) {
    throw FormatError("front matter dialect.delimiter must be one character");
  }
  return value[0];
}

}  // namespace

FrontMatter parse_front_matter(std::string raw_yaml) {
  FrontMatter front;
  Json doc = detail::parse_yaml_subset(raw_yaml);
  front.raw_yaml = std::move(raw_yaml);
  if (doc.is_null()) return front;
  if (!doc.is_object()) {
    throw FormatError("front matter must be a YAML mapping");
  }

  Json candidate = doc;
  bool has_schema = false;
  if (auto it = doc.find("schema");
      it != doc.end() && it->is_object() && it->contains("fields")) {
    has_schema = true;
  } else if (doc.contains("fields")) {
    has_schema = true;
    candidate.erase("fields");
    candidate["schema"] = Json{{"fields", doc["fields"]}};
  }
  if (has_schema) {
    // A csvy file names its own table; the key is optional here.
    if (!candidate.contains("name")) candidate["name"] = "";
    try {
      front.schema = detail::schema_from_json_value(candidate);
    } catch (const FormatError& e) {
      front.schema_error = e.what();
    }
  }
  return front;
}

std::pair<FrontMatter, CsvTable> parse_csvy(std::string_view bytes,
                                            std::optional<Dialect> dialect) {
  std::string_view text = require_utf8(bytes);
  Split split = split_front_matter(text);

  FrontMatter front;
  if (split.raw_yaml) {
    front = parse_front_matter(*split.raw_yaml);
    if (!dialect) {
      if (auto delimiter =
              declared_delimiter(detail::parse_yaml_subset(front.raw_yaml))) {
        Dialect d;
        d.delimiter = *delimiter;
        dialect = d;
      }
    }
  }

  bool blank_body = split.body.find_first_not_of("\r\n") == std::string_view::npos;
  if (blank_body) return {std::move(front), CsvTable{}};

  Dialect d = dialect ? *dialect : detect_dialect(split.body).dialect;
  d.has_header = true;
  return {std::move(front), parse_table(split.body, d)};
}

std::string serialize_csvy(const FrontMatter& front, const CsvTable& table) {
  std::string out;
  if (!front.empty()) {
    std::size_t pos = 0;
    while (pos < front.raw_yaml.size()) {
      Line line = line_at(front.raw_yaml, pos);
      if (is_fence(line.text)) {
        throw FormatError("front matter cannot contain a '---' line");
      }
      pos = line.next;
    }
    out += "---\n";
    out += front.raw_yaml;
    if (!front.raw_yaml.ends_with('\n')) out += '\n';
    out += "---\n";
  }
  out += serialize_table(table);
  return out;
}

CsvTable load_table(std::string_view bytes, std::string_view path_hint) {
  std::string_view text = require_utf8(bytes);
  CsvTable table;
  if (path_hint.ends_with(".csvy") || text.starts_with("---\n") ||
      text.starts_with("---\r\n")) {
    table = parse_csvy(text).second;
  } else {
    if (text.find_first_not_of("\r\n") == std::string_view::npos) {
      throw FormatError("table is empty (no header row)");
    }
    Dialect d = detect_dialect(text).dialect;
    if (path_hint.ends_with(".tsv")) d.delimiter = '\t';
    d.has_header = true;
    table = parse_table(text, d);
  }
  if (!path_hint.empty()) table.source = std::string(path_hint);
  return table;
}

}  // namespace datashare
