#include "datashare/lint.hpp"

#include <algorithm>
#include <cctype>
#include <regex>
#include <set>

#include <json.hpp>

#include "datashare/checksum.hpp"
#include "datashare/csvy.hpp"
#include "datashare/dictionary.hpp"
#include "datashare/error.hpp"
#include "datashare/schema.hpp"
#include "datashare/tabular.hpp"
#include "datashare/values.hpp"
#include "schema_json.hpp"
#include "walk.hpp"
#include "yaml_subset.hpp"

namespace fs = std::filesystem;

namespace datashare {

namespace {

constexpr std::uintmax_t kReleaseAssetLimit = 2'000'000'000;
constexpr std::uintmax_t kArchiveFileLimit = 50'000'000'000;
constexpr std::size_t kLongName = 32;

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

std::string extension_of(std::string_view path) {
  std::string name = fs::path(std::string(path)).filename().string();
  std::size_t dot = name.rfind('.');
  if (dot == std::string::npos || dot == 0) return {};
  return lower(name.substr(dot + 1));
}

std::string join(const std::vector<std::string>& parts,
                 std::string_view sep = ", ") {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string single_quoted(std::string_view value) {
  return "'" + std::string(value) + "'";
}

// ---------------------------------------------------------------------------
// Everything the rules read, loaded once.

struct TableInfo {
  const Dataset* dataset = nullptr;
  FileRef file;
  std::optional<CsvTable> table;
  std::optional<FrontMatter> front;
  std::string error;
};

struct MetadataInfo {
  const Dataset* owner = nullptr;  // null for pooled metadata
  FileRef file;
  std::optional<TableSchema> schema;
  std::string error;
  std::optional<std::string> target;  // table the schema describes
};

struct DictionaryInfo {
  FileRef file;
  std::optional<DataDictionary> dictionary;
  std::string error;
};

struct Context {
  const DataPackage& pkg;
  std::vector<TableInfo> tables;
  std::vector<MetadataInfo> metadata;
  std::vector<DictionaryInfo> dictionaries;

  explicit Context(const DataPackage& p) : pkg(p) {}

  std::vector<const DictionaryInfo*> dictionaries_for(
      const Dataset& ds) const {
    std::vector<const DictionaryInfo*> out;
    for (const auto& d : dictionaries) {
      bool own = std::find(ds.attached.dictionary_files.begin(),
                           ds.attached.dictionary_files.end(),
                           d.file) != ds.attached.dictionary_files.end();
      bool pooled = std::find(pkg.pool.dictionary_files.begin(),
                              pkg.pool.dictionary_files.end(),
                              d.file) != pkg.pool.dictionary_files.end();
      if (own || pooled) out.push_back(&d);
    }
    return out;
  }

  // The schema that describes a table: its own csvy front matter first,
  // then the first metadata file that targets it.
  const TableSchema* schema_for(const TableInfo& t) const {
    if (t.front && t.front->schema) return &*t.front->schema;
    for (const auto& m : metadata) {
      if (m.schema && m.target == t.file.path) return &*m.schema;
    }
    return nullptr;
  }
};

bool is_csv_dictionary(const FileRef& f) {
  std::string ext = extension_of(f.path);
  return ext == "csv" || ext == "tsv";
}

bool is_schema_file(const FileRef& f) {
  std::string ext = extension_of(f.path);
  return ext == "json" || ext == "yml" || ext == "yaml";
}

TableSchema read_schema_file(const fs::path& path, const std::string& rel) {
  std::string bytes = detail::read_file(path);
  std::string ext = extension_of(rel);
  if (ext == "json") return schema_from_json(bytes);
  nlohmann::ordered_json doc = detail::parse_yaml_subset(bytes);
  TableSchema schema = detail::schema_from_json_value(doc);
  check_schema(schema);
  return schema;
}

Context load_context(const DataPackage& pkg) {
  Context ctx(pkg);
  for (const auto& ds : pkg.datasets) {
    for (const auto& f : ds.data_files) {
      if (f.kind != FileKind::plain_text_table) continue;
      TableInfo info;
      info.dataset = &ds;
      info.file = f;
      try {
        std::string bytes = detail::read_file(pkg.root / f.path);
        std::string_view text = require_utf8(bytes);
        if (extension_of(f.path) == "csvy" || text.starts_with("---\n") ||
            text.starts_with("---\r\n")) {
          auto [front, table] = parse_csvy(text);
          if (table.header.empty()) {
            throw FormatError("table is empty (no header row)");
          }
          info.front = std::move(front);
          info.table = std::move(table);
        } else {
          info.table = load_table(text, f.path);
        }
      } catch (const FormatError& e) {
        info.error = e.what();
      }
      ctx.tables.push_back(std::move(info));
    }
  }

  auto add_metadata = [&](const Dataset* owner, const FileRef& f) {
    if (!is_schema_file(f)) return;
    MetadataInfo info;
    info.owner = owner;
    info.file = f;
    try {
      info.schema = read_schema_file(pkg.root / f.path, f.path);
    } catch (const FormatError& e) {
      info.error = e.what();
    }
    if (info.schema && info.schema->path) {
      info.target = *info.schema->path;
    } else if (info.schema && owner) {
      for (const auto& df : owner->data_files) {
        if (df.kind == FileKind::plain_text_table) {
          info.target = df.path;
          break;
        }
      }
    }
    ctx.metadata.push_back(std::move(info));
  };
  for (const auto& ds : pkg.datasets) {
    for (const auto& f : ds.attached.metadata_files) add_metadata(&ds, f);
  }
  for (const auto& f : pkg.pool.metadata_files) add_metadata(nullptr, f);

  auto add_dictionary = [&](const FileRef& f) {
    if (!is_csv_dictionary(f)) return;
    DictionaryInfo info;
    info.file = f;
    try {
      info.dictionary =
          dictionary_from_csv(detail::read_file(pkg.root / f.path));
    } catch (const FormatError& e) {
      info.error = e.what();
    }
    ctx.dictionaries.push_back(std::move(info));
  };
  for (const auto& ds : pkg.datasets) {
    for (const auto& f : ds.attached.dictionary_files) add_dictionary(f);
  }
  for (const auto& f : pkg.pool.dictionary_files) add_dictionary(f);
  return ctx;
}

// ---------------------------------------------------------------------------
// Rules

using Findings = std::vector<Finding>;

Finding make(std::string_view rule, Severity severity,
             std::optional<std::string> path, std::string detail,
             std::map<std::string, std::string> data = {}) {
  return {std::string(rule), severity, std::move(path), std::move(detail),
          std::move(data)};
}

void r01_readme(const Context& ctx, Findings& out) {
  if (ctx.pkg.readme) return;
  if (!ctx.pkg.other_readmes.empty()) {
    out.push_back(make("R01", Severity::warning, ctx.pkg.other_readmes[0].path,
                       "README found only below the top level; move it to "
                       "the package root"));
    return;
  }
  out.push_back(make("R01", Severity::error, std::nullopt,
                     "no README at the top level of the package"));
}

void r02_readme_questions(const Context& ctx, Findings& out) {
  if (!ctx.pkg.readme) return;
  static const std::vector<std::pair<std::string, std::regex>> kQuestions = [] {
    std::vector<std::pair<std::string, std::regex>> q;
    for (const auto& [name, pattern] :
         std::vector<std::pair<const char*, const char*>>{
             {"who", R"(\b(who|author))"},
             {"what", R"(\b(what|data))"},
             {"when", R"(\b(when|date))"},
             {"where", R"(\b(where|location))"},
             {"why", R"(\b(why|purpose))"},
             {"how", R"(\b(how|method))"}}) {
      q.emplace_back(name, std::regex(pattern, std::regex::ECMAScript));
    }
    return q;
  }();
  std::string text =
      lower(detail::read_file(ctx.pkg.root / ctx.pkg.readme->path));
  std::vector<std::string> missing;
  for (const auto& [name, re] : kQuestions) {
    if (!std::regex_search(text, re)) missing.push_back(name);
  }
  if (missing.empty()) return;
  out.push_back(make("R02", Severity::warning, ctx.pkg.readme->path,
                     "README does not address: " + join(missing),
                     {{"missing", join(missing, ",")}}));
}

void r03_dictionary_present(const Context& ctx, Findings& out) {
  for (const auto& d : ctx.dictionaries) {
    if (!d.dictionary) {
      out.push_back(make("R03", Severity::error, d.file.path,
                         "data dictionary cannot be read: " + d.error));
    }
  }
  if (ctx.pkg.datasets.empty()) {
    if (ctx.dictionaries.empty()) {
      out.push_back(make("R03", Severity::error, std::nullopt,
                         "no data dictionary in CSV form"));
    }
    return;
  }
  for (const auto& ds : ctx.pkg.datasets) {
    if (ctx.dictionaries_for(ds).empty()) {
      out.push_back(make("R03", Severity::error, ds.data_files[0].path,
                         "dataset '" + ds.name +
                             "' has no data dictionary in CSV form",
                         {{"dataset", ds.name}}));
    }
  }
}

void r04_dictionary_coverage(const Context& ctx, Findings& out) {
  for (const auto& t : ctx.tables) {
    if (!t.table) continue;
    std::set<std::string> documented;
    for (const auto* d : ctx.dictionaries_for(*t.dataset)) {
      if (!d->dictionary) continue;
      for (const auto& e : d->dictionary->entries) {
        documented.insert(e.variable_name);
      }
    }
    std::vector<std::string> missing;
    for (const auto& column : t.table->header) {
      std::string name = trim(column);
      if (!documented.count(name)) missing.push_back(name);
    }
    if (missing.empty()) continue;
    out.push_back(make("R04", Severity::error, t.file.path,
                       "data dictionary does not describe column" +
                           std::string(missing.size() > 1 ? "s " : " ") +
                           join(missing),
                       {{"columns", join(missing, ",")}}));
  }
}

void r05_license_present(const Context& ctx, Findings& out) {
  if (ctx.pkg.license) return;
  out.push_back(make("R05", Severity::error, std::nullopt,
                     "no LICENSE or LICENSE.md at the top level"));
}

void r06_license_recognized(const Context& ctx, Findings& out) {
  if (!ctx.pkg.license || ctx.pkg.license->detected != LicenseKind::unknown) {
    return;
  }
  out.push_back(make("R06", Severity::warning, ctx.pkg.license->path,
                     "license text is not recognised as CC BY 4.0, CC0 1.0 "
                     "or ODbL 1.0"));
}

void r07_citation(const Context& ctx, Findings& out) {
  if (!ctx.pkg.citation) {
    out.push_back(make("R07", Severity::warning, std::nullopt,
                       "no citation file; add one once the data has a DOI"));
    return;
  }
  std::string text = detail::read_file(ctx.pkg.root / ctx.pkg.citation->path);
  if (contains_doi(text)) return;
  out.push_back(make("R07", Severity::info, ctx.pkg.citation->path,
                     "citation file has no DOI"));
}

void r08_metadata_present(const Context& ctx, Findings& out) {
  for (const auto& ds : ctx.pkg.datasets) {
    bool described = false;
    for (const auto& m : ctx.metadata) {
      if (m.owner == &ds) described = true;
      for (const auto& f : ds.data_files) {
        if (m.target == f.path) described = true;
      }
    }
    for (const auto& t : ctx.tables) {
      if (t.dataset == &ds && t.front && t.front->schema) described = true;
    }
    if (described) continue;
    out.push_back(make("R08", Severity::warning, ds.data_files[0].path,
                       "dataset '" + ds.name +
                           "' has no machine-readable metadata in metadata/",
                       {{"dataset", ds.name}}));
  }
}

void report_violations(const std::string& metadata_path,
                       const std::string& table_path,
                       const ValidationReport& report, Findings& out) {
  struct Group {
    std::size_t count = 0;
    const Violation* first = nullptr;
  };
  std::map<std::pair<std::string, ViolationKind>, Group> groups;
  for (const auto& v : report.violations) {
    auto& g = groups[{v.field, v.kind}];
    if (!g.first) g.first = &v;
    ++g.count;
  }
  for (const auto& [key, g] : groups) {
    const auto& [field, kind] = key;
    std::string detail = table_path + " does not match " + metadata_path +
                         ": field " + single_quoted(field) + " " +
                         std::string(to_string(kind));
    if (g.first->row) {
      detail += " in " + std::to_string(g.count) + " row" +
                (g.count > 1 ? "s" : "") + " (first: row " +
                std::to_string(*g.first->row) + ", value " +
                single_quoted(g.first->value) + ")";
    }
    std::map<std::string, std::string> data = {
        {"field", field},
        {"kind", std::string(to_string(kind))},
        {"count", std::to_string(g.count)},
        {"table", table_path}};
    if (g.first->row) data["first_row"] = std::to_string(*g.first->row);
    out.push_back(make("R09", Severity::error, metadata_path,
                       std::move(detail), std::move(data)));
  }
}

void r09_metadata_valid(const Context& ctx, Findings& out) {
  for (const auto& m : ctx.metadata) {
    if (!m.schema) {
      out.push_back(make("R09", Severity::error, m.file.path,
                         "metadata is not a valid Table Schema: " + m.error));
      continue;
    }
    if (!m.target) {
      out.push_back(make("R09", Severity::warning, m.file.path,
                         "metadata has no 'path' and belongs to no single "
                         "dataset, so it cannot be checked against a table"));
      continue;
    }
    fs::path target;
    try {
      target = resolve_inside(ctx.pkg.root, *m.target);
    } catch (const UsageError& e) {
      out.push_back(make("R09", Severity::error, m.file.path, e.what()));
      continue;
    }
    auto known = std::find_if(ctx.tables.begin(), ctx.tables.end(),
                              [&](const TableInfo& t) {
                                return t.file.path == *m.target;
                              });
    std::optional<CsvTable> table;
    if (known != ctx.tables.end()) {
      // Unreadable tables are reported by R12.
      if (!known->table) continue;
      table = known->table;
    } else {
      std::error_code ec;
      if (!fs::is_regular_file(fs::symlink_status(target, ec))) {
        out.push_back(make("R09", Severity::error, m.file.path,
                           "metadata describes " + *m.target +
                               ", which does not exist"));
        continue;
      }
      try {
        table = load_table(detail::read_file(target), *m.target);
      } catch (const FormatError& e) {
        out.push_back(make("R09", Severity::error, m.file.path,
                           "cannot read " + *m.target + ": " + e.what()));
        continue;
      }
    }
    report_violations(m.file.path, *m.target,
                      validate_table(*table, *m.schema), out);
  }

  for (const auto& t : ctx.tables) {
    if (!t.front) continue;
    if (t.front->schema_error) {
      out.push_back(make("R09", Severity::error, t.file.path,
                         "front matter is not a valid Table Schema: " +
                             *t.front->schema_error));
    } else if (t.front->schema && t.table) {
      report_violations(t.file.path, t.file.path,
                        validate_table(*t.table, *t.front->schema), out);
    }
  }
}

bool any_raw(const DataPackage& pkg) {
  if (!pkg.pool.raw_files.empty()) return true;
  return std::any_of(pkg.datasets.begin(), pkg.datasets.end(),
                     [](const Dataset& d) {
                       return !d.attached.raw_files.empty();
                     });
}

void r10_raw_data(const Context& ctx, Findings& out) {
  if (any_raw(ctx.pkg)) return;
  out.push_back(make("R10", Severity::info, std::nullopt,
                     "no raw data under data-raw/"));
}

void r11_scripts(const Context& ctx, Findings& out) {
  if (!any_raw(ctx.pkg)) return;
  auto documented = [](const FilePool& p) {
    return !p.scripts.empty() || !p.notes.empty();
  };
  if (documented(ctx.pkg.pool)) return;
  for (const auto& ds : ctx.pkg.datasets) {
    if (documented(ds.attached)) return;
  }
  out.push_back(make("R11", Severity::warning, std::nullopt,
                     "raw data in data-raw/ has no cleaning scripts or "
                     "processing notes"));
}

void r12_analysis_data(const Context& ctx, Findings& out) {
  if (ctx.pkg.datasets.empty()) {
    out.push_back(make("R12", Severity::error, std::nullopt,
                       "no analysis-ready data under data/"));
    return;
  }
  for (const auto& ds : ctx.pkg.datasets) {
    bool plain = std::any_of(
        ds.data_files.begin(), ds.data_files.end(),
        [](const FileRef& f) { return f.kind == FileKind::plain_text_table; });
    for (const auto& f : ds.data_files) {
      if (f.kind != FileKind::binary_data) continue;
      std::string format = extension_of(f.path);
      if (plain) {
        out.push_back(make("R12", Severity::warning, f.path,
                           "binary format ." + format +
                               " alongside a plain-text copy",
                           {{"format", format}}));
      } else {
        out.push_back(make("R12", Severity::error, f.path,
                           "dataset '" + ds.name +
                               "' is only available in binary format ." +
                               format + "; share it as CSV",
                           {{"format", format}, {"dataset", ds.name}}));
      }
    }
  }
  for (const auto& t : ctx.tables) {
    if (!t.table) {
      out.push_back(make("R12", Severity::error, t.file.path,
                         "table cannot be read: " + t.error));
      continue;
    }
    for (std::size_t c = 0; c < t.table->width(); ++c) {
      std::vector<std::string> values = t.table->column(c);
      bool integers = !values.empty();
      bool zeros = false;
      for (const auto& v : values) {
        if (v == "NA" || v.empty()) continue;
        if (!is_integer_token(v)) {
          integers = false;
          break;
        }
        zeros = zeros || has_leading_zero(v);
      }
      if (!integers || !zeros) continue;
      std::string column = trim(t.table->header[c]);
      out.push_back(make("R12", Severity::info, t.file.path,
                         "column " + single_quoted(column) +
                             " has integer values with leading zeros, which "
                             "many readers drop; consider a string type",
                         {{"column", column}}));
    }
  }
}

bool plain_name(std::string_view name) {
  return std::all_of(name.begin(), name.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_' || c == '.';
  });
}

void r13_column_names(const Context& ctx, Findings& out) {
  for (const auto& t : ctx.tables) {
    if (!t.table) continue;
    std::vector<std::string> bad;
    std::vector<std::string> long_names;
    for (const auto& column : t.table->header) {
      if (column.empty() || trim(column) != column || !plain_name(column)) {
        bad.push_back(single_quoted(column));
      } else if (column.size() > kLongName) {
        long_names.push_back(column);
      }
    }
    if (!bad.empty()) {
      out.push_back(make("R13", Severity::warning, t.file.path,
                         "column names with spaces or special characters: " +
                             join(bad),
                         {{"columns", join(bad, ",")}}));
    }
    if (!long_names.empty()) {
      out.push_back(
          make("R13", Severity::info, t.file.path,
               "column names longer than " + std::to_string(kLongName) +
                   " characters: " + join(long_names),
               {{"columns", join(long_names, ",")}}));
    }
  }
}

void r14_dates(const Context& ctx, Findings& out) {
  for (const auto& t : ctx.tables) {
    if (!t.table) continue;
    const TableSchema* schema = ctx.schema_for(t);
    std::set<std::string> missing =
        schema ? schema->missing_values : std::set<std::string>{"NA"};
    for (std::size_t c = 0; c < t.table->width(); ++c) {
      std::string column = trim(t.table->header[c]);
      const FieldDescriptor* field =
          schema ? schema->find_field(column) : nullptr;
      bool declared = field && field->type == FieldType::date;
      std::size_t bad = 0;
      const std::string* first = nullptr;
      for (const auto& row : t.table->rows) {
        const std::string& v = row[c];
        if (missing.count(v) || is_iso_date(v)) continue;
        if (!declared && !looks_like_date(v)) continue;
        if (!first) first = &v;
        ++bad;
      }
      if (!bad) continue;
      out.push_back(make("R14", Severity::warning, t.file.path,
                         "column " + single_quoted(column) + " has " +
                             std::to_string(bad) +
                             " date value(s) not in YYYY-MM-DD form, e.g. " +
                             single_quoted(*first),
                         {{"column", column},
                          {"count", std::to_string(bad)},
                          {"example", *first}}));
    }
  }
}

void r15_missing_tokens(const Context& ctx, Findings& out) {
  for (const auto& t : ctx.tables) {
    if (!t.table) continue;
    const TableSchema* schema = ctx.schema_for(t);
    auto dictionaries = ctx.dictionaries_for(*t.dataset);
    for (std::size_t c = 0; c < t.table->width(); ++c) {
      std::string column = trim(t.table->header[c]);
      std::set<std::string> declared =
          schema ? schema->missing_values : std::set<std::string>{"NA"};
      for (const auto* d : dictionaries) {
        if (!d->dictionary) continue;
        if (const auto* e = d->dictionary->find(column)) {
          declared.insert(e->missing_codes.begin(), e->missing_codes.end());
        }
      }
      std::vector<std::string> values = t.table->column(c);
      MissingProfile profile = detect_missing_tokens(values, declared);
      for (const auto& token : profile.suspects) {
        std::size_t n = static_cast<std::size_t>(
            std::count(values.begin(), values.end(), token));
        out.push_back(make("R15", Severity::warning, t.file.path,
                           "column " + single_quoted(column) + " uses " +
                               (token.empty() ? std::string("empty cells")
                                              : single_quoted(token)) +
                               " (" + std::to_string(n) +
                               "x) but it is not declared as a missing code",
                           {{"column", column},
                            {"token", token},
                            {"count", std::to_string(n)}}));
      }
    }
  }
}

void r16_checksums(const Context& ctx, Findings& out) {
  if (!ctx.pkg.manifest) {
    out.push_back(make("R16", Severity::warning, std::nullopt,
                       "no checksums.txt manifest"));
    return;
  }
  const std::string& path = ctx.pkg.manifest->path;
  ChecksumManifest manifest;
  try {
    manifest = read_manifest(ctx.pkg.root / path);
  } catch (const FormatError& e) {
    out.push_back(make("R16", Severity::warning, path,
                       std::string("checksum manifest cannot be read: ") +
                           e.what()));
    return;
  }
  VerifyReport report = verify_manifest(ctx.pkg.root, manifest);
  for (const auto& p : report.mismatched) {
    out.push_back(make("R16", Severity::warning, p,
                       "MD5 digest does not match checksums.txt"));
  }
  for (const auto& p : report.missing) {
    out.push_back(make("R16", Severity::warning, p,
                       "listed in checksums.txt but missing"));
  }
  for (const auto& p : report.extra) {
    out.push_back(make("R16", Severity::info, p,
                       "not listed in checksums.txt"));
  }
}

void r17_sizes(const Context& ctx, Findings& out) {
  for (const auto& f : ctx.pkg.all_files()) {
    if (f.size_bytes > kReleaseAssetLimit) {
      out.push_back(make("R17", Severity::info, f.path,
                         "larger than 2 GB; split it into chunks before "
                         "attaching it to a release",
                         {{"size_bytes", std::to_string(f.size_bytes)},
                          {"limit", std::to_string(kReleaseAssetLimit)}}));
    }
    if (f.size_bytes > kArchiveFileLimit) {
      out.push_back(make("R17", Severity::info, f.path,
                         "larger than 50 GB, beyond common archive per-file "
                         "limits",
                         {{"size_bytes", std::to_string(f.size_bytes)},
                          {"limit", std::to_string(kArchiveFileLimit)}}));
    }
  }
}

void r18_code_conflicts(const Context& ctx, Findings& out) {
  struct Coded {
    std::string path;
    const DictionaryEntry* entry;
  };
  std::vector<Coded> coded;
  for (const auto& d : ctx.dictionaries) {
    if (!d.dictionary) continue;
    for (const auto& e : d.dictionary->entries) {
      if (e.codes.size() >= 2) coded.push_back({d.file.path, &e});
    }
  }
  auto keys = [](const DictionaryEntry& e) {
    std::set<std::string> s;
    for (const auto& [k, v] : e.codes) s.insert(k);
    return s;
  };
  auto labels = [](const DictionaryEntry& e) {
    std::multiset<std::string> s;
    for (const auto& [k, v] : e.codes) s.insert(v);
    return s;
  };
  for (std::size_t i = 0; i < coded.size(); ++i) {
    for (std::size_t j = i + 1; j < coded.size(); ++j) {
      const auto& a = *coded[i].entry;
      const auto& b = *coded[j].entry;
      if (a.codes == b.codes || keys(a) != keys(b) ||
          labels(a) != labels(b)) {
        continue;
      }
      out.push_back(make("R18", Severity::info, coded[j].path,
                         "variables " + single_quoted(a.variable_name) + " and " +
                             single_quoted(b.variable_name) +
                             " use the same codes and labels with different "
                             "meanings: " +
                             format_codes(a.codes) + " vs " +
                             format_codes(b.codes),
                         {{"first", a.variable_name},
                          {"second", b.variable_name}}));
    }
  }
}

using RuleFn = void (*)(const Context&, Findings&);

struct RegisteredRule {
  LintRule rule;
  RuleFn check;
};

const std::vector<RegisteredRule>& registry() {
  static const std::vector<RegisteredRule> kRules = {
      {{"R00", "internal rule failure", Severity::error,
        "internal: a rule could not be evaluated"},
       nullptr},
      {{"R01", "README at the top level", Severity::error,
        "readme: README file in the package root"},
       r01_readme},
      {{"R02", "README answers the six questions", Severity::warning,
        "readme-questions: who, what, when, where, why, how"},
       r02_readme_questions},
      {{"R03", "CSV data dictionary per dataset", Severity::error,
        "dictionary: one CSV data dictionary for each dataset"},
       r03_dictionary_present},
      {{"R04", "dictionary covers every column", Severity::error,
        "dictionary-coverage: every column of every table documented"},
       r04_dictionary_coverage},
      {{"R05", "LICENSE at the top level", Severity::error,
        "license: LICENSE or LICENSE.md in the package root"},
       r05_license_present},
      {{"R06", "license recognised", Severity::warning,
        "license-text: CC BY 4.0, CC0 1.0 or ODbL 1.0 in full"},
       r06_license_recognized},
      {{"R07", "citation file with DOI", Severity::warning,
        "citation: citation file, added once a DOI exists"},
       r07_citation},
      {{"R08", "machine-readable metadata per dataset", Severity::warning,
        "metadata: Table Schema for each dataset in metadata/"},
       r08_metadata_present},
      {{"R09", "metadata valid against its table", Severity::error,
        "metadata-valid: schema parses and matches its table"},
       r09_metadata_valid},
      {{"R10", "raw data shared", Severity::info,
        "raw-data: original data kept under data-raw/"},
       r10_raw_data},
      {{"R11", "cleaning scripts with raw data", Severity::warning,
        "scripts: processing code next to the raw data in data-raw/"},
       r11_scripts},
      {{"R12", "plain-text analysis data", Severity::error,
        "analysis-data: plain-text tables under data/, not binary formats"},
       r12_analysis_data},
      {{"R13", "column names", Severity::warning,
        "column-names: short, letters, digits, '_' and '.' only"},
       r13_column_names},
      {{"R14", "ISO dates", Severity::warning,
        "dates: YYYY-MM-DD"},
       r14_dates},
      {{"R15", "missing codes declared", Severity::warning,
        "missing-values: every missing-value code documented"},
       r15_missing_tokens},
      {{"R16", "checksum manifest verifies", Severity::warning,
        "checksums: MD5 manifest matching the shared files"},
       r16_checksums},
      {{"R17", "file size limits", Severity::info,
        "file-size: 2 GB release attachments, 50 GB archive files"},
       r17_sizes},
      {{"R18", "consistent value codes", Severity::info,
        "codes: the same code means the same thing across variables"},
       r18_code_conflicts},
  };
  return kRules;
}

}  // namespace

std::string_view to_string(Severity severity) noexcept {
  switch (severity) {
    case Severity::info: return "info";
    case Severity::warning: return "warning";
    case Severity::error: return "error";
  }
  return "error";
}

std::optional<Severity> parse_severity(std::string_view name) noexcept {
  if (name == "info") return Severity::info;
  if (name == "warning") return Severity::warning;
  if (name == "error") return Severity::error;
  return std::nullopt;
}

const std::vector<LintRule>& lint_rules() {
  static const std::vector<LintRule> kRules = [] {
    std::vector<LintRule> out;
    for (const auto& r : registry()) out.push_back(r.rule);
    return out;
  }();
  return kRules;
}

const LintRule* find_rule(std::string_view id) {
  for (const auto& r : lint_rules()) {
    if (r.id == id) return &r;
  }
  return nullptr;
}

LintReport make_report(std::vector<Finding> findings) {
  std::sort(findings.begin(), findings.end(),
            [](const Finding& a, const Finding& b) {
              if (a.severity != b.severity) return a.severity > b.severity;
              if (a.rule_id != b.rule_id) return a.rule_id < b.rule_id;
              if (a.path != b.path) return a.path < b.path;  // nullopt first
              return a.detail < b.detail;
            });
  LintReport report;
  for (const auto& f : findings) {
    ++report.counts[static_cast<std::size_t>(f.severity)];
  }
  report.findings = std::move(findings);
  return report;
}

LintConfig parse_lint_config(std::string_view text) {
  LintConfig config;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (std::size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    std::string content = trim(line);
    if (content.empty()) continue;

    std::string where = "lint config line " + std::to_string(line_no) + ": ";
    std::size_t eq = content.find('=');
    if (eq == std::string::npos) {
      throw UsageError(where + "expected 'RULE = off|error|warning|info'");
    }
    std::string id = trim(std::string_view(content).substr(0, eq));
    std::string value = lower(trim(std::string_view(content).substr(eq + 1)));
    const LintRule* rule = find_rule(id);
    if (!rule) throw UsageError(where + "unknown rule '" + id + "'");
    if (value == "off") {
      config.overrides[id] = std::nullopt;
      continue;
    }
    auto severity = parse_severity(value);
    if (!severity) {
      throw UsageError(where + "unknown value '" + value +
                       "' (allowed: off, error, warning, info)");
    }
    if (*severity > rule->severity) {
      throw UsageError(where + id + " cannot be raised above " +
                       std::string(to_string(rule->severity)));
    }
    config.overrides[id] = severity;
  }
  return config;
}

LintReport lint_package(const DataPackage& pkg, const LintConfig& config) {
  Findings findings;
  Findings internal;
  std::optional<Context> ctx;
  try {
    ctx.emplace(load_context(pkg));
  } catch (const std::exception& e) {
    internal.push_back(make("R00", Severity::error, std::nullopt,
                            std::string("cannot load package contents: ") +
                                e.what()));
  }

  if (ctx) {
    for (const auto& r : registry()) {
      if (!r.check) continue;
      auto it = config.overrides.find(r.rule.id);
      if (it != config.overrides.end() && !it->second) continue;
      Findings produced;
      try {
        r.check(*ctx, produced);
      } catch (const std::exception& e) {
        internal.push_back(make("R00", Severity::error, std::nullopt,
                                "rule " + r.rule.id + " failed: " + e.what(),
                                {{"rule", r.rule.id}}));
        continue;
      }
      for (auto& f : produced) {
        f.severity = std::min(f.severity, r.rule.severity);
        if (it != config.overrides.end()) {
          f.severity = std::min(f.severity, *it->second);
        }
        findings.push_back(std::move(f));
      }
    }
  }

  auto r00 = config.overrides.find("R00");
  for (auto& f : internal) {
    if (r00 != config.overrides.end()) {
      if (!r00->second) continue;
      f.severity = std::min(f.severity, *r00->second);
    }
    findings.push_back(std::move(f));
  }
  return make_report(std::move(findings));
}

std::string report_to_json(const LintReport& report) {
  nlohmann::ordered_json doc;
  doc["pass"] = report.pass();
  doc["counts"] = {{"error", report.count(Severity::error)},
                   {"warning", report.count(Severity::warning)},
                   {"info", report.count(Severity::info)}};
  doc["findings"] = nlohmann::ordered_json::array();
  for (const auto& f : report.findings) {
    nlohmann::ordered_json item;
    item["rule_id"] = f.rule_id;
    item["severity"] = to_string(f.severity);
    item["path"] = f.path ? nlohmann::ordered_json(*f.path)
                          : nlohmann::ordered_json(nullptr);
    item["detail"] = f.detail;
    if (!f.machine_data.empty()) item["data"] = f.machine_data;
    doc["findings"].push_back(std::move(item));
  }
  return doc.dump(2, ' ', false, nlohmann::ordered_json::error_handler_t::replace) +
         "\n";
}

std::string report_to_text(const LintReport& report, bool color) {
  static constexpr const char* kColor[] = {"\033[36m", "\033[33m",
                                           "\033[31m"};
  static constexpr const char* kHeading[] = {"info", "warnings", "errors"};
  std::string out;
  for (int s = 2; s >= 0; --s) {
    auto severity = static_cast<Severity>(s);
    std::size_t n = report.count(severity);
    if (n == 0) continue;
    if (!out.empty()) out += '\n';
    if (color) out += kColor[s];
    out += std::string(kHeading[s]) + " (" + std::to_string(n) + ")";
    if (color) out += "\033[0m";
    out += '\n';
    for (const auto& f : report.findings) {
      if (f.severity != severity) continue;
      out += "  " + f.rule_id + "  ";
      if (f.path) out += *f.path + ": ";
      out += f.detail + '\n';
      if (const LintRule* rule = find_rule(f.rule_id)) {
        out += "       see " + rule->anchor + '\n';
      }
    }
  }
  if (!out.empty()) out += '\n';
  out += report.pass() ? "PASS" : "FAIL";
  out += ": " + std::to_string(report.count(Severity::error)) + " error(s), " +
         std::to_string(report.count(Severity::warning)) + " warning(s), " +
         std::to_string(report.count(Severity::info)) + " info\n";
  return out;
}

}  // namespace datashare
