#include "datashare/scaffold.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>

#include "datashare/checksum.hpp"
#include "datashare/csvy.hpp"
#include "datashare/error.hpp"
#include "datashare/tabular.hpp"
#include "datashare/values.hpp"
#include "walk.hpp"

namespace fs = std::filesystem;

namespace datashare {

namespace {

std::string lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

void check_name(std::string_view what, std::string_view name) {
  auto fail = [&](const std::string& why) {
    throw UsageError(std::string(what) + " '" + std::string(name) + "' " +
                     why);
  };
  if (name.empty()) fail("is empty");
  for (unsigned char c : name) {
    if (!std::isalnum(c) && c != '.' && c != '_' && c != '-') {
      fail("may only contain letters, digits, '.', '_' and '-'");
    }
  }
  if (name.front() == '.') fail("must not start with '.'");
}

void check_dataset_name(std::string_view name) {
  check_name("dataset name", name);
  std::string key = lower(name.substr(0, name.find('.')));
  if (key == "readme") {
    throw UsageError("dataset name '" + std::string(name) +
                     "' would be read as a README");
  }
  if (is_dictionary_name(std::string(name) + ".csv")) {
    throw UsageError("dataset name '" + std::string(name) +
                     "' would be read as a data dictionary (it ends in "
                     "dictionary, codebook or dict)");
  }
}

bool is_orcid(std::string_view id) {
  if (id.size() != 19) return false;
  for (std::size_t i = 0; i < id.size(); ++i) {
    char c = id[i];
    if (i % 5 == 4) {
      if (c != '-') return false;
    } else if (!std::isdigit(static_cast<unsigned char>(c)) &&
               !(i == 18 && c == 'X')) {
      return false;
    }
  }
  return true;
}

std::string seed_extension(const fs::path& seed) {
  return lower(seed.extension().string());
}

struct DatasetPlan {
  std::string name;
  std::string data_path;  // relative, e.g. data/demographics.csv
  std::optional<std::string> seed_bytes;
  TableSchema schema;
  DataDictionary dictionary;
};

// Dataset name -> data file path, in name order.
std::map<std::string, std::string> data_paths(const ScaffoldRequest& req) {
  std::map<std::string, std::string> out;
  for (const auto& name : req.dataset_names) {
    out[name] = "data/" + name + ".csv";
  }
  for (const auto& seed : req.seed_tables) {
    out[seed.stem().string()] =
        "data/" + seed.stem().string() + seed_extension(seed);
  }
  return out;
}

TableSchema schema_from_seed(const std::string& name, const fs::path& seed,
                             std::string_view bytes) {
  std::string_view text = require_utf8(bytes);
  CsvTable table;
  std::optional<TableSchema> declared;
  if (seed_extension(seed) == ".csvy" || text.starts_with("---\n") ||
      text.starts_with("---\r\n")) {
    auto [front, body] = parse_csvy(text);
    if (front.schema_error) {
      throw FormatError("seed " + seed.string() +
                        " has an invalid schema in its front matter: " +
                        *front.schema_error);
    }
    declared = front.schema;
    table = std::move(body);
  } else {
    table = load_table(text, seed.string());
  }
  if (table.header.empty() || looks_headerless(table.header)) {
    throw FormatError("seed " + seed.string() + " has no header row");
  }

  TableSchema schema = declared ? std::move(*declared) : infer_schema(table);
  ValidationReport report = validate_table(table, schema);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    throw FormatError("seed " + seed.string() +
                      " does not match the schema in its front matter: "
                      "field '" +
                      v.field + "' " + std::string(to_string(v.kind)));
  }
  schema.name = name;
  return schema;
}

TableSchema placeholder_schema(const std::string& name) {
  TableSchema schema;
  schema.name = name;
  schema.fields.push_back(
      {"id", FieldType::integer, "Row identifier; replace this placeholder "
                                 "with the real columns", {}});
  return schema;
}

std::string tidy_script(const std::string& name,
                        const std::string& data_path) {
  return "# Turns the files in data-raw/ into " + data_path + ".\n"
         "# Keep the raw files unchanged; every cleaning step belongs here.\n"
         "\n"
         "# raw <- read.csv(\"data-raw/" + name + "-raw.csv\")\n"
         "# tidy <- raw\n"
         "# write.csv(tidy, \"" + data_path + "\", row.names = FALSE, "
         "na = \"NA\")\n";
}

std::string bibtex_field(std::string_view value) {
  std::string out;
  for (char c : value) {
    if (c == '{' || c == '}') out += '\\';
    out += c;
  }
  return out;
}

std::string citation_stub(const ScaffoldRequest& req) {
  std::string key;
  for (char c : req.package_name) {
    if (std::isalnum(static_cast<unsigned char>(c))) key += c;
  }
  if (key.empty()) key = "data";
  std::string authors;
  for (const auto& a : req.authors) {
    if (!authors.empty()) authors += " and ";
    authors += bibtex_field(a.name);
  }
  std::string out = "@misc{" + key + ",\n";
  out += "  title = {" + bibtex_field(req.package_name) + "},\n";
  if (!authors.empty()) out += "  author = {" + authors + "},\n";
  if (req.year) out += "  year = {" + std::to_string(*req.year) + "},\n";
  out += "  doi = {" + *req.doi + "},\n";
  out += "  url = {https://doi.org/" + *req.doi + "}\n";
  out += "}\n";
  return out;
}

void write_bytes(const fs::path& path, const std::string& bytes) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot write file");
  out << bytes;
  if (!out) throw IoError(path.string(), "error while writing file");
}

void require_empty_destination(const fs::path& dest) {
  std::error_code ec;
  auto status = fs::symlink_status(dest, ec);
  if (ec || !fs::exists(status)) return;
  if (!fs::is_directory(status)) {
    throw UsageError("destination exists and is not a directory: " +
                     dest.string());
  }
  if (!fs::is_empty(dest, ec) || ec) {
    throw UsageError("destination is not empty: " + dest.string());
  }
}

}  // namespace

void check_request(const ScaffoldRequest& req) {
  check_name("package name", req.package_name);
  if (req.dataset_names.empty() && req.seed_tables.empty()) {
    throw UsageError("at least one dataset name or seed table is required");
  }
  std::set<std::string> names;
  for (const auto& name : req.dataset_names) {
    check_dataset_name(name);
    if (!names.insert(name).second) {
      throw UsageError("dataset '" + name + "' is listed twice");
    }
  }
  std::set<std::string> seeds;
  for (const auto& seed : req.seed_tables) {
    std::string stem = seed.stem().string();
    check_dataset_name(stem);
    if (!seeds.insert(stem).second) {
      throw UsageError("two seed tables would both become data/" + stem +
                       ".*");
    }
    if (classify_file("data/" + seed.filename().string()) !=
        FileKind::plain_text_table) {
      throw UsageError("seed " + seed.string() +
                       " is not a plain-text table (.csv, .tsv, .txt, "
                       ".csvy)");
    }
  }
  if (req.license == LicenseKind::unknown) {
    throw UsageError("unknown license (choose one of: cc0, ccby, odbl)");
  }
  for (const auto& a : req.authors) {
    if (trim(a.name).empty() ||
        a.name.find_first_of("\r\n") != std::string::npos) {
      throw UsageError("author names must be nonempty single lines");
    }
    if (a.orcid && !is_orcid(*a.orcid)) {
      throw UsageError("'" + *a.orcid +
                       "' is not an ORCID iD (0000-0000-0000-000X)");
    }
  }
  if (req.doi && !is_doi(*req.doi)) {
    throw UsageError("'" + *req.doi +
                     "' is not a DOI (expected 10.<4+ digits>/<suffix>)");
  }
}

std::string render_readme(
    const ScaffoldRequest& req,
    const std::map<std::string, DataDictionary>& dictionaries) {
  std::map<std::string, std::string> paths = data_paths(req);
  std::string out;
  out += "# " + req.package_name + "\n\n";
  out += "<!-- Optional: keywords: ... -->\n";
  out += "<!-- Optional: funders: ... -->\n\n";

  out += "## Who\n\n";
  if (req.authors.empty()) {
    out += "_List the people who collected and prepared the data._\n";
  }
  for (const auto& a : req.authors) {
    out += "- " + a.name;
    if (a.orcid) {
      out += " ([ORCID](https://orcid.org/" + *a.orcid + "))";
    }
    out += '\n';
  }
  out += "\n";

  out += "## What\n\n";
  out += "_Describe the data and what each dataset measures._\n\n";
  out += "Analysis-ready tables are in `data/`, their Table Schema metadata "
         "in `metadata/`, and raw inputs with the scripts that tidy them in "
         "`data-raw/`.\n";
  for (const auto& [name, dict] : dictionaries) {
    out += "\n### Dataset: " + name + "\n\n";
    auto path = paths.find(name);
    if (path != paths.end()) out += "File: `" + path->second + "`  \n";
    out += "Dictionary: [metadata/" + name + "-dictionary.csv](metadata/" +
           name + "-dictionary.csv)  \n";
    out += "Schema: [metadata/" + name + ".json](metadata/" + name +
           ".json)\n\n";
    out += dictionary_to_markdown(dict);
  }
  out += "\n";

  out += "## When\n\n_State when the data were collected._\n\n";
  out += "## Where\n\n_State where the data were collected._\n\n";
  out += "## Why\n\n_Explain the purpose of collecting the data._\n\n";
  out += "## How\n\n_Explain how the data were collected and processed; the "
         "cleaning scripts live in `data-raw/`._\n\n";

  out += "## License\n\n";
  out += "The data are released under " +
         std::string(display_name(req.license)) + " (" +
         std::string(spdx_id(req.license)) + "); see [LICENSE](LICENSE).\n\n";

  out += "## Citation\n\n";
  if (req.doi) {
    out += "Please cite the data as given in [citation.bib](citation.bib), "
           "DOI [" +
           *req.doi + "](https://doi.org/" + *req.doi + ").\n\n";
  } else {
    out += "There is no citation file yet. A citation can only be tracked "
           "through a DOI, so add `citation.bib` after depositing the data "
           "in an archive that mints one.\n\n";
  }

  out += "## Checksums\n\n";
  out += "`checksums.txt` lists the MD5 digest of every file. Check a copy "
         "with `md5sum -c checksums.txt`.\n";
  return out;
}

DataPackage scaffold(const ScaffoldRequest& req, const fs::path& dest) {
  check_request(req);
  require_empty_destination(dest);

  std::map<std::string, fs::path> seed_for;
  for (const auto& seed : req.seed_tables) seed_for[seed.stem().string()] = seed;

  std::string spdx(spdx_id(req.license));
  std::map<std::string, DataDictionary> dictionaries;
  std::map<std::string, std::string> files;  // relative path -> bytes
  for (const auto& [name, data_path] : data_paths(req)) {
    TableSchema schema;
    auto seed = seed_for.find(name);
    if (seed != seed_for.end()) {
      std::string bytes = detail::read_file(seed->second);
      schema = schema_from_seed(name, seed->second, bytes);
      files[data_path] = std::move(bytes);
    } else {
      schema = placeholder_schema(name);
      files[data_path] = "id\n";
    }
    schema.path = data_path;
    schema.license_id = spdx;
    DataDictionary dict = dictionary_from_schema(schema);
    files["metadata/" + name + ".json"] = schema_to_json(schema);
    files["metadata/" + name + "-dictionary.csv"] = dictionary_to_csv(dict);
    files["data-raw/" + name + "-tidy.R"] = tidy_script(name, data_path);
    dictionaries.emplace(name, std::move(dict));
  }
  files["README.md"] = render_readme(req, dictionaries);
  files["LICENSE"] = std::string(license_text(req.license));
  if (req.doi) files["citation.bib"] = citation_stub(req);

  fs::create_directories(dest);
  for (const auto& [rel, bytes] : files) write_bytes(dest / rel, bytes);
  write_manifest(dest / kManifestFile, compute_manifest(dest));
  return scan_package(dest);
}

}  // namespace datashare
