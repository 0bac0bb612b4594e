#include "datashare/cli.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "datashare/archive.hpp"
#include "datashare/checksum.hpp"
#include "datashare/chunk.hpp"
#include "datashare/dictionary.hpp"
#include "datashare/error.hpp"
#include "datashare/license.hpp"
#include "datashare/lint.hpp"
#include "datashare/package.hpp"
#include "datashare/scaffold.hpp"
#include "datashare/schema.hpp"
#include "datashare/tabular.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace datashare::cli {

namespace {

std::string read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path.string(), "cannot read file");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "error while reading file");
  return buf.str();
}

void write_all(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot write file");
  out << bytes;
  if (!out) throw IoError(path.string(), "error while writing file");
}

std::string dump(const Json& doc) {
  return doc.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

// Looks for `--format json` before parsing so that even a malformed
// command line is answered in JSON.
bool wants_json(const std::vector<std::string>& args) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format=json") return true;
    if (args[i] == "--format" && i + 1 < args.size() && args[i + 1] == "json") {
      return true;
    }
  }
  return false;
}

Author parse_author(const std::string& text) {
  Author a;
  std::size_t colon = text.rfind(':');
  if (colon == std::string::npos) {
    a.name = text;
  } else {
    a.name = text.substr(0, colon);
    a.orcid = text.substr(colon + 1);
  }
  return a;
}

struct Options {
  std::string format = "text";

  std::string init_dest;
  std::string init_name;
  std::vector<std::string> init_datasets;
  std::string init_license;
  std::vector<std::string> init_authors;
  std::string init_doi;
  std::vector<std::string> init_seeds;
  int init_year = 0;

  std::string lint_dir = ".";
  std::string lint_config;
  bool lint_strict = false;

  std::string table;
  std::string schema_file;
  std::vector<std::string> missing;

  std::string dict_path;
  std::string dict_to = "markdown";

  std::string dir = ".";
  std::string manifest;

  std::string chunk_file;
  std::size_t max_rows = 0;

  std::vector<std::string> chunks;
  std::string output;

  bool require_lint = false;
};

class Runner {
 public:
  Runner(const Options& o, Streams s) : o_(o), s_(s), json_(o.format == "json") {}

  int init() {
    ScaffoldRequest req;
    req.package_name = o_.init_name.empty()
                           ? fs::path(o_.init_dest).lexically_normal()
                                 .filename()
                                 .string()
                           : o_.init_name;
    req.dataset_names = o_.init_datasets;
    auto license = parse_license_name(o_.init_license);
    if (!license) {
      throw UsageError("unknown license '" + o_.init_license +
                       "' (choose one of: cc0, ccby, odbl)");
    }
    req.license = *license;
    for (const auto& a : o_.init_authors) req.authors.push_back(parse_author(a));
    if (!o_.init_doi.empty()) req.doi = o_.init_doi;
    for (const auto& seed : o_.init_seeds) req.seed_tables.emplace_back(seed);
    if (o_.init_year) req.year = o_.init_year;

    DataPackage pkg = scaffold(req, o_.init_dest);
    std::vector<std::string> files;
    for (const auto& f : pkg.all_files()) files.push_back(f.path);
    if (json_) {
      emit({{"created", o_.init_dest}, {"files", files}});
    } else {
      s_.out << "created " << o_.init_dest << " (" << files.size()
             << " files)\n";
      for (const auto& f : files) s_.out << "  " << f << '\n';
    }
    return kOk;
  }

  int lint() {
    LintConfig config;
    if (!o_.lint_config.empty()) {
      config = parse_lint_config(read_all(o_.lint_config));
    }
    LintReport report = lint_package(scan_package(o_.lint_dir), config);
    if (json_) {
      s_.out << report_to_json(report);
    } else {
      s_.out << report_to_text(report, s_.color);
    }
    bool failed = !report.pass() ||
                  (o_.lint_strict && report.count(Severity::warning) > 0);
    return failed ? kCheckFailed : kOk;
  }

  int schema_infer() {
    std::set<std::string> missing{"NA"};
    if (!o_.missing.empty()) missing = {o_.missing.begin(), o_.missing.end()};
    CsvTable table = load_table(read_all(o_.table), o_.table);
    TableSchema schema = infer_schema(table, missing);
    schema.path = fs::path(o_.table).generic_string();
    // The schema is already the JSON document in both modes.
    s_.out << schema_to_json(schema);
    return kOk;
  }

  int schema_validate() {
    CsvTable table = load_table(read_all(o_.table), o_.table);
    TableSchema schema = schema_from_json(read_all(o_.schema_file));
    ValidationReport report = validate_table(table, schema);
    if (json_) {
      Json violations = Json::array();
      for (const auto& v : report.violations) {
        violations.push_back(
            {{"row", v.row ? Json(*v.row) : Json(nullptr)},
             {"field", v.field},
             {"kind", to_string(v.kind)},
             {"value", v.value}});
      }
      emit({{"valid", report.ok()}, {"violations", violations}});
    } else {
      for (const auto& v : report.violations) {
        s_.out << (v.row ? "row " + std::to_string(*v.row) : "header")
               << ": field '" << v.field << "' " << to_string(v.kind);
        if (v.row) s_.out << " (value '" << v.value << "')";
        s_.out << '\n';
      }
      s_.out << (report.ok() ? "valid\n"
                             : std::to_string(report.violations.size()) +
                                   " violation(s)\n");
    }
    return report.ok() ? kOk : kCheckFailed;
  }

  int dict() {
    std::string bytes = read_all(o_.dict_path);
    DataDictionary d =
        fs::path(o_.dict_path).extension() == ".json"
            ? dictionary_from_schema(schema_from_json(bytes))
            : dictionary_from_csv(bytes);
    std::string rendered;
    if (o_.dict_to == "markdown") {
      rendered = dictionary_to_markdown(d);
    } else {
      rendered = dictionary_to_csv(d);
    }
    if (json_) {
      emit({{"format", o_.dict_to}, {"content", rendered}});
    } else {
      s_.out << rendered;
    }
    return kOk;
  }

  int checksum() {
    ChecksumManifest manifest = compute_manifest(o_.dir);
    fs::path target = fs::path(o_.dir) / kManifestFile;
    write_manifest(target, manifest);
    if (json_) {
      emit({{"manifest", target.generic_string()},
            {"entries", manifest.entries.size()}});
    } else {
      s_.out << "wrote " << target.generic_string() << " ("
             << manifest.entries.size() << " files)\n";
    }
    return kOk;
  }

  int verify() {
    fs::path manifest_path = o_.manifest.empty()
                                 ? fs::path(o_.dir) / kManifestFile
                                 : fs::path(o_.manifest);
    VerifyReport report =
        verify_manifest(o_.dir, manifest_from_text(read_all(manifest_path)));
    if (json_) {
      emit(verify_json(report));
    } else {
      print_verify(report);
      s_.out << (report.ok() ? "OK\n" : "FAILED\n");
    }
    return report.ok() ? kOk : kCheckFailed;
  }

  int chunk() {
    ChunkPlan plan = chunk_table(o_.chunk_file, o_.max_rows);
    std::vector<std::string> paths;
    for (const auto& p : plan.chunk_paths) paths.push_back(p.generic_string());
    if (json_) {
      emit({{"source", plan.source.generic_string()},
            {"data_rows", plan.data_rows},
            {"max_rows", plan.max_rows_per_chunk},
            {"chunks", paths}});
    } else {
      for (const auto& p : paths) s_.out << p << '\n';
    }
    return kOk;
  }

  int unchunk() {
    if (json_ && o_.output.empty()) {
      throw UsageError("--output is required with --format json");
    }
    std::vector<fs::path> paths(o_.chunks.begin(), o_.chunks.end());
    std::string merged = datashare::unchunk(paths);
    if (o_.output.empty()) {
      s_.out << merged;
      return kOk;
    }
    if (fs::exists(fs::symlink_status(o_.output))) {
      throw UsageError("refusing to overwrite " + o_.output);
    }
    write_all(o_.output, merged);
    if (json_) {
      emit({{"output", o_.output}, {"chunks", o_.chunks.size()}});
    } else {
      s_.out << "wrote " << o_.output << '\n';
    }
    return kOk;
  }

  int pack() {
    if (o_.require_lint) {
      LintReport report = lint_package(scan_package(o_.dir));
      if (!report.pass()) {
        s_.err << report_to_text(report);
        if (json_) emit({{"packed", false}, {"lint", Json::parse(report_to_json(report))}});
        return kCheckFailed;
      }
    }
    fs::path manifest_path = o_.manifest.empty()
                                 ? fs::path(o_.dir) / kManifestFile
                                 : fs::path(o_.manifest);
    ChecksumManifest manifest = read_manifest(manifest_path);
    try {
      datashare::pack(o_.dir, manifest, o_.output);
    } catch (const VerificationFailed& e) {
      s_.err << e.what() << '\n';
      if (json_) {
        emit({{"packed", false}, {"verify", verify_json(e.report())}});
      } else {
        print_verify(e.report());
      }
      return kCheckFailed;
    }
    if (json_) {
      emit({{"packed", true},
            {"archive", o_.output},
            {"entries", manifest.entries.size() + 1}});
    } else {
      s_.out << "wrote " << o_.output << " (" << manifest.entries.size() + 1
             << " entries)\n";
    }
    return kOk;
  }

 private:
  void emit(const Json& doc) { s_.out << dump(doc); }

  static Json verify_json(const VerifyReport& r) {
    return {{"ok", r.ok()},
            {"mismatched", r.mismatched},
            {"missing", r.missing},
            {"extra", r.extra}};
  }

  void print_verify(const VerifyReport& r) {
    for (const auto& p : r.mismatched) s_.out << "MISMATCH " << p << '\n';
    for (const auto& p : r.missing) s_.out << "MISSING  " << p << '\n';
    for (const auto& p : r.extra) s_.out << "EXTRA    " << p << '\n';
  }

  const Options& o_;
  Streams s_;
  bool json_;
};

int fail(Streams s, bool json, int code, const std::string& message) {
  s.err << "datashare: " << message << '\n';
  if (json) s.out << dump({{"error", {{"code", code}, {"message", message}}}});
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, Streams streams) {
  Options o;
  bool json = wants_json(args);

  CLI::App app{"Build, check and package research data repositories",
               "datashare"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  auto* init = app.add_subcommand("init", "Create a new data package");
  init->add_option("dest", o.init_dest, "Destination directory")->required();
  init->add_option("--name", o.init_name, "Package name (default: DEST name)");
  init->add_option("--dataset", o.init_datasets, "Dataset name (repeatable)");
  init->add_option("--license", o.init_license, "cc0, ccby or odbl")
      ->required();
  init->add_option("--author", o.init_authors,
                   "\"Name\" or \"Name:ORCID\" (repeatable)");
  init->add_option("--doi", o.init_doi, "DOI of the deposited data");
  init->add_option("--seed", o.init_seeds,
                   "Existing table to import into data/ (repeatable)");
  init->add_option("--year", o.init_year, "Year for the citation stub");

  auto* lint = app.add_subcommand("lint", "Check a data package");
  lint->add_option("dir", o.lint_dir, "Package directory");
  lint->add_option("--config", o.lint_config, "Rule severity overrides");
  lint->add_flag("--strict", o.lint_strict, "Fail on warnings as well");

  auto* schema = app.add_subcommand("schema", "Infer or check a Table Schema");
  schema->require_subcommand(1);
  auto* infer = schema->add_subcommand("infer", "Infer a schema from a table");
  infer->add_option("table", o.table, "Plain-text table")->required();
  infer->add_option("--missing", o.missing,
                    "Missing-value token (repeatable, default NA)");
  auto* validate =
      schema->add_subcommand("validate", "Check a table against a schema");
  validate->add_option("table", o.table, "Plain-text table")->required();
  validate->add_option("schema", o.schema_file, "Table Schema JSON")
      ->required();

  auto* dict = app.add_subcommand("dict", "Render a data dictionary");
  dict->add_option("path", o.dict_path, "Dictionary CSV or Table Schema JSON")
      ->required();
  dict->add_option("--to", o.dict_to, "markdown or csv")
      ->check(CLI::IsMember({"markdown", "csv"}));

  auto* checksum =
      app.add_subcommand("checksum", "Write checksums.txt for a directory");
  checksum->add_option("dir", o.dir, "Package directory");

  auto* verify = app.add_subcommand("verify", "Verify checksums.txt");
  verify->add_option("dir", o.dir, "Package directory");
  verify->add_option("--manifest", o.manifest,
                     "Manifest file (default: DIR/checksums.txt)");

  auto* chunk = app.add_subcommand("chunk", "Split a table into row chunks");
  chunk->add_option("file", o.chunk_file, "Plain-text table")->required();
  chunk->add_option("--max-rows", o.max_rows, "Data rows per chunk")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* unchunk = app.add_subcommand("unchunk", "Reassemble chunks");
  unchunk->add_option("chunks", o.chunks, "Chunk files in order")->required();
  unchunk->add_option("--output", o.output, "Output file (default: stdout)");

  auto* pack = app.add_subcommand("pack", "Write a reproducible tar archive");
  pack->add_option("dir", o.dir, "Package directory");
  pack->add_option("--output", o.output, "Archive path")->required();
  pack->add_option("--manifest", o.manifest,
                   "Manifest file (default: DIR/checksums.txt)");
  pack->add_flag("--require-lint", o.require_lint,
                 "Refuse to pack a package with lint errors");

  std::vector<const char*> argv{"datashare"};
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    std::string help = app.help();
    if (json) {
      streams.out << dump({{"help", help}});
    } else {
      streams.out << help;
    }
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    std::string help = app.help("", CLI::AppFormatMode::All);
    if (json) {
      streams.out << dump({{"help", help}});
    } else {
      streams.out << help;
    }
    return kOk;
  } catch (const CLI::ParseError& e) {
    return fail(streams, json, kUsage, e.what());
  }

  Runner runner(o, streams);
  try {
    if (*init) return runner.init();
    if (*lint) return runner.lint();
    if (*infer) return runner.schema_infer();
    if (*validate) return runner.schema_validate();
    if (*dict) return runner.dict();
    if (*checksum) return runner.checksum();
    if (*verify) return runner.verify();
    if (*chunk) return runner.chunk();
    if (*unchunk) return runner.unchunk();
    if (*pack) return runner.pack();
    return fail(streams, json, kUsage, "no command given");
  } catch (const UsageError& e) {
    return fail(streams, json, kUsage, e.what());
  } catch (const IoError& e) {
    return fail(streams, json, kIo, e.what());
  } catch (const fs::filesystem_error& e) {
    return fail(streams, json, kIo, e.what());
  } catch (const FormatError& e) {
    return fail(streams, json, kCheckFailed, e.what());
  } catch (const std::exception& e) {
    return fail(streams, json, kIo, std::string("unexpected failure: ") +
                                        e.what());
  }
}

}  // namespace datashare::cli
