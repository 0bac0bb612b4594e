#pragma once

// Creates a new data package with every piece the linter looks for.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "datashare/dictionary.hpp"
#include "datashare/license.hpp"
#include "datashare/package.hpp"
#include "datashare/schema.hpp"

namespace datashare {

struct Author {
  std::string name;
  std::optional<std::string> orcid;  // 0000-0002-1825-0097
};

struct ScaffoldRequest {
  std::string package_name;
  std::vector<std::string> dataset_names;
  LicenseKind license = LicenseKind::unknown;
  std::vector<Author> authors;
  std::optional<std::string> doi;
  // Tables copied into data/ under their own file name. A seed whose stem
  // is not among dataset_names adds a dataset.
  std::vector<std::filesystem::path> seed_tables;
  // Only used in the citation stub; no clock is consulted.
  std::optional<int> year;
};

// Names (package, datasets, seed stems) must match [A-Za-z0-9._-]+, not
// start with '.', and not be read by the layout as something else (a
// README, or a dictionary stem). Throws UsageError naming the problem.
void check_request(const ScaffoldRequest& req);

// Writes
//
//   README.md, LICENSE, citation.bib (only with a DOI), checksums.txt,
//   data/<dataset>.<ext>, data-raw/<dataset>-tidy.R,
//   metadata/<dataset>.json, metadata/<dataset>-dictionary.csv
//
// into `dest`, which must be absent or an empty directory. Seeded datasets
// get a schema and dictionary inferred from the seed; the others get a
// one-column placeholder table. All input is read and every file rendered
// before anything is written. Returns the scanned result.
DataPackage scaffold(const ScaffoldRequest& req,
                     const std::filesystem::path& dest);

// README with one `## Who` ... `## How` heading each, the dataset
// dictionaries (keyed and ordered by dataset name) under What, and License,
// Citation and Checksums sections.
std::string render_readme(
    const ScaffoldRequest& req,
    const std::map<std::string, DataDictionary>& dictionaries);

}  // namespace datashare
