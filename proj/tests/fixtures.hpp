#pragma once

// Package fixtures shared by the lint tests and the acceptance runner.

#include <string>

#include "datashare/checksum.hpp"
#include "datashare/csvy.hpp"
#include "datashare/license.hpp"
#include "datashare/scaffold.hpp"
#include "datashare/tabular.hpp"
#include "support.hpp"

namespace fixtures {

namespace fs = std::filesystem;

inline const char* kIncarcerationDictionary =
    "Variable,Class,Description\n"
    "year,integer (date),Year\n"
    "urbanicity,character,\"County-type (urban, suburban, small/mid, rural)\"\n"
    "pop_category,character,\"Category for population - either race, gender, "
    "or Total\"\n"
    "rate_per_100000,double,\"Rate within a category for prison population "
    "per 100,000 people\"\n";

inline const char* kIncarcerationData =
    "year,urbanicity,pop_category,rate_per_100000\n"
    "1983,rural,Total,227.1\n"
    "1983,urban,Black,1001.4\n"
    "1984,suburban,White,189.0\n"
    "1984,small/mid,Total,244.7\n";

inline const char* kSixQuestionReadme =
    "# prisons\n\n"
    "## Who\nCollected by A. Author.\n\n"
    "## What\nPrison population data.\n\n"
    "## When\nDates 1983 to 1984.\n\n"
    "## Where\nCounty location.\n\n"
    "## Why\nPurpose: teaching.\n\n"
    "## How\nMethod: copied from the source.\n";

// The empty package gains one required piece per step, in the order
// README, LICENSE, dictionary, analysis data. Step 0 is the empty package.
inline constexpr int kRequiredSteps = 4;

inline void add_required_piece(const fs::path& root, int step) {
  switch (step) {
    case 1:
      testing::write_file(root / "README.md", kSixQuestionReadme);
      break;
    case 2:
      testing::write_file(
          root / "LICENSE",
          std::string(datashare::license_text(datashare::LicenseKind::cc0_1)));
      break;
    case 3:
      testing::write_file(root / "metadata/prisons-dictionary.csv",
                          kIncarcerationDictionary);
      break;
    case 4:
      testing::write_file(root / "data/prisons.csv", kIncarcerationData);
      break;
    default:
      break;
  }
}

// Randomised package: each piece is present, absent or defective, so that
// fixtures exercise most rules between them.
inline void write_random_fixture(const fs::path& root, std::uint64_t seed) {
  testing::Rng rng(seed);
  fs::create_directories(root);
  if (rng.chance(0.7)) {
    testing::write_file(root / "README.md",
                        rng.chance(0.5) ? kSixQuestionReadme : "# data\n");
  }
  if (rng.chance(0.7)) {
    testing::write_file(
        root / (rng.chance(0.5) ? "LICENSE" : "LICENSE.md"),
        rng.chance(0.6) ? std::string(datashare::license_text(
                              datashare::LicenseKind::odbl))
                        : "All rights reserved.\n");
  }
  if (rng.chance(0.5)) {
    testing::write_file(root / "citation.bib",
                        rng.chance(0.5)
                            ? "@misc{x, doi = {10.5281/zenodo.1234567}}\n"
                            : "@misc{x, title = {x}}\n");
  }
  std::size_t datasets = rng.between(0, 3);
  for (std::size_t i = 0; i < datasets; ++i) {
    std::string name = "set" + std::to_string(i);
    switch (rng.below(4)) {
      case 0:
        testing::write_file(root / ("data/" + name + ".rds"), "\x1f\x8b binary");
        break;
      case 1:
        testing::write_file(root / ("data/" + name + ".csv"),
                            "Survey Date,score,note\n"
                            "22/01/2019,3,NA\n2019-01-23,-99,ok\n");
        break;
      default:
        testing::write_file(root / ("data/" + name + ".csv"),
                            kIncarcerationData);
        break;
    }
    if (rng.chance(0.6)) {
      std::string dict = kIncarcerationDictionary;
      if (rng.chance(0.4)) dict = dict.substr(0, dict.rfind("rate_per_100000"));
      testing::write_file(root / ("metadata/" + name + "-dictionary.csv"), dict);
    }
    if (rng.chance(0.5)) {
      testing::write_file(
          root / ("metadata/" + name + ".json"),
          rng.chance(0.5)
              ? "{\"name\": \"" + name + "\", \"path\": \"data/" + name +
                    ".csv\", \"schema\": {\"fields\": [{\"name\": \"year\", \"type\": "
                    "\"integer\"}, {\"name\": \"urbanicity\", \"type\": "
                    "\"string\"}, {\"name\": \"pop_category\", \"type\": "
                    "\"string\"}, {\"name\": \"rate_per_100000\", \"type\": "
                    "\"number\"}]}}\n"
              : "{\"name\": \"" + name + "\", \"schema\": {\"fields\": "
                "[{\"name\": \"year\", \"type\": \"date\"}]}}\n");
    }
    if (rng.chance(0.5)) {
      testing::write_file(root / ("data-raw/" + name + "-raw.csv"), "a\n1\n");
      if (rng.chance(0.5)) {
        testing::write_file(root / ("data-raw/" + name + "-tidy.R"), "1\n");
      }
    }
  }
  if (rng.chance(0.5)) {
    datashare::write_manifest(root / "checksums.txt",
                              datashare::compute_manifest(root));
    if (rng.chance(0.3)) testing::write_file(root / "README.md", "# changed\n");
  }
}

// A seed table with typed columns (integers, decimals, dates, text with
// quoting hazards), optional NA cells and a random delimiter.
inline std::string random_seed_table(testing::Rng& rng, char delimiter) {
  datashare::CsvTable table;
  table.dialect.delimiter = delimiter;
  std::size_t width = rng.between(1, 6);
  std::vector<int> kinds;
  for (std::size_t c = 0; c < width; ++c) {
    table.header.push_back(rng.word(2, 6) + "_" + std::to_string(c));
    kinds.push_back(static_cast<int>(rng.below(4)));
  }
  std::size_t rows = rng.between(0, 40);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<std::string> row;
    for (int kind : kinds) {
      if (rng.chance(0.05)) {
        row.push_back("NA");
        continue;
      }
      switch (kind) {
        case 0:
          row.push_back(std::to_string(static_cast<long>(rng.below(2000)) - 1000));
          break;
        case 1:
          row.push_back(std::to_string(rng.below(1000)) + "." +
                        std::to_string(rng.below(100)));
          break;
        case 2: {
          char buf[16];
          std::snprintf(buf, sizeof buf, "%04zu-%02zu-%02zu",
                        rng.between(1900, 2030), rng.between(1, 12),
                        rng.between(1, 28));
          row.push_back(buf);
          break;
        }
        default:
          row.push_back(rng.cell());
          break;
      }
    }
    table.rows.push_back(std::move(row));
  }
  return datashare::serialize_table(table);
}

struct CsvyCase {
  std::string yaml;  // front matter text, empty for a plain CSV body
  datashare::CsvTable table;
  bool delimiter_declared = false;  // front matter carries dialect.delimiter
};

// Random front matter (name, quoted scalars, comments, nested schema or a
// top-level field list, keyword lists) over a random table.
inline CsvyCase random_csvy(testing::Rng& rng) {
  static const std::vector<std::string> kTypes = {"string", "integer", "number",
                                                  "boolean", "date"};
  CsvyCase c;
  c.table.dialect.delimiter = rng.pick(std::vector<char>{',', ';', '\t'});
  std::size_t width = rng.between(1, 5);
  for (std::size_t i = 0; i < width; ++i) {
    c.table.header.push_back(rng.word(1, 6) + std::to_string(i));
  }
  for (std::size_t r = rng.between(0, 30); r > 0; --r) {
    std::vector<std::string> row;
    for (std::size_t i = 0; i < width; ++i) row.push_back(rng.cell());
    c.table.rows.push_back(std::move(row));
  }
  if (rng.chance(0.1)) return c;

  std::string& y = c.yaml;
  if (rng.chance(0.3)) y += "# generated\n";
  y += "name: " + rng.word() + "\n";
  if (rng.chance(0.5)) {
    y += "description: \"" + rng.word() + ": " + rng.word() +
         " # not a comment\"\n";
  }
  if (rng.chance(0.3)) y += "title: '" + rng.word() + " ''quoted'''\n";
  if (rng.chance(0.4)) {
    y += "keywords: [" + rng.word() + ", " + rng.word() + "]\n";
  }
  if (rng.chance(0.5) || c.table.dialect.delimiter != ',') {
    c.delimiter_declared = true;
    std::string d = c.table.dialect.delimiter == '\t'
                        ? std::string("\"\\t\"")
                        : std::string("\"") + c.table.dialect.delimiter + "\"";
    y += "dialect:\n  delimiter: " + d + "\n";
    if (rng.chance(0.5)) y += "  header: true\n";
  }
  bool nested = rng.chance(0.5);
  std::string indent = nested ? "    " : "  ";
  y += nested ? "schema:\n  fields:\n" : "fields:\n";
  for (const auto& name : c.table.header) {
    y += indent + "- name: " + name + "\n";
    y += indent + "  type: " + rng.pick(kTypes) + "\n";
    if (rng.chance(0.3)) y += indent + "  description: " + rng.word() + "\n";
  }
  if (rng.chance(0.3)) y += "missingValues:\n  - NA\n  - \"\"\n";
  return c;
}

// Serializes a generated case, reparses it and serializes again. Returns
// an empty string on success, otherwise what differed.
inline std::string csvy_round_trip_failure(const CsvyCase& c) {
  datashare::FrontMatter front = datashare::parse_front_matter(c.yaml);
  std::string bytes = datashare::serialize_csvy(front, c.table);
  std::optional<datashare::Dialect> dialect;
  if (!c.delimiter_declared) dialect = c.table.dialect;
  auto [front2, table2] = datashare::parse_csvy(bytes, dialect);
  if (!(front2 == front)) return "front matter changed";
  if (!(table2 == c.table)) return "table changed";
  if (datashare::serialize_csvy(front2, table2) != bytes) return "bytes changed";
  return {};
}

// A valid request; seed tables are written below `seed_dir`.
inline datashare::ScaffoldRequest random_request(testing::Rng& rng,
                                                 const fs::path& seed_dir) {
  static const std::vector<datashare::LicenseKind> kLicenses = {
      datashare::LicenseKind::cc0_1, datashare::LicenseKind::cc_by_4,
      datashare::LicenseKind::odbl};
  datashare::ScaffoldRequest req;
  req.package_name = rng.word(3, 10) + (rng.chance(0.5) ? ".data" : "");
  req.license = rng.pick(kLicenses);
  std::size_t names = rng.between(0, 3);
  std::size_t seeds = rng.between(names == 0 ? 1 : 0, 3);
  std::size_t index = 0;
  for (std::size_t i = 0; i < names; ++i) {
    req.dataset_names.push_back(rng.word(2, 6) + std::to_string(index++));
  }
  for (std::size_t i = 0; i < seeds; ++i) {
    // Some seeds fill a named dataset, the rest add one.
    std::string stem = i < names && rng.chance(0.5)
                           ? req.dataset_names[i]
                           : rng.word(2, 6) + std::to_string(index++);
    char delimiter = rng.pick(std::vector<char>{',', ';', '\t'});
    fs::path seed = seed_dir / (stem + (delimiter == '\t' ? ".tsv" : ".csv"));
    // Keep only seeds that the delimiter sniffer reads as intended; a
    // one-column table full of commas is legitimately ambiguous.
    std::string bytes;
    for (;;) {
      bytes = random_seed_table(rng, delimiter);
      datashare::Dialect intended;
      intended.delimiter = delimiter;
      try {
        if (datashare::load_table(bytes, seed.string()) ==
            datashare::parse_table(bytes, intended)) {
          break;
        }
      } catch (const std::exception&) {
      }
    }
    testing::write_file(seed, bytes);
    req.seed_tables.push_back(seed);
  }
  for (std::size_t n = rng.between(0, 3); n > 0; --n) {
    datashare::Author a;
    a.name = rng.word(2, 8) + " " + rng.word(2, 10);
    if (rng.chance(0.5)) a.orcid = "0000-0002-1825-0097";
    req.authors.push_back(a);
  }
  if (rng.chance(0.5)) {
    req.doi = "10." + std::to_string(rng.between(1000, 99999)) + "/" +
              rng.word(3, 12);
  }
  if (rng.chance(0.5)) req.year = static_cast<int>(rng.between(1990, 2030));
  return req;
}

}  // namespace fixtures
