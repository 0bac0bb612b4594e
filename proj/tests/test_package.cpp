#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "datashare/error.hpp"
#include "datashare/license.hpp"
#include "datashare/package.hpp"
#include "support.hpp"

using namespace datashare;
namespace fs = std::filesystem;

namespace {

std::vector<std::string> paths(const std::vector<FileRef>& refs) {
  std::vector<std::string> out;
  for (const auto& r : refs) out.push_back(r.path);
  return out;
}

using Paths = std::vector<std::string>;

}  // namespace

TEST_CASE("file classification") {
  CHECK(classify_file("data/x.csv") == FileKind::plain_text_table);
  CHECK(classify_file("data/x.TSV") == FileKind::plain_text_table);
  CHECK(classify_file("data/x.txt") == FileKind::plain_text_table);
  CHECK(classify_file("notes.txt") == FileKind::document);
  CHECK(classify_file("data/x.csvy") == FileKind::plain_text_table);
  CHECK(classify_file("data/x.rds") == FileKind::binary_data);
  CHECK(classify_file("data/x.RData") == FileKind::binary_data);
  CHECK(classify_file("data/x.xlsx") == FileKind::binary_data);
  CHECK(classify_file("data-raw/tidy.R") == FileKind::script);
  CHECK(classify_file("data-raw/tidy.py") == FileKind::script);
  CHECK(classify_file("metadata/x.json") == FileKind::metadata);
  CHECK(classify_file("metadata/x.yml") == FileKind::metadata);
  CHECK(classify_file("README.md") == FileKind::document);
  CHECK(classify_file("LICENSE") == FileKind::other);
  CHECK(classify_file("x.bin") == FileKind::other);
}

TEST_CASE("scan of the single-dataset layout") {
  testing::TempDir dir;
  for (const char* rel :
       {"README.md", "LICENSE", "citation.bib", "checksums.txt",
        "data/teaching.csv", "data-raw/teaching-raw.csv", "data-raw/01-tidy.R",
        "data-raw/notes.md", "metadata/teaching.json",
        "metadata/teaching-dictionary.csv", "paper.pdf", "misc/thing.csv"}) {
    testing::write_file(dir / rel, "x\n");
  }
  DataPackage pkg = scan_package(dir.path());
  REQUIRE(pkg.readme);
  CHECK(pkg.readme->path == "README.md");
  REQUIRE(pkg.license);
  CHECK(pkg.license->detected == LicenseKind::unknown);
  REQUIRE(pkg.citation);
  CHECK(pkg.citation->path == "citation.bib");
  REQUIRE(pkg.manifest);
  REQUIRE(pkg.datasets.size() == 1);
  const Dataset& ds = pkg.datasets[0];
  CHECK(ds.name == "teaching");
  CHECK(paths(ds.data_files) == Paths{"data/teaching.csv"});
  CHECK(paths(ds.attached.raw_files) == Paths{"data-raw/teaching-raw.csv"});
  CHECK(paths(ds.attached.scripts) == Paths{"data-raw/01-tidy.R"});
  CHECK(paths(ds.attached.notes) == Paths{"data-raw/notes.md"});
  CHECK(paths(ds.attached.metadata_files) == Paths{"metadata/teaching.json"});
  CHECK(paths(ds.attached.dictionary_files) ==
        Paths{"metadata/teaching-dictionary.csv"});
  CHECK(pkg.pool.empty());
  CHECK(paths(pkg.documents) == Paths{"paper.pdf"});
  CHECK(paths(pkg.unclassified) == Paths{"misc/thing.csv"});
}

TEST_CASE("files attach to the dataset whose name their stem extends") {
  testing::TempDir dir;
  for (const char* rel :
       {"data/people.csv", "data/people_extra.csv", "data/places.rds",
        "metadata/people.json", "metadata/people_extra.json",
        "metadata/people_extra-dictionary.csv", "metadata/shared-codebook.csv",
        "data-raw/places-survey.sav", "data-raw/clean.R",
        "data-raw/peoplex.csv"}) {
    testing::write_file(dir / rel, "x\n");
  }
  DataPackage pkg = scan_package(dir.path());
  REQUIRE(pkg.datasets.size() == 3);
  const Dataset* people = pkg.find_dataset("people");
  const Dataset* extra = pkg.find_dataset("people_extra");
  const Dataset* places = pkg.find_dataset("places");
  REQUIRE(people);
  REQUIRE(extra);
  REQUIRE(places);
  CHECK(paths(people->attached.metadata_files) == Paths{"metadata/people.json"});
  CHECK(paths(extra->attached.metadata_files) ==
        Paths{"metadata/people_extra.json"});
  CHECK(paths(extra->attached.dictionary_files) ==
        Paths{"metadata/people_extra-dictionary.csv"});
  CHECK(places->data_files[0].kind == FileKind::binary_data);
  CHECK(paths(places->attached.raw_files) ==
        Paths{"data-raw/places-survey.sav"});
  CHECK(paths(pkg.pool.dictionary_files) ==
        Paths{"metadata/shared-codebook.csv"});
  CHECK(paths(pkg.pool.scripts) == Paths{"data-raw/clean.R"});
  // "peoplex" does not extend "people" at a separator.
  CHECK(paths(pkg.pool.raw_files) == Paths{"data-raw/peoplex.csv"});
}

TEST_CASE("top-level candidates") {
  testing::TempDir dir;
  testing::write_file(dir / "README", "plain\n");
  testing::write_file(dir / "README.md", "# md\n");
  testing::write_file(dir / "readme.txt", "txt\n");
  testing::write_file(dir / "LICENCE.txt", std::string(license_text(LicenseKind::odbl)));
  testing::write_file(dir / "data/README.md", "below\n");
  DataPackage pkg = scan_package(dir.path());
  REQUIRE(pkg.readme);
  CHECK(pkg.readme->path == "README.md");
  CHECK(paths(pkg.documents) == Paths{"README", "readme.txt"});
  REQUIRE(pkg.license);
  CHECK(pkg.license->path == "LICENCE.txt");
  CHECK(pkg.license->detected == LicenseKind::odbl);
  CHECK(paths(pkg.other_readmes) == Paths{"data/README.md"});
}

TEST_CASE("hidden directories and symlinks are listed as skipped") {
  testing::TempDir dir;
  testing::write_file(dir / ".git/config", "x");
  testing::write_file(dir / "data/a.csv", "a\n1\n");
  testing::write_file(dir / "data/.hidden.csv", "a\n1\n");
  fs::create_directory_symlink(dir.path(), dir / "loop");
  fs::create_symlink(dir / "data/a.csv", dir / "data/b.csv");
  DataPackage pkg = scan_package(dir.path());
  CHECK(pkg.skipped == Paths{".git/", "data/b.csv", "loop"});
  REQUIRE(pkg.datasets.size() == 2);
  CHECK(pkg.datasets[0].name == ".hidden");
  CHECK(pkg.datasets[1].name == "a");
}

TEST_CASE("missing or non-directory root") {
  testing::TempDir dir;
  CHECK_THROWS_AS(scan_package(dir / "absent"), IoError);
  testing::write_file(dir / "file", "x");
  CHECK_THROWS_AS(scan_package(dir / "file"), IoError);
}

TEST_CASE("every file lands in exactly one slot") {
  const std::vector<std::string> dirs = {"", "data/", "data-raw/",
                                         "metadata/", "other/", "data/sub/"};
  const std::vector<std::string> names = {
      "README", "README.md", "LICENSE", "LICENSE.md", "citation.bib",
      "checksums.txt", "a.csv", "a.rds", "a-dictionary.csv", "b.json",
      "b-raw.csv", "tidy.R", "notes.md", "x.bin", "a.tsv", "c-codebook.csv",
      "paper.pdf", "b.csv"};
  testing::Rng rng(3);
  for (int round = 0; round < 60; ++round) {
    testing::TempDir dir;
    std::set<std::string> written;
    for (std::size_t n = rng.between(0, 14); n > 0; --n) {
      std::string rel = rng.pick(dirs) + rng.pick(names);
      testing::write_file(dir / rel, rel);
      written.insert(rel);
    }
    DataPackage pkg = scan_package(dir.path());
    std::vector<std::string> listed = paths(pkg.all_files());
    REQUIRE(std::is_sorted(listed.begin(), listed.end()));
    REQUIRE(std::set<std::string>(listed.begin(), listed.end()).size() ==
            listed.size());
    REQUIRE(std::set<std::string>(listed.begin(), listed.end()) == written);
    for (const auto& f : pkg.all_files()) {
      REQUIRE(f.size_bytes == f.path.size());
    }
  }
}

TEST_CASE("resolve_inside") {
  fs::path root = "/pkg";
  CHECK(resolve_inside(root, "data/a.csv") == fs::path("/pkg/data/a.csv"));
  CHECK_THROWS_AS(resolve_inside(root, "/etc/passwd"), UsageError);
  CHECK_THROWS_AS(resolve_inside(root, "data/../../x"), UsageError);
  CHECK_THROWS_AS(resolve_inside(root, ""), UsageError);
}

TEST_CASE("license detection") {
  for (LicenseKind k :
       {LicenseKind::cc_by_4, LicenseKind::cc0_1, LicenseKind::odbl}) {
    std::string text(license_text(k));
    CAPTURE(spdx_id(k));
    CHECK(text.size() > 1000);
    CHECK(detect_license(text) == k);

    std::string reflowed;
    for (char c : text) {
      if (c == ' ') {
        reflowed += "\n  ";
      } else {
        reflowed += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      }
    }
    CHECK(detect_license(reflowed) == k);
  }
  CHECK(detect_license("") == LicenseKind::unknown);
  CHECK(detect_license("MIT License\n\nPermission is hereby granted") ==
        LicenseKind::unknown);
  CHECK(detect_license(std::string(license_text(LicenseKind::cc0_1)) +
                       std::string(license_text(LicenseKind::odbl))) ==
        LicenseKind::unknown);
  // The title alone is enough; a passing mention of another license's name
  // in running text is not a title line of that license.
  CHECK(detect_license("CC0 1.0 Universal\n\nStatement of Purpose") ==
        LicenseKind::cc0_1);
}

TEST_CASE("license names") {
  CHECK(parse_license_name("cc0") == LicenseKind::cc0_1);
  CHECK(parse_license_name("CCBY") == LicenseKind::cc_by_4);
  CHECK(parse_license_name("odbl") == LicenseKind::odbl);
  CHECK(parse_license_name("CC-BY-4.0") == LicenseKind::cc_by_4);
  CHECK(parse_license_name("ODbL-1.0") == LicenseKind::odbl);
  CHECK_FALSE(parse_license_name("mit"));
  CHECK(spdx_id(LicenseKind::cc0_1) == "CC0-1.0");
  CHECK_THROWS_AS(license_text(LicenseKind::unknown), UsageError);
}
