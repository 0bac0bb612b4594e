#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "datashare/checksum.hpp"
#include "datashare/dictionary.hpp"
#include "datashare/error.hpp"
#include "datashare/lint.hpp"
#include "datashare/scaffold.hpp"
#include "datashare/schema.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace datashare;
namespace fs = std::filesystem;

namespace {

const char* kDemographics =
    "age,height,nationality\n"
    "12,161.5,Australian\n"
    "21,181.2,American\n"
    "37,178.3,New Zealand\n";

std::size_t occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos;
       pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

ScaffoldRequest demographics_request(const testing::TempDir& dir) {
  testing::write_file(dir / "seeds/demographics.csv", kDemographics);
  ScaffoldRequest req;
  req.package_name = "demo";
  req.license = LicenseKind::cc0_1;
  req.authors = {{"Jane Doe", "0000-0002-1825-0097"}, {"Sam Roe", std::nullopt}};
  req.seed_tables = {dir / "seeds/demographics.csv"};
  return req;
}

std::vector<std::string> listing(const fs::path& root) {
  std::vector<std::string> out;
  for (const auto& [rel, bytes] : testing::snapshot(root)) out.push_back(rel);
  return out;
}

}  // namespace

TEST_CASE("scaffolding the demographics table") {
  testing::TempDir dir;
  ScaffoldRequest req = demographics_request(dir);
  DataPackage pkg = scaffold(req, dir / "out");

  CHECK(listing(dir / "out") ==
        std::vector<std::string>{"LICENSE", "README.md", "checksums.txt",
                                 "data-raw/demographics-tidy.R",
                                 "data/demographics.csv",
                                 "metadata/demographics-dictionary.csv",
                                 "metadata/demographics.json"});
  CHECK(testing::read_file(dir / "out/data/demographics.csv") == kDemographics);

  TableSchema schema =
      schema_from_json(testing::read_file(dir / "out/metadata/demographics.json"));
  REQUIRE(schema.fields.size() == 3);
  CHECK(schema.name == "demographics");
  CHECK(schema.path == "data/demographics.csv");
  CHECK(schema.license_id == "CC0-1.0");
  CHECK(schema.fields[0].name == "age");
  CHECK(schema.fields[0].type == FieldType::integer);
  CHECK(schema.fields[1].name == "height");
  CHECK(schema.fields[1].type == FieldType::number);
  CHECK(schema.fields[2].name == "nationality");
  CHECK(schema.fields[2].type == FieldType::string);

  DataDictionary dict = dictionary_from_csv(
      testing::read_file(dir / "out/metadata/demographics-dictionary.csv"));
  REQUIRE(dict.entries.size() == 3);
  CHECK(dict.entries[0].variable_name == "age");
  CHECK(dict.entries[0].class_name == "integer");

  CHECK(testing::read_file(dir / "out/LICENSE") ==
        std::string(license_text(LicenseKind::cc0_1)));
  REQUIRE(pkg.license);
  CHECK(pkg.license->detected == LicenseKind::cc0_1);
  REQUIRE(pkg.datasets.size() == 1);
  CHECK(pkg.datasets[0].name == "demographics");

  std::string readme = testing::read_file(dir / "out/README.md");
  CHECK(readme.find("| age | integer |") != std::string::npos);
  CHECK(readme.find("[ORCID](https://orcid.org/0000-0002-1825-0097)") !=
        std::string::npos);
  CHECK(readme.find("Sam Roe") != std::string::npos);

  LintReport r = lint_package(pkg);
  CHECK(r.pass());
  CHECK(r.count(Severity::error) == 0);
  auto md5 = testing::shell("cd " + testing::shell_quote((dir / "out").string()) +
                            " && md5sum --quiet -c checksums.txt 2>&1");
  CHECK(md5.status == 0);
}

TEST_CASE("citation only with a DOI") {
  testing::TempDir dir;
  ScaffoldRequest req = demographics_request(dir);

  scaffold(req, dir / "plain");
  CHECK_FALSE(fs::exists(dir / "plain/citation.bib"));
  std::string readme = testing::read_file(dir / "plain/README.md");
  CHECK(readme.find("## Citation") != std::string::npos);
  CHECK(readme.find("DOI") != std::string::npos);
  LintReport plain = lint_package(scan_package(dir / "plain"));
  CHECK(plain.pass());

  req.doi = "10.5281/zenodo.1234567";
  req.year = 2019;
  scaffold(req, dir / "cited");
  std::string bib = testing::read_file(dir / "cited/citation.bib");
  CHECK(bib.starts_with("@misc{"));
  CHECK(bib.find("doi = {10.5281/zenodo.1234567}") != std::string::npos);
  CHECK(bib.find("year = {2019}") != std::string::npos);
  CHECK(bib.find("Jane Doe and Sam Roe") != std::string::npos);
  LintReport cited = lint_package(scan_package(dir / "cited"));
  CHECK(cited.pass());
  for (const auto& f : cited.findings) CHECK(f.rule_id != "R07");
}

TEST_CASE("README layout") {
  testing::TempDir dir;
  ScaffoldRequest req;
  req.package_name = "pair";
  req.license = LicenseKind::odbl;
  req.dataset_names = {"zeta", "alpha"};
  scaffold(req, dir / "out");
  std::string readme = testing::read_file(dir / "out/README.md");
  for (const char* heading :
       {"## Who\n", "## What\n", "## When\n", "## Where\n", "## Why\n",
        "## How\n", "## License\n", "## Citation\n", "## Checksums\n"}) {
    CAPTURE(heading);
    CHECK(occurrences(readme, std::string("\n") + heading) == 1);
  }
  std::size_t alpha = readme.find("### Dataset: alpha");
  std::size_t zeta = readme.find("### Dataset: zeta");
  REQUIRE(alpha != std::string::npos);
  REQUIRE(zeta != std::string::npos);
  CHECK(alpha < zeta);
  CHECK(readme.find("## What") < alpha);
  CHECK(zeta < readme.find("## When"));
  CHECK(readme.find("ODbL") != std::string::npos);

  // Placeholders for unseeded datasets.
  CHECK(testing::read_file(dir / "out/data/zeta.csv") == "id\n");
  LintReport r = lint_package(scan_package(dir / "out"));
  CHECK(r.pass());
  for (const auto& f : r.findings) CHECK(f.rule_id != "R02");
}

TEST_CASE("seeds in other formats") {
  testing::TempDir dir;
  ScaffoldRequest req;
  req.package_name = "formats";
  req.license = LicenseKind::cc_by_4;

  SUBCASE("tab separated") {
    testing::write_file(dir / "seeds/obs.TSV", "site\tcount\nA\t1\nB\tNA\n");
    req.seed_tables = {dir / "seeds/obs.TSV"};
    scaffold(req, dir / "out");
    CHECK(testing::read_file(dir / "out/data/obs.tsv") ==
          "site\tcount\nA\t1\nB\tNA\n");
    TableSchema s =
        schema_from_json(testing::read_file(dir / "out/metadata/obs.json"));
    CHECK(s.fields[1].type == FieldType::integer);
    CHECK(lint_package(scan_package(dir / "out")).pass());
  }
  SUBCASE("csvy keeps its own schema") {
    testing::write_file(dir / "seeds/visits.csvy",
                        "---\nname: visits\nfields:\n"
                        "  - name: day\n    type: date\n"
                        "  - name: n\n    type: number\n"
                        "---\nday,n\n2019-01-22,3\n");
    req.seed_tables = {dir / "seeds/visits.csvy"};
    scaffold(req, dir / "out");
    TableSchema s =
        schema_from_json(testing::read_file(dir / "out/metadata/visits.json"));
    CHECK(s.fields[0].type == FieldType::date);
    CHECK(s.fields[1].type == FieldType::number);
    CHECK(s.path == "data/visits.csvy");
    CHECK(lint_package(scan_package(dir / "out")).pass());
  }
  SUBCASE("csvy that contradicts its own schema") {
    testing::write_file(dir / "seeds/visits.csvy",
                        "---\nfields:\n  - name: day\n    type: date\n"
                        "---\nday\n22-01-2019\n");
    req.seed_tables = {dir / "seeds/visits.csvy"};
    CHECK_THROWS_AS(scaffold(req, dir / "out"), FormatError);
    CHECK_FALSE(fs::exists(dir / "out"));
  }
  SUBCASE("headerless seed") {
    testing::write_file(dir / "seeds/raw.csv", "1,2\n3,4\n");
    req.seed_tables = {dir / "seeds/raw.csv"};
    CHECK_THROWS_AS(scaffold(req, dir / "out"), FormatError);
    CHECK_FALSE(fs::exists(dir / "out"));
  }
  SUBCASE("missing seed") {
    req.seed_tables = {dir / "seeds/absent.csv"};
    CHECK_THROWS_AS(scaffold(req, dir / "out"), IoError);
    CHECK_FALSE(fs::exists(dir / "out"));
  }
}

TEST_CASE("destination must be absent or empty") {
  testing::TempDir dir;
  ScaffoldRequest req = demographics_request(dir);
  testing::write_file(dir / "busy/notes.md", "mine\n");
  auto before = testing::snapshot(dir / "busy");
  CHECK_THROWS_AS(scaffold(req, dir / "busy"), UsageError);
  CHECK(testing::snapshot(dir / "busy") == before);

  testing::write_file(dir / "file", "x");
  CHECK_THROWS_AS(scaffold(req, dir / "file"), UsageError);
  CHECK(testing::read_file(dir / "file") == "x");

  fs::create_directories(dir / "empty");
  CHECK_NOTHROW(scaffold(req, dir / "empty"));
}

TEST_CASE("request validation") {
  testing::TempDir dir;
  ScaffoldRequest good;
  good.package_name = "pkg";
  good.license = LicenseKind::cc0_1;
  good.dataset_names = {"a"};
  CHECK_NOTHROW(check_request(good));

  auto rejects = [&](auto mutate) {
    ScaffoldRequest req = good;
    mutate(req);
    CHECK_THROWS_AS(check_request(req), UsageError);
    CHECK_THROWS_AS(scaffold(req, dir / "never"), UsageError);
    CHECK_FALSE(fs::exists(dir / "never"));
  };
  rejects([](ScaffoldRequest& r) { r.package_name = ""; });
  rejects([](ScaffoldRequest& r) { r.package_name = "has space"; });
  rejects([](ScaffoldRequest& r) { r.package_name = ".hidden"; });
  rejects([](ScaffoldRequest& r) { r.dataset_names = {}; });
  rejects([](ScaffoldRequest& r) { r.dataset_names = {"a", "a"}; });
  rejects([](ScaffoldRequest& r) { r.dataset_names = {"../x"}; });
  rejects([](ScaffoldRequest& r) { r.dataset_names = {"README"}; });
  rejects([](ScaffoldRequest& r) { r.dataset_names = {"codes-dictionary"}; });
  rejects([](ScaffoldRequest& r) { r.license = LicenseKind::unknown; });
  rejects([](ScaffoldRequest& r) { r.authors = {{"", std::nullopt}}; });
  rejects([](ScaffoldRequest& r) { r.authors = {{"A B", "1234"}}; });
  rejects([](ScaffoldRequest& r) { r.doi = "doi.org/10.1/x"; });
  rejects([](ScaffoldRequest& r) { r.doi = "10.123/x"; });
  rejects([](ScaffoldRequest& r) { r.seed_tables = {"x.rds"}; });
  rejects([](ScaffoldRequest& r) { r.seed_tables = {"s/x.csv", "t/x.tsv"}; });

  ScaffoldRequest orcid_x = good;
  orcid_x.authors = {{"A B", "0000-0002-1694-233X"}};
  CHECK_NOTHROW(check_request(orcid_x));
}

TEST_CASE("scaffolding is deterministic") {
  testing::Rng rng(77);
  for (int round = 0; round < 10; ++round) {
    testing::TempDir dir;
    ScaffoldRequest req = fixtures::random_request(rng, dir / "seeds");
    scaffold(req, dir / "a");
    scaffold(req, dir / "b");
    REQUIRE(testing::snapshot(dir / "a") == testing::snapshot(dir / "b"));
  }
}

TEST_CASE("every scaffolded package lints without errors") {
  testing::Rng rng(4242);
  for (int round = 0; round < 40; ++round) {
    testing::TempDir dir;
    ScaffoldRequest req = fixtures::random_request(rng, dir / "seeds");
    CAPTURE(round);
    DataPackage pkg = scaffold(req, dir / "out");
    REQUIRE(pkg == scan_package(dir / "out"));
    LintReport r = lint_package(pkg);
    std::string errors;
    for (const auto& f : r.findings) {
      if (f.severity == Severity::error) {
        errors += f.rule_id + " " + f.path.value_or("-") + ": " + f.detail + "\n";
      }
    }
    CAPTURE(errors);
    REQUIRE(r.pass());
    for (const auto& seed : req.seed_tables) {
      std::string ext = seed.extension().string();
      std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
      REQUIRE(testing::read_file(dir / "out/data" /
                                 (seed.stem().string() + ext)) ==
              testing::read_file(seed));
    }
    REQUIRE(verify_manifest(dir / "out", read_manifest(dir / "out/checksums.txt"))
                .ok());
  }
}
