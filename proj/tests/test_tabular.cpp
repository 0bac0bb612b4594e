#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "datashare/csvy.hpp"
#include "datashare/error.hpp"
#include "datashare/tabular.hpp"
#include "datashare/values.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace datashare;

namespace {

CsvTable random_table(testing::Rng& rng, char delimiter) {
  CsvTable t;
  t.dialect.delimiter = delimiter;
  std::size_t width = rng.between(1, 6);
  for (std::size_t c = 0; c < width; ++c) {
    t.header.push_back(rng.word(1, 6) + std::to_string(c));
  }
  std::size_t rows = rng.between(0, 30);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < width; ++c) row.push_back(rng.cell());
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

TEST_CASE("value tokens") {
  CHECK(is_integer_token("42"));
  CHECK(is_integer_token("-7"));
  CHECK(is_integer_token("+3"));
  CHECK_FALSE(is_integer_token(""));
  CHECK_FALSE(is_integer_token("4.0"));
  CHECK_FALSE(is_integer_token("1,000"));
  CHECK(is_number_token("161.5"));
  CHECK(is_number_token("-1e-3"));
  CHECK(is_number_token(".5"));
  CHECK_FALSE(is_number_token("nan"));
  CHECK(is_boolean_token("TRUE"));
  CHECK_FALSE(is_boolean_token("yes"));
  CHECK(is_iso_date("2019-01-22"));
  CHECK(is_iso_date("2020-02-29"));
  CHECK_FALSE(is_iso_date("2019-02-29"));
  CHECK_FALSE(is_iso_date("2019-02-30"));
  CHECK_FALSE(is_iso_date("1900-02-29"));
  CHECK(is_iso_date("2000-02-29"));
  CHECK_FALSE(is_iso_date("22-01-2019"));
  CHECK_FALSE(is_iso_date("2019-1-22"));
  CHECK(looks_like_date("22-01-2019"));
  CHECK(looks_like_date("2019/1/22"));
  CHECK_FALSE(looks_like_date("2019-01"));
  CHECK(has_leading_zero("007"));
  CHECK_FALSE(has_leading_zero("0"));
  CHECK_FALSE(has_leading_zero("70"));
}

TEST_CASE("doi pattern") {
  CHECK(is_doi("10.5281/zenodo.1234567"));
  CHECK(is_doi("10.1000/xyz"));
  CHECK_FALSE(is_doi("10.100/xyz"));
  CHECK_FALSE(is_doi("10.1000/"));
  CHECK_FALSE(is_doi("10.1000/x y"));
  CHECK_FALSE(is_doi("doi:10.1000/xyz"));
  CHECK(contains_doi("doi = {10.5281/zenodo.1}"));
  CHECK_FALSE(contains_doi("no identifier 10.12/x here"));
}

TEST_CASE("dialect detection") {
  SUBCASE("comma") {
    auto d = detect_dialect("a,b,c\n1,2,3\n4,5,6\n");
    CHECK(d.dialect.delimiter == ',');
    CHECK_FALSE(d.inconsistent);
    CHECK(d.dialect.has_header);
  }
  SUBCASE("tab") {
    auto d = detect_dialect("a\tb\n1\t2,5\n3\t4,5\n");
    CHECK(d.dialect.delimiter == '\t');
  }
  SUBCASE("semicolon with decimal commas") {
    auto d = detect_dialect("x;y\n1,5;2,5\n3,0;4,0\n");
    CHECK(d.dialect.delimiter == ';');
  }
  SUBCASE("crlf") {
    auto d = detect_dialect("a,b\r\n1,2\r\n");
    CHECK(d.dialect.line_ending == LineEnding::crlf);
  }
  SUBCASE("quoted delimiters do not count") {
    auto d = detect_dialect("name;note\n\"a,b,c\";x\n\"d,e,f\";y\n");
    CHECK(d.dialect.delimiter == ';');
  }
  SUBCASE("numeric first row means no header") {
    auto d = detect_dialect("1,2\n3,4\n");
    CHECK_FALSE(d.dialect.has_header);
  }
  SUBCASE("ragged input is flagged") {
    auto d = detect_dialect("a,b\n1,2,3\n4\n5,6,7,8\n");
    CHECK(d.inconsistent);
  }
  SUBCASE("empty input") {
    CHECK_THROWS_AS(detect_dialect(""), FormatError);
  }
}

TEST_CASE("parse") {
  Dialect d;
  SUBCASE("quoted fields keep delimiters, quotes and newlines") {
    CsvTable t = parse_table("a,b\n\"x,y\",\"he said \"\"hi\"\"\"\n\"1\n2\",z\n", d);
    REQUIRE(t.rows.size() == 2);
    CHECK(t.rows[0][0] == "x,y");
    CHECK(t.rows[0][1] == "he said \"hi\"");
    CHECK(t.rows[1][0] == "1\n2");
  }
  SUBCASE("surrounding whitespace is data") {
    CsvTable t = parse_table("a,b\n 1 ,x \n", d);
    CHECK(t.rows[0][0] == " 1 ");
    CHECK(t.rows[0][1] == "x ");
  }
  SUBCASE("trailing blank lines are ignored, missing final newline is fine") {
    CHECK(parse_table("a\n1\n\n\n", d).rows.size() == 1);
    CHECK(parse_table("a,b\n1,2", d).rows.size() == 1);
  }
  SUBCASE("crlf line endings are recorded") {
    CsvTable t = parse_table("a,b\r\n1,2\r\n", d);
    CHECK(t.dialect.line_ending == LineEnding::crlf);
    CHECK(t.rows[0][1] == "2");
  }
  SUBCASE("ragged row reports its record number") {
    try {
      parse_table("a,b\n1,2\n3\n", d);
      FAIL("expected FormatError");
    } catch (const FormatError& e) {
      CHECK(e.row() == 3);
    }
  }
  SUBCASE("unterminated quote") {
    CHECK_THROWS_AS(parse_table("a\n\"open\n", d), FormatError);
  }
  SUBCASE("text after a closing quote") {
    CHECK_THROWS_AS(parse_table("a\n\"x\"y\n", d), FormatError);
  }
  SUBCASE("duplicate column names") {
    CHECK_THROWS_AS(parse_table("a, a\n1,2\n", d), FormatError);
  }
  SUBCASE("headerless input gets generated names") {
    Dialect nh;
    nh.has_header = false;
    CsvTable t = parse_table("1,2\n3,4\n", nh);
    CHECK(t.header == std::vector<std::string>{"column_1", "column_2"});
    CHECK(t.rows.size() == 2);
  }
  SUBCASE("encoding") {
    CsvTable t = load_table("\xEF\xBB\xBFid\n1\n");
    CHECK(t.header[0] == "id");
    CHECK_THROWS_AS(load_table("\xFF\xFEi\0d\0"), FormatError);
    CHECK_THROWS_AS(load_table("a\n\xC3\x28\n"), FormatError);
  }
}

TEST_CASE("canonical serialization") {
  CsvTable t;
  t.header = {"a", "b"};
  t.rows = {{"x,y", "plain"}, {"q\"q", "line\nbreak"}, {"", " pad "}};
  CHECK(serialize_table(t) ==
        "a,b\n\"x,y\",plain\n\"q\"\"q\",\"line\nbreak\"\n, pad \n");

  SUBCASE("crlf input comes out with LF") {
    CsvTable crlf = parse_table("a,b\r\n1,2\r\n", Dialect{});
    CHECK(serialize_table(crlf) == "a,b\n1,2\n");
  }
  SUBCASE("a lone empty cell is quoted so the row survives") {
    CsvTable one;
    one.header = {"only"};
    one.rows = {{""}, {"x"}};
    std::string s = serialize_table(one);
    CHECK(s == "only\n\"\"\nx\n");
    CHECK(parse_table(s, Dialect{}).rows == one.rows);
  }
  SUBCASE("semicolon dialect quotes semicolons, not commas") {
    CsvTable semi;
    semi.dialect.delimiter = ';';
    semi.header = {"a", "b"};
    semi.rows = {{"1,5", "x;y"}};
    CHECK(serialize_table(semi) == "a;b\n1,5;\"x;y\"\n");
  }
}

TEST_CASE("round trip property: parse(serialize(t)) == t") {
  testing::Rng rng(1);
  for (int i = 0; i < 300; ++i) {
    char delim = rng.pick(std::vector<char>{',', '\t', ';'});
    CsvTable t = random_table(rng, delim);
    std::string bytes = serialize_table(t);
    CsvTable back = parse_table(bytes, t.dialect);
    REQUIRE(back == t);
    REQUIRE(serialize_table(back) == bytes);
  }
}

TEST_CASE("serialized tables read identically with Python's csv module") {
  if (testing::shell("python3 -c 'import csv, json'").status != 0) {
    MESSAGE("python3 not available; skipping external CSV oracle");
    return;
  }
  testing::TempDir dir;
  testing::Rng rng(2);
  for (int i = 0; i < 20; ++i) {
    CsvTable t = random_table(rng, ',');
    auto path = dir / ("t" + std::to_string(i) + ".csv");
    testing::write_file(path, serialize_table(t));
    auto r = testing::shell(
        "python3 -c 'import csv, json, sys; "
        "print(json.dumps(list(csv.reader(open(sys.argv[1], newline=\"\", "
        "encoding=\"utf-8\")))))' " +
        testing::shell_quote(path.string()));
    REQUIRE(r.status == 0);
    auto rows = nlohmann::json::parse(r.output)
                    .get<std::vector<std::vector<std::string>>>();
    std::vector<std::vector<std::string>> expected{t.header};
    expected.insert(expected.end(), t.rows.begin(), t.rows.end());
    CHECK(rows == expected);
  }
}

TEST_CASE("headerless heuristic") {
  CHECK(looks_headerless(std::vector<std::string>{"1", "b"}));
  CHECK(looks_headerless(std::vector<std::string>{"a", ""}));
  CHECK_FALSE(looks_headerless(std::vector<std::string>{"age", "height"}));
}

TEST_CASE("missing-value tokens") {
  std::vector<std::string> column = {"1", "NA", "-99", "-99.0", "", "unknown",
                                     "NA", "."};
  MissingProfile p = detect_missing_tokens(column, {"NA"});
  CHECK(p.count == 2);
  CHECK(p.seen == std::set<std::string>{"NA"});
  CHECK(p.suspects == std::set<std::string>{"", "-99", ".", "unknown"});
  CHECK(p.suspect_count == 4);

  MissingProfile declared = detect_missing_tokens(column, {"NA", "-99"});
  CHECK(declared.count == 3);
  CHECK_FALSE(declared.suspects.count("-99"));
  CHECK(missing_watchlist().count("N/A"));
  CHECK(missing_watchlist().count("-999"));
}

TEST_CASE("load_table") {
  SUBCASE("tsv extension forces tab") {
    CsvTable t = load_table("a,b\tc\n1,2\t3\n", "x.tsv");
    CHECK(t.header == std::vector<std::string>{"a,b", "c"});
  }
  SUBCASE("all-string tables still have a header") {
    CsvTable t = load_table("variable,class\nyear,integer\n");
    CHECK(t.header[0] == "variable");
    CHECK(t.rows.size() == 1);
  }
  SUBCASE("csvy front matter is skipped") {
    CsvTable t = load_table("---\nname: x\n---\na\n1\n", "x.csvy");
    CHECK(t.header == std::vector<std::string>{"a"});
  }
  SUBCASE("empty") { CHECK_THROWS_AS(load_table("\n\n"), FormatError); }
}

TEST_CASE("csvy parsing") {
  std::string doc =
      "---\n"
      "name: demographics\n"
      "schema:\n"
      "  fields:\n"
      "    - name: age\n"
      "      type: integer\n"
      "    - name: nationality\n"
      "      type: string\n"
      "---\n"
      "age,nationality\n"
      "12,Australian\n";
  auto [front, table] = parse_csvy(doc);
  CHECK(front.raw_yaml.starts_with("name: demographics\n"));
  CHECK(front.raw_yaml.ends_with("type: string\n"));
  REQUIRE(front.schema);
  CHECK(front.schema->name == "demographics");
  REQUIRE(front.schema->fields.size() == 2);
  CHECK(front.schema->fields[0].type == FieldType::integer);
  CHECK(table.rows.size() == 1);
  CHECK(serialize_csvy(front, table) == doc);

  SUBCASE("no front matter") {
    auto [f, t] = parse_csvy("a\n1\n");
    CHECK(f.empty());
    CHECK(serialize_csvy(f, t) == "a\n1\n");
  }
  SUBCASE("unterminated fence") {
    CHECK_THROWS_WITH_AS(parse_csvy("---\nname: x\na\n1\n"),
                         "unterminated front matter: no closing '---' line",
                         FormatError);
  }
  SUBCASE("front matter delimiter is honoured") {
    auto [f, t] = parse_csvy("---\ndialect:\n  delimiter: \";\"\n---\na;b\n1;2,5\n");
    CHECK(t.dialect.delimiter == ';');
    CHECK(t.rows[0][1] == "2,5");
  }
  SUBCASE("a field list that is not a schema is reported, not thrown") {
    auto [f, t] = parse_csvy("---\nfields:\n  - name: a\n    type: decimal\n---\na\n1\n");
    CHECK_FALSE(f.schema);
    REQUIRE(f.schema_error);
    CHECK(f.schema_error->find("decimal") != std::string::npos);
  }
  SUBCASE("yaml subset") {
    CHECK_THROWS_AS(parse_csvy("---\na: &x 1\nb: *x\n---\nc\n1\n"),
                    FormatError);
    CHECK_THROWS_AS(parse_csvy("---\na: !!str 1\n---\nc\n1\n"), FormatError);
    CHECK_THROWS_AS(parse_csvy("---\na: 1\na: 2\n---\nc\n1\n"), FormatError);
    CHECK_THROWS_AS(parse_csvy("---\n- 1\n- 2\n---\nc\n1\n"), FormatError);
    CHECK_THROWS_AS(parse_csvy("---\na: [1\n---\nc\n1\n"), FormatError);
  }
  SUBCASE("fence inside front matter cannot be serialized") {
    FrontMatter bad;
    bad.raw_yaml = "a: 1\n---\n";
    CHECK_THROWS_AS(serialize_csvy(bad, table), FormatError);
  }
}

TEST_CASE("csvy round trip property") {
  testing::Rng rng(606);
  int with_schema = 0;
  for (int i = 0; i < 300; ++i) {
    fixtures::CsvyCase c = fixtures::random_csvy(rng);
    CAPTURE(c.yaml);
    REQUIRE(fixtures::csvy_round_trip_failure(c) == "");
    if (parse_front_matter(c.yaml).schema) ++with_schema;
  }
  // Most generated headers carry a usable schema.
  CHECK(with_schema > 200);
}
