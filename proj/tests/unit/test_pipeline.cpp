#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "janus/errors.hpp"
#include "janus/pipeline.hpp"

#include "test_helpers.hpp"

using namespace janus;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) {
    path = fs::temp_directory_path() / "janus-pipeline-tests" / name;
    fs::remove_all(path);
    fs::create_directories(path);
  }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return std::string((std::istreambuf_iterator<char>(in)), {});
}

void copy_wine_corpus(const TempDir& dir) {
  fs::copy(test::data_dir() + "/wine", dir.path / "corpus",
           fs::copy_options::recursive);
}

PipelineConfig wine_config(const TempDir& dir) {
  PipelineConfig config;
  config.input_paths = {(dir.path / "corpus").string()};
  config.output_path = dir.file("wine.ttl");
  config.report_format = ReportFormat::Json;
  return config;
}

}  // namespace

TEST_CASE("the wine corpus reports the reference counts") {
  TempDir dir("wine-counts");
  copy_wine_corpus(dir);
  PipelineResult result = run_pipeline(wine_config(dir));

  CHECK(result.exit_code == 0);
  CHECK(result.summary.classes.size() == 6);
  CHECK(result.summary.properties.size() == 12);
  CHECK(result.summary.datatypes.size() == 7);
  REQUIRE(result.summary.relationships.size() == 3);
  CHECK(result.summary.relationships[0].from == "drinker");
  CHECK(result.summary.relationships[0].to == "person");
  CHECK(result.summary.relationships[1].from == "owner");
  CHECK(result.summary.relationships[1].to == "person");
  CHECK(result.summary.relationships[2].kind == EdgeKind::DisjointWith);
  CHECK(result.summary.relationships[2].from == "coca");
  CHECK(result.summary.relationships[2].to == "wine");

  CHECK(fs::exists(dir.file("wine.ttl")));
  CHECK(fs::exists(dir.file("wine.report.json")));
  CHECK(result.turtle.find(":drinker rdfs:subClassOf :person .") !=
        std::string::npos);
}

TEST_CASE("an empty corpus is a fatal error that writes nothing") {
  TempDir dir("empty");
  fs::create_directories(dir.path / "corpus");
  PipelineConfig config = wine_config(dir);
  try {
    run_pipeline(config);
    FAIL("expected EmptyCorpus");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::EmptyCorpus);
  }
  CHECK_FALSE(fs::exists(dir.file("wine.ttl")));
  CHECK_FALSE(fs::exists(dir.file("wine.report.json")));
}

TEST_CASE("two runs produce byte-identical outputs") {
  TempDir dir("determinism");
  copy_wine_corpus(dir);
  PipelineConfig config = wine_config(dir);

  run_pipeline(config);
  const std::string ttl1 = slurp(dir.file("wine.ttl"));
  const std::string report1 = slurp(dir.file("wine.report.json"));

  run_pipeline(config);
  CHECK(slurp(dir.file("wine.ttl")) == ttl1);
  CHECK(slurp(dir.file("wine.report.json")) == report1);

  // Listing the files instead of the directory, in reverse order.
  PipelineConfig reversed = config;
  reversed.input_paths = {(dir.path / "corpus" / "winetasting.xsd").string(),
                          (dir.path / "corpus" / "winedrinkers.xsd").string()};
  run_pipeline(reversed);
  CHECK(slurp(dir.file("wine.ttl")) == ttl1);
  CHECK(slurp(dir.file("wine.report.json")) == report1);
}

TEST_CASE("a store makes re-runs idempotent") {
  TempDir dir("evolution");
  copy_wine_corpus(dir);
  PipelineConfig config = wine_config(dir);
  config.store_path = dir.file("wine.store.json");

  run_pipeline(config);
  const std::string ttl1 = slurp(dir.file("wine.ttl"));
  const std::string report1 = slurp(dir.file("wine.report.json"));
  REQUIRE(fs::exists(*config.store_path));

  PipelineResult second = run_pipeline(config);
  CHECK(second.exit_code == 0);
  CHECK(slurp(dir.file("wine.ttl")) == ttl1);
  CHECK(slurp(dir.file("wine.report.json")) == report1);
}

TEST_CASE("store re-runs stay idempotent when the corpus merges concepts") {
  TempDir dir("evolution-merging");
  fs::create_directories(dir.path / "corpus");
  std::ofstream(dir.file("corpus/orders.xsd")) << R"(
    <xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema">
      <xs:complexType name="PostalAddress">
        <xs:sequence>
          <xs:element name="Street" type="xs:string"/>
          <xs:element name="City" type="xs:string"/>
          <xs:element name="Zip" type="xs:integer"/>
        </xs:sequence>
      </xs:complexType>
    </xs:schema>)";
  std::ofstream(dir.file("corpus/crm.xsd")) << R"(
    <xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema">
      <xs:complexType name="GeoAddress">
        <xs:sequence>
          <xs:element name="Street" type="xs:string"/>
          <xs:element name="City" type="xs:string"/>
          <xs:element name="Postcode" type="xs:integer"/>
        </xs:sequence>
      </xs:complexType>
    </xs:schema>)";
  std::ofstream(dir.file("lexicon.txt")) << "syn: zip, postcode\n";

  PipelineConfig config;
  config.input_paths = {(dir.path / "corpus").string()};
  config.output_path = dir.file("out.ttl");
  config.report_format = ReportFormat::Json;
  config.lexicon_path = dir.file("lexicon.txt");
  config.store_path = dir.file("store.json");

  PipelineResult first = run_pipeline(config);
  // The two address classes merge through mutual inclusion.
  CHECK(first.summary.classes.size() == 1);
  const std::string ttl1 = slurp(dir.file("out.ttl"));
  const std::string report1 = slurp(dir.file("out.report.json"));

  // Re-extracted originals must fold back into the merged store concepts.
  PipelineResult second = run_pipeline(config);
  CHECK(second.exit_code == 0);
  CHECK(second.summary.classes.size() == 1);
  CHECK(slurp(dir.file("out.ttl")) == ttl1);
  CHECK(slurp(dir.file("out.report.json")) == report1);

  PipelineResult third = run_pipeline(config);
  CHECK(slurp(dir.file("out.ttl")) == ttl1);
  CHECK(third.summary.properties == second.summary.properties);
}

TEST_CASE("a config change against the store is warned about") {
  TempDir dir("store-mismatch");
  copy_wine_corpus(dir);
  PipelineConfig config = wine_config(dir);
  config.store_path = dir.file("wine.store.json");
  run_pipeline(config);

  config.match.accept_threshold = 0.9;
  PipelineResult result = run_pipeline(config);
  bool warned = false;
  for (const Finding& f : result.validation.warnings)
    if (f.code == "store-config-mismatch") warned = true;
  CHECK(warned);
}

TEST_CASE("report-only mode regenerates from the store alone") {
  TempDir dir("report-only");
  copy_wine_corpus(dir);
  PipelineConfig config = wine_config(dir);
  config.store_path = dir.file("wine.store.json");
  run_pipeline(config);
  const std::string ttl1 = slurp(dir.file("wine.ttl"));

  PipelineConfig store_only;
  store_only.store_path = config.store_path;
  store_only.output_path = dir.file("from-store.ttl");
  store_only.report_format = ReportFormat::Json;
  PipelineResult result = run_pipeline(store_only);
  CHECK(result.exit_code == 0);
  CHECK(result.summary.classes.size() == 6);
  CHECK(slurp(dir.file("from-store.ttl")) == ttl1);
}

TEST_CASE("validation errors exit with code 2 and keep the turtle unwritten") {
  TempDir dir("cycle");
  std::ofstream(dir.file("cycle.xsd")) << R"(
    <xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema">
      <xs:element name="A" type="B"/>
      <xs:element name="B" type="A"/>
      <xs:complexType name="A">
        <xs:sequence>
          <xs:element name="X" type="xs:string"/>
          <xs:element name="Y" type="xs:string"/>
        </xs:sequence>
      </xs:complexType>
      <xs:complexType name="B">
        <xs:sequence>
          <xs:element name="X" type="xs:string"/>
          <xs:element name="Z" type="xs:string"/>
        </xs:sequence>
      </xs:complexType>
    </xs:schema>)";
  PipelineConfig config;
  config.input_paths = {dir.file("cycle.xsd")};
  config.output_path = dir.file("cycle.ttl");
  PipelineResult result = run_pipeline(config);
  CHECK(result.exit_code == 2);
  CHECK(result.turtle.empty());
  REQUIRE(result.validation.errors.size() == 1);
  CHECK(result.validation.errors[0].code == "isa-cycle");
  CHECK_FALSE(fs::exists(dir.file("cycle.ttl")));
  CHECK(fs::exists(dir.file("cycle.report.txt")));
}

TEST_CASE("summary JSON matches the frozen document for a tiny graph") {
  TempDir dir("tiny");
  std::ofstream(dir.file("tiny.xsd")) << R"(
    <xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema">
      <xs:complexType name="Note">
        <xs:sequence>
          <xs:element name="Text" type="xs:string"/>
          <xs:element name="Tag" type="xs:string"/>
        </xs:sequence>
      </xs:complexType>
    </xs:schema>)";
  PipelineConfig config;
  config.input_paths = {dir.file("tiny.xsd")};
  config.output_path = dir.file("tiny.ttl");
  PipelineResult result = run_pipeline(config);

  CHECK(result.summary.to_json_text() ==
        "{\n"
        "  \"classes\": [\n"
        "    \"note\"\n"
        "  ],\n"
        "  \"datatypes\": [\n"
        "    \"string\"\n"
        "  ],\n"
        "  \"properties\": [\n"
        "    \"tag\",\n"
        "    \"text\"\n"
        "  ],\n"
        "  \"relationships\": []\n"
        "}\n");

  CHECK(result.summary.to_text() ==
        "Classes: 1 (note)\n"
        "Properties: 2 (tag, text)\n"
        "Datatypes: 1 (string)\n"
        "Relationships: none\n");
}

TEST_CASE("an empty graph reports zero counts") {
  SummaryReport summary = report_summary({}, {});
  CHECK(summary.to_text() ==
        "Classes: 0 ()\n"
        "Properties: 0 ()\n"
        "Datatypes: 0 ()\n"
        "Relationships: none\n");
}

TEST_CASE("the wine text summary lists the three relationships") {
  TempDir dir("wine-text");
  copy_wine_corpus(dir);
  PipelineConfig config = wine_config(dir);
  config.report_format = ReportFormat::Text;
  PipelineResult result = run_pipeline(config);
  CHECK(result.summary.to_text().find(
            "Relationships: drinker is-a person; owner is-a person; "
            "coca disjointWith wine") != std::string::npos);
  CHECK(slurp(dir.file("wine.report.txt")).find("Validation: 0 errors") !=
        std::string::npos);
}
