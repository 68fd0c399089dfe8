#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "janus/errors.hpp"
#include "janus/store.hpp"

#include "test_helpers.hpp"

using namespace janus;

namespace {

std::string temp_path(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "janus-store-tests";
  std::filesystem::create_directories(dir);
  return (dir / name).string();
}

ConceptStore wine_store() {
  ConceptStore store;
  store.graph = test::graph_from(test::wine_sources());
  store.roles = classify_roles(store.graph);
  store.config_fingerprint = "fp-test";
  return store;
}

}  // namespace

TEST_CASE("save then load returns a structurally equal store") {
  ConceptStore store = wine_store();
  const std::string path = temp_path("wine.store.json");
  save_store(store, path);
  ConceptStore loaded = load_store(path);
  CHECK(loaded.format_version == kStoreFormatVersion);
  CHECK(loaded.config_fingerprint == store.config_fingerprint);
  CHECK(loaded.graph == store.graph);
  CHECK(loaded.roles == store.roles);
}

TEST_CASE("future format versions are rejected") {
  ConceptStore store = wine_store();
  const std::string path = temp_path("future.store.json");
  save_store(store, path);

  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  in.close();
  auto pos = text.find("\"format_version\": 1");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 19, "\"format_version\": 999");
  std::ofstream(path, std::ios::trunc) << text;

  try {
    load_store(path);
    FAIL("expected UnsupportedVersion");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnsupportedVersion);
  }
}

TEST_CASE("truncated stores are rejected") {
  ConceptStore store = wine_store();
  const std::string path = temp_path("truncated.store.json");
  save_store(store, path);

  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  in.close();
  std::ofstream(path, std::ios::trunc) << text.substr(0, text.size() / 2);

  try {
    load_store(path);
    FAIL("expected CorruptStore");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CorruptStore);
  }
}

TEST_CASE("checksum tampering is detected") {
  ConceptStore store = wine_store();
  const std::string path = temp_path("tampered.store.json");
  save_store(store, path);

  std::ifstream in(path);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  in.close();
  auto pos = text.find("\"wine\"");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 6, "\"vine\"");
  std::ofstream(path, std::ios::trunc) << text;

  CHECK_THROWS_AS(load_store(path), Error);
}

TEST_CASE("randomized graphs survive the round trip") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> label_len(3, 8);
  std::uniform_int_distribution<int> letter(0, 25);
  std::uniform_int_distribution<int> edge_kind(0, 3);

  for (int trial = 0; trial < 25; ++trial) {
    ConceptGraph g;
    std::uniform_int_distribution<int> size(2, 20);
    const int n = size(rng);
    std::set<std::string> used;
    for (int i = 0; i < n; ++i) {
      std::string label;
      do {
        label.clear();
        for (int k = 0, len = label_len(rng); k < len; ++k)
          label.push_back(static_cast<char>('a' + letter(rng)));
      } while (!used.insert(label).second);
      Concept c;
      c.label = label;
      if (i % 4 == 0) c.datatype_target = "string";
      c.declared_complex = i % 3 == 0;
      c.instances.push_back(
          {"src" + std::to_string(i % 3), "path/" + label,
           static_cast<MappingRule>(i % 13)});
      if (i % 5 == 0)
        c.relations.push_back({RelationKind::ProvedSimilarity, "old_" + label, "n"});
      g.concepts.push_back(std::move(c));
    }
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int e = 0; e < n; ++e) {
      Edge edge;
      edge.kind = static_cast<EdgeKind>(edge_kind(rng));
      edge.from = static_cast<ConceptId>(pick(rng));
      edge.to = static_cast<ConceptId>(pick(rng));
      if (edge.kind == EdgeKind::PropertyOf)
        edge.cardinality = Occurrence{0, e % 2 ? std::optional<std::uint32_t>{}
                                               : std::optional<std::uint32_t>{3}};
      g.edges.push_back(edge);
    }
    g.finalize();

    ConceptStore store;
    store.graph = g;
    store.config_fingerprint = content_digest(std::to_string(trial));
    const std::string path = temp_path("random.store.json");
    save_store(store, path);
    ConceptStore loaded = load_store(path);
    CHECK(loaded.graph == g);
  }
}
