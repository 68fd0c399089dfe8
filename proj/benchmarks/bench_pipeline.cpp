#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "janus/corpus.hpp"
#include "janus/extract.hpp"
#include "janus/matching.hpp"
#include "janus/merging.hpp"
#include "janus/xsd_parser.hpp"

namespace {

/// Synthetic corpus: a shared vocabulary plus per-file unique declarations.
std::vector<std::pair<std::string, std::string>> synthetic_corpus(int files) {
  std::vector<std::pair<std::string, std::string>> out;
  auto unique_name = [](int file, int slot) {
    std::string name = "t";
    int v = file * 64 + slot;
    for (int k = 0; k < 4; ++k) {
      name.push_back(static_cast<char>('a' + v % 26));
      v /= 26;
    }
    return name;
  };
  for (int f = 0; f < files; ++f) {
    std::string body;
    body += R"(<xs:complexType name="Person">
      <xs:sequence>
        <xs:element name="Name" type="xs:string"/>
        <xs:element name="City" type="xs:string"/>
      </xs:sequence>
    </xs:complexType>)";
    for (int t = 0; t < 8; ++t) {
      body += "<xs:complexType name=\"" + unique_name(f, t) + "\"><xs:sequence>";
      for (int e = 0; e < 4; ++e)
        body += "<xs:element name=\"" + unique_name(f, 8 + t * 4 + e) +
                "\" type=\"xs:string\"/>";
      body += "</xs:sequence></xs:complexType>";
    }
    out.emplace_back(
        "file" + std::to_string(f) + ".xsd",
        "<xs:schema xmlns:xs=\"http://www.w3.org/2001/XMLSchema\">" + body +
            "</xs:schema>");
  }
  return out;
}

void BM_ExtractCorpus(benchmark::State& state) {
  auto sources = synthetic_corpus(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    std::vector<janus::SchemaDocument> docs;
    for (const auto& [id, text] : sources)
      docs.push_back(janus::parse_schema_document(text, id));
    auto corpus = janus::build_corpus_model(std::move(docs));
    auto graph = janus::extract_concepts(corpus);
    benchmark::DoNotOptimize(graph);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ExtractCorpus)->Arg(10)->Arg(50);

void BM_MatchAndMerge(benchmark::State& state) {
  auto sources = synthetic_corpus(static_cast<int>(state.range(0)));
  std::vector<janus::SchemaDocument> docs;
  for (const auto& [id, text] : sources)
    docs.push_back(janus::parse_schema_document(text, id));
  auto corpus = janus::build_corpus_model(std::move(docs));
  auto graph = janus::extract_concepts(corpus);
  janus::LexicalResource resource;
  for (auto _ : state) {
    auto roles = janus::classify_roles(graph);
    auto matches = janus::match_concepts(graph, roles, {}, resource);
    auto merged = janus::merge_concepts(graph, matches, resource);
    benchmark::DoNotOptimize(merged);
  }
}
BENCHMARK(BM_MatchAndMerge)->Arg(10)->Arg(50);

}  // namespace
