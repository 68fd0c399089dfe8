#include <benchmark/benchmark.h>

#include <random>

#include "janus/similarity.hpp"

namespace {

janus::TokenList random_tokens(std::mt19937& rng, int max_len) {
  static const char* words[] = {"postal", "address", "geo",    "wine",
                                "taste",  "owner",   "person", "status",
                                "city",   "street",  "zip",    "name"};
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> pick(0, 11);
  janus::TokenList out;
  for (int i = 0, n = len(rng); i < n; ++i) out.push_back(words[pick(rng)]);
  return out;
}

void BM_LabelSimilarity(benchmark::State& state) {
  std::mt19937 rng(7);
  auto resource = janus::LexicalResource::load("syn: owner, person\n");
  std::vector<std::pair<janus::TokenList, janus::TokenList>> pairs;
  for (int i = 0; i < 256; ++i)
    pairs.emplace_back(random_tokens(rng, static_cast<int>(state.range(0))),
                       random_tokens(rng, static_cast<int>(state.range(0))));
  std::size_t i = 0;
  for (auto _ : state) {
    const auto& [a, b] = pairs[i++ % pairs.size()];
    benchmark::DoNotOptimize(janus::label_similarity(a, b, resource));
  }
}
BENCHMARK(BM_LabelSimilarity)->Arg(3)->Arg(5);

}  // namespace
