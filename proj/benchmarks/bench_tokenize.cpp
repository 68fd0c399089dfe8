#include <benchmark/benchmark.h>

#include "janus/tokenize.hpp"

namespace {

const char* kLabels[] = {
    "PostalAddress", "wine_taste",     "XSDFileFormat", "anyURI",
    "ISO9000Cert",   "geo-location.x", "Drinkers",      "WineTastingSession",
};

void BM_TokenizeLabel(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    auto tokens = janus::tokenize_label(kLabels[i++ % std::size(kLabels)]);
    benchmark::DoNotOptimize(tokens);
  }
}
BENCHMARK(BM_TokenizeLabel);

void BM_NormalizeLabel(benchmark::State& state) {
  std::size_t i = 0;
  for (auto _ : state) {
    auto label = janus::normalize_label(kLabels[i++ % std::size(kLabels)],
                                        state.range(0) != 0);
    benchmark::DoNotOptimize(label);
  }
}
BENCHMARK(BM_NormalizeLabel)->Arg(0)->Arg(1);

}  // namespace
