#pragma once

#include <vector>

#include "janus/concepts.hpp"
#include "janus/corpus.hpp"

namespace janus {

struct ExtractOptions {
  bool singularize = false;
};

/// Applies the structure mapping rules to a resolved corpus: complex types
/// and elements become concepts, model groups and attributes become
/// properties, derivations and typed elements become is-a edges, choices
/// become disjointness pairs. Concepts with the same normalized label are
/// unified and accumulate provenance. Never fails on a valid corpus; findings
/// go to the optional warning sink.
ConceptGraph extract_concepts(const CorpusModel& model,
                              const ExtractOptions& options = {},
                              std::vector<Warning>* warnings = nullptr);

}  // namespace janus
