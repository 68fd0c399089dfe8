#pragma once

#include <vector>

#include "janus/matching.hpp"
#include "janus/xsd_model.hpp"

namespace janus {

/// True when every property of `inner` is (synonym-)contained in `outer`'s
/// property set and the labels overlap at all. Asymmetric.
bool detect_inclusion(const ConceptGraph& graph, ConceptId inner, ConceptId outer,
                      const LexicalResource& resource);

/// Collapses accepted matches and mutually-included pairs into single
/// concepts: properties union, provenance concatenates, edges re-point, the
/// label comes from the most widely used member and absorbed labels are kept
/// as proved-similarity relations. Repeats with recomputed matches until no
/// cluster is left, so merging a merged graph again changes nothing. A match
/// that would close an is-a cycle is dropped with a warning.
ConceptGraph merge_concepts(const ConceptGraph& graph, const MatchSet& matches,
                            const LexicalResource& resource,
                            std::vector<Warning>* warnings = nullptr);

}  // namespace janus
