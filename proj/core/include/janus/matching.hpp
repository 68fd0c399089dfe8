#pragma once

#include <vector>

#include "janus/concepts.hpp"
#include "janus/lexicon.hpp"
#include "janus/roles.hpp"

namespace janus {

struct MatchConfig {
  double label_weight = 0.5;
  double property_weight = 0.3;
  double context_weight = 0.2;
  double accept_threshold = 0.8;

  /// Throws Error{InvalidConfig} unless the weights are non-negative and sum
  /// to 1 and the threshold lies in [0,1].
  void validate() const;

  friend bool operator==(const MatchConfig&, const MatchConfig&) = default;
};

struct Match {
  ConceptId left = 0;   // smaller label of the pair
  ConceptId right = 0;
  double label_score = 0;
  double property_score = 0;
  double context_score = 0;
  double combined_score = 0;
};

/// Accepted equivalence candidates, sorted by combined score descending then
/// by label pair. Carries the config it was computed under.
struct MatchSet {
  std::vector<Match> matches;
  MatchConfig config;
};

/// Jaccard over the two concepts' property label sets; labels compare equal
/// when their abbreviation-expanded tokens are synonym-identical. Two
/// property-free concepts score 0.
double property_set_similarity(const ConceptGraph& graph, ConceptId a,
                               ConceptId b, const LexicalResource& resource);

/// Jaccard over the (edge kind, neighbor label) sets around each concept,
/// both directions, ignoring edges between the two candidates themselves.
double context_similarity(const ConceptGraph& graph, ConceptId a, ConceptId b);

/// Scores same-role concept pairs that come from different sources and keeps
/// those at or above the acceptance threshold.
MatchSet match_concepts(const ConceptGraph& graph, const RoleAssignment& roles,
                        const MatchConfig& config,
                        const LexicalResource& resource);

}  // namespace janus
