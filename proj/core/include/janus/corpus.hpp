#pragma once

#include <deque>
#include <map>
#include <string>
#include <vector>

#include "janus/xsd_model.hpp"

namespace janus {

/// All parsed documents with type/element references resolved across the
/// whole set. Immutable once built; resolution pointers stay valid for the
/// lifetime of the model (it is move-only).
struct CorpusModel {
  std::vector<SchemaDocument> documents;  // sorted by source_id
  std::deque<TypeDefinition> builtin_types;
  std::vector<Warning> warnings;          // parse + resolution warnings

  CorpusModel() = default;
  CorpusModel(CorpusModel&&) = default;
  CorpusModel& operator=(CorpusModel&&) = default;
  CorpusModel(const CorpusModel&) = delete;
  CorpusModel& operator=(const CorpusModel&) = delete;

  bool empty() const { return documents.empty(); }
};

/// Resolves declared_type / ref_target / base_type across documents by
/// qualified name, falling back to unique local names. Unresolved references
/// become "unresolved-reference" warnings; duplicate definitions resolve
/// first-document-wins after sorting by source_id.
CorpusModel build_corpus_model(std::vector<SchemaDocument> documents);

}  // namespace janus
