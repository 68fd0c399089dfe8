#pragma once

#include <optional>
#include <string>
#include <vector>

#include "janus/matching.hpp"
#include "janus/skeleton.hpp"
#include "janus/validation.hpp"

namespace janus {

enum class ReportFormat { Text, Json };

struct PipelineConfig {
  std::vector<std::string> input_paths;
  std::optional<std::string> lexicon_path;
  MatchConfig match;
  bool singularize = false;
  std::string base_iri = "http://example.org/ontology#";
  std::optional<std::string> store_path;
  std::string output_path = "skeleton.ttl";
  ReportFormat report_format = ReportFormat::Text;
};

struct SummaryRelationship {
  EdgeKind kind = EdgeKind::IsA;
  std::string from;
  std::string to;

  friend bool operator==(const SummaryRelationship&, const SummaryRelationship&) = default;
};

struct SummaryReport {
  std::vector<std::string> classes;
  std::vector<std::string> properties;
  std::vector<std::string> datatypes;
  std::vector<SummaryRelationship> relationships;

  std::string to_text() const;
  std::string to_json_text() const;
};

/// Counts, sorted name lists per role, and the class-level relationships
/// (is-a into classes, disjointness between non-datatypes).
SummaryReport report_summary(const ConceptGraph& graph, const RoleAssignment& roles);

struct PipelineResult {
  ConceptGraph graph;
  RoleAssignment roles;
  OntologySkeleton skeleton;
  ValidationReport validation;
  SummaryReport summary;
  std::string turtle;      // empty when validation failed
  int exit_code = 0;       // 0 ok, 2 validation errors
};

/// Runs parse -> corpus -> extraction -> roles -> matching -> merging ->
/// validation -> generation -> serialization. A store on disk joins the graph
/// as one more source before matching and is updated afterwards. Output files
/// are written atomically; on validation errors the report is still written,
/// the Turtle is not, and exit_code is 2.
PipelineResult run_pipeline(const PipelineConfig& config);

}  // namespace janus
