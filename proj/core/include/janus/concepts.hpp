#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "janus/occurrence.hpp"

namespace janus {

using ConceptId = std::uint32_t;

enum class EdgeKind { IsA, PropertyOf, DisjointWith, EquivalentTo };
const char* edge_kind_name(EdgeKind kind);
std::optional<EdgeKind> edge_kind_from(std::string_view name);

/// The thirteen structure-to-concept mapping rules.
enum class MappingRule {
  ComplexType,
  SimpleType,
  TypeDerivation,
  UnionMembers,
  AnyWildcard,
  SimpleContent,
  ElementRef,
  ElementTyped,
  ElementUntyped,
  Cardinality,
  GroupChildren,
  AttributeDecl,
  ChoiceDisjoint,
};
const char* mapping_rule_name(MappingRule rule);
std::optional<MappingRule> mapping_rule_from(std::string_view name);

/// Source location a concept was mined from, witnessing the mapping.
struct Provenance {
  std::string source_id;
  std::string construct_path;
  MappingRule rule = MappingRule::ComplexType;

  friend bool operator==(const Provenance&, const Provenance&) = default;
  friend auto operator<=>(const Provenance&, const Provenance&) = default;
};

enum class RelationKind { Synonymy, AbbreviationUsage, ProvedSimilarity };
const char* relation_kind_name(RelationKind kind);
std::optional<RelationKind> relation_kind_from(std::string_view name);

/// Semantic or non-semantic assertion attached to a concept, e.g. a label
/// absorbed during merging.
struct Relation {
  RelationKind kind = RelationKind::ProvedSimilarity;
  std::string target;
  std::string note;

  friend bool operator==(const Relation&, const Relation&) = default;
  friend auto operator<=>(const Relation&, const Relation&) = default;
};

struct Concept {
  std::string label;  // normalized; unique within a graph
  std::optional<std::string> datatype_target;  // built-in it bottoms out at
  bool declared_complex = false;  // mined from a complex-content type
  std::vector<Provenance> instances;
  std::vector<Relation> relations;

  std::set<std::string> source_ids() const;

  friend bool operator==(const Concept&, const Concept&) = default;
};

struct Edge {
  EdgeKind kind = EdgeKind::IsA;
  ConceptId from = 0;
  ConceptId to = 0;
  std::optional<Occurrence> cardinality;  // propertyOf edges only

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// The mined concept set with its typed edges. After finalize() concepts are
/// sorted by label and edges are canonical, so equal graphs compare equal.
struct ConceptGraph {
  std::vector<Concept> concepts;
  std::vector<Edge> edges;

  const Concept& at(ConceptId id) const { return concepts[id]; }
  std::optional<ConceptId> find(std::string_view label) const;
  ConceptId require(std::string_view label) const;

  /// propertyOf targets per owning concept.
  std::map<ConceptId, std::vector<std::pair<ConceptId, Occurrence>>>
  property_lists() const;

  /// Sorts concepts by label, remaps edges, canonicalizes symmetric edges,
  /// drops self loops and merges duplicate edges (widening cardinalities).
  void finalize();

  friend bool operator==(const ConceptGraph&, const ConceptGraph&) = default;
};

/// Role partition: classes, properties and printable datatype concepts.
/// Classes and properties may overlap; datatypes never overlap classes.
struct RoleAssignment {
  std::set<ConceptId> classes;
  std::set<ConceptId> properties;
  std::set<ConceptId> datatypes;

  friend bool operator==(const RoleAssignment&, const RoleAssignment&) = default;
};

}  // namespace janus
