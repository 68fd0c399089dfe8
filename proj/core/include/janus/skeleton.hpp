#pragma once

#include <string>
#include <utility>
#include <vector>

#include "janus/occurrence.hpp"
#include "janus/roles.hpp"

namespace janus {

struct SkeletonProperty {
  std::string name;
  std::string range;  // datatype name or class label; may be empty
  std::vector<std::pair<std::string, Occurrence>> domains;  // sorted

  friend bool operator==(const SkeletonProperty&, const SkeletonProperty&) = default;
};

/// The (classes, properties, subsumption) triple ready for serialization.
struct OntologySkeleton {
  std::vector<std::string> classes;
  std::vector<SkeletonProperty> object_properties;
  std::vector<SkeletonProperty> datatype_properties;
  std::vector<std::pair<std::string, std::string>> isa_links;
  std::vector<std::pair<std::string, std::string>> disjoint_pairs;

  bool empty() const {
    return classes.empty() && object_properties.empty() &&
           datatype_properties.empty() && isa_links.empty() &&
           disjoint_pairs.empty();
  }

  friend bool operator==(const OntologySkeleton&, const OntologySkeleton&) = default;
};

/// Projects a validated graph onto the output triple. Properties owned by
/// classes become datatype or object properties depending on where their
/// target chain ends; is-a links into classes survive (datatype derivations
/// do not); disjointness keeps every non-datatype pair.
/// Throws Error{UnclassifiedConcept} when a reachable concept has no role.
OntologySkeleton generate_skeleton(const ConceptGraph& graph,
                                   const RoleAssignment& roles);

}  // namespace janus
