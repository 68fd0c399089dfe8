#include "janus/skeleton.hpp"

#include <algorithm>
#include <map>

#include "janus/errors.hpp"

namespace janus {

namespace {

struct RangeInfo {
  bool printable = false;
  std::string range;  // empty when unknown
};

/// Where a property concept's target chain ends: its own printable marker,
/// itself when it is a class, or the first is-a target that resolves.
RangeInfo resolve_range(const ConceptGraph& graph, const RoleAssignment& roles,
                        ConceptId id) {
  const Concept& c = graph.at(id);
  if (c.datatype_target) return {true, *c.datatype_target};
  if (roles.classes.count(id)) return {false, c.label};
  for (const Edge& e : graph.edges) {
    if (e.kind != EdgeKind::IsA || e.from != id) continue;
    const Concept& target = graph.at(e.to);
    if (target.datatype_target) return {true, *target.datatype_target};
    if (roles.classes.count(e.to)) return {false, target.label};
  }
  return {false, ""};
}

}  // namespace

OntologySkeleton generate_skeleton(const ConceptGraph& graph,
                                   const RoleAssignment& roles) {
  OntologySkeleton skeleton;
  for (ConceptId id : roles.classes) skeleton.classes.push_back(graph.at(id).label);
  std::sort(skeleton.classes.begin(), skeleton.classes.end());

  std::map<std::string, SkeletonProperty> datatype_props;
  std::map<std::string, SkeletonProperty> object_props;

  for (const Edge& e : graph.edges) {
    if (e.kind != EdgeKind::PropertyOf) continue;
    if (!roles.classes.count(e.from)) continue;
    const Concept& target = graph.at(e.to);
    if (!roles.classes.count(e.to) && !roles.properties.count(e.to) &&
        !roles.datatypes.count(e.to))
      throw Error(ErrorCode::UnclassifiedConcept,
                  target.label + " is owned by " + graph.at(e.from).label +
                      " but has no role");
    const RangeInfo range = resolve_range(graph, roles, e.to);
    auto& bucket = range.printable ? datatype_props : object_props;
    SkeletonProperty& prop = bucket[target.label];
    prop.name = target.label;
    prop.range = range.range;
    prop.domains.emplace_back(graph.at(e.from).label,
                              e.cardinality.value_or(Occurrence{}));
  }

  auto flush = [](std::map<std::string, SkeletonProperty>& bucket,
                  std::vector<SkeletonProperty>& out) {
    for (auto& [name, prop] : bucket) {
      std::sort(prop.domains.begin(), prop.domains.end());
      out.push_back(std::move(prop));
    }
  };
  flush(datatype_props, skeleton.datatype_properties);
  flush(object_props, skeleton.object_properties);

  for (const Edge& e : graph.edges) {
    if (e.kind == EdgeKind::IsA) {
      if (!roles.classes.count(e.to)) continue;     // subsumption into classes only
      if (roles.datatypes.count(e.from)) continue;  // printable derivations stay out
      skeleton.isa_links.emplace_back(graph.at(e.from).label, graph.at(e.to).label);
    } else if (e.kind == EdgeKind::DisjointWith) {
      if (roles.datatypes.count(e.from) || roles.datatypes.count(e.to)) continue;
      std::string a = graph.at(e.from).label;
      std::string b = graph.at(e.to).label;
      if (b < a) std::swap(a, b);
      skeleton.disjoint_pairs.emplace_back(std::move(a), std::move(b));
    }
  }
  std::sort(skeleton.isa_links.begin(), skeleton.isa_links.end());
  skeleton.isa_links.erase(
      std::unique(skeleton.isa_links.begin(), skeleton.isa_links.end()),
      skeleton.isa_links.end());
  std::sort(skeleton.disjoint_pairs.begin(), skeleton.disjoint_pairs.end());
  skeleton.disjoint_pairs.erase(
      std::unique(skeleton.disjoint_pairs.begin(), skeleton.disjoint_pairs.end()),
      skeleton.disjoint_pairs.end());
  return skeleton;
}

}  // namespace janus
