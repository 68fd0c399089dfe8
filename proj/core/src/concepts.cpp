#include "janus/concepts.hpp"

#include <algorithm>
#include <stdexcept>

namespace janus {

namespace {

constexpr std::pair<EdgeKind, const char*> kEdgeNames[] = {
    {EdgeKind::IsA, "is-a"},
    {EdgeKind::PropertyOf, "propertyOf"},
    {EdgeKind::DisjointWith, "disjointWith"},
    {EdgeKind::EquivalentTo, "equivalentTo"},
};

constexpr std::pair<MappingRule, const char*> kRuleNames[] = {
    {MappingRule::ComplexType, "complexType"},
    {MappingRule::SimpleType, "simpleType"},
    {MappingRule::TypeDerivation, "extension-restriction"},
    {MappingRule::UnionMembers, "union"},
    {MappingRule::AnyWildcard, "any"},
    {MappingRule::SimpleContent, "simpleContent"},
    {MappingRule::ElementRef, "element-ref"},
    {MappingRule::ElementTyped, "element-typed"},
    {MappingRule::ElementUntyped, "element-untyped"},
    {MappingRule::Cardinality, "minmax-occurs"},
    {MappingRule::GroupChildren, "sequence-all"},
    {MappingRule::AttributeDecl, "attributes"},
    {MappingRule::ChoiceDisjoint, "choice"},
};

constexpr std::pair<RelationKind, const char*> kRelationNames[] = {
    {RelationKind::Synonymy, "synonymy"},
    {RelationKind::AbbreviationUsage, "abbreviation-usage"},
    {RelationKind::ProvedSimilarity, "proved-similarity"},
};

}  // namespace

const char* edge_kind_name(EdgeKind kind) {
  for (auto [k, n] : kEdgeNames)
    if (k == kind) return n;
  return "?";
}

std::optional<EdgeKind> edge_kind_from(std::string_view name) {
  for (auto [k, n] : kEdgeNames)
    if (name == n) return k;
  return std::nullopt;
}

const char* mapping_rule_name(MappingRule rule) {
  for (auto [r, n] : kRuleNames)
    if (r == rule) return n;
  return "?";
}

std::optional<MappingRule> mapping_rule_from(std::string_view name) {
  for (auto [r, n] : kRuleNames)
    if (name == n) return r;
  return std::nullopt;
}

const char* relation_kind_name(RelationKind kind) {
  for (auto [k, n] : kRelationNames)
    if (k == kind) return n;
  return "?";
}

std::optional<RelationKind> relation_kind_from(std::string_view name) {
  for (auto [k, n] : kRelationNames)
    if (name == n) return k;
  return std::nullopt;
}

std::set<std::string> Concept::source_ids() const {
  std::set<std::string> out;
  for (const Provenance& p : instances) out.insert(p.source_id);
  return out;
}

std::optional<ConceptId> ConceptGraph::find(std::string_view label) const {
  auto it = std::lower_bound(
      concepts.begin(), concepts.end(), label,
      [](const Concept& c, std::string_view l) { return c.label < l; });
  if (it != concepts.end() && it->label == label)
    return static_cast<ConceptId>(it - concepts.begin());
  // Building graphs are not sorted yet; fall back to a scan.
  for (std::size_t i = 0; i < concepts.size(); ++i)
    if (concepts[i].label == label) return static_cast<ConceptId>(i);
  return std::nullopt;
}

ConceptId ConceptGraph::require(std::string_view label) const {
  auto id = find(label);
  if (!id) throw std::out_of_range("no concept labeled " + std::string(label));
  return *id;
}

std::map<ConceptId, std::vector<std::pair<ConceptId, Occurrence>>>
ConceptGraph::property_lists() const {
  std::map<ConceptId, std::vector<std::pair<ConceptId, Occurrence>>> out;
  for (const Edge& e : edges)
    if (e.kind == EdgeKind::PropertyOf)
      out[e.from].emplace_back(e.to, e.cardinality.value_or(Occurrence{}));
  return out;
}

void ConceptGraph::finalize() {
  // Printable targets only make sense on property-free concepts; a concept
  // that owns properties keeps them and loses the printable marker.
  std::vector<bool> has_props(concepts.size(), false);
  for (const Edge& e : edges)
    if (e.kind == EdgeKind::PropertyOf && e.from < concepts.size())
      has_props[e.from] = true;
  for (std::size_t i = 0; i < concepts.size(); ++i)
    if (has_props[i]) concepts[i].datatype_target.reset();

  std::vector<ConceptId> order(concepts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<ConceptId>(i);
  std::sort(order.begin(), order.end(), [&](ConceptId a, ConceptId b) {
    return concepts[a].label < concepts[b].label;
  });
  std::vector<ConceptId> remap(concepts.size());
  std::vector<Concept> sorted;
  sorted.reserve(concepts.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    remap[order[pos]] = static_cast<ConceptId>(pos);
    sorted.push_back(std::move(concepts[order[pos]]));
  }
  concepts = std::move(sorted);

  for (Concept& c : concepts) {
    std::sort(c.instances.begin(), c.instances.end());
    std::sort(c.relations.begin(), c.relations.end());
    c.relations.erase(std::unique(c.relations.begin(), c.relations.end()),
                      c.relations.end());
  }

  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (Edge e : edges) {
    e.from = remap[e.from];
    e.to = remap[e.to];
    const bool symmetric =
        e.kind == EdgeKind::DisjointWith || e.kind == EdgeKind::EquivalentTo;
    if (symmetric && concepts[e.to].label < concepts[e.from].label)
      std::swap(e.from, e.to);
    if (e.from == e.to && e.kind != EdgeKind::PropertyOf) continue;
    if (e.kind != EdgeKind::PropertyOf) e.cardinality.reset();
    kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end());

  edges.clear();
  for (const Edge& e : kept) {
    if (!edges.empty() && edges.back().kind == e.kind &&
        edges.back().from == e.from && edges.back().to == e.to) {
      if (e.kind == EdgeKind::PropertyOf)
        edges.back().cardinality = Occurrence::merged(
            edges.back().cardinality.value_or(Occurrence{}),
            e.cardinality.value_or(Occurrence{}));
      continue;
    }
    edges.push_back(e);
  }
}

}  // namespace janus
