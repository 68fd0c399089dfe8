#include "janus/merging.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "janus/similarity.hpp"

namespace janus {

namespace {

std::string canon_prop_key(const std::string& label, const LexicalResource& res) {
  const TokenList tokens = expand_abbreviations(tokenize_label(label), res);
  const std::set<std::string> unique(tokens.begin(), tokens.end());
  std::vector<std::string> classes;
  for (const std::string& t : unique) classes.push_back(res.canonical(t));
  std::sort(classes.begin(), classes.end());
  std::string key;
  for (const std::string& t : classes) {
    key += t;
    key += '\x1f';
  }
  return key;
}

std::set<std::string> property_key_set(const ConceptGraph& graph, ConceptId id,
                                       const LexicalResource& res) {
  std::set<std::string> keys;
  for (const Edge& e : graph.edges)
    if (e.kind == EdgeKind::PropertyOf && e.from == id)
      keys.insert(canon_prop_key(graph.at(e.to).label, res));
  return keys;
}

struct UnionFind {
  std::vector<ConceptId> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  ConceptId find(ConceptId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(ConceptId a, ConceptId b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

/// Would the is-a graph, contracted through the union-find, contain a cycle?
bool contracted_isa_cyclic(const ConceptGraph& graph, UnionFind& uf) {
  std::map<ConceptId, std::set<ConceptId>> adjacency;
  for (const Edge& e : graph.edges) {
    if (e.kind != EdgeKind::IsA) continue;
    ConceptId from = uf.find(e.from);
    ConceptId to = uf.find(e.to);
    if (from != to) adjacency[from].insert(to);
  }
  std::map<ConceptId, int> state;  // 0 new, 1 open, 2 done
  std::vector<std::pair<ConceptId, std::set<ConceptId>::const_iterator>> stack;
  for (const auto& [start, _] : adjacency) {
    if (state[start]) continue;
    state[start] = 1;
    stack.emplace_back(start, adjacency[start].begin());
    while (!stack.empty()) {
      auto& [node, it] = stack.back();
      if (it == adjacency[node].end()) {
        state[node] = 2;
        stack.pop_back();
        continue;
      }
      ConceptId next = *it++;
      auto found = adjacency.find(next);
      if (found == adjacency.end()) {
        state[next] = 2;
        continue;
      }
      if (state[next] == 1) return true;
      if (state[next] == 0) {
        state[next] = 1;
        stack.emplace_back(next, found->second.begin());
      }
    }
  }
  return false;
}

struct CandidatePair {
  ConceptId a;
  ConceptId b;
};

/// Mutual-inclusion pairs among same-role concepts of differing origin.
std::vector<CandidatePair> inclusion_pairs(const ConceptGraph& graph,
                                           const RoleAssignment& roles,
                                           const LexicalResource& resource) {
  std::vector<CandidatePair> out;
  const auto property_lists = graph.property_lists();
  std::vector<std::string> target_key(graph.concepts.size());
  auto key_of = [&](ConceptId id) -> const std::string& {
    if (target_key[id].empty())
      target_key[id] = canon_prop_key(graph.at(id).label, resource);
    return target_key[id];
  };

  std::vector<std::set<std::string>> sources(graph.concepts.size());
  std::vector<std::set<std::string>> props(graph.concepts.size());
  std::vector<TokenList> tokens(graph.concepts.size());
  auto prep = [&](ConceptId id) {
    if (!tokens[id].empty()) return;
    sources[id] = graph.at(id).source_ids();
    if (auto it = property_lists.find(id); it != property_lists.end())
      for (const auto& [target, card] : it->second) props[id].insert(key_of(target));
    tokens[id] = expand_abbreviations(tokenize_label(graph.at(id).label), resource);
  };

  auto scan_role = [&](const std::set<ConceptId>& role) {
    // Only label-overlapping pairs qualify; bucket by canonical token.
    std::map<std::string, std::vector<ConceptId>> buckets;
    for (ConceptId id : role) {
      prep(id);
      std::set<std::string> unique;
      for (const std::string& t : tokens[id]) unique.insert(resource.canonical(t));
      for (const std::string& t : unique) buckets[t].push_back(id);
    }
    std::set<std::pair<ConceptId, ConceptId>> seen;
    for (const auto& [token, members] : buckets)
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          ConceptId a = std::min(members[i], members[j]);
          ConceptId b = std::max(members[i], members[j]);
          if (!seen.emplace(a, b).second) continue;
          if (sources[a] == sources[b]) continue;
          if (props[a] != props[b]) continue;  // mutual inclusion = equal sets
          if (label_similarity(tokens[a], tokens[b], resource) <= 0.0) continue;
          out.push_back({a, b});
        }
  };
  scan_role(roles.classes);
  scan_role(roles.properties);

  std::sort(out.begin(), out.end(), [&](const CandidatePair& x, const CandidatePair& y) {
    const auto& xa = graph.at(x.a).label;
    const auto& ya = graph.at(y.a).label;
    if (xa != ya) return xa < ya;
    return graph.at(x.b).label < graph.at(y.b).label;
  });
  return out;
}

/// One collapse round. Returns true when anything merged.
bool merge_round(ConceptGraph& graph, const std::vector<Match>& matches,
                 const LexicalResource& resource, std::vector<Warning>* warnings) {
  const RoleAssignment roles = classify_roles(graph);

  std::vector<CandidatePair> pairs;
  pairs.reserve(matches.size());
  for (const Match& m : matches) pairs.push_back({m.left, m.right});
  for (const CandidatePair& p : inclusion_pairs(graph, roles, resource))
    pairs.push_back(p);

  UnionFind uf(graph.concepts.size());
  bool any = false;
  for (const CandidatePair& p : pairs) {
    if (uf.find(p.a) == uf.find(p.b)) continue;
    UnionFind trial = uf;
    trial.unite(p.a, p.b);
    if (contracted_isa_cyclic(graph, trial)) {
      if (warnings)
        warnings->push_back(
            {"merge-conflict",
             "merging " + graph.at(p.a).label + " and " + graph.at(p.b).label +
                 " would close an is-a cycle; match dropped",
             "", ""});
      continue;
    }
    uf = std::move(trial);
    any = true;
  }
  if (!any) return false;

  // Group members per representative, deterministically by label.
  std::map<ConceptId, std::vector<ConceptId>> clusters;
  for (ConceptId id = 0; id < graph.concepts.size(); ++id)
    clusters[uf.find(id)].push_back(id);

  auto cluster_label = [&](const std::vector<ConceptId>& members) -> std::string {
    std::string best;
    std::size_t best_sources = 0;
    std::size_t best_tokens = 0;
    for (ConceptId id : members) {
      const Concept& c = graph.at(id);
      const std::size_t n_sources = c.source_ids().size();
      const std::size_t n_tokens = tokenize_label(c.label).size();
      const bool better =
          best.empty() || n_sources > best_sources ||
          (n_sources == best_sources &&
           (n_tokens < best_tokens ||
            (n_tokens == best_tokens && c.label < best)));
      if (better) {
        best = c.label;
        best_sources = n_sources;
        best_tokens = n_tokens;
      }
    }
    return best;
  };

  ConceptGraph merged;
  std::vector<ConceptId> new_id(graph.concepts.size());
  for (const auto& [rep, members] : clusters) {
    Concept out;
    out.label = cluster_label(members);
    for (ConceptId id : members) {
      const Concept& c = graph.at(id);
      out.declared_complex |= c.declared_complex;
      out.instances.insert(out.instances.end(), c.instances.begin(),
                           c.instances.end());
      out.relations.insert(out.relations.end(), c.relations.begin(),
                           c.relations.end());
      if (c.datatype_target && !out.datatype_target)
        out.datatype_target = c.datatype_target;
      if (c.label != out.label)
        out.relations.push_back(
            {RelationKind::ProvedSimilarity, c.label, "absorbed by merge"});
    }
    ConceptId id = static_cast<ConceptId>(merged.concepts.size());
    for (ConceptId member : members) new_id[member] = id;
    merged.concepts.push_back(std::move(out));
  }

  for (const Edge& e : graph.edges) {
    Edge mapped = e;
    mapped.from = new_id[e.from];
    mapped.to = new_id[e.to];
    if (mapped.from == mapped.to && mapped.kind != EdgeKind::PropertyOf) {
      if (mapped.kind == EdgeKind::DisjointWith && warnings)
        warnings->push_back({"merge-conflict",
                             "disjointness collapsed onto merged concept " +
                                 merged.at(mapped.from).label + "; edge dropped",
                             "", ""});
      continue;
    }
    // A property edge folded onto the merged concept itself is declaration
    // noise, not a recursive property.
    if (mapped.from == mapped.to && e.from != e.to) continue;
    merged.edges.push_back(mapped);
  }
  merged.finalize();
  graph = std::move(merged);
  return true;
}

}  // namespace

bool detect_inclusion(const ConceptGraph& graph, ConceptId inner, ConceptId outer,
                      const LexicalResource& resource) {
  const auto inner_props = property_key_set(graph, inner, resource);
  const auto outer_props = property_key_set(graph, outer, resource);
  for (const std::string& key : inner_props)
    if (!outer_props.count(key)) return false;
  const TokenList a =
      expand_abbreviations(tokenize_label(graph.at(inner).label), resource);
  const TokenList b =
      expand_abbreviations(tokenize_label(graph.at(outer).label), resource);
  return label_similarity(a, b, resource) > 0.0;
}

ConceptGraph merge_concepts(const ConceptGraph& graph, const MatchSet& matches,
                            const LexicalResource& resource,
                            std::vector<Warning>* warnings) {
  ConceptGraph current = graph;
  bool changed = merge_round(current, matches.matches, resource, warnings);
  while (changed) {
    const RoleAssignment roles = classify_roles(current);
    const MatchSet next = match_concepts(current, roles, matches.config, resource);
    changed = merge_round(current, next.matches, resource, warnings);
  }
  return current;
}

}  // namespace janus
