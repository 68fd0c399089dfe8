#include "janus/matching.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "janus/errors.hpp"
#include "janus/similarity.hpp"

namespace janus {

namespace {

constexpr double kScoreEps = 1e-9;

double jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::size_t intersection = 0;
  for (const std::string& t : a) intersection += b.count(t);
  return static_cast<double>(intersection) /
         static_cast<double>(a.size() + b.size() - intersection);
}

/// Tokens of a label after abbreviation expansion and synonym folding.
TokenList canon_tokens(const std::string& label, const LexicalResource& res) {
  TokenList tokens = expand_abbreviations(tokenize_label(label), res);
  for (std::string& t : tokens) t = res.canonical(t);
  return tokens;
}

/// Key under which two labels compare equal for set similarity: two labels
/// score 1.0 exactly when their distinct tokens map to the same multiset of
/// synonym classes.
std::string canon_key(const std::string& label, const LexicalResource& res) {
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

std::set<std::string> property_keys(const ConceptGraph& graph, ConceptId id,
                                    const LexicalResource& res) {
  std::set<std::string> keys;
  for (const Edge& e : graph.edges)
    if (e.kind == EdgeKind::PropertyOf && e.from == id)
      keys.insert(canon_key(graph.at(e.to).label, res));
  return keys;
}

std::set<std::string> context_keys(const ConceptGraph& graph, ConceptId id,
                                   ConceptId exclude_partner) {
  std::set<std::string> keys;
  for (const Edge& e : graph.edges) {
    ConceptId other;
    if (e.from == id)
      other = e.to;
    else if (e.to == id)
      other = e.from;
    else
      continue;
    if (other == exclude_partner || other == id) continue;
    keys.insert(std::string(edge_kind_name(e.kind)) + '\x1f' +
                graph.at(other).label);
  }
  return keys;
}

}  // namespace

void MatchConfig::validate() const {
  if (label_weight < 0 || property_weight < 0 || context_weight < 0)
    throw Error(ErrorCode::InvalidConfig, "similarity weights must be non-negative");
  const double sum = label_weight + property_weight + context_weight;
  if (std::abs(sum - 1.0) > 1e-9)
    throw Error(ErrorCode::InvalidConfig, "similarity weights must sum to 1");
  if (accept_threshold < 0 || accept_threshold > 1)
    throw Error(ErrorCode::InvalidConfig, "accept threshold must lie in [0,1]");
}

double property_set_similarity(const ConceptGraph& graph, ConceptId a,
                               ConceptId b, const LexicalResource& resource) {
  return jaccard(property_keys(graph, a, resource),
                 property_keys(graph, b, resource));
}

double context_similarity(const ConceptGraph& graph, ConceptId a, ConceptId b) {
  return jaccard(context_keys(graph, a, b), context_keys(graph, b, a));
}

MatchSet match_concepts(const ConceptGraph& graph, const RoleAssignment& roles,
                        const MatchConfig& config,
                        const LexicalResource& resource) {
  config.validate();
  MatchSet out;
  out.config = config;

  // Label-disjoint pairs cannot clear the threshold once it exceeds the
  // property and context weights; in that regime only pairs sharing a
  // canonical token need scoring.
  const bool token_blocked =
      config.accept_threshold >
      config.property_weight + config.context_weight + kScoreEps;

  const auto property_lists = graph.property_lists();
  std::vector<std::string> target_key(graph.concepts.size());
  auto key_of = [&](ConceptId id) -> const std::string& {
    if (target_key[id].empty()) target_key[id] = canon_key(graph.at(id).label, resource);
    return target_key[id];
  };

  std::vector<std::set<std::string>> sources(graph.concepts.size());
  std::vector<TokenList> tokens(graph.concepts.size());
  std::vector<std::set<std::string>> prop_keys(graph.concepts.size());
  auto prep = [&](ConceptId id) {
    if (!tokens[id].empty()) return;
    sources[id] = graph.at(id).source_ids();
    tokens[id] = canon_tokens(graph.at(id).label, resource);
    if (auto it = property_lists.find(id); it != property_lists.end())
      for (const auto& [target, card] : it->second)
        prop_keys[id].insert(key_of(target));
  };

  std::set<std::pair<ConceptId, ConceptId>> candidates;
  auto add_role_pairs = [&](const std::set<ConceptId>& role) {
    std::vector<ConceptId> ids(role.begin(), role.end());
    for (ConceptId id : ids) prep(id);
    if (token_blocked) {
      std::map<std::string, std::vector<ConceptId>> buckets;
      for (ConceptId id : ids) {
        std::set<std::string> unique(tokens[id].begin(), tokens[id].end());
        for (const std::string& t : unique) buckets[t].push_back(id);
      }
      for (const auto& [token, members] : buckets)
        for (std::size_t i = 0; i < members.size(); ++i)
          for (std::size_t j = i + 1; j < members.size(); ++j)
            candidates.emplace(members[i], members[j]);
    } else {
      for (std::size_t i = 0; i < ids.size(); ++i)
        for (std::size_t j = i + 1; j < ids.size(); ++j)
          candidates.emplace(ids[i], ids[j]);
    }
  };
  add_role_pairs(roles.classes);
  add_role_pairs(roles.properties);

  for (const auto& [a, b] : candidates) {
    if (sources[a] == sources[b]) continue;  // same origin, nothing to align
    Match m;
    m.left = a;
    m.right = b;
    m.label_score = label_similarity(tokens[a], tokens[b], resource);
    m.property_score = jaccard(prop_keys[a], prop_keys[b]);
    m.context_score = context_similarity(graph, a, b);
    m.combined_score = config.label_weight * m.label_score +
                       config.property_weight * m.property_score +
                       config.context_weight * m.context_score;
    if (m.combined_score >= config.accept_threshold - kScoreEps)
      out.matches.push_back(m);
  }

  std::sort(out.matches.begin(), out.matches.end(),
            [&](const Match& x, const Match& y) {
              if (std::abs(x.combined_score - y.combined_score) > kScoreEps)
                return x.combined_score > y.combined_score;
              const auto& xl = graph.at(x.left).label;
              const auto& yl = graph.at(y.left).label;
              if (xl != yl) return xl < yl;
              return graph.at(x.right).label < graph.at(y.right).label;
            });
  return out;
}

}  // namespace janus
