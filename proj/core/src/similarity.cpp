#include "janus/similarity.hpp"

#include <set>
#include <vector>

#include "janus/errors.hpp"

namespace janus {

namespace {

/// Kuhn's augmenting-path maximum bipartite matching over the synonym
/// compatibility relation.
struct TokenMatcher {
  const std::vector<std::string>& left;
  const std::vector<std::string>& right;
  const LexicalResource& resource;
  std::vector<int> matched_left;   // right index per left, -1 free
  std::vector<int> matched_right;  // left index per right, -1 free

  bool compatible(std::size_t l, std::size_t r) const {
    return resource.canonical(left[l]) == resource.canonical(right[r]);
  }

  bool augment(std::size_t l, std::vector<bool>& visited) {
    for (std::size_t r = 0; r < right.size(); ++r) {
      if (visited[r] || !compatible(l, r)) continue;
      visited[r] = true;
      if (matched_right[r] < 0 ||
          augment(static_cast<std::size_t>(matched_right[r]), visited)) {
        matched_left[l] = static_cast<int>(r);
        matched_right[r] = static_cast<int>(l);
        return true;
      }
    }
    return false;
  }

  std::size_t run() {
    matched_left.assign(left.size(), -1);
    matched_right.assign(right.size(), -1);
    std::size_t size = 0;
    for (std::size_t l = 0; l < left.size(); ++l) {
      std::vector<bool> visited(right.size(), false);
      if (augment(l, visited)) ++size;
    }
    return size;
  }
};

}  // namespace

double label_similarity(const TokenList& a, const TokenList& b,
                        const LexicalResource& resource) {
  if (a.empty() || b.empty())
    throw Error(ErrorCode::EmptyLabel, "label_similarity on empty token list");

  const std::set<std::string> sa(a.begin(), a.end());
  const std::set<std::string> sb(b.begin(), b.end());
  const std::vector<std::string> left(sa.begin(), sa.end());
  const std::vector<std::string> right(sb.begin(), sb.end());

  TokenMatcher matcher{left, right, resource, {}, {}};
  const std::size_t matched = matcher.run();
  const std::size_t unions = left.size() + right.size() - matched;
  return unions == 0 ? 0.0
                     : static_cast<double>(matched) /
                           static_cast<double>(unions);
}

}  // namespace janus
