#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "janus/tokenize.hpp"

namespace janus {

/// Pluggable synonym / abbreviation dictionary. Synonymy is closed under
/// symmetry and transitivity at load time; every token of a synonym group
/// maps to the group's lexicographically smallest member.
class LexicalResource {
 public:
  LexicalResource() = default;

  /// File format, one record per line:
  ///   syn: owner, person
  ///   abbr: addr = address
  /// '#' starts a comment. Throws Error{LexiconParse} on malformed lines.
  static LexicalResource load(std::string_view text);
  static LexicalResource load_file(const std::string& path);

  void add_synonyms(const std::vector<std::string>& tokens);
  void add_abbreviation(const std::string& token, TokenList expansion);

  /// Canonical representative of a token's synonym group (the token itself
  /// when it has no synonyms).
  const std::string& canonical(const std::string& token) const;

  bool synonymous(const std::string& a, const std::string& b) const {
    return canonical(a) == canonical(b);
  }

  const TokenList* expansion(const std::string& token) const;

  bool empty() const { return canon_.empty() && abbreviations_.empty(); }

  /// Stable digest of the resource content, for config fingerprints.
  std::string fingerprint() const;

 private:
  std::map<std::string, std::string> canon_;       // token -> representative
  std::map<std::string, TokenList> abbreviations_;
};

/// Replaces each abbreviated token by its expansion, in order.
TokenList expand_abbreviations(const TokenList& tokens,
                               const LexicalResource& resource);

}  // namespace janus
