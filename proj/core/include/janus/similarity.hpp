#pragma once

#include "janus/lexicon.hpp"
#include "janus/tokenize.hpp"

namespace janus {

/// Jaccard coefficient over the token sets of two labels, counting two tokens
/// as equal when they are identical or share a synonym group. Symmetric,
/// bounded to [0,1], 1.0 for equal lists.
double label_similarity(const TokenList& a, const TokenList& b,
                        const LexicalResource& resource);

}  // namespace janus
