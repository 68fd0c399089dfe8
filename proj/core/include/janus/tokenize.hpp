#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace janus {

using TokenList = std::vector<std::string>;

/// Splits a raw tag name into lowercase tokens. Boundaries are case
/// transitions (CamelCase, including acronym runs like "XSDFile"), letter to
/// digit transitions, and the delimiters '_', '-', '.' and space.
/// Throws Error{EmptyLabel} when nothing remains.
TokenList tokenize_label(std::string_view raw);

/// Naive English singular form: strips a plural suffix where that is safe
/// ("drinkers" -> "drinker", "cities" -> "city", "status" unchanged).
std::string singularize(std::string_view token);

/// Canonical identity label used for concept unification: tokens joined with
/// '_', optionally singularized first.
std::string normalize_label(std::string_view raw, bool singularize_tokens = false);

}  // namespace janus
