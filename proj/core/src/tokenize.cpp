#include "janus/tokenize.hpp"

#include <cctype>

#include "janus/errors.hpp"

namespace janus {

namespace {

bool is_delimiter(char c) {
  return c == '_' || c == '-' || c == '.' || c == ' ' || c == '\t';
}

char to_lower(char c) {
  return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
}

bool is_upper(char c) { return std::isupper(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return std::islower(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

}  // namespace

TokenList tokenize_label(std::string_view raw) {
  if (raw.empty()) throw Error(ErrorCode::EmptyLabel, "empty label");

  TokenList tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(current);
      current.clear();
    }
  };

  const std::size_t n = raw.size();
  for (std::size_t i = 0; i < n; ++i) {
    const char c = raw[i];
    if (is_delimiter(c)) {
      flush();
      continue;
    }
    if (!current.empty()) {
      const char prev = raw[i - 1];
      const bool case_boundary = is_upper(c) && is_lower(prev);
      // End of an all-caps run before a capitalized word: "XSDFile" -> XSD|File.
      const bool acronym_boundary =
          is_upper(prev) && is_upper(c) && i + 1 < n && is_lower(raw[i + 1]);
      const bool digit_boundary = is_digit(c) != is_digit(prev);
      if (case_boundary || acronym_boundary || digit_boundary) flush();
    }
    current.push_back(to_lower(c));
  }
  flush();

  if (tokens.empty())
    throw Error(ErrorCode::EmptyLabel, "label \"" + std::string(raw) +
                                           "\" contains only delimiters");
  return tokens;
}

std::string singularize(std::string_view token) {
  const std::size_t n = token.size();
  auto ends_with = [&](std::string_view suffix) {
    return n >= suffix.size() &&
           token.substr(n - suffix.size()) == suffix;
  };
  if (n > 4 && ends_with("ies"))
    return std::string(token.substr(0, n - 3)) + "y";
  if (n > 4 && ends_with("sses"))
    return std::string(token.substr(0, n - 2));
  if (ends_with("ss") || ends_with("us") || ends_with("is"))
    return std::string(token);
  if (n > 3 && ends_with("s"))
    return std::string(token.substr(0, n - 1));
  return std::string(token);
}

std::string normalize_label(std::string_view raw, bool singularize_tokens) {
  TokenList tokens = tokenize_label(raw);
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += '_';
    out += singularize_tokens ? singularize(tokens[i]) : tokens[i];
  }
  return out;
}

}  // namespace janus
