#include "janus/lexicon.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "janus/errors.hpp"

namespace janus {

namespace {

std::string trim(std::string_view s) {
  auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string_view::npos) return "";
  auto end = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(begin, end - begin + 1));
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return s;
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(trim(s.substr(start)));
      break;
    }
    out.push_back(trim(s.substr(start, pos - start)));
    start = pos + 1;
  }
  return out;
}

}  // namespace

void LexicalResource::add_synonyms(const std::vector<std::string>& tokens) {
  if (tokens.size() < 2) return;
  // Union the new tokens with any existing groups they touch, then re-point
  // the whole group at its smallest member so closure stays transitive.
  std::set<std::string> group;
  for (const std::string& raw : tokens) group.insert(lower(raw));
  std::set<std::string> reps;
  for (const std::string& t : group) reps.insert(canonical(t));
  for (const auto& [token, rep] : canon_)
    if (reps.count(rep)) group.insert(token);
  const std::string rep = *group.begin();
  for (const std::string& t : group) canon_[t] = rep;
}

void LexicalResource::add_abbreviation(const std::string& token,
                                       TokenList expansion) {
  if (expansion.empty())
    throw Error(ErrorCode::LexiconParse,
                "abbreviation " + token + " has an empty expansion");
  for (std::string& t : expansion) t = lower(t);
  abbreviations_[lower(token)] = std::move(expansion);
}

const std::string& LexicalResource::canonical(const std::string& token) const {
  auto it = canon_.find(token);
  return it == canon_.end() ? token : it->second;
}

const TokenList* LexicalResource::expansion(const std::string& token) const {
  auto it = abbreviations_.find(token);
  return it == abbreviations_.end() ? nullptr : &it->second;
}

LexicalResource LexicalResource::load(std::string_view text) {
  LexicalResource res;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto nl = text.find('\n', start);
    std::string_view raw_line =
        text.substr(start, nl == std::string_view::npos ? nl : nl - start);
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    std::string line = trim(raw_line);
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = trim(line.substr(0, hash));
    if (line.empty()) continue;

    if (line.rfind("syn:", 0) == 0) {
      auto tokens = split(line.substr(4), ',');
      std::erase_if(tokens, [](const std::string& t) { return t.empty(); });
      for (const std::string& t : tokens)
        if (t.find_first_of(" \t") != std::string::npos)
          throw Error(ErrorCode::LexiconParse,
                      "line " + std::to_string(line_no) +
                          ": synonym entries must be single tokens");
      if (tokens.size() < 2)
        throw Error(ErrorCode::LexiconParse,
                    "line " + std::to_string(line_no) +
                        ": syn record needs at least two tokens");
      res.add_synonyms(tokens);
    } else if (line.rfind("abbr:", 0) == 0) {
      auto eq = line.find('=');
      if (eq == std::string::npos)
        throw Error(ErrorCode::LexiconParse,
                    "line " + std::to_string(line_no) + ": abbr record needs '='");
      std::string shortform = trim(line.substr(5, eq - 5));
      std::string longform = trim(line.substr(eq + 1));
      if (shortform.empty() || longform.empty())
        throw Error(ErrorCode::LexiconParse,
                    "line " + std::to_string(line_no) + ": incomplete abbr record");
      TokenList expansion;
      std::istringstream words(longform);
      std::string w;
      while (words >> w) expansion.push_back(w);
      res.add_abbreviation(shortform, std::move(expansion));
    } else {
      throw Error(ErrorCode::LexiconParse,
                  "line " + std::to_string(line_no) +
                      ": expected 'syn:' or 'abbr:' record");
    }
  }
  return res;
}

LexicalResource LexicalResource::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read lexicon " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return load(buf.str());
}

std::string LexicalResource::fingerprint() const {
  std::string data;
  for (const auto& [token, rep] : canon_) data += token + "=" + rep + ";";
  for (const auto& [token, exp] : abbreviations_) {
    data += token + ">";
    for (const std::string& t : exp) data += t + " ";
    data += ";";
  }
  // FNV-1a, stable across platforms.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

TokenList expand_abbreviations(const TokenList& tokens,
                               const LexicalResource& resource) {
  TokenList out;
  out.reserve(tokens.size());
  for (const std::string& token : tokens) {
    if (const TokenList* exp = resource.expansion(token))
      out.insert(out.end(), exp->begin(), exp->end());
    else
      out.push_back(token);
  }
  return out;
}

}  // namespace janus
