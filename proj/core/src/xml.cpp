#include "janus/xml.hpp"

#include <expat.h>

#include <cstring>
#include <memory>

#include "janus/errors.hpp"

namespace janus {

namespace {

struct ParseState {
  std::vector<XmlElement> stack;
  XmlElement root;
  bool have_root = false;
  XML_Parser parser = nullptr;
};

void split_qname(const char* qname, std::string& prefix, std::string& local) {
  const char* colon = std::strchr(qname, ':');
  if (colon) {
    prefix.assign(qname, colon - qname);
    local.assign(colon + 1);
  } else {
    prefix.clear();
    local.assign(qname);
  }
}

void XMLCALL on_start(void* user, const XML_Char* name, const XML_Char** atts) {
  auto* state = static_cast<ParseState*>(user);
  XmlElement elem;
  split_qname(name, elem.prefix, elem.local);
  elem.line = static_cast<int>(XML_GetCurrentLineNumber(state->parser));
  for (int i = 0; atts[i]; i += 2) {
    const char* aname = atts[i];
    const char* avalue = atts[i + 1];
    if (std::strcmp(aname, "xmlns") == 0) {
      elem.ns_decls.emplace_back("", avalue);
    } else if (std::strncmp(aname, "xmlns:", 6) == 0) {
      elem.ns_decls.emplace_back(aname + 6, avalue);
    } else {
      elem.attributes.emplace_back(aname, avalue);
    }
  }
  state->stack.push_back(std::move(elem));
}

void XMLCALL on_end(void* user, const XML_Char*) {
  auto* state = static_cast<ParseState*>(user);
  XmlElement done = std::move(state->stack.back());
  state->stack.pop_back();
  if (state->stack.empty()) {
    state->root = std::move(done);
    state->have_root = true;
  } else {
    state->stack.back().children.push_back(std::move(done));
  }
}

}  // namespace

const std::string* XmlElement::attribute(std::string_view name) const {
  for (const auto& [k, v] : attributes)
    if (k == name) return &v;
  return nullptr;
}

XmlElement parse_xml(std::string_view text, const std::string& source_id) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)>
      parser(XML_ParserCreate(nullptr), &XML_ParserFree);
  if (!parser) throw Error(ErrorCode::MalformedXml, "could not allocate parser");

  ParseState state;
  state.parser = parser.get();
  XML_SetUserData(parser.get(), &state);
  XML_SetElementHandler(parser.get(), on_start, on_end);

  if (XML_Parse(parser.get(), text.data(), static_cast<int>(text.size()),
                /*isFinal=*/1) == XML_STATUS_ERROR) {
    const XML_Error code = XML_GetErrorCode(parser.get());
    const long line = static_cast<long>(XML_GetCurrentLineNumber(parser.get()));
    throw Error(ErrorCode::MalformedXml,
                source_id + ":" + std::to_string(line) + ": " +
                    XML_ErrorString(code));
  }
  if (!state.have_root)
    throw Error(ErrorCode::MalformedXml, source_id + ": no root element");
  return std::move(state.root);
}

}  // namespace janus
