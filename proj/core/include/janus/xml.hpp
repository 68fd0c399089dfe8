#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace janus {

/// One element of a parsed XML document. Character data is dropped; schema
/// documents carry their information in elements and attributes only.
struct XmlElement {
  std::string prefix;  // empty when unprefixed
  std::string local;
  std::vector<std::pair<std::string, std::string>> attributes;  // raw names
  std::vector<std::pair<std::string, std::string>> ns_decls;    // prefix -> uri, "" = default
  std::vector<XmlElement> children;
  int line = 0;

  const std::string* attribute(std::string_view name) const;
};

/// Parses a whole document and returns its root element.
/// Throws Error{MalformedXml} when the input is not well-formed XML.
XmlElement parse_xml(std::string_view text, const std::string& source_id);

}  // namespace janus
