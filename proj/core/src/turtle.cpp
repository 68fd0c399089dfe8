#include "janus/turtle.hpp"

#include <algorithm>
#include <cctype>

#include "janus/errors.hpp"
#include "janus/xsd_model.hpp"

namespace janus {

namespace {

void check_iri(const std::string& iri) {
  if (iri.size() < 3 || (iri.back() != '/' && iri.back() != '#'))
    throw Error(ErrorCode::InvalidIri,
                "base IRI must end in '/' or '#': " + iri);
  auto scheme_end = iri.find(':');
  if (scheme_end == std::string::npos || scheme_end == 0)
    throw Error(ErrorCode::InvalidIri, "base IRI needs a scheme: " + iri);
  for (char c : iri)
    if (std::isspace(static_cast<unsigned char>(c)) ||
        std::iscntrl(static_cast<unsigned char>(c)) || c == '<' || c == '>')
      throw Error(ErrorCode::InvalidIri, "base IRI contains invalid characters");
}

std::string range_term(const std::string& range) {
  if (is_builtin_datatype(range)) return "xsd:" + range;
  return ":" + range;
}

void emit_property(std::string& out, const SkeletonProperty& prop,
                   const char* kind, bool datatype) {
  out += ":" + prop.name + " a " + kind + " ;\n";
  for (std::size_t i = 0; i < prop.domains.size(); ++i) {
    const auto& [domain, card] = prop.domains[i];
    const bool last_line = i + 1 == prop.domains.size() && prop.range.empty();
    out += "    rdfs:domain :" + domain + (last_line ? " ." : " ;");
    out += "  # card " + card.to_string() + "\n";
  }
  if (!prop.range.empty()) {
    out += "    rdfs:range " + (datatype ? range_term(prop.range) : ":" + prop.range) +
           " .\n";
  } else if (prop.domains.empty()) {
    // No domain and no range: close the typing statement alone.
    out.erase(out.size() - 2);
    out += ".\n";
  }
}

}  // namespace

std::string serialize_skeleton(const OntologySkeleton& skeleton,
                               const std::string& base_iri) {
  check_iri(base_iri);

  std::string out;
  out += "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n";
  out += "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n";
  out += "@prefix owl: <http://www.w3.org/2002/07/owl#> .\n";
  out += "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n";
  out += "@prefix : <" + base_iri + "> .\n";

  struct Entity {
    std::string iri;
    int kind;  // 0 class, 1 datatype property, 2 object property
    const SkeletonProperty* prop = nullptr;
  };
  std::vector<Entity> entities;
  for (const std::string& cls : skeleton.classes) entities.push_back({cls, 0});
  for (const SkeletonProperty& p : skeleton.datatype_properties)
    entities.push_back({p.name, 1, &p});
  for (const SkeletonProperty& p : skeleton.object_properties)
    entities.push_back({p.name, 2, &p});
  std::sort(entities.begin(), entities.end(), [](const Entity& a, const Entity& b) {
    if (a.iri != b.iri) return a.iri < b.iri;
    return a.kind < b.kind;
  });

  if (!entities.empty()) out += "\n";
  for (const Entity& e : entities) {
    if (e.kind == 0)
      out += ":" + e.iri + " a owl:Class .\n";
    else if (e.kind == 1)
      emit_property(out, *e.prop, "owl:DatatypeProperty", true);
    else
      emit_property(out, *e.prop, "owl:ObjectProperty", false);
  }

  if (!skeleton.isa_links.empty()) out += "\n";
  for (const auto& [sub, super] : skeleton.isa_links)
    out += ":" + sub + " rdfs:subClassOf :" + super + " .\n";

  if (!skeleton.disjoint_pairs.empty()) out += "\n";
  for (const auto& [a, b] : skeleton.disjoint_pairs)
    out += ":" + a + " owl:disjointWith :" + b + " .\n";

  return out;
}

}  // namespace janus
