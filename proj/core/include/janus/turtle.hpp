#pragma once

#include <string>

#include "janus/skeleton.hpp"

namespace janus {

/// Canonical Turtle rendering: fixed prefix block, entities sorted by IRI,
/// one subClassOf / disjointWith statement per line, cardinalities as
/// comments. Equal skeletons serialize to byte-identical text.
/// Throws Error{InvalidIri} unless base_iri looks like an IRI ending in
/// '/' or '#'.
std::string serialize_skeleton(const OntologySkeleton& skeleton,
                               const std::string& base_iri);

}  // namespace janus
