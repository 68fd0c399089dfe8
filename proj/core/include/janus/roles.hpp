#pragma once

#include "janus/concepts.hpp"

namespace janus {

/// Partitions concepts into classes, properties and datatypes:
///  - two or more properties make a class; exactly one makes a class only
///    when the concept was mined from a complex-content type;
///  - anything a class owns as a property is a property concept;
///  - property-free concepts with a printable target are datatypes, the rest
///    default to properties.
/// Every concept lands in at least one set. Throws Error{RoleConflict} on a
/// corrupted graph (printable target together with owned properties).
RoleAssignment classify_roles(const ConceptGraph& graph);

}  // namespace janus
