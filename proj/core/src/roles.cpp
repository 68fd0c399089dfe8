#include "janus/roles.hpp"

#include "janus/errors.hpp"

namespace janus {

RoleAssignment classify_roles(const ConceptGraph& graph) {
  RoleAssignment roles;
  const auto props = graph.property_lists();

  for (ConceptId id = 0; id < graph.concepts.size(); ++id) {
    const Concept& c = graph.concepts[id];
    auto it = props.find(id);
    const std::size_t owned = it == props.end() ? 0 : it->second.size();

    if (c.datatype_target && owned > 0)
      throw Error(ErrorCode::RoleConflict,
                  "concept " + c.label +
                      " is printable but owns properties; graph is corrupted");

    if (owned > 1) {
      roles.classes.insert(id);
    } else if (owned == 1) {
      if (c.declared_complex)
        roles.classes.insert(id);
      else
        roles.properties.insert(id);
    } else if (c.datatype_target) {
      roles.datatypes.insert(id);
    } else {
      roles.properties.insert(id);
    }
  }

  // Anything owned by a class is a property concept, whatever else it is.
  for (ConceptId cls : roles.classes) {
    auto it = props.find(cls);
    if (it == props.end()) continue;
    for (const auto& [target, card] : it->second) roles.properties.insert(target);
  }
  return roles;
}

}  // namespace janus
