#pragma once

#include <string>
#include <vector>

#include "janus/roles.hpp"

namespace janus {

struct Finding {
  std::string code;
  std::string message;
  std::vector<std::string> concepts;

  friend bool operator==(const Finding&, const Finding&) = default;
};

struct ValidationReport {
  std::vector<Finding> errors;
  std::vector<Finding> warnings;

  bool ok() const { return errors.empty(); }

  std::string to_text() const;
  std::string to_json_text() const;
};

/// Automated consistency checks: is-a cycles, disjoint pairs connected by a
/// subsumption path, dangling or ill-formed edges, and role assignments that
/// no longer satisfy their defining conditions. Read-only.
ValidationReport validate_graph(const ConceptGraph& graph,
                                const RoleAssignment& roles);

}  // namespace janus
