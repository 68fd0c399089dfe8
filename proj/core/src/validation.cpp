#include "janus/validation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <nlohmann/json.hpp>

namespace janus {

namespace {

/// Strongly connected components of the is-a subgraph (iterative Tarjan);
/// every component larger than one concept is a subsumption cycle.
std::vector<std::vector<ConceptId>> isa_cycles(const ConceptGraph& graph) {
  const std::size_t n = graph.concepts.size();
  std::vector<std::vector<ConceptId>> adj(n);
  for (const Edge& e : graph.edges)
    if (e.kind == EdgeKind::IsA && e.from < n && e.to < n)
      adj[e.from].push_back(e.to);

  std::vector<int> index(n, -1), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<ConceptId> stack;
  std::vector<std::vector<ConceptId>> components;
  int next_index = 0;

  struct Frame {
    ConceptId node;
    std::size_t child = 0;
  };
  for (ConceptId root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    std::vector<Frame> frames{{root}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.child < adj[f.node].size()) {
        ConceptId next = adj[f.node][f.child++];
        if (index[next] == -1) {
          index[next] = low[next] = next_index++;
          stack.push_back(next);
          on_stack[next] = true;
          frames.push_back({next});
        } else if (on_stack[next]) {
          low[f.node] = std::min(low[f.node], index[next]);
        }
      } else {
        if (low[f.node] == index[f.node]) {
          std::vector<ConceptId> component;
          ConceptId popped;
          do {
            popped = stack.back();
            stack.pop_back();
            on_stack[popped] = false;
            component.push_back(popped);
          } while (popped != f.node);
          if (component.size() > 1) components.push_back(std::move(component));
        }
        ConceptId done = f.node;
        frames.pop_back();
        if (!frames.empty())
          low[frames.back().node] = std::min(low[frames.back().node], low[done]);
      }
    }
  }
  return components;
}

bool isa_reachable(const ConceptGraph& graph, ConceptId from, ConceptId to) {
  std::vector<std::vector<ConceptId>> adj(graph.concepts.size());
  for (const Edge& e : graph.edges)
    if (e.kind == EdgeKind::IsA) adj[e.from].push_back(e.to);
  std::vector<bool> seen(graph.concepts.size(), false);
  std::vector<ConceptId> todo{from};
  seen[from] = true;
  while (!todo.empty()) {
    ConceptId cur = todo.back();
    todo.pop_back();
    if (cur == to) return true;
    for (ConceptId next : adj[cur])
      if (!seen[next]) {
        seen[next] = true;
        todo.push_back(next);
      }
  }
  return false;
}

}  // namespace

ValidationReport validate_graph(const ConceptGraph& graph,
                                const RoleAssignment& roles) {
  ValidationReport report;
  const std::size_t n = graph.concepts.size();

  bool shape_ok = true;
  for (const Edge& e : graph.edges) {
    if (e.from >= n || e.to >= n) {
      report.errors.push_back({"dangling-edge",
                               "edge endpoint does not exist in the graph",
                               {}});
      shape_ok = false;
      continue;
    }
    if (e.cardinality && e.kind != EdgeKind::PropertyOf)
      report.errors.push_back(
          {"invalid-edge",
           std::string("cardinality on a ") + edge_kind_name(e.kind) + " edge",
           {graph.at(e.from).label, graph.at(e.to).label}});
  }
  if (!shape_ok) return report;  // labels below would index out of range

  for (const auto& component : isa_cycles(graph)) {
    std::vector<std::string> labels;
    for (ConceptId id : component) labels.push_back(graph.at(id).label);
    std::sort(labels.begin(), labels.end());
    std::string msg = "is-a cycle through";
    for (const std::string& l : labels) msg += " " + l;
    report.errors.push_back({"isa-cycle", msg, std::move(labels)});
  }

  for (const Edge& e : graph.edges) {
    if (e.kind != EdgeKind::DisjointWith) continue;
    if (isa_reachable(graph, e.from, e.to) || isa_reachable(graph, e.to, e.from)) {
      report.errors.push_back(
          {"disjoint-subsumption",
           graph.at(e.from).label + " and " + graph.at(e.to).label +
               " are disjoint but connected by an is-a path",
           {graph.at(e.from).label, graph.at(e.to).label}});
    }
  }

  const auto props = graph.property_lists();
  auto owned = [&](ConceptId id) -> std::size_t {
    auto it = props.find(id);
    return it == props.end() ? 0 : it->second.size();
  };

  for (ConceptId id = 0; id < n; ++id) {
    const Concept& c = graph.at(id);
    const bool in_class = roles.classes.count(id) > 0;
    const bool in_prop = roles.properties.count(id) > 0;
    const bool in_dt = roles.datatypes.count(id) > 0;
    if (!in_class && !in_prop && !in_dt)
      report.errors.push_back(
          {"role-violation", c.label + " is not assigned any role", {c.label}});
    if (in_class && in_dt)
      report.errors.push_back(
          {"role-violation", c.label + " is both a class and a datatype", {c.label}});
    if (in_class && owned(id) < 2 && !(owned(id) == 1 && c.declared_complex))
      report.errors.push_back(
          {"role-violation",
           c.label + " is a class but does not own enough properties",
           {c.label}});
    if (in_dt && (owned(id) != 0 || !c.datatype_target))
      report.errors.push_back(
          {"role-violation", c.label + " is a datatype but not printable", {c.label}});
    if (c.instances.empty())
      report.errors.push_back(
          {"role-violation", c.label + " has no source provenance", {c.label}});
  }

  std::set<ConceptId> owned_by_class;
  for (ConceptId cls : roles.classes) {
    auto it = props.find(cls);
    if (it == props.end()) continue;
    for (const auto& [target, card] : it->second) owned_by_class.insert(target);
  }
  for (ConceptId id : roles.properties) {
    if (owned_by_class.count(id)) continue;
    if (owned(id) == 0 && !graph.at(id).datatype_target) continue;
    if (owned(id) == 1 && !graph.at(id).declared_complex) continue;
    report.errors.push_back({"role-violation",
                             graph.at(id).label +
                                 " is a property of no class and not residual",
                             {graph.at(id).label}});
  }

  return report;
}

std::string ValidationReport::to_text() const {
  std::string out = "Validation: " + std::to_string(errors.size()) +
                    " errors, " + std::to_string(warnings.size()) + " warnings\n";
  for (const Finding& f : errors) out += "  error " + f.code + ": " + f.message + "\n";
  for (const Finding& f : warnings)
    out += "  warning " + f.code + ": " + f.message + "\n";
  return out;
}

std::string ValidationReport::to_json_text() const {
  nlohmann::json doc;
  auto render = [](const std::vector<Finding>& findings) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Finding& f : findings)
      arr.push_back({{"code", f.code},
                     {"message", f.message},
                     {"concepts", f.concepts}});
    return arr;
  };
  doc["errors"] = render(errors);
  doc["warnings"] = render(warnings);
  return doc.dump(2) + "\n";
}

}  // namespace janus
