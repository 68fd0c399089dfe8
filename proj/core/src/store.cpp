#include "janus/store.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "janus/errors.hpp"

namespace janus {

namespace {

using nlohmann::json;

json occurrence_to_json(const Occurrence& occ) {
  json j;
  j["min"] = occ.min;
  if (occ.max)
    j["max"] = *occ.max;
  else
    j["max"] = nullptr;
  return j;
}

Occurrence occurrence_from_json(const json& j) {
  Occurrence occ;
  occ.min = j.at("min").get<std::uint32_t>();
  if (j.at("max").is_null())
    occ.max = std::nullopt;
  else
    occ.max = j.at("max").get<std::uint32_t>();
  return occ;
}

json graph_to_json(const ConceptGraph& graph) {
  json concepts = json::array();
  for (const Concept& c : graph.concepts) {
    json jc;
    jc["label"] = c.label;
    if (c.datatype_target) jc["datatype_target"] = *c.datatype_target;
    jc["declared_complex"] = c.declared_complex;
    json instances = json::array();
    for (const Provenance& p : c.instances)
      instances.push_back({{"source", p.source_id},
                           {"path", p.construct_path},
                           {"rule", mapping_rule_name(p.rule)}});
    jc["instances"] = std::move(instances);
    json relations = json::array();
    for (const Relation& r : c.relations)
      relations.push_back({{"kind", relation_kind_name(r.kind)},
                           {"target", r.target},
                           {"note", r.note}});
    jc["relations"] = std::move(relations);
    concepts.push_back(std::move(jc));
  }
  json edges = json::array();
  for (const Edge& e : graph.edges) {
    json je;
    je["kind"] = edge_kind_name(e.kind);
    je["from"] = graph.at(e.from).label;
    je["to"] = graph.at(e.to).label;
    if (e.cardinality) je["card"] = occurrence_to_json(*e.cardinality);
    edges.push_back(std::move(je));
  }
  return json{{"concepts", std::move(concepts)}, {"edges", std::move(edges)}};
}

json roles_to_json(const ConceptGraph& graph, const RoleAssignment& roles) {
  auto labels = [&](const std::set<ConceptId>& ids) {
    json arr = json::array();
    for (ConceptId id : ids) arr.push_back(graph.at(id).label);
    return arr;
  };
  return json{{"classes", labels(roles.classes)},
              {"properties", labels(roles.properties)},
              {"datatypes", labels(roles.datatypes)}};
}

json store_payload(const ConceptStore& store) {
  json doc;
  doc["format_version"] = store.format_version;
  doc["config_fingerprint"] = store.config_fingerprint;
  doc["graph"] = graph_to_json(store.graph);
  doc["roles"] = roles_to_json(store.graph, store.roles);
  return doc;
}

[[noreturn]] void corrupt(const std::string& path, const std::string& why) {
  throw Error(ErrorCode::CorruptStore, path + ": " + why);
}

}  // namespace

std::string content_digest(std::string_view data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void save_store(const ConceptStore& store, const std::string& path) {
  json doc = store_payload(store);
  doc["checksum"] = content_digest(doc.dump());
  const std::string text = doc.dump(2) + "\n";

  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp);
    out << text;
    if (!out.flush()) throw Error(ErrorCode::IoError, "cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot move store into place: " + ec.message());
}

ConceptStore load_store(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read store " + path);
  std::ostringstream buf;
  buf << in.rdbuf();

  json doc = json::parse(buf.str(), nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) corrupt(path, "not a JSON document");

  if (!doc.contains("format_version") || !doc["format_version"].is_number_integer())
    corrupt(path, "missing format_version");
  const int version = doc["format_version"].get<int>();
  if (version != kStoreFormatVersion)
    throw Error(ErrorCode::UnsupportedVersion,
                path + ": format_version " + std::to_string(version));

  if (!doc.contains("checksum") || !doc["checksum"].is_string())
    corrupt(path, "missing checksum");
  const std::string recorded = doc["checksum"].get<std::string>();
  json payload = doc;
  payload.erase("checksum");
  if (content_digest(payload.dump()) != recorded)
    corrupt(path, "checksum mismatch");

  ConceptStore store;
  store.format_version = version;
  try {
    store.config_fingerprint = doc.at("config_fingerprint").get<std::string>();
    const json& jgraph = doc.at("graph");
    for (const json& jc : jgraph.at("concepts")) {
      Concept c;
      c.label = jc.at("label").get<std::string>();
      if (jc.contains("datatype_target"))
        c.datatype_target = jc.at("datatype_target").get<std::string>();
      c.declared_complex = jc.at("declared_complex").get<bool>();
      for (const json& ji : jc.at("instances")) {
        auto rule = mapping_rule_from(ji.at("rule").get<std::string>());
        if (!rule) corrupt(path, "unknown mapping rule");
        c.instances.push_back({ji.at("source").get<std::string>(),
                               ji.at("path").get<std::string>(), *rule});
      }
      for (const json& jr : jc.at("relations")) {
        auto kind = relation_kind_from(jr.at("kind").get<std::string>());
        if (!kind) corrupt(path, "unknown relation kind");
        c.relations.push_back({*kind, jr.at("target").get<std::string>(),
                               jr.at("note").get<std::string>()});
      }
      store.graph.concepts.push_back(std::move(c));
    }
    for (const json& je : jgraph.at("edges")) {
      Edge e;
      auto kind = edge_kind_from(je.at("kind").get<std::string>());
      if (!kind) corrupt(path, "unknown edge kind");
      e.kind = *kind;
      auto from = store.graph.find(je.at("from").get<std::string>());
      auto to = store.graph.find(je.at("to").get<std::string>());
      if (!from || !to) corrupt(path, "edge endpoint label not found");
      e.from = *from;
      e.to = *to;
      if (je.contains("card")) e.cardinality = occurrence_from_json(je.at("card"));
      store.graph.edges.push_back(e);
    }
    const json& jroles = doc.at("roles");
    auto read_role = [&](const char* key, std::set<ConceptId>& into) {
      for (const json& jl : jroles.at(key)) {
        auto id = store.graph.find(jl.get<std::string>());
        if (!id) corrupt(path, "role label not found");
        into.insert(*id);
      }
    };
    read_role("classes", store.roles.classes);
    read_role("properties", store.roles.properties);
    read_role("datatypes", store.roles.datatypes);
  } catch (const json::exception& e) {
    corrupt(path, e.what());
  }
  return store;
}

}  // namespace janus
