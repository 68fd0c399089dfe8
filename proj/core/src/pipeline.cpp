#include "janus/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "janus/errors.hpp"
#include "janus/extract.hpp"
#include "janus/merging.hpp"
#include "janus/store.hpp"
#include "janus/turtle.hpp"
#include "janus/xsd_parser.hpp"

namespace janus {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> discover_inputs(const std::vector<std::string>& paths) {
  std::vector<std::string> files;
  for (const std::string& path : paths) {
    fs::path p(path);
    std::error_code ec;
    if (fs::is_directory(p, ec)) {
      for (const auto& entry : fs::recursive_directory_iterator(p)) {
        if (entry.is_regular_file() && entry.path().extension() == ".xsd")
          files.push_back(entry.path().string());
      }
    } else if (fs::is_regular_file(p, ec)) {
      files.push_back(p.string());
    } else {
      throw Error(ErrorCode::IoError, "input path not found: " + path);
    }
  }
  std::sort(files.begin(), files.end());
  files.erase(std::unique(files.begin(), files.end()), files.end());
  return files;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp);
    out << content;
    if (!out.flush()) throw Error(ErrorCode::IoError, "cannot write " + tmp);
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot move " + path + ": " + ec.message());
}

std::vector<SchemaDocument> parse_all(const std::vector<std::string>& files) {
  std::vector<SchemaDocument> docs(files.size());
  const std::size_t workers =
      std::min<std::size_t>(files.size(),
                            std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < files.size(); ++i)
      docs[i] = parse_schema_document(read_file(files[i]), files[i]);
    return docs;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::future<void>> tasks;
  std::mutex error_mutex;
  std::exception_ptr first_error;
  for (std::size_t w = 0; w < workers; ++w) {
    tasks.push_back(std::async(std::launch::async, [&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= files.size()) return;
        try {
          docs[i] = parse_schema_document(read_file(files[i]), files[i]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          return;
        }
      }
    }));
  }
  for (auto& task : tasks) task.get();
  if (first_error) std::rethrow_exception(first_error);
  return docs;
}

std::string config_fingerprint(const PipelineConfig& config,
                               const LexicalResource& resource) {
  char buf[160];
  std::snprintf(buf, sizeof buf, "w=%.12f/%.12f/%.12f;t=%.12f;s=%d;",
                config.match.label_weight, config.match.property_weight,
                config.match.context_weight, config.match.accept_threshold,
                config.singularize ? 1 : 0);
  return content_digest(std::string(buf) + resource.fingerprint());
}

/// Adds the stored graph to a freshly extracted one as one more source.
/// Concepts join by label; labels absorbed by earlier merges act as aliases,
/// so re-extracted originals land on their merged concept again.
ConceptGraph join_store_graph(const ConceptGraph& fresh, const ConceptGraph& stored) {
  ConceptGraph combined = fresh;
  const ConceptId fresh_count = static_cast<ConceptId>(fresh.concepts.size());

  std::map<std::string, ConceptId> fresh_by_label;
  for (ConceptId id = 0; id < fresh_count; ++id)
    fresh_by_label.emplace(combined.at(id).label, id);

  std::set<std::string> stored_labels;
  std::map<std::string, ConceptId> alias_to_stored;  // absorbed label -> stored id
  for (ConceptId sid = 0; sid < stored.concepts.size(); ++sid) {
    stored_labels.insert(stored.at(sid).label);
    for (const Relation& r : stored.concepts[sid].relations)
      if (r.kind == RelationKind::ProvedSimilarity)
        alias_to_stored.emplace(r.target, sid);
  }

  auto absorb = [](Concept& keeper, const Concept& other) {
    keeper.declared_complex |= other.declared_complex;
    if (other.datatype_target && !keeper.datatype_target)
      keeper.datatype_target = other.datatype_target;
    keeper.instances.insert(keeper.instances.end(), other.instances.begin(),
                            other.instances.end());
    keeper.relations.insert(keeper.relations.end(), other.relations.begin(),
                            other.relations.end());
  };

  // Stored concepts land on their fresh label twin or get appended.
  std::vector<ConceptId> stored_to_combined(stored.concepts.size());
  for (ConceptId sid = 0; sid < stored.concepts.size(); ++sid) {
    const Concept& s = stored.concepts[sid];
    if (auto it = fresh_by_label.find(s.label); it != fresh_by_label.end()) {
      stored_to_combined[sid] = it->second;
      absorb(combined.concepts[it->second], s);
    } else {
      stored_to_combined[sid] = static_cast<ConceptId>(combined.concepts.size());
      combined.concepts.push_back(s);
    }
  }

  // Fresh concepts whose label was absorbed by a stored merge fold into the
  // merged concept instead of reappearing on their own.
  std::vector<ConceptId> remap(combined.concepts.size());
  for (ConceptId id = 0; id < combined.concepts.size(); ++id) remap[id] = id;
  for (ConceptId fid = 0; fid < fresh_count; ++fid) {
    const std::string& label = combined.at(fid).label;
    if (stored_labels.count(label)) continue;  // joined directly above
    auto alias = alias_to_stored.find(label);
    if (alias == alias_to_stored.end()) continue;
    const ConceptId target = stored_to_combined[alias->second];
    if (target == fid) continue;
    remap[fid] = target;
  }
  for (ConceptId fid = 0; fid < fresh_count; ++fid) {
    if (remap[fid] == fid) continue;
    absorb(combined.concepts[remap[fid]], combined.concepts[fid]);
    combined.concepts[fid].instances.clear();
    combined.concepts[fid].relations.clear();
  }

  for (const Edge& e : stored.edges) {
    Edge mapped = e;
    mapped.from = stored_to_combined[e.from];
    mapped.to = stored_to_combined[e.to];
    combined.edges.push_back(mapped);
  }

  // Compact folded husks away and renumber.
  ConceptGraph out;
  std::vector<ConceptId> compact(combined.concepts.size());
  for (ConceptId id = 0; id < combined.concepts.size(); ++id) {
    if (remap[id] != id) continue;
    compact[id] = static_cast<ConceptId>(out.concepts.size());
    out.concepts.push_back(std::move(combined.concepts[id]));
  }
  for (Edge e : combined.edges) {
    e.from = compact[remap[e.from]];
    e.to = compact[remap[e.to]];
    if (e.from == e.to && e.kind != EdgeKind::PropertyOf) continue;
    out.edges.push_back(e);
  }
  out.finalize();
  return out;
}

std::vector<SummaryRelationship> class_relationships(const ConceptGraph& graph,
                                                     const RoleAssignment& roles) {
  std::vector<SummaryRelationship> rels;
  for (const Edge& e : graph.edges) {
    if (e.kind == EdgeKind::IsA) {
      if (!roles.classes.count(e.to) || roles.datatypes.count(e.from)) continue;
      rels.push_back({EdgeKind::IsA, graph.at(e.from).label, graph.at(e.to).label});
    } else if (e.kind == EdgeKind::DisjointWith) {
      if (roles.datatypes.count(e.from) || roles.datatypes.count(e.to)) continue;
      std::string a = graph.at(e.from).label;
      std::string b = graph.at(e.to).label;
      if (b < a) std::swap(a, b);
      rels.push_back({EdgeKind::DisjointWith, std::move(a), std::move(b)});
    }
  }
  std::sort(rels.begin(), rels.end(),
            [](const SummaryRelationship& x, const SummaryRelationship& y) {
              if (x.kind != y.kind) return x.kind < y.kind;
              if (x.from != y.from) return x.from < y.from;
              return x.to < y.to;
            });
  rels.erase(std::unique(rels.begin(), rels.end()), rels.end());
  return rels;
}

}  // namespace

SummaryReport report_summary(const ConceptGraph& graph, const RoleAssignment& roles) {
  SummaryReport summary;
  auto names = [&](const std::set<ConceptId>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (ConceptId id : ids) out.push_back(graph.at(id).label);
    std::sort(out.begin(), out.end());
    return out;
  };
  summary.classes = names(roles.classes);
  summary.properties = names(roles.properties);
  summary.datatypes = names(roles.datatypes);
  summary.relationships = class_relationships(graph, roles);
  return summary;
}

std::string SummaryReport::to_text() const {
  auto join = [](const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
      if (i) out += ", ";
      out += items[i];
    }
    return out;
  };
  std::string out;
  out += "Classes: " + std::to_string(classes.size()) + " (" + join(classes) + ")\n";
  out += "Properties: " + std::to_string(properties.size()) + " (" +
         join(properties) + ")\n";
  out += "Datatypes: " + std::to_string(datatypes.size()) + " (" +
         join(datatypes) + ")\n";
  out += "Relationships:";
  if (relationships.empty()) out += " none";
  for (std::size_t i = 0; i < relationships.size(); ++i) {
    const SummaryRelationship& r = relationships[i];
    out += i ? "; " : " ";
    out += r.from + " " + edge_kind_name(r.kind) + " " + r.to;
  }
  out += "\n";
  return out;
}

std::string SummaryReport::to_json_text() const {
  nlohmann::json doc;
  doc["classes"] = classes;
  doc["properties"] = properties;
  doc["datatypes"] = datatypes;
  nlohmann::json rels = nlohmann::json::array();
  for (const SummaryRelationship& r : relationships)
    rels.push_back({{"kind", edge_kind_name(r.kind)},
                    {"from", r.from},
                    {"to", r.to}});
  doc["relationships"] = std::move(rels);
  return doc.dump(2) + "\n";
}

PipelineResult run_pipeline(const PipelineConfig& config) {
  config.match.validate();

  const bool store_only = config.input_paths.empty() && config.store_path;
  std::vector<std::string> files;
  if (!config.input_paths.empty()) {
    files = discover_inputs(config.input_paths);
    if (files.empty())
      throw Error(ErrorCode::EmptyCorpus, "no .xsd files under the input paths");
  } else if (!config.store_path) {
    throw Error(ErrorCode::EmptyCorpus, "no input paths and no store given");
  }

  LexicalResource resource;
  if (config.lexicon_path)
    resource = LexicalResource::load_file(*config.lexicon_path);
  const std::string fingerprint = config_fingerprint(config, resource);

  std::vector<Warning> warnings;

  CorpusModel corpus = build_corpus_model(parse_all(files));
  for (const Warning& w : corpus.warnings) warnings.push_back(w);

  ConceptGraph graph =
      extract_concepts(corpus, {.singularize = config.singularize}, &warnings);

  if (config.store_path && fs::exists(*config.store_path)) {
    ConceptStore stored = load_store(*config.store_path);
    if (stored.config_fingerprint != fingerprint)
      warnings.push_back({"store-config-mismatch",
                          "store was built with a different configuration",
                          *config.store_path, ""});
    graph = store_only ? stored.graph : join_store_graph(graph, stored.graph);
  } else if (store_only) {
    throw Error(ErrorCode::IoError, "store file not found: " + *config.store_path);
  }

  RoleAssignment roles = classify_roles(graph);
  const MatchSet matches = match_concepts(graph, roles, config.match, resource);
  graph = merge_concepts(graph, matches, resource, &warnings);
  roles = classify_roles(graph);

  PipelineResult result;
  result.validation = validate_graph(graph, roles);
  for (const Warning& w : warnings)
    result.validation.warnings.push_back(
        {w.code, w.source_id.empty() ? w.message : w.source_id + ": " + w.message,
         {}});
  result.summary = report_summary(graph, roles);

  if (result.validation.ok()) {
    result.skeleton = generate_skeleton(graph, roles);
    result.turtle = serialize_skeleton(result.skeleton, config.base_iri);
    write_file_atomic(config.output_path, result.turtle);
    if (config.store_path && !store_only) {
      ConceptStore store;
      store.config_fingerprint = fingerprint;
      store.graph = graph;
      store.roles = roles;
      save_store(store, *config.store_path);
    }
  } else {
    result.exit_code = 2;
  }

  // The report goes out in both outcomes.
  fs::path report_path(config.output_path);
  report_path.replace_extension(config.report_format == ReportFormat::Json
                                    ? ".report.json"
                                    : ".report.txt");
  std::string report_text;
  if (config.report_format == ReportFormat::Json) {
    nlohmann::json doc;
    doc["summary"] = nlohmann::json::parse(result.summary.to_json_text());
    doc["validation"] = nlohmann::json::parse(result.validation.to_json_text());
    report_text = doc.dump(2) + "\n";
  } else {
    report_text = result.summary.to_text() + result.validation.to_text();
  }
  write_file_atomic(report_path.string(), report_text);

  result.graph = std::move(graph);
  result.roles = std::move(roles);
  return result;
}

}  // namespace janus
