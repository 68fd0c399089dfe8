#include "janus/extract.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "janus/errors.hpp"
#include "janus/tokenize.hpp"

namespace janus {

namespace {

std::string casefold(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

class Extractor {
 public:
  Extractor(const CorpusModel& model, const ExtractOptions& options,
            std::vector<Warning>* warnings)
      : model_(model), options_(options), warnings_(warnings) {}

  ConceptGraph run() {
    for (const SchemaDocument& doc : model_.documents) {
      for (const TypeDefinition& def : doc.type_definitions)
        handle_named_type(def, doc.source_id);
      for (const ElementDeclaration& el : doc.global_elements)
        handle_element(el, doc.source_id);
    }
    graph_.finalize();
    return std::move(graph_);
  }

 private:
  const CorpusModel& model_;
  ExtractOptions options_;
  std::vector<Warning>* warnings_;
  ConceptGraph graph_;
  std::map<std::string, ConceptId> by_key_;

  void warn(const std::string& code, const std::string& message,
            const std::string& source_id, const std::string& path) {
    if (warnings_) warnings_->push_back({code, message, source_id, path});
  }

  ConceptId concept_for(const std::string& key, const std::string& label) {
    auto it = by_key_.find(key);
    if (it != by_key_.end()) return it->second;
    ConceptId id = static_cast<ConceptId>(graph_.concepts.size());
    Concept c;
    c.label = label;
    graph_.concepts.push_back(std::move(c));
    by_key_.emplace(key, id);
    return id;
  }

  /// Normalized label, or nothing for names made of delimiters only (the
  /// construct is skipped with a warning rather than aborting the run).
  std::optional<std::string> try_label(const std::string& raw_name,
                                       const std::string& source_id,
                                       const std::string& path) {
    try {
      return normalize_label(raw_name, options_.singularize);
    } catch (const Error&) {
      warn("unlabeled-construct",
           "name \"" + raw_name + "\" yields no tokens; construct skipped",
           source_id, path);
      return std::nullopt;
    }
  }

  /// Built-in datatype concepts keep their spelled local name (gYear, anyURI).
  /// The unification key is still the case-folded name, so a user construct
  /// spelled the same way lands on the same concept.
  ConceptId builtin_concept(const std::string& local, const std::string& source_id,
                            const std::string& path, MappingRule rule) {
    ConceptId id = concept_for(casefold(local), local);
    graph_.concepts[id].datatype_target = local;
    graph_.concepts[id].instances.push_back({source_id, path, rule});
    return id;
  }

  void add_instance(ConceptId id, const std::string& source_id,
                    const std::string& path, MappingRule rule) {
    graph_.concepts[id].instances.push_back({source_id, path, rule});
  }

  void add_edge(EdgeKind kind, ConceptId from, ConceptId to,
                std::optional<Occurrence> card = std::nullopt) {
    if (from == to && kind != EdgeKind::PropertyOf) return;
    graph_.edges.push_back({kind, from, to, card});
  }

  /// Printable name a type bottoms out at, following derivation chains.
  std::optional<std::string> bottom_out(const TypeDefinition& def) {
    const TypeDefinition* cur = &def;
    int guard = 0;
    while (cur && ++guard < 64) {
      if (cur->built_in_target) return cur->built_in_target;
      if (cur->kind == TypeKind::Complex && !cur->simple_content) return std::nullopt;
      if (cur->content == ContentKind::Union) return std::nullopt;
      if (!cur->base_type) return std::nullopt;
      if (!cur->base_type->resolved) return cur->base_type->local;  // opaque
      cur = cur->base_type->resolved;
    }
    return std::nullopt;
  }

  /// Concept standing for a referenced type: the built-in itself, the named
  /// type's concept, or an opaque printable stand-in when unresolved.
  std::optional<ConceptId> concept_for_type_ref(const TypeRef& ref,
                                                const std::string& source_id,
                                                const std::string& path,
                                                MappingRule rule) {
    if (ref.resolved && ref.resolved->content == ContentKind::BuiltIn)
      return builtin_concept(ref.resolved->display_name(), source_id, path, rule);
    if (ref.resolved) {
      auto label = try_label(ref.resolved->display_name(), source_id, path);
      if (!label) return std::nullopt;
      return concept_for(*label, *label);
    }
    auto label = try_label(ref.local, source_id, path);
    if (!label) return std::nullopt;
    ConceptId id = concept_for(*label, *label);
    add_instance(id, source_id, path, rule);
    if (!edge_exists_property_from(id) && !graph_.concepts[id].datatype_target)
      graph_.concepts[id].datatype_target = ref.local;  // opaque printable
    return id;
  }

  bool edge_exists_property_from(ConceptId id) const {
    for (const Edge& e : graph_.edges)
      if (e.kind == EdgeKind::PropertyOf && e.from == id) return true;
    return false;
  }

  void handle_named_type(const TypeDefinition& def, const std::string& source_id) {
    auto label = try_label(*def.name, source_id, def.construct_path);
    if (!label) return;
    ConceptId id = concept_for(*label, *label);
    MappingRule rule = def.kind == TypeKind::Simple ? MappingRule::SimpleType
                       : def.simple_content         ? MappingRule::SimpleContent
                                                    : MappingRule::ComplexType;
    add_instance(id, source_id, def.construct_path, rule);
    if (def.has_complex_content()) graph_.concepts[id].declared_complex = true;
    process_content(id, def, source_id, /*allow_datatype_target=*/true);
  }

  void handle_element(const ElementDeclaration& el, const std::string& source_id) {
    if (el.is_wildcard || !el.name) return;
    auto label = try_label(*el.name, source_id, el.construct_path);
    if (!label) return;
    ConceptId id = concept_for(*label, *label);
    add_instance(id, source_id, el.construct_path,
                 el.declared_type ? MappingRule::ElementTyped
                                  : MappingRule::ElementUntyped);
    if (el.declared_type) {
      auto target =
          concept_for_type_ref(*el.declared_type, source_id,
                               el.construct_path + "/@type", MappingRule::ElementTyped);
      if (target) add_edge(EdgeKind::IsA, id, *target);
    }
    if (el.inline_type) {
      if (el.inline_type->has_complex_content())
        graph_.concepts[id].declared_complex = true;
      process_content(id, *el.inline_type, source_id,
                      /*allow_datatype_target=*/false);
    }
  }

  /// Concept a child slot contributes: the child's own concept, the referenced
  /// global's concept, or the wildcard ("any") concept.
  std::optional<ConceptId> child_concept(const ElementDeclaration& el,
                                         const std::string& source_id) {
    if (el.is_wildcard) {
      ConceptId any = concept_for("any", "any");
      add_instance(any, source_id, el.construct_path, MappingRule::AnyWildcard);
      ConceptId target = builtin_concept(
          "anyType", source_id, el.construct_path + "/@type", MappingRule::AnyWildcard);
      add_edge(EdgeKind::IsA, any, target);
      return any;
    }
    if (el.ref_target) {
      if (el.resolved_ref && el.resolved_ref->name) {
        auto label = try_label(*el.resolved_ref->name, source_id, el.construct_path);
        if (!label) return std::nullopt;
        return concept_for(*label, *label);
      }
      if (el.ref_target->resolved)
        return concept_for_type_ref(*el.ref_target, source_id,
                                    el.construct_path + "/@ref",
                                    MappingRule::ElementRef);
      auto label = try_label(el.ref_target->local, source_id, el.construct_path);
      if (!label) return std::nullopt;
      ConceptId id = concept_for(*label, *label);
      add_instance(id, source_id, el.construct_path, MappingRule::ElementRef);
      return id;
    }
    if (!el.name) return std::nullopt;
    auto label = try_label(*el.name, source_id, el.construct_path);
    if (!label) return std::nullopt;
    handle_element(el, source_id);
    return concept_for(*label, *label);
  }

  void process_content(ConceptId owner, const TypeDefinition& def,
                       const std::string& source_id, bool allow_datatype_target) {
    // Derivation: is-a toward the base, printable marker when it bottoms out.
    if (def.base_type) {
      auto base = concept_for_type_ref(*def.base_type, source_id,
                                       def.construct_path + "/@base",
                                       MappingRule::TypeDerivation);
      if (base) add_edge(EdgeKind::IsA, owner, *base);
    }
    if (allow_datatype_target && def.children.empty() && def.attributes.empty()) {
      if (auto target = bottom_out(def))
        graph_.concepts[owner].datatype_target = target;
    }

    // Union members become properties of the owning concept.
    for (const TypeRef& member : def.union_members) {
      auto mid = concept_for_type_ref(member, source_id,
                                      def.construct_path + "/@member",
                                      MappingRule::UnionMembers);
      if (mid) add_edge(EdgeKind::PropertyOf, owner, *mid, Occurrence{});
    }

    // Model-group children: sequence/all children become properties, choice
    // alternatives become pairwise disjoint.
    std::map<int, std::vector<ConceptId>> choices;
    for (const ElementDeclaration& el : def.children) {
      std::optional<ConceptId> target = child_concept(el, source_id);
      if (!target) continue;
      if (el.group == GroupKind::Choice && !el.is_wildcard) {
        choices[el.choice_id].push_back(*target);
      } else {
        add_edge(EdgeKind::PropertyOf, owner, *target, el.occurs);
      }
    }
    for (const auto& [choice_id, members] : choices) {
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t j = i + 1; j < members.size(); ++j)
          add_edge(EdgeKind::DisjointWith, members[i], members[j]);
    }

    for (const AttributeDeclaration& attr : def.attributes) {
      if (attr.name.empty()) continue;
      auto label = try_label(attr.name, source_id, attr.construct_path);
      if (!label) continue;
      ConceptId aid = concept_for(*label, *label);
      add_instance(aid, source_id, attr.construct_path, MappingRule::AttributeDecl);
      Occurrence card{attr.required ? 1u : 0u, 1u};
      add_edge(EdgeKind::PropertyOf, owner, aid, card);
      if (attr.declared_type) {
        auto tid = concept_for_type_ref(*attr.declared_type, source_id,
                                        attr.construct_path + "/@type",
                                        MappingRule::AttributeDecl);
        if (tid) add_edge(EdgeKind::IsA, aid, *tid);
      }
      if (attr.inline_type)
        process_content(aid, *attr.inline_type, source_id,
                        /*allow_datatype_target=*/false);
    }
  }
};

}  // namespace

ConceptGraph extract_concepts(const CorpusModel& model,
                              const ExtractOptions& options,
                              std::vector<Warning>* warnings) {
  return Extractor(model, options, warnings).run();
}

}  // namespace janus
