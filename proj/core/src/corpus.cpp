#include "janus/corpus.hpp"

#include <algorithm>
#include <utility>

namespace janus {

// --- xsd_model out-of-line members -----------------------------------------

ElementDeclaration::ElementDeclaration() = default;
ElementDeclaration::ElementDeclaration(ElementDeclaration&&) noexcept = default;
ElementDeclaration& ElementDeclaration::operator=(ElementDeclaration&&) noexcept = default;
ElementDeclaration::~ElementDeclaration() = default;

ElementDeclaration::ElementDeclaration(const ElementDeclaration& other)
    : name(other.name),
      declared_type(other.declared_type),
      ref_target(other.ref_target),
      resolved_ref(other.resolved_ref),
      occurs(other.occurs),
      group(other.group),
      choice_id(other.choice_id),
      is_wildcard(other.is_wildcard),
      construct_path(other.construct_path) {
  if (other.inline_type)
    inline_type = std::make_unique<TypeDefinition>(*other.inline_type);
}

ElementDeclaration& ElementDeclaration::operator=(const ElementDeclaration& other) {
  if (this != &other) *this = ElementDeclaration(other);
  return *this;
}

AttributeDeclaration::AttributeDeclaration() = default;
AttributeDeclaration::AttributeDeclaration(AttributeDeclaration&&) noexcept = default;
AttributeDeclaration& AttributeDeclaration::operator=(AttributeDeclaration&&) noexcept = default;
AttributeDeclaration::~AttributeDeclaration() = default;

AttributeDeclaration::AttributeDeclaration(const AttributeDeclaration& other)
    : name(other.name),
      declared_type(other.declared_type),
      required(other.required),
      construct_path(other.construct_path) {
  if (other.inline_type)
    inline_type = std::make_unique<TypeDefinition>(*other.inline_type);
}

AttributeDeclaration& AttributeDeclaration::operator=(const AttributeDeclaration& other) {
  if (this != &other) *this = AttributeDeclaration(other);
  return *this;
}

std::string TypeDefinition::display_name() const {
  if (name) return *name;
  return synthetic_suffix_parent + "Type";
}

bool TypeDefinition::has_complex_content() const {
  if (kind == TypeKind::Simple) return false;
  if (simple_content) return false;
  return true;
}

bool ElementDeclaration::equivalent(const ElementDeclaration& other) const {
  if (name != other.name || occurs != other.occurs ||
      is_wildcard != other.is_wildcard || group != other.group)
    return false;
  auto ref_eq = [](const std::optional<TypeRef>& a, const std::optional<TypeRef>& b) {
    if (a.has_value() != b.has_value()) return false;
    return !a || (*a == *b);
  };
  if (!ref_eq(declared_type, other.declared_type) ||
      !ref_eq(ref_target, other.ref_target))
    return false;
  if (static_cast<bool>(inline_type) != static_cast<bool>(other.inline_type))
    return false;
  return !inline_type || inline_type->equivalent(*other.inline_type);
}

bool AttributeDeclaration::equivalent(const AttributeDeclaration& other) const {
  if (name != other.name || required != other.required) return false;
  if (declared_type.has_value() != other.declared_type.has_value()) return false;
  if (declared_type && !(*declared_type == *other.declared_type)) return false;
  if (static_cast<bool>(inline_type) != static_cast<bool>(other.inline_type))
    return false;
  return !inline_type || inline_type->equivalent(*other.inline_type);
}

bool TypeDefinition::equivalent(const TypeDefinition& other) const {
  if (name != other.name || kind != other.kind || content != other.content ||
      simple_content != other.simple_content ||
      built_in_target != other.built_in_target ||
      has_wildcard != other.has_wildcard)
    return false;
  if (base_type.has_value() != other.base_type.has_value()) return false;
  if (base_type && !(*base_type == *other.base_type)) return false;
  if (union_members.size() != other.union_members.size() ||
      children.size() != other.children.size() ||
      attributes.size() != other.attributes.size())
    return false;
  for (std::size_t i = 0; i < union_members.size(); ++i)
    if (!(union_members[i] == other.union_members[i])) return false;
  for (std::size_t i = 0; i < children.size(); ++i)
    if (!children[i].equivalent(other.children[i])) return false;
  for (std::size_t i = 0; i < attributes.size(); ++i)
    if (!attributes[i].equivalent(other.attributes[i])) return false;
  return true;
}

std::string Occurrence::to_string() const {
  std::string out = "[" + std::to_string(min) + ",";
  out += max ? std::to_string(*max) : "*";
  out += "]";
  return out;
}

// --- corpus building --------------------------------------------------------

namespace {

using QName = std::pair<std::string, std::string>;  // (namespace, local)

struct Resolver {
  explicit Resolver(CorpusModel& m) : model(m) {}

  CorpusModel& model;
  std::map<QName, TypeDefinition*> types_by_qname;
  std::map<std::string, TypeDefinition*> types_by_local;
  std::map<QName, const ElementDeclaration*> elements_by_qname;
  std::map<std::string, const ElementDeclaration*> elements_by_local;
  std::map<std::string, TypeDefinition*> builtins;

  void warn(const std::string& code, const std::string& message,
            const std::string& source_id, const std::string& path) {
    model.warnings.push_back({code, message, source_id, path});
  }

  TypeDefinition* builtin(const std::string& local) {
    auto it = builtins.find(local);
    if (it != builtins.end()) return it->second;
    TypeDefinition def;
    def.name = local;
    def.kind = TypeKind::Simple;
    def.content = ContentKind::BuiltIn;
    def.built_in_target = local;
    model.builtin_types.push_back(std::move(def));
    TypeDefinition* ptr = &model.builtin_types.back();
    builtins.emplace(local, ptr);
    return ptr;
  }

  void index(SchemaDocument& doc) {
    const std::string ns = doc.target_namespace.value_or("");
    for (TypeDefinition& def : doc.type_definitions) {
      QName key{ns, *def.name};
      auto [it, inserted] = types_by_qname.emplace(key, &def);
      if (!inserted) {
        if (!it->second->equivalent(def))
          warn("duplicate-definition",
               "type " + *def.name + " redefined with differing structure; "
               "keeping first definition",
               doc.source_id, def.construct_path);
      } else {
        types_by_local.emplace(*def.name, &def);
      }
    }
    for (const ElementDeclaration& el : doc.global_elements) {
      if (!el.name) continue;
      QName key{ns, *el.name};
      auto [it, inserted] = elements_by_qname.emplace(key, &el);
      if (!inserted) {
        if (!it->second->equivalent(el))
          warn("duplicate-definition",
               "element " + *el.name + " redefined with differing structure; "
               "keeping first definition",
               doc.source_id, el.construct_path);
      } else {
        elements_by_local.emplace(*el.name, &el);
      }
    }
  }

  void resolve_type_ref(TypeRef& ref, const std::string& source_id,
                        const std::string& path) {
    if (ref.is_builtin()) {
      if (is_builtin_datatype(ref.local)) {
        ref.resolved = builtin(ref.local);
      } else {
        warn("unresolved-reference",
             "unknown XML Schema datatype " + ref.raw + "; treated as printable",
             source_id, path);
      }
      return;
    }
    if (auto it = types_by_qname.find({ref.ns_uri, ref.local});
        it != types_by_qname.end()) {
      ref.resolved = it->second;
      return;
    }
    if (auto it = types_by_local.find(ref.local); it != types_by_local.end()) {
      ref.resolved = it->second;
      return;
    }
    // Plain local names sometimes mean built-ins in no-namespace schemas.
    if (ref.ns_uri.empty() && is_builtin_datatype(ref.local)) {
      ref.resolved = builtin(ref.local);
      return;
    }
    warn("unresolved-reference",
         "type " + ref.raw + " is not defined in the corpus; treated as printable",
         source_id, path);
  }

  const ElementDeclaration* resolve_element_ref(TypeRef& ref,
                                                const std::string& source_id,
                                                const std::string& path) {
    if (auto it = elements_by_qname.find({ref.ns_uri, ref.local});
        it != elements_by_qname.end())
      return it->second;
    if (auto it = elements_by_local.find(ref.local);
        it != elements_by_local.end())
      return it->second;
    // The mapping also admits refs straight to a named complex type.
    if (auto it = types_by_qname.find({ref.ns_uri, ref.local});
        it != types_by_qname.end()) {
      ref.resolved = it->second;
      return nullptr;
    }
    if (auto it = types_by_local.find(ref.local); it != types_by_local.end()) {
      ref.resolved = it->second;
      return nullptr;
    }
    warn("unresolved-reference", "ref " + ref.raw + " has no target in the corpus",
         source_id, path);
    return nullptr;
  }

  void resolve_element(ElementDeclaration& el, const std::string& source_id) {
    if (el.declared_type)
      resolve_type_ref(*el.declared_type, source_id, el.construct_path);
    if (el.ref_target)
      el.resolved_ref = resolve_element_ref(*el.ref_target, source_id,
                                            el.construct_path);
    if (el.inline_type) resolve_type(*el.inline_type, source_id);
  }

  void resolve_type(TypeDefinition& def, const std::string& source_id) {
    if (def.base_type)
      resolve_type_ref(*def.base_type, source_id, def.construct_path);
    for (TypeRef& member : def.union_members)
      resolve_type_ref(member, source_id, def.construct_path);
    for (ElementDeclaration& el : def.children) resolve_element(el, source_id);
    for (AttributeDeclaration& attr : def.attributes) {
      if (attr.declared_type)
        resolve_type_ref(*attr.declared_type, source_id, attr.construct_path);
      if (attr.inline_type) resolve_type(*attr.inline_type, source_id);
    }
  }
};

}  // namespace

CorpusModel build_corpus_model(std::vector<SchemaDocument> documents) {
  CorpusModel model;
  std::sort(documents.begin(), documents.end(),
            [](const SchemaDocument& a, const SchemaDocument& b) {
              return a.source_id < b.source_id;
            });
  model.documents = std::move(documents);

  for (std::size_t i = 1; i < model.documents.size(); ++i)
    if (model.documents[i].source_id == model.documents[i - 1].source_id)
      model.warnings.push_back({"duplicate-source",
                                "source id appears more than once",
                                model.documents[i].source_id, ""});

  for (const SchemaDocument& doc : model.documents)
    for (const Warning& w : doc.warnings) model.warnings.push_back(w);

  Resolver resolver{model};
  for (SchemaDocument& doc : model.documents) resolver.index(doc);
  for (SchemaDocument& doc : model.documents) {
    for (TypeDefinition& def : doc.type_definitions)
      resolver.resolve_type(def, doc.source_id);
    for (ElementDeclaration& el : doc.global_elements)
      resolver.resolve_element(el, doc.source_id);
  }
  return model;
}

}  // namespace janus
