#include "janus/xsd_parser.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <string_view>

#include "janus/errors.hpp"
#include "janus/xml.hpp"

namespace janus {

namespace {

// XML Schema built-in datatypes (primitive and derived), plus the two ur-types.
constexpr std::array kBuiltins = {
    "string", "boolean", "decimal", "float", "double", "duration", "dateTime",
    "time", "date", "gYearMonth", "gYear", "gMonthDay", "gDay", "gMonth",
    "hexBinary", "base64Binary", "anyURI", "QName", "NOTATION",
    "normalizedString", "token", "language", "NMTOKEN", "NMTOKENS", "Name",
    "NCName", "ID", "IDREF", "IDREFS", "ENTITY", "ENTITIES", "integer",
    "nonPositiveInteger", "negativeInteger", "long", "int", "short", "byte",
    "nonNegativeInteger", "unsignedLong", "unsignedInt", "unsignedShort",
    "unsignedByte", "positiveInteger", "anyType", "anySimpleType"};

class SchemaParser {
 public:
  explicit SchemaParser(std::string source_id) {
    doc_.source_id = std::move(source_id);
  }

  SchemaDocument parse(const XmlElement& root) {
    if (root.local != "schema")
      throw Error(ErrorCode::NotASchema,
                  doc_.source_id + ": root element is <" + root.local + ">");
    push_scope(root);
    schema_ns_ = resolve_prefix(root.prefix);
    if (const auto* tns = root.attribute("targetNamespace"))
      doc_.target_namespace = *tns;

    for (const XmlElement& child : root.children) {
      if (!is_construct(child)) {
        warn("skipped-construct", "foreign element <" + qname(child) + ">",
             child.local);
        continue;
      }
      if (child.local == "element") {
        push_scope(child);
        doc_.global_elements.push_back(
            parse_element(child, "", GroupKind::Sequence, -1));
        pop_scope();
      } else if (child.local == "complexType" || child.local == "simpleType") {
        const auto* name = child.attribute("name");
        if (!name) {
          warn("skipped-construct",
               "top-level " + child.local + " without name", child.local);
          continue;
        }
        push_scope(child);
        std::string path = child.local + "[" + *name + "]";
        TypeDefinition def = child.local == "complexType"
                                 ? parse_complex_type(child, path)
                                 : parse_simple_type(child, path);
        def.name = *name;
        doc_.type_definitions.push_back(std::move(def));
        pop_scope();
      } else if (child.local == "annotation") {
        warn("skipped-construct", "xs:annotation ignored", child.local);
      } else if (child.local == "import" || child.local == "include") {
        warn("skipped-construct",
             "xs:" + child.local +
                 " resolved from the input corpus only, no fetch",
             child.local);
      } else {
        // group, attributeGroup, notation, redefine, top-level attribute, ...
        warn("skipped-construct", "xs:" + child.local + " not mapped",
             child.local);
      }
    }
    pop_scope();
    return std::move(doc_);
  }

 private:
  SchemaDocument doc_;
  std::string schema_ns_;
  std::vector<const XmlElement*> scope_;
  int next_choice_id_ = 0;

  void push_scope(const XmlElement& e) { scope_.push_back(&e); }
  void pop_scope() { scope_.pop_back(); }

  std::string resolve_prefix(const std::string& prefix) const {
    for (auto it = scope_.rbegin(); it != scope_.rend(); ++it)
      for (const auto& [p, uri] : (*it)->ns_decls)
        if (p == prefix) return uri;
    return "";
  }

  static std::string qname(const XmlElement& e) {
    return e.prefix.empty() ? e.local : e.prefix + ":" + e.local;
  }

  bool is_construct(const XmlElement& e) const {
    const std::string ns = resolve_prefix_with(e);
    return ns == kXsdNamespace || ns == schema_ns_;
  }

  std::string resolve_prefix_with(const XmlElement& e) const {
    // e is not on the scope stack yet; check its own declarations first.
    for (const auto& [p, uri] : e.ns_decls)
      if (p == e.prefix) return uri;
    return resolve_prefix(e.prefix);
  }

  void warn(const std::string& code, const std::string& message,
            const std::string& path) {
    doc_.warnings.push_back({code, message, doc_.source_id, path});
  }

  TypeRef make_type_ref(const std::string& raw) const {
    TypeRef ref;
    ref.raw = raw;
    auto colon = raw.find(':');
    if (colon == std::string::npos) {
      ref.local = raw;
      ref.ns_uri = resolve_prefix("");  // default namespace, usually empty
    } else {
      ref.local = raw.substr(colon + 1);
      ref.ns_uri = resolve_prefix(raw.substr(0, colon));
    }
    return ref;
  }

  Occurrence parse_occurs(const XmlElement& e, const std::string& path) {
    Occurrence occ;
    auto parse_bound = [&](const char* attr,
                           std::uint32_t fallback) -> std::optional<std::uint32_t> {
      const std::string* v = e.attribute(attr);
      if (!v) return fallback;
      if (*v == "unbounded") return std::nullopt;
      std::uint32_t n = 0;
      auto [p, ec] = std::from_chars(v->data(), v->data() + v->size(), n);
      if (ec != std::errc() || p != v->data() + v->size()) {
        warn("invalid-occurrence", std::string(attr) + "=\"" + *v + "\"", path);
        return fallback;
      }
      return n;
    };
    if (auto mn = parse_bound("minOccurs", 1)) occ.min = *mn;
    occ.max = parse_bound("maxOccurs", 1);
    if (occ.max && *occ.max < occ.min) {
      warn("invalid-occurrence", "minOccurs exceeds maxOccurs", path);
      occ.max = occ.min;
    }
    return occ;
  }

  ElementDeclaration parse_element(const XmlElement& e, const std::string& parent_path,
                                   GroupKind group, int choice_id) {
    ElementDeclaration decl;
    decl.group = group;
    decl.choice_id = choice_id;
    if (const auto* name = e.attribute("name")) decl.name = *name;
    std::string path = parent_path.empty()
                           ? "element[" + decl.name.value_or("?") + "]"
                           : parent_path + "/element[" + decl.name.value_or("?") + "]";
    decl.construct_path = path;
    decl.occurs = parse_occurs(e, path);

    const auto* ref = e.attribute("ref");
    const auto* type = e.attribute("type");
    if (ref) decl.ref_target = make_type_ref(*ref);
    if (type) {
      if (ref)
        warn("invalid-declaration", "element has both ref and type; type ignored", path);
      else
        decl.declared_type = make_type_ref(*type);
    }
    if (ref && decl.name)
      warn("invalid-declaration", "element has both ref and name", path);

    for (const XmlElement& child : e.children) {
      if (!is_construct(child)) continue;
      if (child.local == "complexType" || child.local == "simpleType") {
        if (decl.ref_target || decl.declared_type || decl.inline_type) {
          warn("invalid-declaration", "extra inline type ignored", path);
          continue;
        }
        push_scope(child);
        std::string tpath = path + "/" + child.local;
        TypeDefinition def = child.local == "complexType"
                                 ? parse_complex_type(child, tpath)
                                 : parse_simple_type(child, tpath);
        def.synthetic_suffix_parent = decl.name.value_or("");
        decl.inline_type = std::make_unique<TypeDefinition>(std::move(def));
        pop_scope();
      } else if (child.local == "annotation") {
        warn("skipped-construct", "xs:annotation ignored", path);
      } else if (child.local == "key" || child.local == "keyref" ||
                 child.local == "unique") {
        warn("skipped-construct", "identity constraint xs:" + child.local, path);
      } else {
        warn("skipped-construct", "xs:" + child.local + " under element", path);
      }
    }
    if (!decl.name && !decl.ref_target && !decl.is_wildcard)
      warn("invalid-declaration", "element with neither name nor ref", path);
    return decl;
  }

  AttributeDeclaration parse_attribute(const XmlElement& e, const std::string& parent_path) {
    AttributeDeclaration attr;
    if (const auto* name = e.attribute("name")) attr.name = *name;
    attr.construct_path = parent_path + "/attribute[" + attr.name + "]";
    if (attr.name.empty())
      warn(e.attribute("ref") ? "skipped-construct" : "invalid-declaration",
           e.attribute("ref") ? "attribute reference not mapped"
                              : "attribute without name",
           attr.construct_path);
    if (const auto* type = e.attribute("type"))
      attr.declared_type = make_type_ref(*type);
    if (const auto* use = e.attribute("use")) attr.required = *use == "required";
    for (const XmlElement& child : e.children) {
      if (!is_construct(child)) continue;
      if (child.local == "simpleType" && !attr.inline_type && !attr.declared_type) {
        push_scope(child);
        TypeDefinition def =
            parse_simple_type(child, attr.construct_path + "/simpleType");
        def.synthetic_suffix_parent = attr.name;
        attr.inline_type = std::make_unique<TypeDefinition>(std::move(def));
        pop_scope();
      } else if (child.local != "annotation") {
        warn("skipped-construct", "xs:" + child.local + " under attribute",
             attr.construct_path);
      }
    }
    return attr;
  }

  void parse_group(const XmlElement& g, GroupKind kind, int choice_id,
                   TypeDefinition& into, const std::string& path) {
    for (const XmlElement& child : g.children) {
      if (!is_construct(child)) continue;
      push_scope(child);
      if (child.local == "element") {
        into.children.push_back(parse_element(child, path, kind, choice_id));
      } else if (child.local == "any") {
        ElementDeclaration wildcard;
        wildcard.is_wildcard = true;
        wildcard.group = kind;
        wildcard.choice_id = choice_id;
        wildcard.construct_path = path + "/any";
        wildcard.occurs = parse_occurs(child, wildcard.construct_path);
        into.children.push_back(std::move(wildcard));
        into.has_wildcard = true;
      } else if (child.local == "sequence" || child.local == "all") {
        parse_group(child, child.local == "all" ? GroupKind::All : GroupKind::Sequence,
                    -1, into, path + "/" + child.local);
      } else if (child.local == "choice") {
        int id = next_choice_id_++;
        parse_group(child, GroupKind::Choice, id, into, path + "/choice");
      } else if (child.local == "group") {
        warn("skipped-construct", "xs:group reference", path);
      } else if (child.local != "annotation") {
        warn("skipped-construct", "xs:" + child.local + " in model group", path);
      }
      pop_scope();
    }
  }

  TypeDefinition parse_complex_type(const XmlElement& e, const std::string& path) {
    TypeDefinition def;
    def.kind = TypeKind::Complex;
    def.construct_path = path;
    for (const XmlElement& child : e.children) {
      if (!is_construct(child)) continue;
      push_scope(child);
      if (child.local == "sequence") {
        def.content = ContentKind::ElementSequence;
        parse_group(child, GroupKind::Sequence, -1, def, path + "/sequence");
      } else if (child.local == "all") {
        def.content = ContentKind::AllGroup;
        parse_group(child, GroupKind::All, -1, def, path + "/all");
      } else if (child.local == "choice") {
        def.content = ContentKind::ChoiceGroup;
        int id = next_choice_id_++;
        parse_group(child, GroupKind::Choice, id, def, path + "/choice");
      } else if (child.local == "attribute") {
        def.attributes.push_back(parse_attribute(child, path));
      } else if (child.local == "simpleContent" || child.local == "complexContent") {
        const bool simple = child.local == "simpleContent";
        def.simple_content = simple;
        for (const XmlElement& deriv : child.children) {
          if (!is_construct(deriv)) continue;
          if (deriv.local != "extension" && deriv.local != "restriction") {
            if (deriv.local != "annotation")
              warn("skipped-construct", "xs:" + deriv.local + " in content model", path);
            continue;
          }
          push_scope(deriv);
          def.content = deriv.local == "extension" ? ContentKind::Extension
                                                   : ContentKind::Restriction;
          if (const auto* base = deriv.attribute("base"))
            def.base_type = make_type_ref(*base);
          for (const XmlElement& part : deriv.children) {
            if (!is_construct(part)) continue;
            push_scope(part);
            if (part.local == "sequence" || part.local == "all")
              parse_group(part,
                          part.local == "all" ? GroupKind::All : GroupKind::Sequence,
                          -1, def, path + "/" + deriv.local + "/" + part.local);
            else if (part.local == "choice")
              parse_group(part, GroupKind::Choice, next_choice_id_++, def,
                          path + "/" + deriv.local + "/choice");
            else if (part.local == "attribute")
              def.attributes.push_back(parse_attribute(part, path));
            else if (part.local != "annotation")
              warn("skipped-construct", "xs:" + part.local + " in derivation", path);
            pop_scope();
          }
          pop_scope();
        }
      } else if (child.local == "anyAttribute") {
        warn("skipped-construct", "xs:anyAttribute", path);
      } else if (child.local != "annotation") {
        warn("skipped-construct", "xs:" + child.local + " in complexType", path);
      }
      pop_scope();
    }
    return def;
  }

  TypeDefinition parse_simple_type(const XmlElement& e, const std::string& path) {
    TypeDefinition def;
    def.kind = TypeKind::Simple;
    def.construct_path = path;
    for (const XmlElement& child : e.children) {
      if (!is_construct(child)) continue;
      push_scope(child);
      if (child.local == "restriction") {
        def.content = ContentKind::Restriction;
        if (const auto* base = child.attribute("base"))
          def.base_type = make_type_ref(*base);
        else
          warn("skipped-construct", "restriction without base attribute", path);
      } else if (child.local == "union") {
        def.content = ContentKind::Union;
        if (const auto* members = child.attribute("memberTypes")) {
          std::string_view rest = *members;
          while (!rest.empty()) {
            auto pos = rest.find_first_not_of(" \t\r\n");
            if (pos == std::string_view::npos) break;
            rest.remove_prefix(pos);
            auto end = rest.find_first_of(" \t\r\n");
            std::string_view tok = rest.substr(0, end);
            def.union_members.push_back(make_type_ref(std::string(tok)));
            rest = end == std::string_view::npos ? std::string_view{}
                                                 : rest.substr(end);
          }
        }
        for (const XmlElement& inl : child.children)
          if (is_construct(inl) && inl.local == "simpleType")
            warn("skipped-construct", "inline union member type", path);
      } else if (child.local == "list") {
        warn("skipped-construct", "xs:list", path);
      } else if (child.local != "annotation") {
        warn("skipped-construct", "xs:" + child.local + " in simpleType", path);
      }
      pop_scope();
    }
    return def;
  }
};

}  // namespace

bool is_builtin_datatype(std::string_view local_name) {
  return std::find(kBuiltins.begin(), kBuiltins.end(), local_name) !=
         kBuiltins.end();
}

SchemaDocument parse_schema_document(std::string_view text,
                                     const std::string& source_id) {
  XmlElement root = parse_xml(text, source_id);
  return SchemaParser(source_id).parse(root);
}

}  // namespace janus
