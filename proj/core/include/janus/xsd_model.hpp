#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "janus/occurrence.hpp"

namespace janus {

inline constexpr const char* kXsdNamespace = "http://www.w3.org/2001/XMLSchema";

/// True for names on the XML Schema built-in datatype list (string, integer,
/// gYear, anyURI, ... plus anyType/anySimpleType).
bool is_builtin_datatype(std::string_view local_name);

/// Non-fatal finding attached to a document or corpus.
struct Warning {
  std::string code;       // e.g. "skipped-construct", "unresolved-reference"
  std::string message;
  std::string source_id;
  std::string construct_path;

  friend bool operator==(const Warning&, const Warning&) = default;
};

struct TypeDefinition;

/// A possibly-prefixed name found in an attribute value, resolved against the
/// corpus after all documents are parsed.
struct TypeRef {
  std::string raw;        // as written, e.g. "xs:string" or "Person"
  std::string ns_uri;     // resolved prefix, may be empty
  std::string local;
  const TypeDefinition* resolved = nullptr;  // set by build_corpus_model

  bool is_builtin() const { return ns_uri == kXsdNamespace; }

  friend bool operator==(const TypeRef& a, const TypeRef& b) {
    return a.ns_uri == b.ns_uri && a.local == b.local;
  }
};

enum class GroupKind { Sequence, All, Choice };

struct ElementDeclaration {
  std::optional<std::string> name;
  std::optional<TypeRef> declared_type;           // the `type` attribute
  std::optional<TypeRef> ref_target;              // the `ref` attribute
  const ElementDeclaration* resolved_ref = nullptr;  // global element behind `ref`
  std::unique_ptr<TypeDefinition> inline_type;    // anonymous child type
  Occurrence occurs;
  GroupKind group = GroupKind::Sequence;  // nearest enclosing model group
  int choice_id = -1;                     // shared by alternatives of one choice
  bool is_wildcard = false;               // xs:any
  std::string construct_path;

  ElementDeclaration();
  ElementDeclaration(ElementDeclaration&&) noexcept;
  ElementDeclaration& operator=(ElementDeclaration&&) noexcept;
  ElementDeclaration(const ElementDeclaration&);
  ElementDeclaration& operator=(const ElementDeclaration&);
  ~ElementDeclaration();

  bool equivalent(const ElementDeclaration& other) const;
};

struct AttributeDeclaration {
  std::string name;
  std::optional<TypeRef> declared_type;
  std::unique_ptr<TypeDefinition> inline_type;
  bool required = false;
  std::string construct_path;

  AttributeDeclaration();
  AttributeDeclaration(AttributeDeclaration&&) noexcept;
  AttributeDeclaration& operator=(AttributeDeclaration&&) noexcept;
  AttributeDeclaration(const AttributeDeclaration&);
  AttributeDeclaration& operator=(const AttributeDeclaration&);
  ~AttributeDeclaration();

  bool equivalent(const AttributeDeclaration& other) const;
};

enum class TypeKind { Complex, Simple };

enum class ContentKind {
  Empty,
  ElementSequence,
  AllGroup,
  ChoiceGroup,
  Union,
  Restriction,
  Extension,
  BuiltIn,
};

struct TypeDefinition {
  std::optional<std::string> name;  // absent for anonymous types
  TypeKind kind = TypeKind::Complex;
  ContentKind content = ContentKind::Empty;
  bool simple_content = false;                 // xs:simpleContent derivation
  std::optional<TypeRef> base_type;            // extension / restriction
  std::vector<TypeRef> union_members;
  std::vector<ElementDeclaration> children;
  std::vector<AttributeDeclaration> attributes;
  std::optional<std::string> built_in_target;  // built-in datatype local name
  bool has_wildcard = false;                   // xs:any somewhere in content
  std::string construct_path;

  /// Synthetic label for anonymous types: "<parentName>Type".
  std::string display_name() const;
  std::string synthetic_suffix_parent;  // parent element/attribute name

  /// Complex content in the mapping sense: a model group, an attribute set or
  /// a complex-content derivation, as opposed to simple/printable content.
  bool has_complex_content() const;

  bool equivalent(const TypeDefinition& other) const;
};

struct SchemaDocument {
  std::string source_id;
  std::optional<std::string> target_namespace;
  std::vector<TypeDefinition> type_definitions;   // named, top-level
  std::vector<ElementDeclaration> global_elements;
  std::vector<Warning> warnings;
};

}  // namespace janus
