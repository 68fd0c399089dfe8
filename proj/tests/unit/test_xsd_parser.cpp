#include <doctest.h>

#include "janus/errors.hpp"
#include "janus/xsd_parser.hpp"

using namespace janus;

TEST_CASE("empty schema parses to an empty document") {
  SchemaDocument doc = parse_schema_document("<schema/>", "empty.xsd");
  CHECK(doc.type_definitions.empty());
  CHECK(doc.global_elements.empty());
  CHECK_FALSE(doc.target_namespace.has_value());
}

TEST_CASE("complex type with a sequence of two elements") {
  const char* text = R"(<?xml version="1.0"?>
    <xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema">
      <xs:complexType name="Wine">
        <xs:sequence>
          <xs:element name="Name" type="xs:string"/>
          <xs:element name="Year" type="xs:gYear"/>
        </xs:sequence>
      </xs:complexType>
    </xs:schema>)";
  SchemaDocument doc = parse_schema_document(text, "wine.xsd");
  REQUIRE(doc.type_definitions.size() == 1);
  const TypeDefinition& wine = doc.type_definitions[0];
  CHECK(wine.name == "Wine");
  CHECK(wine.kind == TypeKind::Complex);
  CHECK(wine.content == ContentKind::ElementSequence);
  REQUIRE(wine.children.size() == 2);
  CHECK(wine.children[0].name == "Name");
  REQUIRE(wine.children[0].declared_type.has_value());
  CHECK(wine.children[0].declared_type->local == "string");
  CHECK(wine.children[0].declared_type->ns_uri == kXsdNamespace);
  CHECK(wine.children[1].name == "Year");
}

TEST_CASE("malformed input and non-schema roots are rejected") {
  CHECK_THROWS_AS(parse_schema_document("<schema>", "bad.xsd"), Error);
  CHECK_THROWS_AS(parse_schema_document("not xml at all", "bad.xsd"), Error);
  try {
    parse_schema_document("<html/>", "bad.xsd");
    FAIL("expected NotASchema");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotASchema);
  }
  try {
    parse_schema_document("<a><b></a>", "bad.xsd");
    FAIL("expected MalformedXml");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedXml);
  }
}

TEST_CASE("unsupported constructs become skipped-construct warnings") {
  const char* text = R"(
    <xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema">
      <xs:annotation><xs:documentation>doc</xs:documentation></xs:annotation>
      <xs:group name="G"><xs:sequence/></xs:group>
      <xs:element name="E">
        <xs:complexType>
          <xs:sequence><xs:element name="X" type="xs:string"/></xs:sequence>
        </xs:complexType>
        <xs:key name="k"><xs:selector xpath="X"/></xs:key>
      </xs:element>
    </xs:schema>)";
  SchemaDocument doc = parse_schema_document(text, "warn.xsd");
  int skipped = 0;
  for (const Warning& w : doc.warnings)
    if (w.code == "skipped-construct") ++skipped;
  CHECK(skipped >= 3);  // annotation, group, key
  REQUIRE(doc.global_elements.size() == 1);
  REQUIRE(doc.global_elements[0].inline_type);
  CHECK(doc.global_elements[0].inline_type->display_name() == "EType");
}

TEST_CASE("occurrence bounds parse with defaults and unbounded") {
  const char* text = R"(
    <xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema">
      <xs:complexType name="T">
        <xs:sequence>
          <xs:element name="A" type="xs:string" minOccurs="0" maxOccurs="unbounded"/>
          <xs:element name="B" type="xs:string"/>
          <xs:element name="C" type="xs:string" minOccurs="oops"/>
        </xs:sequence>
      </xs:complexType>
    </xs:schema>)";
  SchemaDocument doc = parse_schema_document(text, "occ.xsd");
  const auto& kids = doc.type_definitions[0].children;
  CHECK(kids[0].occurs.min == 0);
  CHECK(kids[0].occurs.unbounded());
  CHECK(kids[1].occurs == Occurrence{1, 1});
  CHECK(kids[2].occurs == Occurrence{1, 1});  // invalid value falls back
  bool warned = false;
  for (const Warning& w : doc.warnings)
    if (w.code == "invalid-occurrence") warned = true;
  CHECK(warned);
}

TEST_CASE("unprefixed schemas are accepted") {
  const char* text = R"(
    <schema>
      <complexType name="Person">
        <sequence><element name="Name" type="string"/></sequence>
        <attribute name="Status" type="string" use="required"/>
      </complexType>
    </schema>)";
  SchemaDocument doc = parse_schema_document(text, "plain.xsd");
  REQUIRE(doc.type_definitions.size() == 1);
  CHECK(doc.type_definitions[0].children.size() == 1);
  REQUIRE(doc.type_definitions[0].attributes.size() == 1);
  CHECK(doc.type_definitions[0].attributes[0].required);
}

TEST_CASE("choice alternatives share a choice id") {
  const char* text = R"(
    <xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema">
      <xs:complexType name="T">
        <xs:sequence>
          <xs:element name="Head" type="xs:string"/>
          <xs:choice>
            <xs:element name="A" type="xs:string"/>
            <xs:element name="B" type="xs:string"/>
          </xs:choice>
        </xs:sequence>
      </xs:complexType>
    </xs:schema>)";
  SchemaDocument doc = parse_schema_document(text, "choice.xsd");
  const auto& kids = doc.type_definitions[0].children;
  REQUIRE(kids.size() == 3);
  CHECK(kids[0].group == GroupKind::Sequence);
  CHECK(kids[1].group == GroupKind::Choice);
  CHECK(kids[2].group == GroupKind::Choice);
  CHECK(kids[1].choice_id == kids[2].choice_id);
  CHECK(kids[1].choice_id >= 0);
}

TEST_CASE("simple content derivations keep base and attributes") {
  const char* text = R"(
    <xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema">
      <xs:complexType name="Price">
        <xs:simpleContent>
          <xs:extension base="xs:decimal">
            <xs:attribute name="currency" type="xs:string"/>
          </xs:extension>
        </xs:simpleContent>
      </xs:complexType>
      <xs:simpleType name="Code">
        <xs:restriction base="xs:token"/>
      </xs:simpleType>
      <xs:simpleType name="Mixed">
        <xs:union memberTypes="xs:string xs:integer"/>
      </xs:simpleType>
    </xs:schema>)";
  SchemaDocument doc = parse_schema_document(text, "derive.xsd");
  REQUIRE(doc.type_definitions.size() == 3);
  const TypeDefinition& price = doc.type_definitions[0];
  CHECK(price.simple_content);
  CHECK(price.content == ContentKind::Extension);
  REQUIRE(price.base_type);
  CHECK(price.base_type->local == "decimal");
  CHECK(price.attributes.size() == 1);

  CHECK(doc.type_definitions[1].content == ContentKind::Restriction);
  CHECK(doc.type_definitions[2].content == ContentKind::Union);
  CHECK(doc.type_definitions[2].union_members.size() == 2);
}

TEST_CASE("element refs and wildcards are modeled") {
  const char* text = R"(
    <xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema">
      <xs:element name="Engine" type="xs:string"/>
      <xs:complexType name="Car">
        <xs:sequence>
          <xs:element ref="Engine"/>
          <xs:any minOccurs="0"/>
        </xs:sequence>
      </xs:complexType>
    </xs:schema>)";
  SchemaDocument doc = parse_schema_document(text, "ref.xsd");
  const auto& kids = doc.type_definitions[0].children;
  REQUIRE(kids.size() == 2);
  REQUIRE(kids[0].ref_target);
  CHECK(kids[0].ref_target->local == "Engine");
  CHECK(kids[1].is_wildcard);
  CHECK(doc.type_definitions[0].has_wildcard);
}

TEST_CASE("declared non-UTF-8 encodings are honored") {
  std::string text =
      "<?xml version=\"1.0\" encoding=\"ISO-8859-1\"?>\n"
      "<schema><complexType name=\"Caf\xe9\">"  // 0xE9 = Latin-1 e-acute
      "<sequence><element name=\"Name\" type=\"string\"/></sequence>"
      "</complexType></schema>";
  SchemaDocument doc = parse_schema_document(text, "latin1.xsd");
  REQUIRE(doc.type_definitions.size() == 1);
  // Expat re-encodes to UTF-8: 0xC3 0xA9.
  CHECK(doc.type_definitions[0].name == std::string("Caf\xc3\xa9"));
}

TEST_CASE("parsing the same bytes twice gives the same document") {
  const char* text = R"(
    <xs:schema xmlns:xs="http://www.w3.org/2001/XMLSchema">
      <xs:complexType name="T">
        <xs:sequence><xs:element name="A" type="xs:string"/></xs:sequence>
      </xs:complexType>
    </xs:schema>)";
  SchemaDocument a = parse_schema_document(text, "same.xsd");
  SchemaDocument b = parse_schema_document(text, "same.xsd");
  REQUIRE(a.type_definitions.size() == b.type_definitions.size());
  CHECK(a.type_definitions[0].equivalent(b.type_definitions[0]));
  CHECK(a.warnings == b.warnings);
}
