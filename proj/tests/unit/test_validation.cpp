#include <doctest.h>

#include "janus/validation.hpp"

#include "test_helpers.hpp"

using namespace janus;

namespace {

std::string schema(const std::string& body) {
  return std::string("<xs:schema xmlns:xs=\"http://www.w3.org/2001/XMLSchema\">") +
         body + "</xs:schema>";
}

}  // namespace

TEST_CASE("a consistent graph validates cleanly") {
  ConceptGraph g = test::graph_from(test::wine_sources());
  ValidationReport report = validate_graph(g, classify_roles(g));
  CHECK(report.ok());
  CHECK(report.errors.empty());
}

TEST_CASE("mutual subsumption is reported as one cycle") {
  ConceptGraph g = test::graph_from({{"a.xsd", schema(R"(
    <xs:element name="A" type="B"/>
    <xs:element name="B" type="A"/>
    <xs:complexType name="A">
      <xs:sequence>
        <xs:element name="X" type="xs:string"/>
        <xs:element name="Y" type="xs:string"/>
      </xs:sequence>
    </xs:complexType>
    <xs:complexType name="B">
      <xs:sequence>
        <xs:element name="X" type="xs:string"/>
        <xs:element name="Z" type="xs:string"/>
      </xs:sequence>
    </xs:complexType>
  )")}});
  CHECK(test::has_edge(g, EdgeKind::IsA, "a", "b"));
  CHECK(test::has_edge(g, EdgeKind::IsA, "b", "a"));

  ValidationReport report = validate_graph(g, classify_roles(g));
  REQUIRE(report.errors.size() == 1);
  CHECK(report.errors[0].code == "isa-cycle");
  CHECK(report.errors[0].concepts == std::vector<std::string>{"a", "b"});
}

TEST_CASE("longer subsumption cycles are reported once with all members") {
  ConceptGraph g = test::graph_from({{"a.xsd", schema(R"(
    <xs:element name="A" type="B"/>
    <xs:element name="B" type="C"/>
    <xs:element name="C" type="A"/>
    <xs:element name="D" type="A"/>
    <xs:complexType name="A"><xs:sequence>
      <xs:element name="X" type="xs:string"/>
      <xs:element name="Y" type="xs:string"/>
    </xs:sequence></xs:complexType>
    <xs:complexType name="B"><xs:sequence>
      <xs:element name="X" type="xs:string"/>
      <xs:element name="Z" type="xs:string"/>
    </xs:sequence></xs:complexType>
    <xs:complexType name="C"><xs:sequence>
      <xs:element name="Y" type="xs:string"/>
      <xs:element name="Z" type="xs:string"/>
    </xs:sequence></xs:complexType>
  )")}});
  ValidationReport report = validate_graph(g, classify_roles(g));
  REQUIRE(report.errors.size() == 1);
  CHECK(report.errors[0].code == "isa-cycle");
  CHECK(report.errors[0].concepts == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("disjoint concepts on an is-a path are inconsistent") {
  ConceptGraph g = test::graph_from({{"a.xsd", schema(R"(
    <xs:complexType name="Y">
      <xs:sequence>
        <xs:element name="P" type="xs:string"/>
        <xs:element name="Q" type="xs:string"/>
      </xs:sequence>
    </xs:complexType>
    <xs:complexType name="T">
      <xs:choice>
        <xs:element name="X" type="Y"/>
        <xs:element name="Y" type="Y"/>
      </xs:choice>
    </xs:complexType>
  )")}});
  CHECK(test::has_edge(g, EdgeKind::DisjointWith, "x", "y"));
  CHECK(test::has_edge(g, EdgeKind::IsA, "x", "y"));

  ValidationReport report = validate_graph(g, classify_roles(g));
  REQUIRE(report.errors.size() == 1);
  CHECK(report.errors[0].code == "disjoint-subsumption");
  CHECK(report.errors[0].concepts == std::vector<std::string>{"x", "y"});
}

TEST_CASE("dangling edges are detected") {
  ConceptGraph g;
  Concept c;
  c.label = "lonely";
  c.instances.push_back({"hand", "x", MappingRule::ComplexType});
  g.concepts.push_back(c);
  g.edges.push_back({EdgeKind::IsA, 0, 7, std::nullopt});
  ValidationReport report = validate_graph(g, {});
  REQUIRE_FALSE(report.ok());
  CHECK(report.errors[0].code == "dangling-edge");
}

TEST_CASE("tampered role assignments are flagged") {
  ConceptGraph g = test::graph_from(test::wine_sources());
  RoleAssignment roles = classify_roles(g);
  roles.classes.insert(g.require("coca"));  // coca owns no properties
  ValidationReport report = validate_graph(g, roles);
  bool flagged = false;
  for (const Finding& f : report.errors)
    if (f.code == "role-violation") flagged = true;
  CHECK(flagged);
}

TEST_CASE("validation never mutates the graph") {
  ConceptGraph g = test::graph_from(test::wine_sources());
  ConceptGraph copy = g;
  validate_graph(g, classify_roles(g));
  CHECK(g == copy);
}
