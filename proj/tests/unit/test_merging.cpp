#include <doctest.h>

#include <map>

#include "janus/merging.hpp"

#include "test_helpers.hpp"

using namespace janus;

namespace {

std::string schema(const std::string& body) {
  return std::string("<xs:schema xmlns:xs=\"http://www.w3.org/2001/XMLSchema\">") +
         body + "</xs:schema>";
}

std::string class_schema(const std::string& name,
                         const std::vector<std::string>& props) {
  std::string body = "<xs:complexType name=\"" + name + "\"><xs:sequence>";
  for (const std::string& p : props)
    body += "<xs:element name=\"" + p + "\" type=\"xs:string\"/>";
  body += "</xs:sequence></xs:complexType>";
  return schema(body);
}

std::multiset<std::string> provenance_multiset(const ConceptGraph& g) {
  std::multiset<std::string> out;
  for (const Concept& c : g.concepts)
    for (const Provenance& p : c.instances)
      out.insert(p.source_id + "|" + p.construct_path + "|" +
                 mapping_rule_name(p.rule));
  return out;
}

}  // namespace

TEST_CASE("inclusion detection is a subset check with label overlap") {
  LexicalResource res;
  ConceptGraph g = test::graph_from({
      {"a.xsd", class_schema("HomeAddress", {"name"})},
      {"b.xsd", class_schema("PostalAddress", {"name", "street"})},
      {"c.xsd", class_schema("Warehouse", {"dock", "bay"})},
  });
  ConceptId narrow = g.require("home_address");
  ConceptId wide = g.require("postal_address");
  ConceptId other = g.require("warehouse");

  CHECK(detect_inclusion(g, narrow, wide, res));
  CHECK_FALSE(detect_inclusion(g, wide, narrow, res));
  CHECK_FALSE(detect_inclusion(g, other, wide, res));

  ConceptGraph eq = test::graph_from({
      {"a.xsd", class_schema("HomeAddress", {"name", "street"})},
      {"b.xsd", class_schema("PostalAddress", {"name", "street"})},
  });
  CHECK(detect_inclusion(eq, eq.require("home_address"),
                         eq.require("postal_address"), res));
  CHECK(detect_inclusion(eq, eq.require("postal_address"),
                         eq.require("home_address"), res));
}

TEST_CASE("merging with no clusters returns the graph unchanged") {
  ConceptGraph g = test::graph_from(test::wine_sources());
  MatchSet empty;
  ConceptGraph merged = merge_concepts(g, empty, {});
  CHECK(merged == g);
}

TEST_CASE("matched concepts collapse with union semantics") {
  auto res = LexicalResource::load("abbr: addr = address\n");
  ConceptGraph g = test::graph_from({
      {"a.xsd", class_schema("Address", {"Street", "City"})},
      {"b.xsd", class_schema("Addr", {"Street", "Zip"})},
  });
  RoleAssignment roles = classify_roles(g);
  MatchConfig config;  // label 1.0 + property 1/3 + context 1/3 < 0.8
  config.accept_threshold = 0.6;
  MatchSet matches = match_concepts(g, roles, config, res);
  REQUIRE(matches.matches.size() == 1);

  std::vector<Warning> warnings;
  ConceptGraph merged = merge_concepts(g, matches, res, &warnings);

  // One concept survives with the union of both property sets. Both labels
  // sit in one source each, so the tie falls to the lexicographically
  // smaller one.
  CHECK_FALSE(merged.find("address").has_value());
  auto addr = merged.find("addr");
  REQUIRE(addr);
  auto props = merged.property_lists()[*addr];
  CHECK(props.size() == 3);
  CHECK(merged.at(*addr).instances.size() == 2);

  bool absorbed_noted = false;
  for (const Relation& r : merged.at(*addr).relations)
    if (r.kind == RelationKind::ProvedSimilarity && r.target == "address")
      absorbed_noted = true;
  CHECK(absorbed_noted);

  CHECK(provenance_multiset(merged) == provenance_multiset(g));
}

TEST_CASE("a duplicated corpus merges back to the original graph") {
  auto sources = test::wine_sources();
  ConceptGraph original = test::graph_from(sources);

  auto doubled = sources;
  for (auto& [id, text] : sources) doubled.emplace_back("copy-" + id, text);
  ConceptGraph dup = test::graph_from(doubled);

  RoleAssignment roles = classify_roles(dup);
  MatchSet matches = match_concepts(dup, roles, {}, {});
  ConceptGraph merged = merge_concepts(dup, matches, {});

  // Same structure as the single corpus, with doubled provenance.
  CHECK(test::fingerprint(merged, false) == test::fingerprint(original, false));
  for (const Concept& c : merged.concepts) {
    const Concept& single = original.at(original.require(c.label));
    CHECK(c.instances.size() == 2 * single.instances.size());
  }
}

TEST_CASE("merges that would close an is-a cycle are dropped") {
  LexicalResource res;
  ConceptGraph g = test::graph_from({
      {"a.xsd", schema(R"(
        <xs:complexType name="Beta">
          <xs:sequence><xs:element name="Y" type="xs:string"/></xs:sequence>
        </xs:complexType>
        <xs:complexType name="Alpha">
          <xs:complexContent>
            <xs:extension base="Beta">
              <xs:sequence><xs:element name="X" type="xs:string"/></xs:sequence>
            </xs:extension>
          </xs:complexContent>
        </xs:complexType>
      )")},
      {"b.xsd", schema(R"(
        <xs:complexType name="AlphaTwo">
          <xs:sequence><xs:element name="X" type="xs:string"/></xs:sequence>
        </xs:complexType>
        <xs:complexType name="BetaTwo">
          <xs:complexContent>
            <xs:extension base="AlphaTwo">
              <xs:sequence><xs:element name="Y" type="xs:string"/></xs:sequence>
            </xs:extension>
          </xs:complexContent>
        </xs:complexType>
      )")},
  });
  // Hand-built matches pair alpha with alpha_two and beta with beta_two.
  MatchSet matches;
  matches.config.accept_threshold = 1.0;  // recomputed rounds accept nothing
  auto pair = [&](const std::string& l, const std::string& r) {
    Match m;
    m.left = g.require(l);
    m.right = g.require(r);
    m.combined_score = 1.0;
    matches.matches.push_back(m);
  };
  pair("alpha", "alpha_two");
  pair("beta", "beta_two");

  std::vector<Warning> warnings;
  ConceptGraph merged = merge_concepts(g, matches, res, &warnings);

  bool conflict = false;
  for (const Warning& w : warnings)
    if (w.code == "merge-conflict") conflict = true;
  CHECK(conflict);
  // The second pair was dropped, so exactly one merged pair remains.
  CHECK(merged.concepts.size() == g.concepts.size() - 1);
}

TEST_CASE("double merge is a fixpoint on the wine corpus") {
  LexicalResource res;
  ConceptGraph g = test::graph_from(test::wine_sources());
  RoleAssignment roles = classify_roles(g);
  MatchSet matches = match_concepts(g, roles, {}, res);
  ConceptGraph once = merge_concepts(g, matches, res);

  RoleAssignment roles2 = classify_roles(once);
  MatchSet matches2 = match_concepts(once, roles2, {}, res);
  ConceptGraph twice = merge_concepts(once, matches2, res);
  CHECK(once == twice);
}
