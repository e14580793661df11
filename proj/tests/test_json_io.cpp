#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "wrp/json_io.hpp"

using namespace wrp;

TEST_CASE("group descriptors") {
  CHECK(parse_group(Json::parse(R"({"kind":"sym","n":4})")).name() == "sym4");
  CHECK(parse_group(Json::parse(R"({"kind":"cyclic","n":6})")).modulus == 6);
  CHECK(parse_group(Json::parse(R"("d4")")).kind == GroupKind::Perm);
  CHECK(group_from_arg("thompson_f").kind == GroupKind::ThompsonF);

  GroupSpec perm = parse_group(Json::parse(R"({"kind":"perm","degree":3,
    "generators":{"x":[1,0,2]}})"));
  CHECK(perm.generators().size() == 1);

  SUBCASE("errors carry the path") {
    try {
      parse_group(Json::parse(R"({"kind":"perm","degree":3,"generators":{"x":[1,1,2]}})"));
      FAIL("expected SchemaError");
    } catch (const Error& e) {
      CHECK(std::string(e.what()).find("generators.x") != std::string::npos);
      CHECK(e.kind() == errk::SchemaError);
    }
  }
}

TEST_CASE("element round-trips") {
  std::vector<GroupSpec> specs{GroupSpec::sym(4), GroupSpec::cyclic(5), GroupSpec::integers(),
                               GroupSpec::dihedral_inf(), GroupSpec::thompson_f(),
                               GroupSpec::houghton(3)};
  for (const auto& spec : specs) {
    GroupElement g = spec.identity();
    for (const auto& [syl, s] : spec.symmetric_generators()) g = compose(g, s);
    Json j = element_to_json(g);
    CHECK(parse_element(j, spec, "e") == g);
  }
}

TEST_CASE("wreath element round-trip") {
  WreathProduct wr(GroupSpec::cyclic(2), GroupAction(GroupSpec::integers(), DomainKind::IntLine));
  WreathElement e = wr.multiply(wr.fiber_at(Point(2LL), GroupElement(CyclicElem{1, 2})),
                                wr.from_base(GroupElement(IntElem{-3})));
  Json j = wreath_element_to_json(e);
  CHECK(parse_wreath_element(j, wr) == e);
}

TEST_CASE("presentation file format") {
  Json j = Json::parse(R"({"generators":["a","t"],
                           "relators":[["a","a"],["t","t"],[{"sym":"a","inv":true},"t","a",{"sym":"t","inv":true}]]})");
  GroupPresentation p = parse_presentation(j);
  CHECK(p.generators.size() == 2);
  CHECK(p.relators.size() == 3);
  CHECK(p.relators[2].size() == 4);

  Json back = presentation_to_json(p);
  GroupPresentation p2 = parse_presentation(back);
  CHECK(p2.relators == p.relators);

  CHECK_THROWS_WITH_AS(parse_presentation(Json::parse(R"({"generators":["a"],"relators":[["b"]]})")),
                       doctest::Contains("not in the generators"), Error);
}

TEST_CASE("graph and sequence formats") {
  VertexGraph g =
      parse_graph(Json::parse(R"({"vertices":3,"edges":[[0,1]],"labels":["C2","C3","Z"]})"));
  CHECK(g.n == 3);
  CHECK(g.labels[2].order == std::nullopt);
  CHECK(parse_graph(graph_to_json(g)) == g);

  auto [graphs, classes] = parse_graph_sequence(Json::parse(
      R"({"labels":["C2","C2","C2"],"classes":[[0,1,2]],
          "graphs":[{"edges":[]},{"edges":[[0,1],[0,2],[1,2]]}]})"));
  CHECK(graphs.size() == 2);
  CHECK(classes.size() == 1);
}

TEST_CASE("fibre spec") {
  Json j = Json::parse(R"({"g1":"c4","g2":"sym3","q":"c2","p1":{"t":1},"p2":{"a":1,"b":0}})");
  FibreProductSpec spec = parse_fibre_spec(j);
  CHECK(fibre_product(spec).size() == 12);
  CHECK(biindex_vs_conjclasses(spec).ok());
}
