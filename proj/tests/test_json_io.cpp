#include <gtest/gtest.h>

#include "ivg/errors.hpp"
#include "ivg/fixtures.hpp"
#include "ivg/json_io.hpp"
#include "ivg/orderability.hpp"
#include "ivg/recognition.hpp"

namespace {

using namespace ivg;
using io::json;

TEST(GraphJson, RoundTripKeepsLabels) {
  const Graph g = fixtures::diamond();
  const json j = io::graph_to_json(g);
  EXPECT_EQ(j.at("n"), 4);
  EXPECT_EQ(j.at("labels").at("2"), "c");
  const Graph back = io::graph_from_json(j);
  EXPECT_EQ(back, g);
  EXPECT_EQ(back.labels(), g.labels());
}

TEST(GraphJson, RejectsMalformedInput) {
  EXPECT_THROW(io::parse_graph("{", io::GraphFormat::json), InputError);
  EXPECT_THROW(io::parse_graph(R"({"edges": []})", io::GraphFormat::json), InputError);
  EXPECT_THROW(io::parse_graph(R"({"n": 2, "edges": [[0, 2]]})", io::GraphFormat::json), InputError);
  EXPECT_THROW(io::parse_graph(R"({"n": 2, "edges": [[0]]})", io::GraphFormat::json), InputError);
  EXPECT_THROW(io::parse_graph(R"({"n": -1})", io::GraphFormat::json), InputError);
  EXPECT_THROW(io::parse_graph(R"({"n": 2, "labels": {"0": "a", "1": "a"}})", io::GraphFormat::json),
               InputError);
  EXPECT_THROW(io::parse_graph(R"({"n": 2, "labels": {"x": "a"}})", io::GraphFormat::json), InputError);
}

TEST(EdgeList, ParsesCommentsAndBlankLines) {
  const Graph g = io::parse_edge_list("# P3\n3\n\n0 1  # first\n1 2\n");
  EXPECT_EQ(g, fixtures::path(3));
  EXPECT_THROW(io::parse_edge_list(""), InputError);
  EXPECT_THROW(io::parse_edge_list("3\n0 x\n"), InputError);
  EXPECT_THROW(io::parse_edge_list("3\n0 1 2\n"), InputError);
  EXPECT_THROW(io::parse_edge_list("3\n1 1\n"), InputError);
  EXPECT_THROW(io::parse_edge_list("3\n-1 1\n"), InputError);
}

TEST(VertexJson, LabelOrIndex) {
  const Graph fig = fixtures::diamond();
  EXPECT_EQ(io::vertex_to_json(fig, 3), "d");
  EXPECT_EQ(io::vertex_from_json(fig, "d"), 3u);
  EXPECT_EQ(io::vertex_from_json(fig, 1), 1u);
  EXPECT_THROW(io::vertex_from_json(fig, "q"), InputError);
  EXPECT_EQ(io::vertex_to_json(fixtures::path(3), 2), 2);
}

TEST(RepresentationJson, RationalsRoundTrip) {
  const ClosedRepresentation r({{Rational(1, 2), Rational(3)}, {Rational(-2), Rational(7, 3)}});
  const json j = io::representation_to_json(r);
  EXPECT_EQ(j.dump(), R"({"n":2,"intervals":[[[1,2],3],[-2,[7,3]]]})");
  EXPECT_EQ(io::representation_from_json(j), r);
  EXPECT_THROW(io::rational_from_json(json::array({1, 0})), InputError);
  EXPECT_THROW(io::representation_from_json(json::parse(R"({"intervals": [[2, 1]]})")), InputError);
}

TEST(OrderJson, RoundTrip) {
  const Graph fig = fixtures::diamond();
  const auto o = StrictPartialOrder::from_pairs(4, std::vector<Edge>{{0, 2}});
  EXPECT_EQ(io::order_to_json(fig, o).dump(), R"([["a","c"]])");
  EXPECT_EQ(io::order_from_json(fig, io::order_to_json(fig, o)), o);
}

TEST(ObstructionJson, RoundTripBothKinds) {
  const Graph net = fixtures::net();
  const Obstruction at = std::get<Obstruction>(recognize(net));
  const json j = io::obstruction_to_json(net, at);
  EXPECT_EQ(j.at("kind"), "asteroidal_triple");
  const Obstruction back = io::obstruction_from_json(net, j);
  EXPECT_EQ(back.at.triple, at.at.triple);
  EXPECT_EQ(back.at.paths, at.at.paths);
  EXPECT_TRUE(validate_obstruction(net, back));

  const Graph c4 = fixtures::cycle(4);
  const Obstruction cyc = std::get<Obstruction>(recognize(c4));
  EXPECT_EQ(io::obstruction_to_json(c4, cyc).dump(), R"({"kind":"chordless_cycle","cycle":[0,1,2,3]})");
  EXPECT_EQ(io::obstruction_from_json(c4, io::obstruction_to_json(c4, cyc)).cycle, cyc.cycle);
}

TEST(VerdictJson, DiamondMatchesDocumentedShape) {
  const Graph fig = fixtures::diamond();
  EXPECT_EQ(io::verdict_to_json(fig, decide_unique(fig)).dump(),
            R"({"unique":true,"order":[["a","c"]],"wq_components":2})");
}

TEST(VerdictJson, StarCarriesWitnessAndBuriedSet) {
  const Graph star = fixtures::star(3);
  const json j = io::verdict_to_json(star, decide_unique(star));
  EXPECT_EQ(j.at("unique"), false);
  EXPECT_EQ(j.at("buried").at("B"), json::array({1, 2}));
  EXPECT_EQ(j.at("buried").at("R"), json::array({3}));
  EXPECT_EQ(j.at("wq_components"), 6);
  const auto o1 = io::order_from_json(star, j.at("witness").at("order1"));
  const auto o2 = io::order_from_json(star, j.at("witness").at("order2"));
  EXPECT_TRUE(is_associated(star, o1));
  EXPECT_TRUE(is_associated(star, o2));
  EXPECT_NE(o2, o1);
  EXPECT_NE(o2, o1.dual());
}

}  // namespace
