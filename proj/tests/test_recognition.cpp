#include <gtest/gtest.h>

#include <random>

#include "ivg/fixtures.hpp"
#include "ivg/gadgets.hpp"
#include "ivg/oracle.hpp"
#include "ivg/recognition.hpp"
#include "ivg/representation.hpp"

namespace {

using namespace ivg;

Graph tree7() {
  return graph_from_edges(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
}

TEST(CheckTriangulated, Examples) {
  EXPECT_EQ(check_triangulated(fixtures::cycle(4)), (Path{0, 1, 2, 3}));
  EXPECT_FALSE(check_triangulated(fixtures::net()).has_value());
  EXPECT_FALSE(check_triangulated(tree7()).has_value());
  EXPECT_FALSE(check_triangulated(fixtures::path(5)).has_value());
}

TEST(CheckTriangulated, ReturnsShortestCycle) {
  // C6 plus a pendant 4-cycle 0-6-7-8.
  Graph g = fixtures::cycle(6);
  Graph h(9);
  for (auto [u, v] : g.edges()) h.add_edge(u, v);
  h.add_edge(1, 6);
  h.add_edge(6, 7);
  h.add_edge(7, 8);
  h.add_edge(8, 1);
  EXPECT_EQ(check_triangulated(h), (Path{1, 6, 7, 8}));
  EXPECT_EQ(check_triangulated(fixtures::cycle(5)), (Path{0, 1, 2, 3, 4}));
}

TEST(FindAsteroidalTriple, Examples) {
  const auto at = find_asteroidal_triple(fixtures::net());
  ASSERT_TRUE(at.has_value());
  EXPECT_EQ(at->triple, (std::array<Vertex, 3>{3, 4, 5}));
  EXPECT_EQ(at->paths[0], (Path{3, 0, 1, 4}));
  EXPECT_EQ(at->paths[1], (Path{3, 0, 2, 5}));
  EXPECT_EQ(at->paths[2], (Path{4, 1, 2, 5}));
  EXPECT_FALSE(find_asteroidal_triple(fixtures::complete(3)).has_value());
  EXPECT_FALSE(find_asteroidal_triple(fixtures::path(4)).has_value());
}

TEST(FindAsteroidalTriple, SubdividedClawHasOne) {
  EXPECT_FALSE(find_asteroidal_triple(tree7()).has_value());
  EXPECT_TRUE(is_interval_graph(tree7()));
  const Graph claw = graph_from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  const auto at = find_asteroidal_triple(claw);
  ASSERT_TRUE(at.has_value());
  EXPECT_EQ(at->triple, (std::array<Vertex, 3>{2, 4, 6}));
  EXPECT_EQ(at->paths[0], (Path{2, 1, 0, 3, 4}));
}

TEST(Recognize, Examples) {
  const Graph diamond = fixtures::diamond();
  const Recognition r1 = recognize(diamond);
  ASSERT_TRUE(std::holds_alternative<ClosedRepresentation>(r1));
  EXPECT_TRUE(verify_representation(diamond, std::get<ClosedRepresentation>(r1)));

  const Recognition r2 = recognize(fixtures::net());
  ASSERT_TRUE(std::holds_alternative<Obstruction>(r2));
  const auto& o2 = std::get<Obstruction>(r2);
  EXPECT_EQ(o2.kind, Obstruction::Kind::asteroidal_triple);
  EXPECT_EQ(o2.at.triple, (std::array<Vertex, 3>{3, 4, 5}));

  const Recognition r3 = recognize(fixtures::cycle(4));
  ASSERT_TRUE(std::holds_alternative<Obstruction>(r3));
  EXPECT_EQ(std::get<Obstruction>(r3).kind, Obstruction::Kind::chordless_cycle);
  EXPECT_EQ(std::get<Obstruction>(r3).cycle, (Path{0, 1, 2, 3}));
}

TEST(Recognize, HandlesDisconnectedAndTinyGraphs) {
  EXPECT_TRUE(is_interval_graph(Graph(0)));
  EXPECT_TRUE(is_interval_graph(fixtures::empty(1)));
  EXPECT_TRUE(is_interval_graph(fixtures::empty(4)));
  EXPECT_TRUE(is_interval_graph(fixtures::two_k2()));
  const Graph g = graph_from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}});
  EXPECT_FALSE(is_interval_graph(g));
}

TEST(MaximalCliques, Examples) {
  EXPECT_EQ(maximal_cliques(fixtures::diamond()), (std::vector<VertexSet>{{0, 1, 3}, {1, 2, 3}}));
  EXPECT_EQ(maximal_cliques(fixtures::path(4)), (std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(maximal_cliques(fixtures::empty(2)), (std::vector<VertexSet>{{0}, {1}}));
}

TEST(ValidateObstruction, RejectsForgedCertificates) {
  Obstruction fake;
  fake.kind = Obstruction::Kind::chordless_cycle;
  fake.cycle = {0, 1, 2, 3};
  EXPECT_TRUE(validate_obstruction(fixtures::cycle(4), fake));
  EXPECT_FALSE(validate_obstruction(fixtures::path(4), fake));
  fake.cycle = {0, 1, 2};
  EXPECT_FALSE(validate_obstruction(fixtures::complete(3), fake));
}

// Oracle: an interval graph is exactly one with a 2+2-free associated order.
bool brute_interval(const Graph& g) {
  const OrientationSet set = enumerate_associated_orders(g);
  return std::any_of(set.orders.begin(), set.orders.end(),
                     [](const StrictPartialOrder& o) { return is_interval_order(o); });
}

TEST(Recognize, ExhaustiveSoundnessUpToSixVertices) {
  for (std::size_t n = 1; n <= 6; ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < slots.size(); ++i)
        if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
      const Recognition r = recognize(g);
      const bool yes = std::holds_alternative<ClosedRepresentation>(r);
      ASSERT_EQ(yes, brute_interval(g)) << "n=" << n << " mask=" << mask;
      if (yes) {
        ASSERT_TRUE(verify_representation(g, std::get<ClosedRepresentation>(r)));
      } else {
        ASSERT_TRUE(validate_obstruction(g, std::get<Obstruction>(r)));
      }
    }
  }
}

TEST(Recognize, IncomparabilityGraphsOfIntervalOrders) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const auto [g, rep] = random_interval_graph(1 + rng() % 12, rng());
    const auto o = representation_to_order(rep);
    ASSERT_TRUE(is_interval_graph(incomparability_graph(o)));
  }
  const auto two_two = StrictPartialOrder::from_pairs(4, std::vector<Edge>{{0, 1}, {2, 3}});
  EXPECT_FALSE(is_interval_graph(incomparability_graph(two_two)));
}

}  // namespace
