#include <gtest/gtest.h>

#include <random>

#include "ivg/errors.hpp"
#include "ivg/fixtures.hpp"
#include "ivg/graph.hpp"
#include "ivg/order.hpp"

namespace {

using namespace ivg;

TEST(GraphFromEdges, BuildsPathAndDiamond) {
  const Graph p3 = graph_from_edges(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(p3, fixtures::path(3));
  EXPECT_EQ(p3.edge_count(), 2u);

  const Graph diamond = graph_from_edges(4, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(diamond, fixtures::diamond());
  EXPECT_FALSE(diamond.has_edge(0, 2));
  EXPECT_EQ(complement(diamond).edges(), (std::vector<Edge>{{0, 2}}));

  EXPECT_EQ(graph_from_edges(3, {}).edge_count(), 0u);
}

TEST(GraphFromEdges, CollapsesDuplicatesAndSymmetrizes) {
  const Graph g = graph_from_edges(3, {{0, 1}, {1, 0}, {0, 1}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_TRUE(g.has_edge(1, 0));
}

TEST(GraphFromEdges, RejectsBadInput) {
  EXPECT_THROW(graph_from_edges(3, {{0, 3}}), InputError);
  EXPECT_THROW(graph_from_edges(3, {{1, 1}}), InputError);
}

TEST(Graph, AdjacencyIsReflexive) {
  const Graph g = fixtures::empty(2);
  EXPECT_TRUE(g.adjacent(0, 0));
  EXPECT_FALSE(g.has_edge(0, 0));
  EXPECT_FALSE(g.adjacent(0, 1));
}

TEST(Components, Examples) {
  EXPECT_EQ(components(fixtures::complete(3)), (std::vector<VertexSet>{{0, 1, 2}}));
  EXPECT_EQ(components(fixtures::two_k2()), (std::vector<VertexSet>{{0, 1}, {2, 3}}));
  EXPECT_EQ(components(fixtures::empty(3)), (std::vector<VertexSet>{{0}, {1}, {2}}));
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(fixtures::complete(3)), fixtures::empty(3));
  EXPECT_EQ(complement(fixtures::path(4)).edges(), (std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}}));
}

TEST(Complement, IsAnInvolutionAndComponentsPartition) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 2) g.add_edge(u, v);
    EXPECT_EQ(complement(complement(g)), g);
    std::vector<int> seen(n, 0);
    for (const auto& c : components(g))
      for (Vertex v : c) ++seen[v];
    EXPECT_EQ(std::count(seen.begin(), seen.end(), 1), static_cast<long>(n));
  }
}

TEST(MinimalPath, Examples) {
  EXPECT_TRUE(is_minimal_path(fixtures::path(4), {0, 1, 2, 3}));
  EXPECT_FALSE(is_minimal_path(fixtures::complete(3), {0, 1, 2}));
  EXPECT_TRUE(is_minimal_path(fixtures::diamond(), {0, 1, 2}));
  EXPECT_THROW(is_minimal_path(fixtures::path(4), {0, 2}), InputError);
}

TEST(RefineToMinimal, Examples) {
  EXPECT_EQ(refine_to_minimal(fixtures::complete(3), {0, 1, 2}), (Path{0, 2}));
  EXPECT_EQ(refine_to_minimal(fixtures::path(4), {0, 1, 2, 3}), (Path{0, 1, 2, 3}));
  const Path q = refine_to_minimal(fixtures::diamond(), {0, 3, 1, 2});
  EXPECT_EQ(q, (Path{0, 1, 2}));
  EXPECT_TRUE(is_minimal_path(fixtures::diamond(), q));
  EXPECT_THROW(refine_to_minimal(fixtures::path(4), {0, 3}), InputError);
}

TEST(RefineToMinimal, RevisitedVertexCollapses) {
  EXPECT_EQ(refine_to_minimal(fixtures::path(3), {0, 1, 2, 1, 0}), (Path{0}));
  EXPECT_EQ(refine_to_minimal(fixtures::path(3), {0, 1, 0, 1, 2}), (Path{0, 1, 2}));
}

TEST(IncomparabilityGraph, Examples) {
  const auto chain = StrictPartialOrder::closure_of(3, std::vector<Edge>{{0, 1}, {1, 2}});
  EXPECT_EQ(incomparability_graph(chain), fixtures::empty(3));
  EXPECT_EQ(incomparability_graph(StrictPartialOrder(3)), fixtures::complete(3));
  const auto two_two = StrictPartialOrder::from_pairs(4, std::vector<Edge>{{0, 1}, {2, 3}});
  EXPECT_EQ(incomparability_graph(two_two).edges(),
            (std::vector<Edge>{{0, 2}, {0, 3}, {1, 2}, {1, 3}}));
}

TEST(IncomparabilityGraph, DualHasSameGraph) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    std::vector<Edge> rel;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng() % 3 == 0) rel.emplace_back(u, v);
    const auto o = StrictPartialOrder::closure_of(n, rel);
    EXPECT_EQ(incomparability_graph(o), incomparability_graph(o.dual()));
    EXPECT_EQ(StrictPartialOrder::closure_of(n, o.pairs()), o);
  }
}

TEST(IsAssociated, Examples) {
  EXPECT_TRUE(is_associated(fixtures::complete(3), StrictPartialOrder(3)));
  const auto p4_order = StrictPartialOrder::from_pairs(4, std::vector<Edge>{{0, 2}, {0, 3}, {1, 3}});
  EXPECT_TRUE(is_associated(fixtures::path(4), p4_order));
  // Closing {2<0, 0<3} forces 2<3, an edge of P4.
  const auto closed = StrictPartialOrder::closure_of(4, std::vector<Edge>{{2, 0}, {0, 3}});
  EXPECT_FALSE(is_associated(fixtures::path(4), closed));
  EXPECT_THROW(is_associated(fixtures::path(4), StrictPartialOrder(3)), InputError);
}

TEST(StrictPartialOrder, RejectsInvalidRelations) {
  EXPECT_THROW(StrictPartialOrder::from_pairs(3, std::vector<Edge>{{0, 1}, {1, 2}}), InputError);
  EXPECT_THROW(StrictPartialOrder::from_pairs(2, std::vector<Edge>{{0, 0}}), InputError);
  EXPECT_THROW(StrictPartialOrder::closure_of(2, std::vector<Edge>{{0, 1}, {1, 0}}), InputError);
  EXPECT_FALSE(is_strict_partial_order(3, std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(UniversalVertices, Examples) {
  EXPECT_EQ(universal_vertices(fixtures::complete(3)), (VertexSet{0, 1, 2}));
  EXPECT_EQ(universal_vertices(fixtures::star(3)), (VertexSet{0}));
  EXPECT_TRUE(universal_vertices(fixtures::path(4)).empty());
}

TEST(ShortestPathLex, PrefersSmallerIndices) {
  const Graph c4 = fixtures::cycle(4);
  EXPECT_EQ(shortest_path_lex(c4, 0, 2, {}), (Path{0, 1, 2}));
}

}  // namespace
