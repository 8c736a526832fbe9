#include "ivg/fixtures.hpp"

namespace ivg::fixtures {

Graph diamond() {
  const std::vector<Edge> edges{{0, 1}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  Graph g = graph_from_edges(4, edges);
  g.set_label(0, "a");
  g.set_label(1, "b");
  g.set_label(2, "c");
  g.set_label(3, "d");
  return g;
}

ClosedRepresentation diamond_representation() {
  return ClosedRepresentation({{4, 8}, {6, 10}, {9, 13}, {5, 12}});
}

Graph net() {
  const std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}, {2, 5}};
  Graph g = graph_from_edges(6, edges);
  const char* names[] = {"a", "b", "c", "x", "y", "z"};
  for (Vertex v = 0; v < 6; ++v) g.set_label(v, names[v]);
  return g;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle(std::size_t n) {
  Graph g = path(n);
  if (n >= 3) g.add_edge(n - 1, 0);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Graph empty(std::size_t n) { return Graph(n); }

Graph star(std::size_t leaves) {
  Graph g(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
  return g;
}

Graph two_k2() {
  const std::vector<Edge> edges{{0, 1}, {2, 3}};
  return graph_from_edges(4, edges);
}

}  // namespace ivg::fixtures
