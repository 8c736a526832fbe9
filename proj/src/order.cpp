#include "ivg/order.hpp"

#include "ivg/errors.hpp"

namespace ivg {

StrictPartialOrder::StrictPartialOrder(std::size_t n) : n_(n), rel_(n * n, 0) {}

bool is_strict_partial_order(std::size_t n, const std::vector<Edge>& pairs) {
  std::vector<unsigned char> rel(n * n, 0);
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) return false;
    rel[u * n + v] = 1;
  }
  for (Vertex u = 0; u < n; ++u) {
    if (rel[u * n + u]) return false;
    for (Vertex v = 0; v < n; ++v) {
      if (!rel[u * n + v]) continue;
      if (rel[v * n + u]) return false;
      for (Vertex w = 0; w < n; ++w) {
        if (rel[v * n + w] && !rel[u * n + w]) return false;
      }
    }
  }
  return true;
}

StrictPartialOrder StrictPartialOrder::from_pairs(std::size_t n,
                                                  const std::vector<Edge>& pairs) {
  if (!is_strict_partial_order(n, pairs)) {
    throw InputError("relation is not a transitively closed strict partial order");
  }
  StrictPartialOrder o(n);
  for (const auto& [u, v] : pairs) o.rel_[u * n + v] = 1;
  return o;
}

StrictPartialOrder StrictPartialOrder::closure_of(std::size_t n,
                                                  const std::vector<Edge>& pairs) {
  StrictPartialOrder o(n);
  for (const auto& [u, v] : pairs) {
    if (u >= n || v >= n) throw InputError("order vertex out of range");
    o.rel_[u * n + v] = 1;
  }
  // Warshall.
  for (Vertex k = 0; k < n; ++k) {
    for (Vertex i = 0; i < n; ++i) {
      if (!o.rel_[i * n + k]) continue;
      for (Vertex j = 0; j < n; ++j) {
        if (o.rel_[k * n + j]) o.rel_[i * n + j] = 1;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (o.rel_[v * n + v]) throw InputError("relation has a cycle");
  }
  return o;
}

std::vector<Edge> StrictPartialOrder::pairs() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      if (precedes(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t StrictPartialOrder::relation_size() const {
  std::size_t c = 0;
  for (unsigned char b : rel_) c += b;
  return c;
}

StrictPartialOrder StrictPartialOrder::dual() const {
  StrictPartialOrder d(n_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) d.rel_[v * n_ + u] = rel_[u * n_ + v];
  }
  return d;
}

Graph incomparability_graph(const StrictPartialOrder& o) {
  Graph g(o.size());
  for (Vertex u = 0; u < o.size(); ++u) {
    for (Vertex v = u + 1; v < o.size(); ++v) {
      if (!o.comparable(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

bool is_associated(const Graph& g, const StrictPartialOrder& o) {
  if (g.size() != o.size()) {
    throw InputError("graph and order have different vertex counts");
  }
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (g.has_edge(u, v) == o.comparable(u, v)) return false;
    }
  }
  return true;
}

}  // namespace ivg
