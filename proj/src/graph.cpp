#include "ivg/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>

#include "ivg/errors.hpp"

namespace ivg {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

void Graph::check_vertex(Vertex v) const {
  if (v >= n_) {
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(n_));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) {
    throw InputError("self-loop on vertex " + std::to_string(u) +
                     " (adjacency is implicitly reflexive)");
  }
  adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u != v) adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
}

VertexSet Graph::neighbors(Vertex v) const {
  VertexSet out;
  for (Vertex u = 0; u < n_; ++u) {
    if (has_edge(v, u)) out.push_back(u);
  }
  return out;
}

std::size_t Graph::degree(Vertex v) const {
  std::size_t d = 0;
  for (Vertex u = 0; u < n_; ++u) d += has_edge(v, u) ? 1 : 0;
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1)) / 2;
}

void Graph::set_label(Vertex v, std::string label) {
  check_vertex(v);
  labels_[v] = std::move(label);
}

std::string Graph::name(Vertex v) const {
  auto it = labels_.find(v);
  return it == labels_.end() ? std::to_string(v) : it->second;
}

Graph Graph::induced(const std::vector<Vertex>& keep) const {
  Graph h(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    check_vertex(keep[i]);
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      if (has_edge(keep[i], keep[j])) h.add_edge(i, j);
    }
    auto it = labels_.find(keep[i]);
    if (it != labels_.end()) h.set_label(i, it->second);
  }
  return h;
}

Graph graph_from_edges(std::size_t n, const std::vector<Edge>& edge_list) {
  Graph g(n);
  for (const auto& [u, v] : edge_list) g.add_edge(u, v);
  return g;
}

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.size();
  constexpr std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(n, unset);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] != unset) continue;
    const std::size_t id = out.size();
    out.emplace_back();
    std::deque<Vertex> queue{s};
    comp[s] = id;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      out[id].push_back(v);
      for (Vertex u = 0; u < n; ++u) {
        if (comp[u] == unset && g.has_edge(v, u)) {
          comp[u] = id;
          queue.push_back(u);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_complete(const Graph& g) {
  const std::size_t n = g.size();
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

Graph complement(const Graph& g) {
  Graph h(g.size());
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      if (!g.has_edge(u, v)) h.add_edge(u, v);
    }
  }
  for (const auto& [v, label] : g.labels()) h.set_label(v, label);
  return h;
}

VertexSet universal_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) + 1 == g.size()) out.push_back(v);
  }
  return out;
}

Graph remove_vertices(const Graph& g, const std::vector<Vertex>& drop) {
  std::vector<bool> dropped(g.size(), false);
  for (Vertex v : drop) {
    if (v >= g.size()) throw InputError("vertex out of range");
    dropped[v] = true;
  }
  VertexSet keep;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (!dropped[v]) keep.push_back(v);
  }
  return g.induced(keep);
}

bool is_path(const Graph& g, const std::vector<Vertex>& p) {
  if (p.empty()) return false;
  for (Vertex v : p) {
    if (v >= g.size()) return false;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (!g.has_edge(p[i], p[i + 1])) return false;
  }
  return true;
}

bool is_minimal_path(const Graph& g, const std::vector<Vertex>& p) {
  if (!is_path(g, p)) throw InputError("not a path in the graph");
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 2; j < p.size(); ++j) {
      if (g.adjacent(p[i], p[j])) return false;
    }
  }
  return true;
}

Path refine_to_minimal(const Graph& g, const std::vector<Vertex>& p) {
  if (!is_path(g, p)) throw InputError("not a path in the graph");
  Path cur(p.begin(), p.end());
  for (;;) {
    bool spliced = false;
    for (std::size_t i = 0; i < cur.size() && !spliced; ++i) {
      for (std::size_t j = cur.size(); j-- > i + 2;) {
        if (g.adjacent(cur[i], cur[j])) {
          // A repeated vertex (cur[i] == cur[j]) collapses the loop between.
          const std::size_t keep_from = cur[i] == cur[j] ? j + 1 : j;
          cur.erase(cur.begin() + static_cast<std::ptrdiff_t>(i + 1),
                    cur.begin() + static_cast<std::ptrdiff_t>(keep_from));
          spliced = true;
          break;
        }
      }
    }
    if (!spliced) return cur;
  }
}

Path shortest_path_lex(const Graph& g, Vertex from, Vertex to,
                       std::vector<bool> allowed) {
  const std::size_t n = g.size();
  if (allowed.empty()) allowed.assign(n, true);
  if (!allowed[from] || !allowed[to]) return {};
  constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(n, inf);
  std::deque<Vertex> queue{to};
  dist[to] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u = 0; u < n; ++u) {
      if (allowed[u] && dist[u] == inf && g.has_edge(v, u)) {
        dist[u] = dist[v] + 1;
        queue.push_back(u);
      }
    }
  }
  if (dist[from] == inf) return {};
  Path path{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex u = 0; u < n; ++u) {
      if (allowed[u] && g.has_edge(cur, u) && dist[u] + 1 == dist[cur]) {
        cur = u;
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

}  // namespace ivg
