#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ivg {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // sorted, duplicate-free
using Path = std::vector<Vertex>;

/// Finite simple graph on vertices 0..n-1. Adjacency is read reflexively:
/// adjacent(v, v) is always true, but self-loops are never stored.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  std::size_t size() const { return n_; }

  /// Reflexive adjacency.
  bool adjacent(Vertex u, Vertex v) const {
    return u == v || adj_[u * n_ + v] != 0;
  }
  /// Adjacency between distinct vertices only.
  bool has_edge(Vertex u, Vertex v) const {
    return u != v && adj_[u * n_ + v] != 0;
  }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  VertexSet neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const;

  const std::map<Vertex, std::string>& labels() const { return labels_; }
  void set_label(Vertex v, std::string label);
  bool has_labels() const { return !labels_.empty(); }
  /// Label if present, decimal index otherwise.
  std::string name(Vertex v) const;

  /// Graph induced on `keep` (in the given order); labels follow their
  /// vertices.
  Graph induced(const std::vector<Vertex>& keep) const;

  /// Structural equality; labels are cosmetic and ignored.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<unsigned char> adj_;
  std::map<Vertex, std::string> labels_;
};

/// Builds a graph from an edge list. Duplicates and reversed pairs collapse;
/// out-of-range endpoints and explicit self-loops are rejected.
Graph graph_from_edges(std::size_t n, const std::vector<Edge>& edge_list);

/// Connected components, each sorted, listed by least element.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_complete(const Graph& g);

Graph complement(const Graph& g);

/// Vertices adjacent to every other vertex.
VertexSet universal_vertices(const Graph& g);

/// Induced subgraph on V minus `drop`.
Graph remove_vertices(const Graph& g, const std::vector<Vertex>& drop);

/// A path is a nonempty vertex sequence with consecutive entries adjacent
/// and distinct.
bool is_path(const Graph& g, const std::vector<Vertex>& p);

/// True iff v_i and v_j are non-adjacent whenever i + 1 < j.
/// Throws InputError when `p` is not a path in `g`.
bool is_minimal_path(const Graph& g, const std::vector<Vertex>& p);

/// Repeatedly splices out the segment between the earliest v_i and the
/// latest v_j (j > i + 1) with v_i adjacent to v_j, until the path is
/// minimal. The result keeps both endpoints and is a subsequence of `p`.
Path refine_to_minimal(const Graph& g, const std::vector<Vertex>& p);

/// Lexicographically least shortest path from `from` to `to` whose vertices
/// all satisfy `allowed` (endpoints included; an empty mask allows every
/// vertex). Empty when none exists.
Path shortest_path_lex(const Graph& g, Vertex from, Vertex to,
                       std::vector<bool> allowed);

}  // namespace ivg
