#pragma once

#include <cstddef>
#include <vector>

#include "ivg/graph.hpp"

namespace ivg {

/// Irreflexive, antisymmetric, transitive relation on 0..n-1, stored as a
/// dense relation matrix. Every constructed value is transitively closed.
class StrictPartialOrder {
 public:
  StrictPartialOrder() = default;
  /// The antichain on n vertices.
  explicit StrictPartialOrder(std::size_t n);

  /// Accepts `pairs` only if it already is a strict partial order
  /// (closed, irreflexive, antisymmetric). Throws InputError otherwise.
  static StrictPartialOrder from_pairs(std::size_t n, const std::vector<Edge>& pairs);
  /// Transitive closure of `pairs`. Throws InputError if the closure has a
  /// cycle.
  static StrictPartialOrder closure_of(std::size_t n, const std::vector<Edge>& pairs);

  std::size_t size() const { return n_; }
  bool precedes(Vertex u, Vertex v) const { return rel_[u * n_ + v] != 0; }
  bool comparable(Vertex u, Vertex v) const {
    return precedes(u, v) || precedes(v, u);
  }

  /// All (u, v) with u before v, lexicographically sorted.
  std::vector<Edge> pairs() const;
  std::size_t relation_size() const;
  StrictPartialOrder dual() const;

  friend bool operator==(const StrictPartialOrder&, const StrictPartialOrder&) = default;
  friend auto operator<=>(const StrictPartialOrder&, const StrictPartialOrder&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<unsigned char> rel_;
};

/// Distinct u, v adjacent iff incomparable.
Graph incomparability_graph(const StrictPartialOrder& o);

/// True iff incomparability_graph(o) == g. Throws InputError on size
/// mismatch.
bool is_associated(const Graph& g, const StrictPartialOrder& o);

/// Brute-force check that a raw relation is irreflexive, antisymmetric and
/// transitive.
bool is_strict_partial_order(std::size_t n, const std::vector<Edge>& pairs);

}  // namespace ivg
