#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ivg/graph.hpp"
#include "ivg/order.hpp"
#include "ivg/rational.hpp"

namespace ivg {

struct Interval {
  Rational left;
  Rational right;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed intervals [left(v), right(v)] over the rationals, one per vertex.
/// Point intervals are accepted; normalize_distinguishing removes them.
class ClosedRepresentation {
 public:
  ClosedRepresentation() = default;
  /// Throws InputError if some interval has left > right.
  explicit ClosedRepresentation(std::vector<Interval> intervals);

  std::size_t size() const { return intervals_.size(); }
  const Interval& operator[](Vertex v) const { return intervals_[v]; }
  const std::vector<Interval>& intervals() const { return intervals_; }

  const Rational& left(Vertex v) const { return intervals_[v].left; }
  const Rational& right(Vertex v) const { return intervals_[v].right; }

  /// F(u) lies wholly before F(v).
  bool before(Vertex u, Vertex v) const {
    return intervals_[u].right < intervals_[v].left;
  }
  bool intersects(Vertex u, Vertex v) const {
    return !before(u, v) && !before(v, u);
  }

  friend bool operator==(const ClosedRepresentation&,
                         const ClosedRepresentation&) = default;

 private:
  std::vector<Interval> intervals_;
};

/// Intersection graph of the intervals (closed intersection: a shared
/// endpoint counts).
Graph induced_graph(const ClosedRepresentation& r);

/// True iff adjacency in `g` matches interval intersection for every pair.
/// Throws InputError on size mismatch.
bool verify_representation(const Graph& g, const ClosedRepresentation& r);

/// u before v iff right(u) < left(v).
StrictPartialOrder representation_to_order(const ClosedRepresentation& r);

/// Four vertices (a, b, c, d) with a < b, c < d and neither a < d nor
/// c < b: two disjoint 2-chains with no relation across them.
using TwoPlusTwo = std::array<Vertex, 4>;

/// Finds a 2+2 by comparing down-sets: an order is an interval order iff its
/// down-sets are totally ordered by inclusion.
std::optional<TwoPlusTwo> find_two_plus_two(const StrictPartialOrder& o);

bool is_interval_order(const StrictPartialOrder& o);

/// Thrown by order_to_representation when the order contains a 2+2.
class NotIntervalOrder : public std::invalid_argument {
 public:
  explicit NotIntervalOrder(TwoPlusTwo w);
  const TwoPlusTwo& witness() const { return witness_; }

 private:
  TwoPlusTwo witness_;
};

/// Down-set construction: left(v) is the rank of v's down-set among the
/// distinct down-sets, right(v) is one less than the number of down-sets
/// not containing v. Integer endpoints.
ClosedRepresentation order_to_representation(const StrictPartialOrder& o);

/// Re-ranks all 2n endpoints to distinct integers 0..2n-1 with
/// left(v) < right(v). At equal values left endpoints sort before right
/// endpoints, so touching intervals keep intersecting; remaining ties break
/// by vertex index.
ClosedRepresentation normalize_distinguishing(const ClosedRepresentation& r);

/// All 2n endpoints pairwise distinct and every interval nondegenerate.
bool is_distinguishing(const ClosedRepresentation& r);

}  // namespace ivg
