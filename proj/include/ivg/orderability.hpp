#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

#include "ivg/errors.hpp"
#include "ivg/graph.hpp"
#include "ivg/order.hpp"
#include "ivg/recognition.hpp"

namespace ivg {

/// Ordered pair (a, b) of distinct non-adjacent vertices.
using VertexPair = std::pair<Vertex, Vertex>;

/// The pair graph (W, Q): W holds every ordered non-adjacent pair, and
/// ab Q cd iff a ~ c and b ~ d (reflexive adjacency). Components are
/// numbered by their least pair.
class WQGraph {
 public:
  explicit WQGraph(const Graph& base);

  const Graph& base() const { return base_; }
  const std::vector<VertexPair>& pairs() const { return pairs_; }
  std::size_t component_count() const { return component_count_; }
  std::size_t component_of(std::size_t pair_index) const {
    return component_of_[pair_index];
  }
  std::size_t component_of(const VertexPair& p) const {
    return component_of_[index_of(p)];
  }
  bool contains(const VertexPair& p) const;
  /// Throws InputError when `p` is not in W.
  std::size_t index_of(const VertexPair& p) const;

  bool q_adjacent(const VertexPair& ab, const VertexPair& cd) const {
    return base_.adjacent(ab.first, cd.first) &&
           base_.adjacent(ab.second, cd.second);
  }

  /// Pairs of each component, listed by component id.
  std::vector<std::vector<VertexPair>> component_members() const;

 private:
  Graph base_;
  std::vector<VertexPair> pairs_;
  std::vector<std::size_t> index_;  // n*n, npos when adjacent
  std::vector<std::size_t> component_of_;
  std::size_t component_count_ = 0;
};

WQGraph build_wq(const Graph& g);

/// Lexicographically least shortest Q-path, or nullopt across components.
/// Throws InputError if either pair is not in W.
std::optional<std::vector<VertexPair>> q_path(const WQGraph& wq,
                                              const VertexPair& from,
                                              const VertexPair& to);

/// Fixpoint of B_{n+1} = { w | some z in B_n is adjacent to w and some
/// z' in B_n is not }, started from {v, u}.
struct LeveledSet {
  Vertex v = 0;
  Vertex u = 0;
  VertexSet members;
  /// level[w] = least stage containing w; npos for non-members.
  std::vector<std::size_t> level;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  bool contains(Vertex w) const { return level[w] != npos; }
  std::size_t stage_count() const;
  /// Members with level <= stage.
  VertexSet stage(std::size_t stage) const;
};

/// Throws InputError if v == u or v ~ u.
LeveledSet construct_b(const Graph& g, Vertex v, Vertex u);

struct BuriedCertificate {
  VertexSet B;
  VertexSet K;
  VertexSet R;
  VertexPair witness_nonedge{0, 0};
  Vertex witness_outside = 0;
};

struct BuriedCheck {
  bool buried = false;
  VertexSet K;
  VertexSet R;
  std::optional<BuriedCertificate> certificate;
};

/// Direct definition check. K(B) is every vertex adjacent to all of B,
/// R(B) = V minus (B union K(B)). B is buried when it holds a non-adjacent
/// pair, misses K(B), leaves R(B) nonempty and has no edge into R(B).
BuriedCheck is_buried(const Graph& g, const VertexSet& B);

/// Scans non-adjacent pairs (v, u), v < u, lexicographically and returns the
/// first B(v, u) with nonempty R. Requires a connected interval graph.
std::optional<BuriedCertificate> find_buried(const Graph& g);

struct OrderWitness {
  StrictPartialOrder first;
  StrictPartialOrder second;
  /// (a, b, c): a < b in `first`, b < a in `second`, and c relates to a and
  /// to b the same way in both, and is comparable to them. So `second` is
  /// neither `first` nor its dual.
  std::array<Vertex, 3> triple{};
};

/// Convexifies `base` around the least member b0 of the buried set, then
/// reverses it inside B. Both results are re-checked.
OrderWitness two_orders_from_buried(const Graph& g, const BuriedCertificate& cert,
                                    const StrictPartialOrder& base);

/// Orients every pair of the component holding the least pair of W.
/// Requires exactly two components.
StrictPartialOrder unique_order_from_wq(const Graph& g, const WQGraph& wq);

struct UniquenessVerdict {
  bool unique = false;
  std::optional<StrictPartialOrder> order;
  std::optional<OrderWitness> witness;
  std::optional<BuriedCertificate> buried;
  std::size_t wq_components = 0;
};

/// Thrown by decide_unique for graphs that are not interval graphs.
class NotIntervalGraph : public InputError {
 public:
  explicit NotIntervalGraph(Obstruction obs);
  const Obstruction& obstruction() const { return obstruction_; }

 private:
  Obstruction obstruction_;
};

/// Disconnected: unique iff exactly two components, both complete.
/// Complete: unique (the antichain). Otherwise the buried-subgraph search
/// and the (W, Q) component count must agree, or InternalInconsistency.
UniquenessVerdict decide_unique(const Graph& g);

/// Re-checks whichever certificates a verdict carries.
bool validate_verdict(const Graph& g, const UniquenessVerdict& verdict);

/// Checks the witness triple and that both orders are associated to g.
bool validate_witness(const Graph& g, const OrderWitness& w);

}  // namespace ivg
