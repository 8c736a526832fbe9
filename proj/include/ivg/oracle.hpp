#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ivg/graph.hpp"
#include "ivg/order.hpp"

namespace ivg {

struct OracleOptions {
  std::size_t max_n = 12;
  /// Stop after this many orders; the result is then marked incomplete.
  std::optional<std::size_t> limit;
};

struct OrientationSet {
  /// Sorted by relation encoding, duplicate-free.
  std::vector<StrictPartialOrder> orders;
  /// Number of classes under duality (a self-dual order is its own class).
  std::size_t dual_classes = 0;
  /// False when enumeration stopped at OracleOptions::limit.
  bool exhaustive = true;
};

/// Every strict partial order whose incomparability graph is `g`, found by
/// orienting the complement edges one at a time and closing transitively.
/// Refuses (InputError) when g has more than options.max_n vertices.
OrientationSet enumerate_associated_orders(const Graph& g, OracleOptions options = {});

/// True iff exactly one duality class of associated orders exists. Throws
/// InternalInconsistency if there are no associated orders at all and
/// `expect_orderable` is set.
bool oracle_unique(const Graph& g, std::size_t max_n = 12, bool expect_orderable = true);

}  // namespace ivg
