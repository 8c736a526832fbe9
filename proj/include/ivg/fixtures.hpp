#pragma once

#include "ivg/graph.hpp"
#include "ivg/representation.hpp"

namespace ivg::fixtures {

/// a, b, c, d = 0..3; the only non-edge is a-c.
Graph diamond();
/// a=[4,8], b=[6,10], c=[9,13], d=[5,12].
ClosedRepresentation diamond_representation();
/// Triangle a, b, c (0..2) with pendants x-a, y-b, z-c (3..5).
Graph net();

Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph complete(std::size_t n);
Graph empty(std::size_t n);
/// Centre 0 joined to leaves 1..leaves.
Graph star(std::size_t leaves);
/// Edges 0-1 and 2-3.
Graph two_k2();

}  // namespace ivg::fixtures
