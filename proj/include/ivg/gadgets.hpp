#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ivg/graph.hpp"
#include "ivg/representation.hpp"

namespace ivg {

/// Indices i < s such that f(k) > f(i) for every k with i < k < s.
/// Throws InputError if f is not injective or s exceeds f's length.
VertexSet true_stages(const std::vector<std::uint64_t>& f, std::size_t s);

struct GadgetSpec {
  std::vector<std::uint64_t> f;  // injective prefix
  std::size_t stages = 0;        // number of (x_i, y_i) pairs, <= f.size()
};

/// Graph on a, b, k, r, x_0, y_0, x_1, y_1, ... (indices 0, 1, 2, 3, 4, ...)
/// built stage by stage from an injective sequence, with a staged interval
/// representation and the predicted buried set B(a, b) with its K and R.
struct GadgetOutput {
  Graph graph;
  ClosedRepresentation representation;
  VertexSet predicted_B;
  VertexSet predicted_K;
  VertexSet predicted_R;
};

namespace gadget_vertex {
inline constexpr Vertex a = 0;
inline constexpr Vertex b = 1;
inline constexpr Vertex k = 2;
inline constexpr Vertex r = 3;
inline constexpr Vertex x(std::size_t i) { return 4 + 2 * i; }
inline constexpr Vertex y(std::size_t i) { return 5 + 2 * i; }
}  // namespace gadget_vertex

GadgetOutput aca_gadget(const GadgetSpec& spec);

/// n intervals with endpoints drawn from [0, 2n) by a seeded 64-bit
/// Mersenne twister, normalized to distinguishing form. Deterministic for a
/// given (n, seed) on every platform.
std::pair<Graph, ClosedRepresentation> random_interval_graph(std::size_t n,
                                                             std::uint64_t seed);

}  // namespace ivg
