#pragma once

#include <array>
#include <optional>
#include <variant>
#include <vector>

#include "ivg/graph.hpp"
#include "ivg/representation.hpp"

namespace ivg {

struct AsteroidalTriple {
  std::array<Vertex, 3> triple;
  /// paths[0] joins triple[0]-triple[1] avoiding the closed neighbourhood of
  /// triple[2]; paths[1] joins triple[0]-triple[2] avoiding triple[1]'s;
  /// paths[2] joins triple[1]-triple[2] avoiding triple[0]'s.
  std::array<Path, 3> paths;
};

/// Certificate that a graph is not an interval graph.
struct Obstruction {
  enum class Kind { chordless_cycle, asteroidal_triple };
  Kind kind = Kind::chordless_cycle;
  Path cycle;  // chordless_cycle: v_0..v_{k-1}, closing edge implied
  AsteroidalTriple at;
};

/// Shortest chordless cycle of length >= 4, written from its least vertex
/// towards the smaller of that vertex's two cycle neighbours; among equally
/// short ones the lexicographically least. nullopt if the graph is chordal.
std::optional<Path> check_triangulated(const Graph& g);

/// Lexicographically least asteroidal triple, with lexicographically least
/// shortest witness paths.
std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g);

/// Maximal cliques, each sorted, in lexicographic order.
std::vector<VertexSet> maximal_cliques(const Graph& g);

/// Order of maximal cliques in which every vertex's cliques are consecutive.
/// nullopt when none exists.
std::optional<std::vector<VertexSet>> consecutive_clique_order(const Graph& g);

using Recognition = std::variant<ClosedRepresentation, Obstruction>;

/// Either an integer-endpoint representation read off a consecutive clique
/// order, or an obstruction. Both outcomes are re-validated; a failed
/// re-check throws InternalInconsistency.
Recognition recognize(const Graph& g);

bool is_interval_graph(const Graph& g);

/// Checks an obstruction directly against the definitions.
bool validate_obstruction(const Graph& g, const Obstruction& obs);

}  // namespace ivg
