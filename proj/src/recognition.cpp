#include "ivg/recognition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

#include "ivg/errors.hpp"

namespace ivg {

std::optional<Path> check_triangulated(const Graph& g) {
  const std::size_t n = g.size();
  std::optional<Path> best;
  for (Vertex v = 0; v < n; ++v) {
    std::vector<bool> allowed(n, false);
    for (Vertex u = v + 1; u < n; ++u) allowed[u] = !g.has_edge(v, u);
    const VertexSet nbrs = g.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const Vertex a = nbrs[i];
      if (a < v) continue;
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const Vertex b = nbrs[j];
        if (g.has_edge(a, b)) continue;
        allowed[a] = allowed[b] = true;
        Path p = shortest_path_lex(g, a, b, allowed);
        allowed[a] = allowed[b] = false;
        if (p.empty()) continue;
        Path cycle{v};
        cycle.insert(cycle.end(), p.begin(), p.end());
        if (!best || cycle.size() < best->size() ||
            (cycle.size() == best->size() && cycle < *best)) {
          best = std::move(cycle);
        }
      }
    }
  }
  return best;
}

namespace {

// comp[z][x]: component id of x in G minus the closed neighbourhood of z,
// or npos if x was removed.
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> components_avoiding(const Graph& g, Vertex z) {
  const std::size_t n = g.size();
  std::vector<std::size_t> comp(n, npos);
  std::size_t next = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (g.adjacent(s, z) || comp[s] != npos) continue;
    std::vector<Vertex> stack{s};
    comp[s] = next;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y = 0; y < n; ++y) {
        if (comp[y] == npos && !g.adjacent(y, z) && g.has_edge(x, y)) {
          comp[y] = next;
          stack.push_back(y);
        }
      }
    }
    ++next;
  }
  return comp;
}

Path witness_path(const Graph& g, Vertex from, Vertex to, Vertex avoid) {
  std::vector<bool> allowed(g.size());
  for (Vertex x = 0; x < g.size(); ++x) allowed[x] = !g.adjacent(x, avoid);
  return shortest_path_lex(g, from, to, allowed);
}

}  // namespace

std::optional<AsteroidalTriple> find_asteroidal_triple(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<std::vector<std::size_t>> comp(n);
  for (Vertex z = 0; z < n; ++z) comp[z] = components_avoiding(g, z);
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.has_edge(x, y)) continue;
      if (comp[x][y] == npos) continue;
      for (Vertex z = y + 1; z < n; ++z) {
        if (g.has_edge(x, z) || g.has_edge(y, z)) continue;
        if (comp[z][x] != comp[z][y] || comp[y][x] != comp[y][z] ||
            comp[x][y] != comp[x][z]) {
          continue;
        }
        AsteroidalTriple at;
        at.triple = {x, y, z};
        at.paths = {witness_path(g, x, y, z), witness_path(g, x, z, y),
                    witness_path(g, y, z, x)};
        return at;
      }
    }
  }
  return std::nullopt;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet r;
  // Bron-Kerbosch with Tomita pivoting.
  std::function<void(VertexSet, VertexSet)> expand = [&](VertexSet p, VertexSet x) {
    if (p.empty() && x.empty()) {
      VertexSet c = r;
      std::sort(c.begin(), c.end());
      out.push_back(std::move(c));
      return;
    }
    Vertex pivot = 0;
    std::size_t best = 0;
    bool have_pivot = false;
    for (const VertexSet* s : {&p, &x}) {
      for (Vertex u : *s) {
        std::size_t k = 0;
        for (Vertex w : p) k += g.has_edge(u, w) ? 1 : 0;
        if (!have_pivot || k > best) {
          pivot = u;
          best = k;
          have_pivot = true;
        }
      }
    }
    const VertexSet candidates = p;
    for (Vertex v : candidates) {
      if (g.has_edge(pivot, v)) continue;
      VertexSet p2, x2;
      for (Vertex w : p) {
        if (g.has_edge(v, w)) p2.push_back(w);
      }
      for (Vertex w : x) {
        if (g.has_edge(v, w)) x2.push_back(w);
      }
      r.push_back(v);
      expand(std::move(p2), std::move(x2));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  VertexSet all(g.size());
  for (Vertex v = 0; v < g.size(); ++v) all[v] = v;
  if (!all.empty()) expand(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Backtracking over clique sequences; a vertex closes once the sequence
// leaves it and may never reappear. Failed (used-set, last) states are
// memoised since they determine the rest of the search.
class CliqueSequencer {
 public:
  explicit CliqueSequencer(std::vector<VertexSet> cliques, std::size_t n)
      : cliques_(std::move(cliques)),
        used_(cliques_.size(), false),
        status_(n, 0),
        cliques_of_(n) {
    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      for (Vertex v : cliques_[c]) cliques_of_[v].push_back(c);
    }
  }

  std::optional<std::vector<std::size_t>> run() {
    if (search()) return order_;
    return std::nullopt;
  }

 private:
  enum : unsigned char { unseen = 0, open = 1, closed = 2 };

  bool contains(std::size_t c, Vertex v) const {
    return std::binary_search(cliques_[c].begin(), cliques_[c].end(), v);
  }

  bool feasible(std::size_t c) const {
    for (Vertex v : cliques_[c]) {
      if (status_[v] == closed) return false;
    }
    if (order_.empty()) return true;
    for (Vertex v : cliques_[order_.back()]) {
      if (contains(c, v)) continue;
      for (std::size_t d : cliques_of_[v]) {
        if (!used_[d] && d != c) return false;
      }
    }
    return true;
  }

  bool search() {
    if (order_.size() == cliques_.size()) return true;
    for (std::size_t c = 0; c < cliques_.size(); ++c) {
      if (used_[c] || !feasible(c)) continue;
      used_[c] = true;
      if (failed_.count({used_, c})) {
        used_[c] = false;
        continue;
      }
      std::vector<Vertex> closed_now;
      if (!order_.empty()) {
        for (Vertex v : cliques_[order_.back()]) {
          if (!contains(c, v)) {
            status_[v] = closed;
            closed_now.push_back(v);
          }
        }
      }
      std::vector<Vertex> opened_now;
      for (Vertex v : cliques_[c]) {
        if (status_[v] == unseen) opened_now.push_back(v);
        status_[v] = open;
      }
      order_.push_back(c);
      if (search()) return true;
      order_.pop_back();
      for (Vertex v : opened_now) status_[v] = unseen;
      for (Vertex v : closed_now) status_[v] = open;
      failed_.insert({used_, c});
      used_[c] = false;
    }
    return false;
  }

  std::vector<VertexSet> cliques_;
  std::vector<bool> used_;
  std::vector<unsigned char> status_;
  std::vector<std::vector<std::size_t>> cliques_of_;
  std::vector<std::size_t> order_;
  std::set<std::pair<std::vector<bool>, std::size_t>> failed_;
};

}  // namespace

std::optional<std::vector<VertexSet>> consecutive_clique_order(const Graph& g) {
  std::vector<VertexSet> result;
  // Components are sequenced independently and concatenated.
  for (const VertexSet& comp : components(g)) {
    const Graph h = g.induced(comp);
    std::vector<VertexSet> cliques = maximal_cliques(h);
    for (auto& c : cliques) {
      for (auto& v : c) v = comp[v];
    }
    CliqueSequencer seq(cliques, g.size());
    auto order = seq.run();
    if (!order) return std::nullopt;
    for (std::size_t c : *order) result.push_back(cliques[c]);
  }
  return result;
}

bool validate_obstruction(const Graph& g, const Obstruction& obs) {
  const std::size_t n = g.size();
  if (obs.kind == Obstruction::Kind::chordless_cycle) {
    const Path& c = obs.cycle;
    const std::size_t k = c.size();
    if (k < 4) return false;
    for (Vertex v : c) {
      if (v >= n) return false;
    }
    VertexSet sorted(c.begin(), c.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const bool consecutive = j == i + 1 || (i == 0 && j == k - 1);
        if (g.has_edge(c[i], c[j]) != consecutive) return false;
      }
    }
    return true;
  }
  const auto& t = obs.at.triple;
  for (Vertex v : t) {
    if (v >= n) return false;
  }
  if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) return false;
  if (g.has_edge(t[0], t[1]) || g.has_edge(t[0], t[2]) || g.has_edge(t[1], t[2])) {
    return false;
  }
  const std::array<std::array<Vertex, 3>, 3> roles = {
      {{t[0], t[1], t[2]}, {t[0], t[2], t[1]}, {t[1], t[2], t[0]}}};
  for (std::size_t i = 0; i < 3; ++i) {
    const Path& p = obs.at.paths[i];
    const auto [from, to, avoid] = roles[i];
    if (!is_path(g, p) || p.front() != from || p.back() != to) return false;
    for (Vertex x : p) {
      if (g.adjacent(x, avoid)) return false;
    }
  }
  return true;
}

Recognition recognize(const Graph& g) {
  if (auto order = consecutive_clique_order(g)) {
    const std::size_t n = g.size();
    std::vector<Interval> iv(n);
    std::vector<bool> seen(n, false);
    for (std::size_t pos = 0; pos < order->size(); ++pos) {
      for (Vertex v : (*order)[pos]) {
        const auto p = static_cast<std::int64_t>(pos);
        if (!seen[v]) iv[v].left = p;
        iv[v].right = p;
        seen[v] = true;
      }
    }
    ClosedRepresentation rep(std::move(iv));
    if (!verify_representation(g, rep)) {
      throw InternalInconsistency("clique order produced an invalid representation");
    }
    return rep;
  }
  Obstruction obs;
  if (auto cycle = check_triangulated(g)) {
    obs.kind = Obstruction::Kind::chordless_cycle;
    obs.cycle = std::move(*cycle);
  } else if (auto at = find_asteroidal_triple(g)) {
    obs.kind = Obstruction::Kind::asteroidal_triple;
    obs.at = std::move(*at);
  } else {
    throw InternalInconsistency(
        "no consecutive clique order, yet the graph is chordal and AT-free");
  }
  if (!validate_obstruction(g, obs)) {
    throw InternalInconsistency("extracted obstruction fails re-validation");
  }
  return obs;
}

bool is_interval_graph(const Graph& g) {
  return consecutive_clique_order(g).has_value();
}

}  // namespace ivg
