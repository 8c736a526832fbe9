#include "ivg/orderability.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "ivg/errors.hpp"
#include "ivg/representation.hpp"

namespace ivg {

namespace {

constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

VertexSet closed_neighbourhood(const Graph& g, Vertex v) {
  VertexSet out;
  for (Vertex u = 0; u < g.size(); ++u) {
    if (g.adjacent(v, u)) out.push_back(u);
  }
  return out;
}

}  // namespace

WQGraph::WQGraph(const Graph& base)
    : base_(base), index_(base.size() * base.size(), npos) {
  const std::size_t n = base_.size();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (!base_.adjacent(a, b)) {
        index_[a * n + b] = pairs_.size();
        pairs_.emplace_back(a, b);
      }
    }
  }
  std::vector<VertexSet> nbhd(n);
  for (Vertex v = 0; v < n; ++v) nbhd[v] = closed_neighbourhood(base_, v);

  DisjointSets sets(pairs_.size());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const auto [a, b] = pairs_[i];
    for (Vertex c : nbhd[a]) {
      for (Vertex d : nbhd[b]) {
        const std::size_t j = index_[c * n + d];
        if (j != npos) sets.unite(i, j);
      }
    }
  }
  // Roots are least indices, and pairs are sorted, so numbering roots in
  // index order numbers components by least member.
  component_of_.assign(pairs_.size(), npos);
  std::vector<std::size_t> id_of_root(pairs_.size(), npos);
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (id_of_root[root] == npos) id_of_root[root] = component_count_++;
    component_of_[i] = id_of_root[root];
  }
}

bool WQGraph::contains(const VertexPair& p) const {
  const std::size_t n = base_.size();
  return p.first < n && p.second < n && index_[p.first * n + p.second] != npos;
}

std::size_t WQGraph::index_of(const VertexPair& p) const {
  if (!contains(p)) {
    throw InputError("pair (" + std::to_string(p.first) + "," +
                     std::to_string(p.second) + ") is not a non-adjacent pair");
  }
  return index_[p.first * base_.size() + p.second];
}

std::vector<std::vector<VertexPair>> WQGraph::component_members() const {
  std::vector<std::vector<VertexPair>> out(component_count_);
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    out[component_of_[i]].push_back(pairs_[i]);
  }
  return out;
}

WQGraph build_wq(const Graph& g) { return WQGraph(g); }

std::optional<std::vector<VertexPair>> q_path(const WQGraph& wq,
                                              const VertexPair& from,
                                              const VertexPair& to) {
  const std::size_t start = wq.index_of(from);
  const std::size_t goal = wq.index_of(to);
  if (wq.component_of(start) != wq.component_of(goal)) return std::nullopt;

  const Graph& g = wq.base();
  const auto& pairs = wq.pairs();
  auto q_neighbours = [&](std::size_t i) {
    std::vector<std::size_t> out;
    const auto [a, b] = pairs[i];
    for (Vertex c = 0; c < g.size(); ++c) {
      if (!g.adjacent(a, c)) continue;
      for (Vertex d = 0; d < g.size(); ++d) {
        if (g.adjacent(b, d) && wq.contains({c, d})) {
          out.push_back(wq.index_of({c, d}));
        }
      }
    }
    return out;  // lexicographic, since pair indices follow pair order
  };

  std::vector<std::size_t> dist(pairs.size(), npos);
  std::deque<std::size_t> queue{goal};
  dist[goal] = 0;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (std::size_t j : q_neighbours(i)) {
      if (dist[j] == npos) {
        dist[j] = dist[i] + 1;
        queue.push_back(j);
      }
    }
  }
  std::vector<VertexPair> path{pairs[start]};
  std::size_t cur = start;
  while (cur != goal) {
    for (std::size_t j : q_neighbours(cur)) {
      if (dist[j] + 1 == dist[cur]) {
        cur = j;
        break;
      }
    }
    path.push_back(pairs[cur]);
  }
  return path;
}

std::size_t LeveledSet::stage_count() const {
  std::size_t top = 0;
  for (std::size_t l : level) {
    if (l != npos) top = std::max(top, l);
  }
  return top + 1;
}

VertexSet LeveledSet::stage(std::size_t s) const {
  VertexSet out;
  for (Vertex w = 0; w < level.size(); ++w) {
    if (level[w] != npos && level[w] <= s) out.push_back(w);
  }
  return out;
}

LeveledSet construct_b(const Graph& g, Vertex v, Vertex u) {
  if (v >= g.size() || u >= g.size()) throw InputError("vertex out of range");
  if (g.adjacent(v, u)) {
    throw InputError("construct_b needs two distinct non-adjacent vertices");
  }
  LeveledSet s;
  s.v = v;
  s.u = u;
  s.level.assign(g.size(), LeveledSet::npos);
  s.level[v] = s.level[u] = 0;
  VertexSet current{std::min(v, u), std::max(v, u)};
  for (std::size_t stage = 1;; ++stage) {
    VertexSet entering;
    for (Vertex w = 0; w < g.size(); ++w) {
      if (s.contains(w)) continue;
      bool touches = false, misses = false;
      for (Vertex z : current) {
        (g.adjacent(z, w) ? touches : misses) = true;
      }
      if (touches && misses) entering.push_back(w);
    }
    if (entering.empty()) break;
    for (Vertex w : entering) s.level[w] = stage;
    current.insert(current.end(), entering.begin(), entering.end());
    std::sort(current.begin(), current.end());
  }
  s.members = current;
  return s;
}

BuriedCheck is_buried(const Graph& g, const VertexSet& B) {
  const std::size_t n = g.size();
  std::vector<bool> in_b(n, false);
  for (Vertex b : B) {
    if (b >= n) throw InputError("vertex out of range in candidate set");
    in_b[b] = true;
  }
  BuriedCheck out;
  std::vector<bool> in_k(n, false);
  for (Vertex x = 0; x < n; ++x) {
    in_k[x] = std::all_of(B.begin(), B.end(),
                          [&](Vertex b) { return g.adjacent(x, b); });
    if (in_k[x]) out.K.push_back(x);
    if (!in_k[x] && !in_b[x]) out.R.push_back(x);
  }

  std::optional<VertexPair> nonedge;
  for (std::size_t i = 0; i < B.size() && !nonedge; ++i) {
    for (std::size_t j = 0; j < B.size(); ++j) {
      if (!g.adjacent(B[i], B[j])) {
        nonedge = VertexPair{std::min(B[i], B[j]), std::max(B[i], B[j])};
        break;
      }
    }
  }
  const bool k_disjoint = std::none_of(B.begin(), B.end(),
                                       [&](Vertex b) { return in_k[b]; });
  bool separated = true;
  for (Vertex b : B) {
    for (Vertex r : out.R) separated = separated && !g.has_edge(b, r);
  }
  out.buried = nonedge.has_value() && k_disjoint && !out.R.empty() && separated;
  if (out.buried) {
    BuriedCertificate cert;
    cert.B = B;
    std::sort(cert.B.begin(), cert.B.end());
    cert.K = out.K;
    cert.R = out.R;
    cert.witness_nonedge = *nonedge;
    cert.witness_outside = out.R.front();
    out.certificate = std::move(cert);
  }
  return out;
}

namespace {

std::optional<BuriedCertificate> scan_for_buried(const Graph& g) {
  for (Vertex v = 0; v < g.size(); ++v) {
    for (Vertex u = v + 1; u < g.size(); ++u) {
      if (g.adjacent(v, u)) continue;
      const LeveledSet b = construct_b(g, v, u);
      BuriedCheck check = is_buried(g, b.members);
      if (!check.R.empty()) {
        if (!check.buried) {
          throw InternalInconsistency(
              "B(v,u) has nonempty remainder but is not buried");
        }
        check.certificate->witness_nonedge = {v, u};
        return check.certificate;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<BuriedCertificate> find_buried(const Graph& g) {
  if (!is_connected(g)) throw InputError("find_buried requires a connected graph");
  if (!is_interval_graph(g)) throw InputError("find_buried requires an interval graph");
  return scan_for_buried(g);
}

bool validate_witness(const Graph& g, const OrderWitness& w) {
  if (!is_associated(g, w.first) || !is_associated(g, w.second)) return false;
  const auto [a, b, c] = w.triple;
  const std::size_t n = g.size();
  if (a >= n || b >= n || c >= n) return false;
  if (!w.first.precedes(a, b) || !w.second.precedes(b, a)) return false;
  if (!w.first.comparable(a, c)) return false;
  return w.first.precedes(a, c) == w.second.precedes(a, c) &&
         w.first.precedes(c, a) == w.second.precedes(c, a) &&
         w.first.precedes(b, c) == w.second.precedes(b, c) &&
         w.first.precedes(c, b) == w.second.precedes(c, b);
}

OrderWitness two_orders_from_buried(const Graph& g, const BuriedCertificate& cert,
                                    const StrictPartialOrder& base) {
  if (!is_associated(g, base)) throw InputError("base order is not associated to the graph");
  if (!is_buried(g, cert.B).buried) throw InputError("certificate set is not buried");
  const std::size_t n = g.size();
  std::vector<bool> in_b(n, false);
  for (Vertex b : cert.B) in_b[b] = true;
  const Vertex b0 = cert.B.front();

  auto convex = [&](Vertex u, Vertex v) {
    if (in_b[u] == in_b[v]) return base.precedes(u, v);
    if (in_b[u]) return base.precedes(b0, v);
    return base.precedes(u, b0);
  };
  std::vector<Edge> first, second;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      if (convex(u, v)) first.emplace_back(u, v);
      const bool flipped = in_b[u] && in_b[v] ? convex(v, u) : convex(u, v);
      if (flipped) second.emplace_back(u, v);
    }
  }
  if (!is_strict_partial_order(n, first) || !is_strict_partial_order(n, second)) {
    throw InternalInconsistency("buried reordering is not a partial order");
  }
  OrderWitness w{StrictPartialOrder::from_pairs(n, first),
                 StrictPartialOrder::from_pairs(n, second),
                 {}};
  std::optional<std::array<Vertex, 3>> triple;
  for (Vertex x : cert.B) {
    for (Vertex y : cert.B) {
      if (!triple && w.first.precedes(x, y)) triple = {{x, y, cert.R.front()}};
    }
  }
  if (!triple) throw InternalInconsistency("buried set has no ordered pair");
  w.triple = *triple;
  if (!validate_witness(g, w)) {
    throw InternalInconsistency("buried reordering does not witness non-uniqueness");
  }
  return w;
}

StrictPartialOrder unique_order_from_wq(const Graph& g, const WQGraph& wq) {
  if (wq.component_count() != 2) {
    throw InputError("unique_order_from_wq needs exactly two (W,Q) components, got " +
                     std::to_string(wq.component_count()));
  }
  std::vector<Edge> rel;
  for (std::size_t i = 0; i < wq.pairs().size(); ++i) {
    if (wq.component_of(i) == 0) rel.push_back(wq.pairs()[i]);
  }
  if (!is_strict_partial_order(g.size(), rel)) {
    throw InternalInconsistency("(W,Q) component is not a partial order");
  }
  auto o = StrictPartialOrder::from_pairs(g.size(), rel);
  if (!is_associated(g, o)) {
    throw InternalInconsistency("(W,Q) component order is not associated to the graph");
  }
  return o;
}

NotIntervalGraph::NotIntervalGraph(Obstruction obs)
    : InputError(obs.kind == Obstruction::Kind::chordless_cycle
                     ? "not an interval graph: chordless cycle"
                     : "not an interval graph: asteroidal triple"),
      obstruction_(std::move(obs)) {}

namespace {

// Blocks placed one after another in `sequence`; inside a block the base
// order applies, reversed for the block `flip` if given.
StrictPartialOrder stacked(const std::vector<VertexSet>& blocks,
                           const std::vector<std::size_t>& sequence,
                           const StrictPartialOrder& base,
                           std::optional<std::size_t> flip, std::size_t n) {
  std::vector<std::size_t> position(n);
  std::vector<std::size_t> block_of(n);
  for (std::size_t k = 0; k < sequence.size(); ++k) {
    for (Vertex v : blocks[sequence[k]]) {
      position[v] = k;
      block_of[v] = sequence[k];
    }
  }
  std::vector<Edge> rel;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u == v) continue;
      bool before = false;
      if (position[u] != position[v]) {
        before = position[u] < position[v];
      } else if (flip && block_of[u] == *flip) {
        before = base.precedes(v, u);
      } else {
        before = base.precedes(u, v);
      }
      if (before) rel.emplace_back(u, v);
    }
  }
  return StrictPartialOrder::from_pairs(n, rel);
}

OrderWitness disconnected_witness(const Graph& g, const std::vector<VertexSet>& comps,
                                  const StrictPartialOrder& base) {
  const std::size_t n = g.size();
  std::vector<std::size_t> identity(comps.size());
  std::iota(identity.begin(), identity.end(), 0);
  if (comps.size() >= 3) {
    std::vector<std::size_t> swapped = identity;
    std::swap(swapped[0], swapped[1]);
    return {stacked(comps, identity, base, std::nullopt, n),
            stacked(comps, swapped, base, std::nullopt, n),
            {comps[0].front(), comps[1].front(), comps[2].front()}};
  }
  const std::size_t target = is_complete(g.induced(comps[0])) ? 1 : 0;
  const std::size_t other = 1 - target;
  OrderWitness w{stacked(comps, identity, base, std::nullopt, n),
                 stacked(comps, identity, base, target, n),
                 {}};
  for (Vertex x : comps[target]) {
    for (Vertex y : comps[target]) {
      if (w.first.precedes(x, y)) {
        w.triple = {x, y, comps[other].front()};
        return w;
      }
    }
  }
  throw InternalInconsistency("non-complete component has no comparable pair");
}

}  // namespace

UniquenessVerdict decide_unique(const Graph& g) {
  Recognition rec = recognize(g);
  if (auto* obs = std::get_if<Obstruction>(&rec)) throw NotIntervalGraph(*obs);
  const auto& rep = std::get<ClosedRepresentation>(rec);
  const std::size_t n = g.size();

  UniquenessVerdict verdict;
  const WQGraph wq = build_wq(g);
  verdict.wq_components = wq.component_count();
  const std::vector<VertexSet> comps = components(g);

  if (is_complete(g)) {
    verdict.unique = true;
    verdict.order = StrictPartialOrder(n);
  } else if (comps.size() >= 2) {
    const bool two_cliques = comps.size() == 2 &&
                             is_complete(g.induced(comps[0])) &&
                             is_complete(g.induced(comps[1]));
    if (two_cliques) {
      verdict.unique = true;
      verdict.order = stacked(comps, {0, 1}, StrictPartialOrder(n), std::nullopt, n);
    } else {
      verdict.witness = disconnected_witness(g, comps, representation_to_order(rep));
    }
  } else {
    verdict.buried = scan_for_buried(g);
    if (verdict.buried.has_value() != (wq.component_count() > 2)) {
      throw InternalInconsistency(
          "buried-subgraph search and (W,Q) component count disagree");
    }
    if (verdict.buried) {
      verdict.witness =
          two_orders_from_buried(g, *verdict.buried, representation_to_order(rep));
    } else {
      verdict.unique = true;
      verdict.order = unique_order_from_wq(g, wq);
    }
  }
  if (!validate_verdict(g, verdict)) {
    throw InternalInconsistency("verdict certificate fails re-validation");
  }
  return verdict;
}

bool validate_verdict(const Graph& g, const UniquenessVerdict& verdict) {
  if (verdict.unique) {
    if (!verdict.order || verdict.witness) return false;
    if (!is_associated(g, *verdict.order)) return false;
  } else {
    if (verdict.order || !verdict.witness) return false;
    if (!validate_witness(g, *verdict.witness)) return false;
  }
  if (verdict.buried) {
    const BuriedCheck check = is_buried(g, verdict.buried->B);
    if (!check.buried || check.K != verdict.buried->K || check.R != verdict.buried->R) {
      return false;
    }
  }
  return true;
}

}  // namespace ivg
