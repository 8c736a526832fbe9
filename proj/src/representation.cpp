#include "ivg/representation.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "ivg/errors.hpp"

namespace ivg {

namespace {

Rational floor_of(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --q;
  return Rational(q);
}

// Simplest x with lo < x < hi; hi may be "infinite".
Rational simplest_above(const Rational& lo, const std::optional<Rational>& hi) {
  const Rational next = floor_of(lo) + 1;
  if (!hi || next < *hi) return next;
  // lo and hi share the unit interval [fl, fl + 1].
  const Rational fl = floor_of(lo);
  const Rational lo_frac = lo - fl;
  const Rational hi_frac = *hi - fl;
  std::optional<Rational> inv_hi;
  // Compare numerators: boost::rational == int recurses forever under C++20.
  if (lo_frac.numerator() != 0) inv_hi = Rational(1) / lo_frac;
  return fl + Rational(1) / simplest_above(Rational(1) / hi_frac, inv_hi);
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw InputError("simplest_between requires lo < hi");
  return simplest_above(lo, hi);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ClosedRepresentation::ClosedRepresentation(std::vector<Interval> intervals)
    : intervals_(std::move(intervals)) {
  for (std::size_t v = 0; v < intervals_.size(); ++v) {
    if (intervals_[v].right < intervals_[v].left) {
      throw InputError("interval of vertex " + std::to_string(v) +
                       " has left endpoint after right endpoint");
    }
  }
}

Graph induced_graph(const ClosedRepresentation& r) {
  Graph g(r.size());
  for (Vertex u = 0; u < r.size(); ++u) {
    for (Vertex v = u + 1; v < r.size(); ++v) {
      if (r.intersects(u, v)) g.add_edge(u, v);
    }
  }
  return g;
}

bool verify_representation(const Graph& g, const ClosedRepresentation& r) {
  if (g.size() != r.size()) {
    throw InputError("graph and representation have different vertex counts");
  }
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = u + 1; v < g.size(); ++v) {
      // Order the pair by left endpoint, then one comparison decides.
      const bool u_first = !(r.left(v) < r.left(u));
      const Vertex lo = u_first ? u : v;
      const Vertex hi = u_first ? v : u;
      const bool meet = !(r.right(lo) < r.left(hi));
      if (meet != g.has_edge(u, v)) return false;
    }
  }
  return true;
}

StrictPartialOrder representation_to_order(const ClosedRepresentation& r) {
  std::vector<Edge> pairs;
  for (Vertex u = 0; u < r.size(); ++u) {
    for (Vertex v = 0; v < r.size(); ++v) {
      if (u != v && r.before(u, v)) pairs.emplace_back(u, v);
    }
  }
  return StrictPartialOrder::from_pairs(r.size(), pairs);
}

NotIntervalOrder::NotIntervalOrder(TwoPlusTwo w)
    : std::invalid_argument("order contains 2+2 on vertices " +
                            std::to_string(w[0]) + "<" + std::to_string(w[1]) +
                            ", " + std::to_string(w[2]) + "<" +
                            std::to_string(w[3])),
      witness_(w) {}

namespace {

std::vector<bool> down_set(const StrictPartialOrder& o, Vertex v) {
  std::vector<bool> d(o.size(), false);
  for (Vertex u = 0; u < o.size(); ++u) d[u] = o.precedes(u, v);
  return d;
}

bool subset(const std::vector<bool>& a, const std::vector<bool>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

}  // namespace

std::optional<TwoPlusTwo> find_two_plus_two(const StrictPartialOrder& o) {
  const std::size_t n = o.size();
  std::vector<std::vector<bool>> downs;
  downs.reserve(n);
  for (Vertex v = 0; v < n; ++v) downs.push_back(down_set(o, v));
  for (Vertex b = 0; b < n; ++b) {
    for (Vertex d = b + 1; d < n; ++d) {
      if (subset(downs[b], downs[d]) || subset(downs[d], downs[b])) continue;
      // a below b but not d, c below d but not b.
      Vertex a = 0, c = 0;
      while (!(downs[b][a] && !downs[d][a])) ++a;
      while (!(downs[d][c] && !downs[b][c])) ++c;
      return TwoPlusTwo{a, b, c, d};
    }
  }
  return std::nullopt;
}

bool is_interval_order(const StrictPartialOrder& o) {
  return !find_two_plus_two(o).has_value();
}

ClosedRepresentation order_to_representation(const StrictPartialOrder& o) {
  if (auto w = find_two_plus_two(o)) throw NotIntervalOrder(*w);
  const std::size_t n = o.size();
  // Down-sets are nested, so their sizes rank them.
  std::vector<std::size_t> down_size(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u = 0; u < n; ++u) down_size[v] += o.precedes(u, v) ? 1 : 0;
  }
  std::vector<std::size_t> sizes = down_size;
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  auto rank_of = [&](std::size_t s) {
    return static_cast<std::int64_t>(
        std::lower_bound(sizes.begin(), sizes.end(), s) - sizes.begin());
  };

  std::vector<Interval> intervals(n);
  for (Vertex v = 0; v < n; ++v) {
    intervals[v].left = rank_of(down_size[v]);
    // Down-sets not containing v: those of vertices not above v.
    std::int64_t right = -1;
    for (Vertex w = 0; w < n; ++w) {
      if (!o.precedes(v, w)) right = std::max(right, rank_of(down_size[w]));
    }
    intervals[v].right = right;
  }
  return ClosedRepresentation(std::move(intervals));
}

ClosedRepresentation normalize_distinguishing(const ClosedRepresentation& r) {
  const std::size_t n = r.size();
  // (value, side, vertex) with side 0 = left, 1 = right.
  std::vector<std::tuple<Rational, int, Vertex>> events;
  events.reserve(2 * n);
  for (Vertex v = 0; v < n; ++v) {
    events.emplace_back(r.left(v), 0, v);
    events.emplace_back(r.right(v), 1, v);
  }
  std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    if (std::get<1>(a) != std::get<1>(b)) return std::get<1>(a) < std::get<1>(b);
    return std::get<2>(a) < std::get<2>(b);
  });
  std::vector<Interval> out(n);
  for (std::size_t rank = 0; rank < events.size(); ++rank) {
    const auto& [value, side, v] = events[rank];
    (side == 0 ? out[v].left : out[v].right) =
        static_cast<std::int64_t>(rank);
  }
  return ClosedRepresentation(std::move(out));
}

bool is_distinguishing(const ClosedRepresentation& r) {
  std::vector<Rational> all;
  for (const auto& iv : r.intervals()) {
    if (!(iv.left < iv.right)) return false;
    all.push_back(iv.left);
    all.push_back(iv.right);
  }
  std::sort(all.begin(), all.end());
  return std::adjacent_find(all.begin(), all.end()) == all.end();
}

}  // namespace ivg
