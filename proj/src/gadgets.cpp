#include "ivg/gadgets.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "ivg/errors.hpp"

namespace ivg {

VertexSet true_stages(const std::vector<std::uint64_t>& f, std::size_t s) {
  if (std::set<std::uint64_t>(f.begin(), f.end()).size() != f.size()) {
    throw InputError("sequence is not injective");
  }
  if (s > f.size()) throw InputError("stage bound exceeds sequence length");
  VertexSet out;
  for (std::size_t i = 0; i < s; ++i) {
    bool is_true = true;
    for (std::size_t k = i + 1; k < s && is_true; ++k) is_true = f[k] > f[i];
    if (is_true) out.push_back(i);
  }
  return out;
}

GadgetOutput aca_gadget(const GadgetSpec& spec) {
  namespace gv = gadget_vertex;
  const std::size_t s = spec.stages;
  VertexSet final_true = true_stages(spec.f, s);
  const std::size_t n = 4 + 2 * s;

  Graph g(n);
  g.set_label(gv::a, "a");
  g.set_label(gv::b, "b");
  g.set_label(gv::k, "k");
  g.set_label(gv::r, "r");
  for (std::size_t i = 0; i < s; ++i) {
    g.set_label(gv::x(i), "x" + std::to_string(i));
    g.set_label(gv::y(i), "y" + std::to_string(i));
  }

  std::vector<Interval> iv(n);
  // Stage 0: l(r) < l(k) < r(r) < l(a) < r(a) < l(b) < r(b) < r(k).
  iv[gv::r] = {0, 2};
  iv[gv::k] = {1, 7};
  iv[gv::a] = {3, 4};
  iv[gv::b] = {5, 6};
  g.add_edge(gv::k, gv::a);
  g.add_edge(gv::k, gv::b);
  g.add_edge(gv::k, gv::r);

  for (std::size_t t = 0; t < s; ++t) {
    const Vertex xt = gv::x(t), yt = gv::y(t);
    // (a) a - x_t - b - y_t, and k adjacent to both.
    g.add_edge(gv::a, xt);
    g.add_edge(xt, gv::b);
    g.add_edge(gv::b, yt);
    g.add_edge(xt, gv::k);
    g.add_edge(yt, gv::k);
    // (b) new x meets old x's, new y meets old y's.
    for (std::size_t i = 0; i < t; ++i) {
      g.add_edge(xt, gv::x(i));
      g.add_edge(yt, gv::y(i));
    }
    // (c) x_t meets y_i for i <= t.
    for (std::size_t i = 0; i <= t; ++i) g.add_edge(xt, gv::y(i));
    // (d) y_t meets x_i exactly for the i true at stage t + 1.
    const VertexSet now_true = true_stages(spec.f, t + 1);
    for (Vertex i : now_true) {
      if (i < t) g.add_edge(yt, gv::x(i));
    }

    // Endpoints: l(x_t) = l(a), r(y_t) = r(b); l(y_t) < r(x_t) squeezed
    // above every earlier l(y_i) and every r(x_j) with j now false, and
    // below every r(x_i) with i still true.
    Rational lo = iv[gv::b].left;
    Rational hi = iv[gv::b].right;
    for (std::size_t i = 0; i < t; ++i) {
      lo = std::max(lo, iv[gv::y(i)].left);
      const bool still_true = std::binary_search(now_true.begin(), now_true.end(), i);
      if (still_true) {
        hi = std::min(hi, iv[gv::x(i)].right);
      } else {
        lo = std::max(lo, iv[gv::x(i)].right);
      }
    }
    if (!(lo < hi)) {
      throw InternalInconsistency("gadget endpoint window is empty at stage " +
                                  std::to_string(t + 1));
    }
    iv[yt].left = simplest_between(lo, hi);
    iv[yt].right = iv[gv::b].right;
    iv[xt].left = iv[gv::a].left;
    iv[xt].right = simplest_between(iv[yt].left, hi);
  }

  GadgetOutput out{std::move(g), ClosedRepresentation(std::move(iv)), {}, {}, {}};
  if (!verify_representation(out.graph, out.representation)) {
    throw InternalInconsistency("staged gadget representation does not match its graph");
  }

  out.predicted_B = {gv::a, gv::b};
  out.predicted_K = {gv::k};
  out.predicted_R = {gv::r};
  for (std::size_t i = 0; i < s; ++i) {
    out.predicted_B.push_back(gv::y(i));
    const bool is_true = std::binary_search(final_true.begin(), final_true.end(), i);
    (is_true ? out.predicted_K : out.predicted_B).push_back(gv::x(i));
  }
  std::sort(out.predicted_B.begin(), out.predicted_B.end());
  std::sort(out.predicted_K.begin(), out.predicted_K.end());
  return out;
}

std::pair<Graph, ClosedRepresentation> random_interval_graph(std::size_t n,
                                                             std::uint64_t seed) {
  if (n == 0) throw InputError("random_interval_graph needs n >= 1");
  std::mt19937_64 rng(seed);
  const std::uint64_t grid = 2 * n;
  std::vector<Interval> iv(n);
  for (auto& interval : iv) {
    const auto p = static_cast<std::int64_t>(rng() % grid);
    const auto q = static_cast<std::int64_t>(rng() % grid);
    interval = {std::min(p, q), std::max(p, q)};
  }
  ClosedRepresentation rep = normalize_distinguishing(ClosedRepresentation(std::move(iv)));
  Graph g = induced_graph(rep);
  return {std::move(g), std::move(rep)};
}

}  // namespace ivg
