#include "ivg/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "ivg/errors.hpp"
#include "ivg/fixtures.hpp"
#include "ivg/gadgets.hpp"
#include "ivg/oracle.hpp"
#include "ivg/orderability.hpp"
#include "ivg/recognition.hpp"
#include "ivg/representation.hpp"

namespace ivg::selftest {

namespace {

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}
  std::size_t below(std::size_t k) { return static_cast<std::size_t>(engine() % k); }
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + below(hi - lo + 1); }
  std::uint64_t next() { return engine(); }
};

// Counts checks and keeps the first failure message.
class Tally {
 public:
  template <class Describe>
  void check(bool ok, Describe describe) {
    ++checked_;
    if (!ok) {
      if (failures_ == 0) first_ = describe();
      ++failures_;
    }
  }
  void fail(const std::string& msg) {
    check(false, [&] { return msg; });
  }
  std::size_t checked() const { return checked_; }

  CriterionResult finish(std::string id, std::string title, double seconds,
                         std::size_t min_checks = 0) const {
    CriterionResult r;
    r.id = std::move(id);
    r.title = std::move(title);
    r.checked = checked_;
    r.failures = failures_;
    r.seconds = seconds;
    r.passed = failures_ == 0 && checked_ >= min_checks;
    if (failures_ > 0) {
      r.detail = first_;
    } else if (checked_ < min_checks) {
      r.detail = "only " + std::to_string(checked_) + " checks, need " +
                 std::to_string(min_checks);
    }
    return r;
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.size() << " edges=[";
  bool first = true;
  for (const auto& [u, v] : g.edges()) {
    out << (first ? "" : ",") << u << "-" << v;
    first = false;
  }
  out << "]";
  return out.str();
}

Path random_walk(const Graph& g, Vertex start, std::size_t steps, Rng& rng) {
  Path p{start};
  for (std::size_t i = 0; i < steps; ++i) {
    const VertexSet nbrs = g.neighbors(p.back());
    if (nbrs.empty()) break;
    p.push_back(nbrs[rng.below(nbrs.size())]);
  }
  return p;
}

std::pair<Graph, ClosedRepresentation> random_connected_interval(Rng& rng, std::size_t lo,
                                                                 std::size_t hi) {
  for (;;) {
    auto gr = random_interval_graph(rng.between(lo, hi), rng.next());
    if (is_connected(gr.first)) return gr;
  }
}

// Independent 2+2 detector: scan all ordered 4-tuples.
bool has_two_plus_two_brute(const StrictPartialOrder& o) {
  const std::size_t n = o.size();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = 0; b < n; ++b)
      for (Vertex c = 0; c < n; ++c)
        for (Vertex d = 0; d < n; ++d) {
          if (o.precedes(a, b) && o.precedes(c, d) && !o.comparable(a, c) &&
              !o.comparable(a, d) && !o.comparable(b, c) && !o.comparable(b, d)) {
            return true;
          }
        }
  return false;
}

// All connected, non-complete interval graphs on 2..6 vertices, then seeded
// random ones on 7..12 vertices.
std::vector<Graph> equivalence_corpus(Rng& rng) {
  std::vector<Graph> corpus;
  for (std::size_t n = 2; n <= 6; ++n) {
    std::vector<Edge> slots;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
      Graph g(n);
      for (std::size_t i = 0; i < slots.size(); ++i) {
        if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
      }
      if (is_connected(g) && !is_complete(g) && is_interval_graph(g)) {
        corpus.push_back(std::move(g));
      }
    }
  }
  std::size_t added = 0;
  while (added < 1000) {
    auto [g, rep] = random_interval_graph(rng.between(7, 12), rng.next());
    if (!is_connected(g) || is_complete(g)) continue;
    corpus.push_back(std::move(g));
    ++added;
  }
  return corpus;
}

CriterionResult criterion_equivalence(const std::vector<Graph>& corpus, double build_seconds) {
  Stopwatch clock;
  Tally tally;
  for (const Graph& g : corpus) {
    try {
      const bool oracle = oracle_unique(g);
      const bool no_buried = !find_buried(g).has_value();
      const bool two = build_wq(g).component_count() == 2;
      tally.check(oracle == no_buried && no_buried == two, [&] {
        return "disagreement oracle=" + std::to_string(oracle) +
               " no_buried=" + std::to_string(no_buried) + " two_components=" +
               std::to_string(two) + " on " + describe(g);
      });
    } catch (const std::exception& e) {
      tally.fail(std::string("exception ") + e.what() + " on " + describe(g));
    }
  }
  const double total = clock.seconds() + build_seconds;
  tally.check(total < 120.0, [&] { return "runtime " + std::to_string(total) + " s >= 120 s"; });
  return tally.finish("1", "Three-way uniqueness equivalence", total, corpus.size());
}

CriterionResult criterion_certificates(const std::vector<Graph>& corpus) {
  Stopwatch clock;
  Tally tally;
  for (const Graph& g : corpus) {
    try {
      const UniquenessVerdict v = decide_unique(g);
      if (v.unique) {
        const OrientationSet set = enumerate_associated_orders(g, {12, 3});
        const bool in_class =
            v.order && set.exhaustive && set.dual_classes == 1 &&
            std::binary_search(set.orders.begin(), set.orders.end(), *v.order) &&
            is_associated(g, *v.order);
        tally.check(in_class, [&] { return "unique order outside oracle class on " + describe(g); });
      } else {
        tally.check(v.witness && validate_witness(g, *v.witness) &&
                        v.witness->second != v.witness->first &&
                        v.witness->second != v.witness->first.dual(),
                    [&] { return "invalid non-uniqueness witness on " + describe(g); });
        if (v.buried) {
          tally.check(is_buried(g, v.buried->B).buried,
                      [&] { return "buried certificate fails on " + describe(g); });
        }
      }
    } catch (const std::exception& e) {
      tally.fail(std::string("exception ") + e.what() + " on " + describe(g));
    }
  }
  return tally.finish("2", "Certificate validity", clock.seconds(), corpus.size());
}

CriterionResult criterion_gadgets(Rng& rng) {
  Stopwatch clock;
  Tally tally;
  std::vector<GadgetSpec> specs{{{0, 1, 2}, 3}, {{2, 0, 1}, 3}, {{5}, 1}};
  for (int i = 0; i < 50; ++i) {
    const std::size_t len = rng.between(1, 12);
    std::vector<std::uint64_t> pool(100);
    for (std::size_t k = 0; k < pool.size(); ++k) pool[k] = k;
    std::shuffle(pool.begin(), pool.end(), rng.engine);
    pool.resize(len);
    specs.push_back({pool, len});
  }
  namespace gv = gadget_vertex;
  for (const GadgetSpec& spec : specs) {
    std::string tag = "f=[";
    for (std::size_t k = 0; k < spec.f.size(); ++k) tag += (k ? "," : "") + std::to_string(spec.f[k]);
    tag += "]";
    try {
      const GadgetOutput out = aca_gadget(spec);
      const Graph& g = out.graph;
      tally.check(construct_b(g, gv::a, gv::b).members == out.predicted_B,
                  [&] { return "B(a,b) differs from prediction for " + tag; });
      const BuriedCheck bc = is_buried(g, out.predicted_B);
      tally.check(bc.buried && bc.K == out.predicted_K && bc.R == out.predicted_R &&
                      bc.R == VertexSet{gv::r},
                  [&] { return "K/R mismatch for " + tag; });
      const UniquenessVerdict v = decide_unique(g);
      tally.check(!v.unique && v.wq_components >= 4,
                  [&] { return "gadget reported uniquely orderable for " + tag; });
      tally.check(std::holds_alternative<ClosedRepresentation>(recognize(g)),
                  [&] { return "gadget not recognized for " + tag; });
      tally.check(verify_representation(g, out.representation),
                  [&] { return "staged representation invalid for " + tag; });
    } catch (const std::exception& e) {
      tally.fail(std::string("exception ") + e.what() + " for " + tag);
    }
  }
  return tally.finish("3", "Gadget reproduction", clock.seconds(), 53 * 5);
}

CriterionResult criterion_fixtures() {
  Stopwatch clock;
  Tally tally;
  try {
    const Graph diamond = fixtures::diamond();
    const Recognition r1 = recognize(diamond);
    tally.check(std::holds_alternative<ClosedRepresentation>(r1) &&
                    verify_representation(diamond, std::get<ClosedRepresentation>(r1)),
                [] { return std::string("diamond not recognized"); });
    const UniquenessVerdict v1 = decide_unique(diamond);
    tally.check(v1.unique && v1.order && v1.order->pairs() == std::vector<Edge>{{0, 2}} &&
                    v1.wq_components == 2,
                [] { return std::string("diamond: expected unique order {a<c}"); });

    const Recognition r2 = recognize(fixtures::net());
    const auto* o2 = std::get_if<Obstruction>(&r2);
    tally.check(o2 && o2->kind == Obstruction::Kind::asteroidal_triple &&
                    o2->at.triple == std::array<Vertex, 3>{3, 4, 5},
                [] { return std::string("net: expected asteroidal triple {x,y,z}"); });

    const Recognition r3 = recognize(fixtures::cycle(4));
    const auto* o3 = std::get_if<Obstruction>(&r3);
    tally.check(o3 && o3->kind == Obstruction::Kind::chordless_cycle &&
                    o3->cycle == Path{0, 1, 2, 3},
                [] { return std::string("C4: expected chordless cycle [0,1,2,3]"); });

    const UniquenessVerdict star = decide_unique(fixtures::star(3));
    tally.check(!star.unique && star.buried && star.buried->B == VertexSet{1, 2},
                [] { return std::string("STAR3: expected buried {1,2}"); });
    tally.check(decide_unique(fixtures::two_k2()).unique,
                [] { return std::string("2K2: expected unique"); });
    tally.check(!decide_unique(fixtures::empty(3)).unique,
                [] { return std::string("empty-3: expected non-unique"); });
  } catch (const std::exception& e) {
    tally.fail(std::string("exception ") + e.what());
  }
  return tally.finish("4", "Reference fixtures", clock.seconds(), 7);
}

constexpr std::size_t kPropertyTrials = 10000;

CriterionResult property_subpath(Rng& rng) {
  Stopwatch clock;
  Tally tally;
  while (tally.checked() < kPropertyTrials) {
    const std::size_t n = rng.between(2, 12);
    auto [g, rep] = random_interval_graph(n, rng.next());
    const Path p = random_walk(g, rng.below(n), rng.below(n + 1), rng);
    const Vertex w = rng.below(n);
    if (rep.before(w, p.front()) || rep.before(p.back(), w)) continue;
    const bool hit = std::any_of(p.begin(), p.end(), [&](Vertex v) { return g.adjacent(v, w); });
    tally.check(hit, [&] { return "no path vertex meets w=" + std::to_string(w) + " on " + describe(g); });
  }
  return tally.finish("5a", "Path sweep meets every straddling interval", clock.seconds(),
                      kPropertyTrials);
}

// Minimal path with F(front) before F(back), or empty.
Path oriented_minimal_path(const Graph& g, const ClosedRepresentation& rep, Rng& rng) {
  const std::size_t n = g.size();
  Path p = refine_to_minimal(g, random_walk(g, rng.below(n), rng.below(2 * n + 1), rng));
  if (p.size() < 3) return {};
  if (rep.before(p.back(), p.front())) std::reverse(p.begin(), p.end());
  if (!rep.before(p.front(), p.back())) return {};
  return p;
}

CriterionResult property_minpath_monotone(Rng& rng) {
  Stopwatch clock;
  Tally tally;
  while (tally.checked() < kPropertyTrials) {
    auto [g, rep] = random_interval_graph(rng.between(3, 12), rng.next());
    const Path p = oriented_minimal_path(g, rep, rng);
    if (p.empty()) continue;
    const std::size_t len = p.size() - 1;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < len; ++i) ok = ok && rep.right(p[i]) < rep.right(p[i + 1]);
    for (std::size_t j = 1; j < len; ++j) ok = ok && rep.left(p[j]) < rep.left(p[j + 1]);
    tally.check(ok, [&] { return "endpoints not increasing along minimal path on " + describe(g); });
  }
  return tally.finish("5b", "Minimal path endpoints increase", clock.seconds(), kPropertyTrials);
}

CriterionResult property_minpath_outside(Rng& rng) {
  Stopwatch clock;
  Tally tally;
  while (tally.checked() < kPropertyTrials) {
    auto [g, rep] = random_interval_graph(rng.between(3, 12), rng.next());
    const Path p = oriented_minimal_path(g, rep, rng);
    if (p.empty()) continue;
    const std::size_t len = p.size() - 1;
    bool ok = true;
    for (Vertex v = 0; v < g.size(); ++v) {
      for (std::size_t i = 0; i <= len; ++i) {
        if (rep.before(v, p.front()) && i != 1) ok = ok && !g.adjacent(p[i], v);
        if (rep.before(p.back(), v) && i != len - 1) ok = ok && !g.adjacent(p[i], v);
      }
    }
    tally.check(ok, [&] { return "outside vertex meets a far path vertex on " + describe(g); });
  }
  return tally.finish("5c", "Vertices beyond a minimal path touch only its ends", clock.seconds(),
                      kPropertyTrials);
}

CriterionResult property_refine(Rng& rng) {
  Stopwatch clock;
  Tally tally;
  while (tally.checked() < kPropertyTrials) {
    const std::size_t n = rng.between(2, 12);
    const std::size_t density = rng.between(1, 9);
    Graph g(n);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.below(10) < density) g.add_edge(u, v);
    const Path p = random_walk(g, rng.below(n), rng.below(3 * n + 1), rng);
    const Path q = refine_to_minimal(g, p);
    std::size_t k = 0;
    for (Vertex v : p) {
      if (k < q.size() && q[k] == v) ++k;
    }
    const bool ok = is_minimal_path(g, q) && q.front() == p.front() && q.back() == p.back() &&
                    k == q.size();
    tally.check(ok, [&] { return "refinement broken on " + describe(g); });
  }
  return tally.finish("5d", "Path refinement", clock.seconds(), kPropertyTrials);
}

CriterionResult property_q_transport(Rng& rng) {
  Stopwatch clock;
  Tally tally;
  while (tally.checked() < kPropertyTrials) {
    auto [g, rep] = random_interval_graph(rng.between(2, 7), rng.next());
    const WQGraph wq = build_wq(g);
    const OrientationSet set = enumerate_associated_orders(g);
    const auto& pairs = wq.pairs();
    bool ok = !set.orders.empty();
    for (const auto& [a, b] : pairs) ok = ok && wq.component_of({a, b}) != wq.component_of({b, a});
    for (const StrictPartialOrder& o : set.orders) {
      for (const auto& ab : pairs) {
        if (!o.precedes(ab.first, ab.second)) continue;
        for (const auto& cd : pairs) {
          if (wq.q_adjacent(ab, cd)) ok = ok && o.precedes(cd.first, cd.second);
        }
      }
    }
    tally.check(ok, [&] { return "Q-edge does not transport orientation on " + describe(g); });
  }
  return tally.finish("5e", "Q-edges transport orientation; ab and ba never Q-connected",
                      clock.seconds(), kPropertyTrials);
}

struct BSample {
  Graph g;
  ClosedRepresentation rep;
  Vertex v = 0, u = 0;
  LeveledSet b;
};

BSample random_b_sample(Rng& rng) {
  for (;;) {
    auto [g, rep] = random_connected_interval(rng, 3, 12);
    std::vector<Edge> nonadjacent;
    for (Vertex x = 0; x < g.size(); ++x)
      for (Vertex y = 0; y < g.size(); ++y)
        if (rep.before(x, y)) nonadjacent.emplace_back(x, y);
    if (nonadjacent.empty()) continue;
    const auto [v, u] = nonadjacent[rng.below(nonadjacent.size())];
    LeveledSet b = construct_b(g, v, u);
    return {std::move(g), std::move(rep), v, u, std::move(b)};
  }
}

CriterionResult property_levels(Rng& rng) {
  Stopwatch clock;
  Tally tally;
  while (tally.checked() < kPropertyTrials) {
    const BSample s = random_b_sample(rng);
    const auto& rep = s.rep;
    bool ok = true;
    for (Vertex x : s.b.members) {
      for (Vertex y : s.b.members) {
        const bool right_side = rep.before(s.u, x) && !(rep.left(y) < rep.left(x));
        const bool left_side = rep.before(x, s.v) && !(rep.right(x) < rep.right(y));
        if (right_side || left_side) ok = ok && s.b.level[x] <= s.b.level[y];
      }
    }
    for (std::size_t st = 0; st + 1 < s.b.stage_count(); ++st) {
      const VertexSet lo = s.b.stage(st), hi = s.b.stage(st + 1);
      ok = ok && std::includes(hi.begin(), hi.end(), lo.begin(), lo.end());
    }
    tally.check(ok, [&] { return "level order violated on " + describe(s.g); });
  }
  return tally.finish("5f", "Levels grow away from the generating pair", clock.seconds(),
                      kPropertyTrials);
}

CriterionResult property_q_paths(Rng& rng) {
  Stopwatch clock;
  Tally tally;
  while (tally.checked() < kPropertyTrials) {
    const BSample s = random_b_sample(rng);
    const auto& rep = s.rep;
    const WQGraph wq = build_wq(s.g);
    bool ok = true;
    for (Vertex x : s.b.members) {
      for (Vertex y : s.b.members) {
        if (rep.right(s.v) < rep.right(x) || rep.left(y) < rep.left(s.u)) continue;
        ok = ok && q_path(wq, {s.v, s.u}, {x, y}).has_value();
      }
    }
    tally.check(ok, [&] { return "missing Q-path inside B(v,u) on " + describe(s.g); });
  }
  return tally.finish("5g", "Q-paths from the generating pair inside B(v,u)", clock.seconds(),
                      kPropertyTrials);
}

CriterionResult property_universal(Rng& rng) {
  Stopwatch clock;
  Tally tally;
  while (tally.checked() < kPropertyTrials) {
    auto [g, rep] = random_interval_graph(rng.between(1, 10), rng.next());
    try {
      const VertexSet uni = universal_vertices(g);
      const Graph rest = remove_vertices(g, uni);
      const bool lhs = decide_unique(g).unique;
      const bool rhs = rest.size() == 0 || decide_unique(rest).unique;
      tally.check(lhs == rhs, [&] { return "universal-vertex removal changed verdict on " + describe(g); });
    } catch (const std::exception& e) {
      tally.fail(std::string("exception ") + e.what() + " on " + describe(g));
    }
  }
  return tally.finish("5h", "Removing universal vertices keeps the verdict", clock.seconds(),
                      kPropertyTrials);
}

CriterionResult criterion_round_trips(Rng& rng) {
  Stopwatch clock;
  Tally tally;
  for (int i = 0; i < 1000; ++i) {
    auto [g, rep] = random_interval_graph(rng.between(1, 10), rng.next());
    const StrictPartialOrder o = representation_to_order(rep);
    tally.check(representation_to_order(order_to_representation(o)) == o,
                [&] { return "order round trip failed on " + describe(g); });
  }
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = rng.between(1, 10);
    std::vector<Interval> iv(n);
    for (auto& x : iv) {
      Rational p(static_cast<std::int64_t>(rng.below(20)), static_cast<std::int64_t>(rng.between(1, 4)));
      Rational q(static_cast<std::int64_t>(rng.below(20)), static_cast<std::int64_t>(rng.between(1, 4)));
      x = {std::min(p, q), std::max(p, q)};
    }
    const ClosedRepresentation r(iv);
    const Graph h = incomparability_graph(representation_to_order(r));
    bool ok = h == induced_graph(r);
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) {
        const bool meet = std::max(iv[u].left, iv[v].left) <= std::min(iv[u].right, iv[v].right);
        ok = ok && h.has_edge(u, v) == meet;
      }
    tally.check(ok, [] { return std::string("incomparability graph differs from interval intersection"); });
  }
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = rng.between(1, 7);
    std::vector<Vertex> perm(n);
    for (Vertex v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng.engine);
    const std::size_t density = rng.between(1, 9);
    std::vector<Edge> rel;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v)
        if (rng.below(10) < density) rel.emplace_back(perm[u], perm[v]);
    const StrictPartialOrder o = StrictPartialOrder::closure_of(n, rel);
    tally.check(is_interval_order(o) == !has_two_plus_two_brute(o),
                [] { return std::string("2+2 detection disagrees with brute-force scan"); });
  }
  return tally.finish("6", "Round trips and 2+2 detection", clock.seconds(), 21000);
}

}  // namespace

std::vector<CriterionResult> run_acceptance(
    const Options& options, const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<CriterionResult> results;
  auto emit = [&](CriterionResult r) {
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  };
  Rng rng(options.seed);

  Stopwatch corpus_clock;
  const std::vector<Graph> corpus = equivalence_corpus(rng);
  const double corpus_seconds = corpus_clock.seconds();
  emit(criterion_equivalence(corpus, corpus_seconds));
  emit(criterion_certificates(corpus));
  emit(criterion_gadgets(rng));
  emit(criterion_fixtures());

  std::vector<CriterionResult> props;
  props.push_back(property_subpath(rng));
  props.push_back(property_minpath_monotone(rng));
  props.push_back(property_minpath_outside(rng));
  props.push_back(property_refine(rng));
  props.push_back(property_q_transport(rng));
  props.push_back(property_levels(rng));
  props.push_back(property_q_paths(rng));
  props.push_back(property_universal(rng));
  CriterionResult all;
  all.id = "5";
  all.title = "Property suites";
  all.passed = true;
  for (auto& p : props) {
    all.passed = all.passed && p.passed;
    all.checked += p.checked;
    all.failures += p.failures;
    all.seconds += p.seconds;
    if (!p.passed && all.detail.empty()) all.detail = p.id + ": " + p.detail;
    emit(std::move(p));
  }
  emit(std::move(all));

  emit(criterion_round_trips(rng));
  return results;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream out;
  out << (r.passed ? "PASS" : "FAIL") << "  [" << r.id << "] " << r.title << "  (checks="
      << r.checked << ", failures=" << r.failures << ", " << static_cast<long>(r.seconds * 1000)
      << " ms)";
  if (!r.detail.empty()) out << "  -- " << r.detail;
  return out.str();
}

}  // namespace ivg::selftest
