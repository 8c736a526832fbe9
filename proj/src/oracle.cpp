#include "ivg/oracle.hpp"

#include <algorithm>
#include <set>

#include "ivg/errors.hpp"

namespace ivg {

namespace {

class OrientationSearch {
 public:
  OrientationSearch(const Graph& g, std::optional<std::size_t> limit)
      : g_(g), n_(g.size()), limit_(limit), rel_(n_ * n_, 0) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v = u + 1; v < n_; ++v) {
        if (!g_.has_edge(u, v)) open_pairs_.emplace_back(u, v);
      }
    }
  }

  void run() { descend(0); }
  bool truncated() const { return truncated_; }
  std::set<std::vector<unsigned char>>& found() { return found_; }

 private:
  bool at(Vertex u, Vertex v) const { return rel_[u * n_ + v] != 0; }

  // Adds u < v and everything transitivity forces. False on a conflict:
  // a cycle, or a forced relation between graph-adjacent vertices.
  bool add(Vertex u, Vertex v) {
    if (at(v, u)) return false;
    if (at(u, v)) return true;
    std::vector<Vertex> below{u}, above{v};
    for (Vertex x = 0; x < n_; ++x) {
      if (at(x, u)) below.push_back(x);
      if (at(v, x)) above.push_back(x);
    }
    for (Vertex p : below) {
      for (Vertex s : above) {
        if (p == s || g_.has_edge(p, s) || at(s, p)) return false;
        rel_[p * n_ + s] = 1;
      }
    }
    return true;
  }

  void descend(std::size_t from) {
    if (truncated_) return;
    while (from < open_pairs_.size() &&
           (at(open_pairs_[from].first, open_pairs_[from].second) ||
            at(open_pairs_[from].second, open_pairs_[from].first))) {
      ++from;
    }
    if (from == open_pairs_.size()) {
      found_.insert(rel_);
      if (limit_ && found_.size() >= *limit_) truncated_ = true;
      return;
    }
    const auto [u, v] = open_pairs_[from];
    for (const auto& [x, y] : {Edge{u, v}, Edge{v, u}}) {
      const std::vector<unsigned char> saved = rel_;
      if (add(x, y)) descend(from + 1);
      rel_ = saved;
      if (truncated_) return;
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::optional<std::size_t> limit_;
  std::vector<unsigned char> rel_;
  std::vector<Edge> open_pairs_;
  std::set<std::vector<unsigned char>> found_;
  bool truncated_ = false;
};

}  // namespace

OrientationSet enumerate_associated_orders(const Graph& g, OracleOptions options) {
  if (g.size() > options.max_n) {
    throw InputError("oracle refuses graphs with more than " +
                     std::to_string(options.max_n) + " vertices");
  }
  OrientationSearch search(g, options.limit);
  search.run();

  OrientationSet out;
  out.exhaustive = !search.truncated();
  const std::size_t n = g.size();
  for (const auto& rel : search.found()) {
    std::vector<Edge> pairs;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (rel[u * n + v]) pairs.emplace_back(u, v);
      }
    }
    out.orders.push_back(StrictPartialOrder::from_pairs(n, pairs));
  }
  std::sort(out.orders.begin(), out.orders.end());
  std::size_t self_dual = 0;
  std::size_t paired = 0;
  for (const auto& o : out.orders) {
    const auto d = o.dual();
    if (d == o) {
      ++self_dual;
    } else if (std::binary_search(out.orders.begin(), out.orders.end(), d)) {
      ++paired;
    } else {
      ++self_dual;  // dual not reached (truncated run): a class of its own
    }
  }
  out.dual_classes = self_dual + paired / 2;
  return out;
}

bool oracle_unique(const Graph& g, std::size_t max_n, bool expect_orderable) {
  // Three distinct orders already span at least two duality classes.
  const OrientationSet set = enumerate_associated_orders(g, {max_n, 3});
  if (set.orders.empty()) {
    if (expect_orderable) {
      throw InternalInconsistency("no partial order is associated to the graph");
    }
    return false;
  }
  return set.dual_classes == 1;
}

}  // namespace ivg
