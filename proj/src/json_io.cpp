#include "ivg/json_io.hpp"

#include <set>
#include <sstream>

#include "ivg/errors.hpp"

namespace ivg::io {

namespace {

json vertex_list(const Graph& g, const VertexSet& vs) {
  json out = json::array();
  for (Vertex v : vs) out.push_back(vertex_to_json(g, v));
  return out;
}

json pair_list(const Graph& g, const std::vector<Edge>& pairs) {
  json out = json::array();
  for (const auto& [u, v] : pairs) {
    out.push_back({vertex_to_json(g, u), vertex_to_json(g, v)});
  }
  return out;
}

std::size_t as_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw InputError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::size_t>();
}

}  // namespace

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n")) throw InputError("graph JSON needs \"n\"");
  const std::size_t n = as_index(j.at("n"), "n");
  Graph g(n);
  if (j.contains("edges")) {
    const json& edges = j.at("edges");
    if (!edges.is_array()) throw InputError("\"edges\" must be an array");
    for (const json& e : edges) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
      g.add_edge(as_index(e[0], "edge endpoint"), as_index(e[1], "edge endpoint"));
    }
  }
  if (j.contains("labels")) {
    const json& labels = j.at("labels");
    if (!labels.is_object()) throw InputError("\"labels\" must be an object");
    std::set<std::string> seen;
    for (const auto& [key, value] : labels.items()) {
      std::size_t v = 0;
      try {
        std::size_t used = 0;
        v = std::stoul(key, &used);
        if (used != key.size()) throw InputError("bad label key");
      } catch (const std::exception&) {
        throw InputError("label key '" + key + "' is not a vertex index");
      }
      if (!value.is_string()) throw InputError("labels must be strings");
      if (!seen.insert(value.get<std::string>()).second) {
        throw InputError("duplicate label '" + value.get<std::string>() + "'");
      }
      g.set_label(v, value.get<std::string>());
    }
  }
  return g;
}

json graph_to_json(const Graph& g) {
  json j{{"n", g.size()}, {"edges", json::array()}};
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  if (g.has_labels()) {
    json labels = json::object();
    for (const auto& [v, name] : g.labels()) labels[std::to_string(v)] = name;
    j["labels"] = labels;
  }
  return j;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<Graph> g;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> nums;
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        nums.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw InputError("");
      } catch (const std::exception&) {
        throw InputError("line " + std::to_string(line_no) + ": '" + tok +
                         "' is not an integer");
      }
    }
    if (nums.empty()) continue;
    for (long long x : nums) {
      if (x < 0) throw InputError("line " + std::to_string(line_no) + ": negative value");
    }
    if (!g) {
      if (nums.size() != 1) {
        throw InputError("line " + std::to_string(line_no) + ": expected vertex count");
      }
      g.emplace(static_cast<std::size_t>(nums[0]));
    } else {
      if (nums.size() != 2) {
        throw InputError("line " + std::to_string(line_no) + ": expected 'u v'");
      }
      g->add_edge(static_cast<Vertex>(nums[0]), static_cast<Vertex>(nums[1]));
    }
  }
  if (!g) throw InputError("edge list is empty");
  return *g;
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::edgelist) return parse_edge_list(text);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(j);
}

json vertex_to_json(const Graph& g, Vertex v) {
  auto it = g.labels().find(v);
  if (it != g.labels().end()) return it->second;
  return v;
}

Vertex vertex_from_json(const Graph& g, const json& j) {
  if (j.is_string()) {
    for (const auto& [v, name] : g.labels()) {
      if (name == j.get<std::string>()) return v;
    }
    throw InputError("unknown vertex label '" + j.get<std::string>() + "'");
  }
  const Vertex v = as_index(j, "vertex");
  if (v >= g.size()) throw InputError("vertex out of range");
  return v;
}

json rational_to_json(const Rational& r) {
  if (r.denominator() == 1) return r.numerator();
  return json::array({r.numerator(), r.denominator()});
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_array() && j.size() == 2 && j[0].is_number_integer() &&
      j[1].is_number_integer()) {
    const auto den = j[1].get<std::int64_t>();
    if (den == 0) throw InputError("zero denominator");
    return Rational(j[0].get<std::int64_t>(), den);
  }
  throw InputError("endpoint must be an integer or [numerator, denominator]");
}

json representation_to_json(const ClosedRepresentation& r) {
  json intervals = json::array();
  for (const auto& iv : r.intervals()) {
    intervals.push_back({rational_to_json(iv.left), rational_to_json(iv.right)});
  }
  return {{"n", r.size()}, {"intervals", intervals}};
}

ClosedRepresentation representation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("intervals") || !j.at("intervals").is_array()) {
    throw InputError("representation JSON needs an \"intervals\" array");
  }
  std::vector<Interval> iv;
  for (const json& e : j.at("intervals")) {
    if (!e.is_array() || e.size() != 2) throw InputError("interval must be a pair");
    iv.push_back({rational_from_json(e[0]), rational_from_json(e[1])});
  }
  if (j.contains("n") && as_index(j.at("n"), "n") != iv.size()) {
    throw InputError("\"n\" does not match the number of intervals");
  }
  return ClosedRepresentation(std::move(iv));
}

json order_to_json(const Graph& g, const StrictPartialOrder& o) {
  return pair_list(g, o.pairs());
}

StrictPartialOrder order_from_json(const Graph& g, const json& j) {
  if (!j.is_array()) throw InputError("order must be an array of pairs");
  std::vector<Edge> pairs;
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2) throw InputError("order entry must be a pair");
    pairs.emplace_back(vertex_from_json(g, e[0]), vertex_from_json(g, e[1]));
  }
  return StrictPartialOrder::from_pairs(g.size(), pairs);
}

json obstruction_to_json(const Graph& g, const Obstruction& obs) {
  if (obs.kind == Obstruction::Kind::chordless_cycle) {
    return {{"kind", "chordless_cycle"}, {"cycle", vertex_list(g, obs.cycle)}};
  }
  json paths = json::array();
  for (const Path& p : obs.at.paths) paths.push_back(vertex_list(g, p));
  return {{"kind", "asteroidal_triple"},
          {"triple", vertex_list(g, {obs.at.triple.begin(), obs.at.triple.end()})},
          {"witness_paths", paths}};
}

Obstruction obstruction_from_json(const Graph& g, const json& j) {
  auto read_list = [&](const json& arr) {
    if (!arr.is_array()) throw InputError("expected a vertex list");
    Path p;
    for (const json& x : arr) p.push_back(vertex_from_json(g, x));
    return p;
  };
  Obstruction obs;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "chordless_cycle") {
    obs.kind = Obstruction::Kind::chordless_cycle;
    obs.cycle = read_list(j.at("cycle"));
  } else if (kind == "asteroidal_triple") {
    obs.kind = Obstruction::Kind::asteroidal_triple;
    const Path t = read_list(j.at("triple"));
    if (t.size() != 3 || j.at("witness_paths").size() != 3) {
      throw InputError("asteroidal triple needs three vertices and three paths");
    }
    obs.at.triple = {t[0], t[1], t[2]};
    for (std::size_t i = 0; i < 3; ++i) obs.at.paths[i] = read_list(j.at("witness_paths")[i]);
  } else {
    throw InputError("unknown obstruction kind '" + kind + "'");
  }
  return obs;
}

json buried_to_json(const Graph& g, const BuriedCertificate& cert) {
  return {{"B", vertex_list(g, cert.B)},
          {"K", vertex_list(g, cert.K)},
          {"R", vertex_list(g, cert.R)},
          {"witness_nonedge", {vertex_to_json(g, cert.witness_nonedge.first),
                               vertex_to_json(g, cert.witness_nonedge.second)}},
          {"witness_outside", vertex_to_json(g, cert.witness_outside)}};
}

json verdict_to_json(const Graph& g, const UniquenessVerdict& v) {
  json j{{"unique", v.unique}};
  if (v.order) j["order"] = order_to_json(g, *v.order);
  if (v.witness) {
    j["witness"] = {{"order1", order_to_json(g, v.witness->first)},
                    {"order2", order_to_json(g, v.witness->second)},
                    {"triple", vertex_list(g, {v.witness->triple.begin(),
                                               v.witness->triple.end()})}};
  }
  if (v.buried) j["buried"] = buried_to_json(g, *v.buried);
  j["wq_components"] = v.wq_components;
  return j;
}

json wq_to_json(const WQGraph& wq) {
  const Graph& g = wq.base();
  json comps = json::array();
  for (const auto& members : wq.component_members()) comps.push_back(pair_list(g, members));
  return {{"pairs", wq.pairs().size()},
          {"components", comps},
          {"wq_components", wq.component_count()}};
}

json orientation_set_to_json(const Graph& g, const OrientationSet& set, bool list_orders) {
  json j{{"count", set.orders.size()},
         {"dual_classes", set.dual_classes},
         {"unique", set.dual_classes == 1}};
  if (list_orders) {
    json orders = json::array();
    for (const auto& o : set.orders) orders.push_back(order_to_json(g, o));
    j["orders"] = orders;
  }
  return j;
}

json gadget_to_json(const GadgetOutput& out) {
  const Graph& g = out.graph;
  return {{"graph", graph_to_json(g)},
          {"representation", representation_to_json(out.representation)},
          {"predicted_B", vertex_list(g, out.predicted_B)},
          {"predicted_K", vertex_list(g, out.predicted_K)},
          {"predicted_R", vertex_list(g, out.predicted_R)}};
}

}  // namespace ivg::io
