#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "ivg/gadgets.hpp"
#include "ivg/graph.hpp"
#include "ivg/order.hpp"
#include "ivg/orderability.hpp"
#include "ivg/oracle.hpp"
#include "ivg/recognition.hpp"
#include "ivg/representation.hpp"

namespace ivg::io {

using json = nlohmann::ordered_json;

enum class GraphFormat { json, edgelist };

/// {"n": int, "edges": [[u,v],...], "labels": {"0": "a", ...}?}
Graph graph_from_json(const json& j);
json graph_to_json(const Graph& g);

/// First non-comment line holds n, each further line one "u v" pair;
/// everything after '#' is ignored.
Graph parse_edge_list(std::string_view text);

/// Throws InputError on malformed text.
Graph parse_graph(std::string_view text, GraphFormat format);

/// Vertices are written by label when they have one, by index otherwise.
json vertex_to_json(const Graph& g, Vertex v);
/// Accepts an index or a label.
Vertex vertex_from_json(const Graph& g, const json& j);

json rational_to_json(const Rational& r);
/// [numerator, denominator] or a bare integer.
Rational rational_from_json(const json& j);

/// {"n": int, "intervals": [[left, right], ...]}
json representation_to_json(const ClosedRepresentation& r);
ClosedRepresentation representation_from_json(const json& j);

json order_to_json(const Graph& g, const StrictPartialOrder& o);
StrictPartialOrder order_from_json(const Graph& g, const json& j);

json obstruction_to_json(const Graph& g, const Obstruction& obs);
Obstruction obstruction_from_json(const Graph& g, const json& j);

json buried_to_json(const Graph& g, const BuriedCertificate& cert);
json verdict_to_json(const Graph& g, const UniquenessVerdict& v);
json wq_to_json(const WQGraph& wq);
json orientation_set_to_json(const Graph& g, const OrientationSet& set, bool list_orders);
json gadget_to_json(const GadgetOutput& out);

}  // namespace ivg::io
