#include <gtest/gtest.h>

#include <sstream>

#include "ivg/cli.hpp"
#include "ivg/json_io.hpp"
#include "ivg/orderability.hpp"
#include "ivg/recognition.hpp"

namespace {

using namespace ivg;
using io::json;

const char* kDiamond =
    R"({"n":4,"edges":[[0,1],[0,3],[1,2],[1,3],[2,3]],"labels":{"0":"a","1":"b","2":"c","3":"d"}})";
const char* kNet = R"({"n":6,"edges":[[0,1],[0,2],[1,2],[0,3],[1,4],[2,5]]})";
const char* kStar = R"({"n":4,"edges":[[0,1],[0,2],[0,3]]})";

cli::Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  return cli::run(args, in);
}

TEST(Cli, DecideDiamond) {
  const auto r = run({"decide", "--json"}, kDiamond);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(json::parse(r.out), json::parse(R"({"unique":true,"order":[["a","c"]],"wq_components":2})"));
}

TEST(Cli, DecideStarIsNegativeWithCertificate) {
  const auto r = run({"decide", "--json"}, kStar);
  EXPECT_EQ(r.exit_code, 1);
  const json j = json::parse(r.out);
  const Graph g = io::parse_graph(kStar, io::GraphFormat::json);
  const OrderWitness w{io::order_from_json(g, j.at("witness").at("order1")),
                       io::order_from_json(g, j.at("witness").at("order2")),
                       {j["witness"]["triple"][0].get<Vertex>(), j["witness"]["triple"][1].get<Vertex>(),
                        j["witness"]["triple"][2].get<Vertex>()}};
  EXPECT_TRUE(validate_witness(g, w));
}

TEST(Cli, RecognizeNetGivesAsteroidalTriple) {
  const auto r = run({"recognize", "--json"}, kNet);
  EXPECT_EQ(r.exit_code, 1);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("interval"), false);
  const Graph g = io::parse_graph(kNet, io::GraphFormat::json);
  EXPECT_TRUE(validate_obstruction(g, io::obstruction_from_json(g, j.at("obstruction"))));
  EXPECT_EQ(j.at("obstruction").at("triple"), json::array({3, 4, 5}));
}

TEST(Cli, RecognizeDiamondRepresentationValidates) {
  const auto r = run({"recognize", "--json"}, kDiamond);
  EXPECT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_TRUE(verify_representation(io::parse_graph(kDiamond, io::GraphFormat::json),
                                    io::representation_from_json(j.at("representation"))));
}

TEST(Cli, DecideOnNonIntervalGraphIsInputError) {
  const auto r = run({"decide", "--json"}, kNet);
  EXPECT_EQ(r.exit_code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(json::parse(r.out).at("obstruction").at("kind"), "asteroidal_triple");
}

TEST(Cli, EdgeListInput) {
  const auto r = run({"wq", "--format", "edgelist"}, "4\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.out.find("wq_components: 2"), std::string::npos);
}

TEST(Cli, BuriedAndOrders) {
  EXPECT_EQ(run({"buried"}, kStar).exit_code, 0);
  EXPECT_EQ(run({"buried"}, kDiamond).exit_code, 1);
  const auto orders = run({"orders", "--json", "--enumerate"}, kStar);
  EXPECT_EQ(orders.exit_code, 1);
  const json j = json::parse(orders.out);
  EXPECT_EQ(j.at("count"), 6);
  EXPECT_EQ(j.at("dual_classes"), 3);
  EXPECT_EQ(j.at("orders").size(), 6u);
  EXPECT_EQ(run({"orders"}, kDiamond).exit_code, 0);
}

TEST(Cli, OrdersRespectsMaxN) {
  EXPECT_EQ(run({"orders", "--max-n", "3"}, kStar).exit_code, 2);
  EXPECT_EQ(run({"orders", "--max-n", "17"}, kStar).exit_code, 2);
}

TEST(Cli, Gadget) {
  const auto r = run({"gadget", "--f", "2,0,1", "--json"});
  EXPECT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("predicted_B"), json::parse(R"(["a","b","x0","y0","y1","y2"])"));
  EXPECT_EQ(j.at("predicted_R"), json::parse(R"(["r"])"));
  EXPECT_EQ(json::parse(run({"gadget", "--f", "2,0,1", "--stages", "1", "--json"}).out)
                .at("graph").at("n"),
            6);
  EXPECT_EQ(run({"gadget", "--f", "1,1"}).exit_code, 2);
  EXPECT_EQ(run({"gadget"}).exit_code, 2);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"decide"}, "{not json").exit_code, 2);
  EXPECT_EQ(run({"decide", "/nonexistent/graph.json"}).exit_code, 2);
  EXPECT_EQ(run({}).exit_code, 2);
  EXPECT_EQ(run({"frobnicate"}).exit_code, 2);
  EXPECT_EQ(run({"decide", "--format", "xml"}, kStar).exit_code, 2);
}

TEST(Cli, OutputIsDeterministic) {
  EXPECT_EQ(run({"decide", "--json"}, kStar).out, run({"decide", "--json"}, kStar).out);
  EXPECT_EQ(run({"gadget", "--f", "3,1,4,0"}).out, run({"gadget", "--f", "3,1,4,0"}).out);
}

}  // namespace
