#include "ivg/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iterator>
#include <sstream>

#include "ivg/errors.hpp"
#include "ivg/gadgets.hpp"
#include "ivg/json_io.hpp"
#include "ivg/oracle.hpp"
#include "ivg/orderability.hpp"
#include "ivg/recognition.hpp"
#include "ivg/selftest.hpp"

namespace ivg::cli {

namespace {

using io::json;

struct Config {
  std::string format = "json";
  bool json_output = false;
  std::uint64_t seed = selftest::Options{}.seed;
  std::size_t max_n = 12;
  std::vector<std::uint64_t> f;
  std::optional<std::size_t> stages;
  bool enumerate = false;
  std::string path;
};

std::string read_input(const Config& cfg, std::istream& in) {
  if (cfg.path.empty() || cfg.path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(cfg.path, std::ios::binary);
  if (!file) throw InputError("cannot open " + cfg.path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Graph load_graph(const Config& cfg, std::istream& in) {
  return io::parse_graph(read_input(cfg, in),
                         cfg.format == "edgelist" ? io::GraphFormat::edgelist : io::GraphFormat::json);
}

// Text mode: one "key: value" line per top-level field.
std::string render(const json& j, bool as_json) {
  if (as_json) return j.dump(2) + "\n";
  std::string out;
  for (const auto& [key, value] : j.items()) {
    out += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  return out;
}

Result emit(int code, const json& j, const Config& cfg) {
  return {code, render(j, cfg.json_output), ""};
}

Result cmd_recognize(const Config& cfg, std::istream& in) {
  const Graph g = load_graph(cfg, in);
  const Recognition r = recognize(g);
  if (const auto* rep = std::get_if<ClosedRepresentation>(&r)) {
    return emit(positive, {{"interval", true}, {"representation", io::representation_to_json(*rep)}},
                cfg);
  }
  return emit(negative,
              {{"interval", false}, {"obstruction", io::obstruction_to_json(g, std::get<Obstruction>(r))}},
              cfg);
}

Result cmd_decide(const Config& cfg, std::istream& in) {
  const Graph g = load_graph(cfg, in);
  try {
    const UniquenessVerdict v = decide_unique(g);
    return emit(v.unique ? positive : negative, io::verdict_to_json(g, v), cfg);
  } catch (const NotIntervalGraph& e) {
    Result r = emit(input_error,
                    {{"error", e.what()}, {"obstruction", io::obstruction_to_json(g, e.obstruction())}},
                    cfg);
    r.err = std::string("error: ") + e.what() + "\n";
    return r;
  }
}

Result cmd_buried(const Config& cfg, std::istream& in) {
  const Graph g = load_graph(cfg, in);
  const auto cert = find_buried(g);
  if (!cert) return emit(negative, {{"buried", nullptr}}, cfg);
  return emit(positive, {{"buried", io::buried_to_json(g, *cert)}}, cfg);
}

Result cmd_wq(const Config& cfg, std::istream& in) {
  const Graph g = load_graph(cfg, in);
  const WQGraph wq = build_wq(g);
  return emit(wq.component_count() == 2 ? positive : negative, io::wq_to_json(wq), cfg);
}

Result cmd_orders(const Config& cfg, std::istream& in) {
  const Graph g = load_graph(cfg, in);
  const OrientationSet set = enumerate_associated_orders(g, {cfg.max_n, std::nullopt});
  if (set.orders.empty() && is_interval_graph(g)) {
    throw InternalInconsistency("interval graph without an associated order");
  }
  return emit(set.dual_classes == 1 ? positive : negative,
              io::orientation_set_to_json(g, set, cfg.enumerate), cfg);
}

Result cmd_gadget(const Config& cfg) {
  if (cfg.f.empty()) throw InputError("gadget needs --f");
  const GadgetOutput out = aca_gadget({cfg.f, cfg.stages.value_or(cfg.f.size())});
  return emit(positive, io::gadget_to_json(out), cfg);
}

Result cmd_selftest(const Config& cfg) {
  std::string text;
  json lines = json::array();
  bool ok = true;
  selftest::run_acceptance({cfg.seed}, [&](const selftest::CriterionResult& r) {
    ok = ok && r.passed;
    text += selftest::format_line(r) + "\n";
    lines.push_back({{"id", r.id},
                     {"title", r.title},
                     {"passed", r.passed},
                     {"checked", r.checked},
                     {"failures", r.failures},
                     {"seconds", r.seconds},
                     {"detail", r.detail}});
  });
  Result r{ok ? positive : negative, "", ""};
  r.out = cfg.json_output ? json{{"passed", ok}, {"criteria", lines}}.dump(2) + "\n" : text;
  return r;
}

}  // namespace

Result run(const std::vector<std::string>& args, std::istream& in) {
  Config cfg;
  CLI::App app{"Interval graph recognition and unique orderability"};
  app.name("ivg");
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool takes_graph) {
    sub->add_flag("--json", cfg.json_output, "Emit JSON instead of text");
    if (takes_graph) {
      sub->add_option("--format", cfg.format, "Input format")
          ->check(CLI::IsMember({"json", "edgelist"}));
      sub->add_option("path", cfg.path, "Input file (default: stdin)");
    }
  };
  auto* recognize_cmd = app.add_subcommand("recognize", "Recognize an interval graph");
  auto* decide_cmd = app.add_subcommand("decide", "Decide unique orderability");
  auto* buried_cmd = app.add_subcommand("buried", "Search for a buried subgraph");
  auto* wq_cmd = app.add_subcommand("wq", "Components of the (W,Q) graph");
  auto* orders_cmd = app.add_subcommand("orders", "Brute-force associated orders");
  auto* gadget_cmd = app.add_subcommand("gadget", "Build a staged gadget graph");
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
  for (auto* sub : {recognize_cmd, decide_cmd, buried_cmd, wq_cmd, orders_cmd}) add_common(sub, true);
  add_common(gadget_cmd, false);
  add_common(selftest_cmd, false);
  orders_cmd->add_option("--max-n", cfg.max_n, "Refuse graphs larger than this")
      ->check(CLI::Range(std::size_t{1}, std::size_t{16}));
  orders_cmd->add_flag("--enumerate", cfg.enumerate, "List every order");
  gadget_cmd->add_option("--f", cfg.f, "Injective function values")->delimiter(',')->required();
  gadget_cmd->add_option("--stages", cfg.stages, "Number of stages (default: length of f)");
  selftest_cmd->add_option("--seed", cfg.seed, "Random seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {positive, app.help(), ""};
  } catch (const CLI::ParseError& e) {
    return {input_error, "", std::string("error: ") + e.what() + "\n"};
  }

  try {
    if (recognize_cmd->parsed()) return cmd_recognize(cfg, in);
    if (decide_cmd->parsed()) return cmd_decide(cfg, in);
    if (buried_cmd->parsed()) return cmd_buried(cfg, in);
    if (wq_cmd->parsed()) return cmd_wq(cfg, in);
    if (orders_cmd->parsed()) return cmd_orders(cfg, in);
    if (gadget_cmd->parsed()) return cmd_gadget(cfg);
    return cmd_selftest(cfg);
  } catch (const InternalInconsistency& e) {
    return {inconsistency, "", std::string("internal inconsistency: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return {input_error, "", std::string("error: ") + e.what() + "\n"};
  } catch (const json::exception& e) {
    return {input_error, "", std::string("error: ") + e.what() + "\n"};
  } catch (const std::exception& e) {
    return {inconsistency, "", std::string("internal error: ") + e.what() + "\n"};
  }
}

}  // namespace ivg::cli
