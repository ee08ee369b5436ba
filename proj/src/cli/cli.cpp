#include "evc/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "evc/edge_list.hpp"
#include "evc/errors.hpp"
#include "evc/families.hpp"
#include "evc/melon_evc.hpp"
#include "evc/oracle.hpp"
#include "evc/sp_tree.hpp"

namespace evc::cli {
namespace {

using json = nlohmann::ordered_json;

/// Bad flags or unreadable input; mapped to the usage exit code.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::size_t> parse_lengths(const std::string& text) {
  std::vector<std::size_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char ch) { return std::isspace(ch); }),
               item.end());
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || ptr != item.data() + item.size() || value == 0) {
      throw UsageError("bad path length '" + item + "' in '" + text + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw UsageError("empty path length list");
  return out;
}

struct Input {
  Graph graph;
  std::optional<sp::MelonStructure> melon;
};

Input load(const std::string& melon, const std::string& edges, bool recognize) {
  if (melon.empty() == edges.empty()) throw UsageError("give exactly one of --melon or --edges");
  Input in;
  if (!melon.empty()) {
    const auto lengths = parse_lengths(melon);
    auto mg = families::melon_graph(lengths);
    in.graph = std::move(mg.graph);
    in.melon = std::move(mg.melon);
    return in;
  }
  in.graph = read_edge_list_file(edges);
  if (!in.graph.is_connected()) throw DisconnectedGraph();
  if (recognize) in.melon = sp::recognize_melon(in.graph);
  return in;
}

std::string family_of(const sp::MelonStructure& m) {
  if (m.k() == 1) return "path";
  if (m.k() == 2) return "cycle";
  return "melon";
}

json config_json(const Configuration& c) { return json(c.vertices()); }

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::istream& in;
  bool pretty = false;

  void emit(const json& j) const { out << (pretty ? j.dump(2) : j.dump()) << '\n'; }
};

int cmd_solve(const Context& ctx, const std::string& melon, const std::string& edges) {
  Input input = load(melon, edges, true);
  json j;
  j["vertices"] = input.graph.vertex_count();
  j["edge_count"] = input.graph.edge_count();
  if (!input.melon) {
    j["family"] = "unrecognized";
    if (input.graph.vertex_count() <= kDefaultBruteForceLimit) {
      j["vc"] = min_vertex_covers_bruteforce(input.graph).size;
    }
    ctx.emit(j);
    return kUnrecognized;
  }
  const melon::EvcResult r = melon::evc_melon(*input.melon);
  j["family"] = family_of(*input.melon);
  j["case"] = melon::to_string(r.case_tag);
  j["vc"] = r.vc;
  j["evc"] = r.evc;
  j["class_size"] = r.class_size;
  ctx.emit(j);
  return kOk;
}

oracle::OracleLimits limits_for(std::size_t max_n, double timeout) {
  oracle::OracleLimits limits;
  limits.max_vertices = max_n;
  limits.brute_force_limit = std::max(kDefaultBruteForceLimit, max_n);
  if (timeout > 0) {
    limits.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(timeout));
  }
  return limits;
}

int cmd_oracle(const Context& ctx, const std::string& melon, const std::string& edges,
               std::size_t max_n, double timeout, bool dump) {
  Input input = load(melon, edges, false);
  const auto limits = limits_for(max_n, timeout);
  const Graph& g = input.graph;
  std::optional<std::size_t> vc;
  std::optional<std::size_t> last_k;
  try {
    if (g.vertex_count() > limits.max_vertices) {
      throw LimitExceeded(std::to_string(g.vertex_count()) + " vertices exceeds the limit of " +
                          std::to_string(limits.max_vertices) + " (raise it with --max-n)");
    }
    vc = min_vertex_covers_bruteforce(g, limits.brute_force_limit).size;
    for (std::size_t k = *vc; k <= 2 * *vc; ++k) {
      oracle::SafeSet safe = oracle::safe_set(g, k, limits);
      last_k = k;
      if (safe.configs.empty()) continue;
      json j;
      j["vertices"] = g.vertex_count();
      j["edge_count"] = g.edge_count();
      j["vc"] = *vc;
      j["evc"] = k;
      j["safe_set_size"] = safe.configs.size();
      if (dump) {
        json all = json::array();
        for (const auto& c : safe.configs) all.push_back(config_json(c));
        j["safe_set"] = std::move(all);
      }
      ctx.emit(j);
      return kOk;
    }
    throw std::logic_error("no safe set within twice the vertex cover number");
  } catch (const LimitExceeded& ex) {
    ctx.err << "limit exceeded: " << ex.what();
    if (vc) ctx.err << "; vc = " << *vc;
    if (last_k) ctx.err << "; safe sets empty for k = " << *vc << ".." << *last_k;
    ctx.err << '\n';
    return kLimit;
  }
}

int cmd_verify(const Context& ctx, const std::string& melon, const std::string& edges,
               bool cross_check, std::size_t max_n) {
  Input input = load(melon, edges, true);
  if (!input.melon) {
    ctx.err << "error: the graph is not a melon, path or cycle\n";
    return kUnrecognized;
  }
  melon::StrategyClass sc(*input.melon);
  const oracle::VerificationReport report = oracle::verify_class(sc.graph(), sc);
  const melon::EvcResult r = melon::evc_melon(*input.melon);
  json j;
  j["case"] = melon::to_string(r.case_tag);
  j["vertices"] = sc.graph().vertex_count();
  j["edge_count"] = sc.graph().edge_count();
  j["class_size"] = report.class_size;
  j["checked"] = report.checked;
  bool ok = report.ok;
  if (cross_check) {
    const auto exact = oracle::evc_exact(sc.graph(), limits_for(max_n, 0));
    j["evc"] = r.evc;
    j["oracle_evc"] = exact.evc;
    ok = ok && exact.evc == r.evc && exact.vc == r.vc;
  }
  j["ok"] = ok;
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"config", config_json(f.config)},
                        {"edge", json::array({f.edge.u, f.edge.v})},
                        {"reason", f.reason}});
  }
  j["failures"] = std::move(failures);
  ctx.emit(j);
  return ok ? kOk : kVerifyFailed;
}

int cmd_play(const Context& ctx, const std::string& melon, const std::string& edges,
             const std::string& defender, std::uint64_t seed, std::size_t max_n) {
  Input input = load(melon, edges, defender == "strategy");
  std::shared_ptr<const DefenseFamily> family;
  if (defender == "strategy") {
    if (!input.melon) {
      ctx.err << "error: strategy mode needs a melon, path or cycle (try --defender oracle)\n";
      return kUnrecognized;
    }
    family = std::make_shared<melon::StrategyClass>(*input.melon);
  } else {
    try {
      auto exact = oracle::evc_exact(input.graph, limits_for(max_n, 0));
      family = std::make_shared<oracle::ExplicitFamily>(input.graph, exact.witness.configs);
    } catch (const LimitExceeded& ex) {
      ctx.err << "limit exceeded: " << ex.what() << '\n';
      return kLimit;
    }
  }
  PlaySession session(family, seed);
  ctx.out << "defender " << defender << "; configuration " << to_string(session.current()) << '\n';
  std::string line;
  try {
    while (std::getline(ctx.in, line)) {
      if (!session.execute(line, ctx.out)) break;
    }
  } catch (const DefenseError& ex) {
    ctx.err << "invalid defender move: " << ex.what() << '\n';
    return kVerifyFailed;
  }
  return kOk;
}

int cmd_gen(const Context& ctx, const std::string& kind, const std::string& param,
            const std::string& out_path) {
  Graph g;
  if (kind == "melon") {
    g = families::melon_graph(parse_lengths(param)).graph;
  } else if (kind == "gk") {
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), k);
    if (ec != std::errc() || ptr != param.data() + param.size()) {
      throw UsageError("bad k '" + param + "'");
    }
    g = families::g_k(k).graph;
  } else {
    throw UsageError("unknown family '" + kind + "' (melon or gk)");
  }
  if (out_path.empty()) {
    write_edge_list(ctx.out, g);
    return kOk;
  }
  std::ofstream file(out_path);
  if (!file) throw UsageError("cannot write '" + out_path + "'");
  write_edge_list(file, g);
  json j;
  j["vertices"] = g.vertex_count();
  j["edge_count"] = g.edge_count();
  j["out"] = out_path;
  ctx.emit(j);
  return kOk;
}

int cmd_alt(const Context& ctx, const std::string& expr, const std::string& melon) {
  if (expr.empty() == melon.empty()) throw UsageError("give exactly one of --sp or --melon");
  const sp::SPTree tree = expr.empty() ? families::melon_graph(parse_lengths(melon)).tree
                                       : sp::parse_sp(expr);
  ctx.out << sp::alt(tree) << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  CLI::App app{"Eternal vertex cover solver and verifier for melon and series-parallel graphs",
               "evc"};
  app.require_subcommand(1);
  Context ctx{out, err, in};
  app.add_flag("--pretty", ctx.pretty, "Indent structured output");

  std::string melon;
  std::string edges;
  std::string expr;
  std::string defender = "strategy";
  std::string kind;
  std::string param;
  std::string out_path;
  std::size_t max_n = oracle::kDefaultOracleLimit;
  double timeout = 0;
  bool dump = false;
  bool cross_check = false;
  std::uint64_t seed = 0;

  auto add_input = [&](CLI::App* sub) {
    auto* m = sub->add_option("--melon", melon, "Comma-separated path lengths, e.g. 2,3,3");
    auto* e = sub->add_option("--edges", edges, "Edge-list file");
    m->excludes(e);
  };

  auto* solve = app.add_subcommand("solve", "Eternal vertex cover number of a melon");
  add_input(solve);
  auto* orc = app.add_subcommand("oracle", "Exact game solver for small graphs");
  add_input(orc);
  orc->add_option("--max-n", max_n, "Vertex limit for the exact solver");
  orc->add_option("--timeout", timeout, "Seconds before giving up");
  orc->add_flag("--dump", dump, "Print the whole safe set");
  auto* verify = app.add_subcommand("verify", "Check closure of the strategy class");
  add_input(verify);
  verify->add_flag("--oracle-cross-check", cross_check, "Compare with the exact solver");
  verify->add_option("--max-n", max_n, "Vertex limit for the exact solver");
  auto* play = app.add_subcommand("play", "Interactive attacker loop reading commands from stdin");
  add_input(play);
  play->add_option("--defender", defender, "strategy or oracle")
      ->check(CLI::IsMember({"strategy", "oracle"}));
  play->add_option("--seed", seed, "Seed for auto attacks");
  play->add_option("--max-n", max_n, "Vertex limit for the oracle defender");
  auto* gen = app.add_subcommand("gen", "Write a generated graph as an edge list");
  gen->add_option("family", kind, "melon or gk")->required();
  gen->add_option("parameter", param, "Path lengths for melon, k for gk")->required();
  gen->add_option("--out", out_path, "Output file (default: standard output)");
  auto* alt = app.add_subcommand("alt", "Series/parallel alternation number");
  alt->add_option("--sp", expr, "SP expression, e.g. P(S(e,e),S(e,e))");
  alt->add_option("--melon", melon, "Comma-separated path lengths");
  for (auto* sub : {solve, orc, verify, play, gen, alt}) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(ctx, melon, edges);
    if (orc->parsed()) return cmd_oracle(ctx, melon, edges, max_n, timeout, dump);
    if (verify->parsed()) return cmd_verify(ctx, melon, edges, cross_check, max_n);
    if (play->parsed()) return cmd_play(ctx, melon, edges, defender, seed, max_n);
    if (gen->parsed()) return cmd_gen(ctx, kind, param, out_path);
    if (alt->parsed()) return cmd_alt(ctx, expr, melon);
  } catch (const LimitExceeded& ex) {
    err << "limit exceeded: " << ex.what() << '\n';
    return kLimit;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace evc::cli
