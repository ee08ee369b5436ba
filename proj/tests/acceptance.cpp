// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "evc/cli.hpp"
#include "evc/errors.hpp"
#include "evc/families.hpp"
#include "evc/melon_evc.hpp"
#include "evc/oracle.hpp"
#include "evc/sp_tree.hpp"

using namespace evc;

namespace {

using Lengths = std::vector<std::size_t>;
using Clock = std::chrono::steady_clock;

// Tolerances. Every numeric comparison below is exact.
constexpr std::size_t kEvcTolerance = 0;
constexpr std::size_t kC1MaxVertices = 12;
constexpr std::size_t kC1MaxPaths = 5;
constexpr std::size_t kC1MaxLength = 9;
constexpr std::size_t kC2MinInstances = 20;
constexpr std::size_t kC2EvenMaxVertices = 12;
constexpr std::size_t kC2OracleMaxVertices = 14;
constexpr std::size_t kC3MaxVertices = 14;
constexpr std::size_t kC4MaxVertices = 14;
constexpr std::size_t kC5G2Limit = 21;
constexpr std::size_t kC6MaxLeaves = 7;

int failures = 0;

void report(int id, bool ok, const std::string& detail, Clock::time_point start) {
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  std::printf("%s criterion %d: %s (%.1fs)\n", ok ? "PASS" : "FAIL", id, detail.c_str(), secs);
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string show(const Lengths& lengths) {
  std::string s = "[";
  for (std::size_t i = 0; i < lengths.size(); ++i) s += (i ? "," : "") + std::to_string(lengths[i]);
  return s + "]";
}

std::size_t vertices_of(const Lengths& lengths) {
  std::size_t n = 2;
  for (std::size_t len : lengths) n += len - 1;
  return n;
}

/// Nondecreasing length lists with at most one unit path and at most
/// `max_vertices` vertices.
std::vector<Lengths> melons(std::size_t max_paths, std::size_t max_len, std::size_t max_vertices) {
  std::vector<Lengths> out;
  Lengths cur;
  std::function<void(std::size_t)> rec = [&](std::size_t lo) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_paths) return;
    for (std::size_t len = lo; len <= max_len; ++len) {
      if (len == 1 && !cur.empty() && cur.front() == 1) continue;
      cur.push_back(len);
      if (vertices_of(cur) <= max_vertices) rec(len);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

struct BoundRecord {
  std::string name;
  std::size_t vc;
  std::size_t evc;
};
std::vector<BoundRecord> oracle_solved;

oracle::ExactResult solve_exact(const std::string& name, const Graph& g,
                                std::size_t max_vertices = oracle::kDefaultOracleLimit) {
  oracle::OracleLimits limits;
  limits.max_vertices = max_vertices;
  auto r = oracle::evc_exact(g, limits);
  oracle_solved.push_back({name, r.vc, r.evc});
  return r;
}

void criterion1() {
  const auto start = Clock::now();
  std::size_t count = 0;
  std::string first_bad;
  for (const Lengths& lengths : melons(kC1MaxPaths, kC1MaxLength, kC1MaxVertices)) {
    auto mg = families::melon_graph(lengths);
    const auto claimed = melon::evc_melon(mg.melon);
    const auto exact = solve_exact(show(lengths), mg.graph);
    const std::size_t tau = min_vertex_covers_bruteforce(mg.graph).size;
    const std::size_t diff = claimed.evc > exact.evc ? claimed.evc - exact.evc : exact.evc - claimed.evc;
    if ((diff > kEvcTolerance || claimed.vc != tau) && first_bad.empty()) {
      first_bad = show(lengths) + " claimed " + std::to_string(claimed.evc) + " exact " +
                  std::to_string(exact.evc) + " vc " + std::to_string(claimed.vc) + "/" + std::to_string(tau);
    }
    ++count;
  }
  report(1, first_bad.empty(),
         "evc_melon = evc_exact and vc = brute force on " + std::to_string(count) + " melons" +
             (first_bad.empty() ? "" : "; first mismatch " + first_bad),
         start);
}

void criterion2() {
  const auto start = Clock::now();
  using melon::CaseTag;
  std::map<CaseTag, std::size_t> count;
  std::string bad;
  for (const Lengths& lengths : melons(12, kC1MaxLength, kC2OracleMaxVertices)) {
    if (lengths.size() < 3) continue;
    auto mg = families::melon_graph(lengths);
    const auto r = melon::evc_melon(mg.melon);
    const std::size_t n = mg.graph.vertex_count();
    std::size_t expected = 0;
    switch (r.case_tag) {
      case CaseTag::Odd:
        expected = n / 2;
        break;
      case CaseTag::Even: {
        if (n > kC2EvenMaxVertices) continue;
        auto mins = min_vertex_covers_bruteforce(mg.graph);
        const bool unique = mins.covers.size() == 1 && mins.covers.front().contains(0) &&
                            mins.covers.front().contains(1);
        if (!unique && bad.empty()) bad = show(lengths) + " minimum cover not unique";
        expected = mins.size + 1;
        break;
      }
      case CaseTag::MixedBoth:
      case CaseTag::MixedOneOdd:
        expected = r.vc + 1;
        break;
      case CaseTag::MixedOneEven:
        expected = r.vc;
        break;
      default:
        continue;
    }
    const auto exact = solve_exact(show(lengths), mg.graph);
    if ((r.evc != expected || exact.evc != expected) && bad.empty()) {
      bad = show(lengths) + " formula " + std::to_string(expected) + " evc_melon " + std::to_string(r.evc) +
            " exact " + std::to_string(exact.evc);
    }
    ++count[r.case_tag];
  }
  std::string detail;
  bool ok = bad.empty();
  for (CaseTag tag : {CaseTag::Odd, CaseTag::Even, CaseTag::MixedBoth, CaseTag::MixedOneOdd, CaseTag::MixedOneEven}) {
    detail += std::string(melon::to_string(tag)) + "=" + std::to_string(count[tag]) + " ";
    ok = ok && count[tag] >= kC2MinInstances;
  }
  report(2, ok, "case formulas match oracle; instances " + detail + (bad.empty() ? "" : "; " + bad), start);
}

void criterion3() {
  const auto start = Clock::now();
  std::size_t melons_checked = 0;
  std::size_t pairs = 0;
  std::set<melon::CaseTag> cases;
  std::string bad;
  for (const Lengths& lengths : melons(12, kC3MaxVertices - 1, kC3MaxVertices)) {
    auto mg = families::melon_graph(lengths);
    melon::StrategyClass sc(mg.melon);
    auto rep = oracle::verify_class(mg.graph, sc);
    if (!rep.ok && bad.empty()) {
      bad = show(lengths) + " " + to_string(rep.failures.front().config) + " " +
            to_string(rep.failures.front().edge) + " " + rep.failures.front().reason;
    }
    pairs += rep.checked;
    cases.insert(sc.case_tag());
    ++melons_checked;
  }
  const bool all_five = cases.count(melon::CaseTag::Odd) && cases.count(melon::CaseTag::Even) &&
                        cases.count(melon::CaseTag::MixedBoth) && cases.count(melon::CaseTag::MixedOneOdd) &&
                        cases.count(melon::CaseTag::MixedOneEven);
  report(3, bad.empty() && all_five,
         "closure on " + std::to_string(melons_checked) + " melons, " + std::to_string(pairs) +
             " (configuration, edge) pairs" + (bad.empty() ? "" : "; failure " + bad),
         start);
}

void criterion4() {
  const auto start = Clock::now();
  std::size_t melons_checked = 0;
  std::size_t edges = 0;
  std::string bad;
  for (const Lengths& lengths : melons(12, kC4MaxVertices - 1, kC4MaxVertices)) {
    if (lengths.size() < 2) continue;
    if (std::any_of(lengths.begin(), lengths.end(), [](std::size_t l) { return l % 2 == 0; })) continue;
    auto mg = families::melon_graph(lengths);
    for (const Edge& e : mg.graph.edges()) {
      auto m = melon::matching_through_edge(mg.melon, e);
      std::vector<int> hits(mg.graph.vertex_count(), 0);
      bool ok = std::find(m.begin(), m.end(), e) != m.end();
      for (const Edge& f : m) {
        ok = ok && mg.graph.has_edge(f.u, f.v);
        ++hits[f.u];
        ++hits[f.v];
      }
      ok = ok && std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
      if (!ok && bad.empty()) bad = show(lengths) + " edge " + to_string(e);
      ++edges;
    }
    ++melons_checked;
  }
  report(4, bad.empty(),
         "perfect matching through every edge of " + std::to_string(melons_checked) + " odd melons (" +
             std::to_string(edges) + " edges)" + (bad.empty() ? "" : "; failure " + bad),
         start);
}

/// Smallest |C| over covers C containing every hub, the source and the sink,
/// with each hub having a guarded neighbor. Exhaustive branching over the
/// neighbor chosen for each hub.
std::size_t min_hub_guarded_cover(const families::GkGraph& gk) {
  std::set<Vertex> base(gk.hubs.begin(), gk.hubs.end());
  base.insert(0);
  base.insert(1);
  std::size_t best = gk.graph.vertex_count() + 1;
  std::vector<Vertex> chosen;
  std::function<void(std::size_t)> dfs = [&](std::size_t i) {
    std::set<Vertex> c = base;
    c.insert(chosen.begin(), chosen.end());
    std::size_t unsatisfied = 0;
    for (std::size_t j = i; j < gk.hubs.size(); ++j) {
      const auto& nb = gk.graph.neighbors(gk.hubs[j]);
      if (std::none_of(nb.begin(), nb.end(), [&](Vertex w) { return c.count(w); })) ++unsatisfied;
    }
    if (c.size() + unsatisfied >= best) return;
    if (i == gk.hubs.size()) {
      best = c.size();
      return;
    }
    const auto& nb = gk.graph.neighbors(gk.hubs[i]);
    if (std::any_of(nb.begin(), nb.end(), [&](Vertex w) { return c.count(w); })) {
      dfs(i + 1);
      return;
    }
    for (Vertex w : nb) {
      chosen.push_back(w);
      dfs(i + 1);
      chosen.pop_back();
    }
  };
  dfs(0);
  return best;
}

void criterion5() {
  const auto start = Clock::now();
  std::vector<std::string> problems;
  for (std::size_t k = 2; k <= 6; ++k) {
    auto gk = families::g_k(k);
    const std::size_t vc = sp::vc_sp(gk.tree);
    if (vc != k + 2) problems.push_back("vc_sp(G_" + std::to_string(k) + ")=" + std::to_string(vc));
  }
  for (std::size_t k = 2; k <= 3; ++k) {
    auto gk = families::g_k(k);
    auto mins = min_vertex_covers_bruteforce(gk.graph, gk.graph.vertex_count());
    std::vector<Vertex> expected = gk.hubs;
    expected.push_back(0);
    expected.push_back(1);
    if (mins.size != k + 2 || mins.covers.size() != 1 || mins.covers.front() != Configuration(expected)) {
      problems.push_back("minimum cover of G_" + std::to_string(k) + " not unique");
    }
  }
  auto g2 = families::g_k(2);
  oracle::OracleLimits limits;
  limits.max_vertices = kC5G2Limit;
  const auto five = oracle::safe_set(g2.graph, 5, limits);
  if (!five.configs.empty()) problems.push_back("safe_set(G_2,5) has " + std::to_string(five.configs.size()));
  oracle_solved.push_back({"G_2 (lower bound)", g2.expected_vc, 6});
  for (std::size_t k = 3; k <= 6; ++k) {
    auto gk = families::g_k(k);
    const std::size_t m = min_hub_guarded_cover(gk);
    if (m < 2 * k + 2) {
      problems.push_back("G_" + std::to_string(k) + " has a hub-guarded cover of size " + std::to_string(m));
    }
  }
  std::string detail = "vc_sp(G_k)=k+2 for k=2..6, unique minimum cover for k=2,3, safe_set(G_2,5) empty, "
                       "hub-guarded covers need 2k+2 guards for k=3..6";
  for (const auto& p : problems) detail += "; " + p;
  report(5, problems.empty(), detail, start);
}

/// Every binary SP tree with exactly `leaves` leaves.
const std::vector<sp::SPTree>& all_trees(std::size_t leaves) {
  static std::map<std::size_t, std::vector<sp::SPTree>> memo;
  if (auto it = memo.find(leaves); it != memo.end()) return it->second;
  std::vector<sp::SPTree> out;
  if (leaves == 1) {
    out.push_back(sp::SPTree::leaf());
  } else {
    for (std::size_t left = 1; left < leaves; ++left) {
      for (const auto& a : all_trees(left)) {
        for (const auto& b : all_trees(leaves - left)) {
          out.push_back(sp::SPTree::series(a, b));
          out.push_back(sp::SPTree::parallel(a, b));
        }
      }
    }
  }
  return memo[leaves] = std::move(out);
}

void criterion6() {
  const auto start = Clock::now();
  std::string bad;
  std::size_t melon_count = 0;
  for (const Lengths& lengths : melons(8, 9, 20)) {
    if (sp::alt(sp::melon_tree(lengths)) > 1 && bad.empty()) bad = "alt of melon " + show(lengths);
    ++melon_count;
  }
  std::set<std::string> canonical_seen;
  std::size_t low_alt = 0;
  for (std::size_t leaves = 1; leaves <= kC6MaxLeaves; ++leaves) {
    for (const auto& t : all_trees(leaves)) {
      const auto canon = sp::canonicalize(t);
      if (!canonical_seen.insert(sp::to_string(canon)).second) continue;
      if (sp::alt(canon) > 1) continue;
      Graph g;
      try {
        g = sp::realize(t).graph;
      } catch (const MultiEdgeError&) {
        continue;
      }
      ++low_alt;
      if (!sp::recognize_melon(g).has_value() && bad.empty()) bad = "not a melon: " + sp::to_string(t);
    }
  }
  report(6, bad.empty(),
         "alt <= 1 on " + std::to_string(melon_count) + " melon expressions; " + std::to_string(low_alt) +
             " simple alt <= 1 realizations among " + std::to_string(canonical_seen.size()) +
             " canonical expressions recognized" + (bad.empty() ? "" : "; " + bad),
         start);
}

void criterion7() {
  const auto start = Clock::now();
  std::mt19937 rng(2024);
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = 2 + rng() % 9;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(static_cast<Vertex>(rng() % v), v);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (rng() % 4 == 0 && std::find(edges.begin(), edges.end(), std::pair{a, b}) == edges.end()) {
          edges.emplace_back(a, b);
        }
      }
    }
    solve_exact("random " + std::to_string(round), Graph::build(n, edges));
  }
  std::string bad;
  for (const auto& r : oracle_solved) {
    if ((r.evc < r.vc || r.evc > 2 * r.vc) && bad.empty()) bad = r.name;
  }
  report(7, bad.empty(),
         "vc <= evc <= 2 vc on " + std::to_string(oracle_solved.size()) + " oracle-solved instances" +
             (bad.empty() ? "" : "; violated by " + bad),
         start);
}

void criterion8() {
  const auto start = Clock::now();
  std::vector<std::string> mismatches;
  for (std::size_t n = 2; n <= 10; ++n) {
    const std::size_t expected = n == 2 ? 1 : n / 2 + 1;
    const std::size_t got = solve_exact("P_" + std::to_string(n), families::path_graph(n)).evc;
    if (got != expected) {
      mismatches.push_back("P_" + std::to_string(n) + " oracle " + std::to_string(got) + " vs " +
                           std::to_string(expected));
    }
  }
  for (std::size_t n = 3; n <= 10; ++n) {
    const std::size_t expected = (n + 1) / 2;
    const std::size_t got = solve_exact("C_" + std::to_string(n), families::cycle_graph(n)).evc;
    if (got != expected) {
      mismatches.push_back("C_" + std::to_string(n) + " oracle " + std::to_string(got) + " vs " +
                           std::to_string(expected));
    }
  }
  std::string detail = "paths floor(n/2)+1 (n=3..10), P_2 = 1, cycles ceil(n/2) (n=3..10)";
  for (const auto& m : mismatches) detail += "; " + m;
  report(8, mismatches.empty(), detail, start);
}

std::string run_all_commands() {
  const std::vector<std::vector<std::string>> commands{
      {"solve", "--melon", "3,3,3"},
      {"solve", "--melon", "2,2,2"},
      {"solve", "--melon", "2,2,3,3"},
      {"solve", "--melon", "1,4,5"},
      {"oracle", "--melon", "2,2,3", "--dump"},
      {"oracle", "--melon", "2,3,3"},
      {"verify", "--melon", "2,2,3,3"},
      {"verify", "--melon", "2,3,3", "--oracle-cross-check"},
      {"verify", "--melon", "5"},
      {"gen", "gk", "2"},
      {"gen", "melon", "2,3,4"},
      {"alt", "--melon", "2,4,6"},
      {"alt", "--sp", "S(P(S(e,e),S(e,e)),P(S(e,e),S(e,e)))"},
      {"play", "--melon", "3,3,3", "--seed", "7"},
      {"play", "--melon", "2,3", "--defender", "oracle", "--seed", "5"},
  };
  std::string all;
  for (const auto& args : commands) {
    std::ostringstream out;
    std::ostringstream err;
    std::istringstream in("show\nauto 100\nlog\nquit\n");
    const int code = cli::run(args, out, err, in);
    all += std::to_string(code) + "\n" + out.str();
  }
  return all;
}

void criterion9() {
  const auto start = Clock::now();
  const std::string first = run_all_commands();
  const std::string second = run_all_commands();
  report(9, first == second,
         "two runs of 15 commands produce identical output (" + std::to_string(first.size()) + " bytes)", start);
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                    criterion6, criterion7, criterion8, criterion9};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& ex) {
      std::printf("FAIL criterion %zu: exception %s\n", i + 1, ex.what());
      ++failures;
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
