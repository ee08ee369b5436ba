#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "evc/errors.hpp"
#include "evc/families.hpp"
#include "evc/game.hpp"
#include "evc/sp_tree.hpp"

using namespace evc;
using namespace evc::families;

namespace {

bool has_cut_vertex(const Graph& g) {
  for (Vertex cut = 0; cut < g.vertex_count(); ++cut) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Edge& e : g.edges()) {
      if (e.has(cut)) continue;
      edges.emplace_back(e.u < cut ? e.u : e.u - 1, e.v < cut ? e.v : e.v - 1);
    }
    if (!Graph::build(g.vertex_count() - 1, edges).is_connected()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("melon_graph") {
  auto k23 = melon_graph(std::vector<std::size_t>{2, 2, 2});
  CHECK(k23.graph == Graph::build(5, {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}}));
  CHECK(k23.melon.paths[2] == std::vector<Vertex>{0, 4, 1});

  auto odd = melon_graph(std::vector<std::size_t>{3, 3, 3});
  CHECK(odd.graph.vertex_count() == 8);
  CHECK(odd.melon.paths[0] == std::vector<Vertex>{0, 2, 3, 1});

  auto mixed = melon_graph(std::vector<std::size_t>{3, 1, 2});
  CHECK(mixed.melon.lengths() == std::vector<std::size_t>{1, 2, 3});
  CHECK(mixed.melon.paths[1] == std::vector<Vertex>{0, 2, 1});

  CHECK_THROWS_AS(melon_graph(std::vector<std::size_t>{1, 1}), TwoUnitPaths);
  CHECK_THROWS_AS(melon_graph(std::vector<std::size_t>{}), std::invalid_argument);
  CHECK_THROWS_AS(melon_graph(std::vector<std::size_t>{2, 0}), std::invalid_argument);
}

TEST_CASE("melon_graph is consistent with recognition") {
  std::vector<std::vector<std::size_t>> cases{{1, 2, 3}, {4, 4, 2}, {5}, {1}, {3, 2}, {2, 2, 2, 3, 3}};
  for (const auto& lengths : cases) {
    auto mg = melon_graph(lengths);
    auto rec = sp::recognize_melon(mg.graph);
    REQUIRE(rec.has_value());
    CHECK(*rec == mg.melon);
    CHECK(mg.melon.to_graph() == mg.graph);
    CHECK(sp::realize(sp_expression_of(mg)).graph == mg.graph);
  }
  CHECK(sp::to_string(sp_expression_of(melon_graph(std::vector<std::size_t>{2, 2}))) ==
        "P(S(e,e),S(e,e))");
  CHECK(sp::to_string(sp_expression_of(melon_graph(std::vector<std::size_t>{2, 2, 2}))) ==
        "P(S(e,e),P(S(e,e),S(e,e)))");
}

TEST_CASE("g_k") {
  auto g2 = g_k(2);
  CHECK(g2.graph.vertex_count() == 21);
  CHECK(g2.expected_vc == 4);
  CHECK(g2.evc_lower_bound == 6);
  CHECK(g2.hubs == std::vector<Vertex>{2, 9});
  CHECK(g2.graph.degree(2) == 2 + 4);
  CHECK(sp::alt(sp_expression_of(g2)) == 3);  // P -> S -> P -> S

  auto g3 = g_k(3);
  CHECK(g3.graph.vertex_count() == 32);
  CHECK(g3.expected_vc == 5);
  CHECK(g3.evc_lower_bound == 8);

  CHECK_THROWS_AS(g_k(1), std::invalid_argument);

  for (std::size_t k = 2; k <= 5; ++k) {
    auto g = g_k(k);
    CHECK(g.graph.vertex_count() == 2 + (k + 3) + k * (k + 5));
    CHECK(sp::vc_sp(sp_expression_of(g)) == k + 2);
    CHECK(g.graph.is_connected());
    CHECK_FALSE(has_cut_vertex(g.graph));
    std::vector<Vertex> cover = g.hubs;
    cover.push_back(0);
    cover.push_back(1);
    CHECK(is_vertex_cover(g.graph, Configuration(cover)));
  }
}

TEST_CASE("paths and cycles") {
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(cycle_graph(5).degree(0) == 2);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
}
