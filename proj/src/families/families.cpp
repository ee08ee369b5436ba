#include "evc/families.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "evc/errors.hpp"

namespace evc::families {

MelonGraph melon_graph(std::span<const std::size_t> lengths) {
  if (lengths.empty()) throw std::invalid_argument("a melon needs at least one path");
  std::vector<std::size_t> sorted(lengths.begin(), lengths.end());
  if (std::find(sorted.begin(), sorted.end(), std::size_t{0}) != sorted.end()) {
    throw std::invalid_argument("path lengths must be positive");
  }
  if (std::count(sorted.begin(), sorted.end(), std::size_t{1}) > 1) throw TwoUnitPaths();
  std::stable_sort(sorted.begin(), sorted.end());

  MelonGraph out;
  out.tree = sp::melon_tree(sorted);
  out.graph = sp::realize(out.tree).graph;

  std::vector<std::vector<Vertex>> paths;
  Vertex next = 2;
  for (std::size_t len : sorted) {
    std::vector<Vertex> p{0};
    for (std::size_t i = 1; i < len; ++i) p.push_back(next++);
    p.push_back(1);
    paths.push_back(std::move(p));
  }
  out.melon = sp::MelonStructure::from_paths(out.graph.vertex_count(), 0, 1, std::move(paths));
  return out;
}

GkGraph g_k(std::size_t k) {
  if (k < 2) throw std::invalid_argument("G_k is defined for k >= 2");
  std::vector<std::size_t> twos(k + 3, 2);
  const sp::SPTree h = sp::melon_tree(twos);
  const sp::SPTree h_prime = sp::SPTree::series(sp::chain(2), h);

  sp::SPTree tree = h;
  for (std::size_t i = 0; i < k; ++i) tree = sp::SPTree::parallel(h_prime, std::move(tree));

  GkGraph out;
  out.k = k;
  out.tree = tree;
  out.graph = sp::realize(tree).graph;
  for (std::size_t i = 0; i < k; ++i) out.hubs.push_back(static_cast<Vertex>(2 + i * (k + 5)));
  out.expected_vc = k + 2;
  out.evc_lower_bound = 2 * k + 2;
  return out;
}

sp::SPTree sp_expression_of(const MelonGraph& m) { return m.tree; }
sp::SPTree sp_expression_of(const GkGraph& g) { return g.tree; }

Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::build(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph::build(n, edges);
}

}  // namespace evc::families
