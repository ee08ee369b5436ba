#include "evc/melon_structure.hpp"

#include <algorithm>
#include <utility>

#include "evc/errors.hpp"

namespace evc::sp {

MelonStructure MelonStructure::from_paths(std::size_t vertex_count, Vertex source, Vertex sink,
                                          std::vector<std::vector<Vertex>> paths) {
  MelonStructure m;
  m.vertex_count = vertex_count;
  m.source = source;
  m.sink = sink;
  m.paths = std::move(paths);
  for (std::size_t i = 0; i < m.paths.size(); ++i) {
    (m.length(i) % 2 == 0 ? m.even_paths : m.odd_paths).push_back(i);
  }
  return m;
}

std::vector<std::size_t> MelonStructure::lengths() const {
  std::vector<std::size_t> out;
  out.reserve(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) out.push_back(length(i));
  return out;
}

std::size_t MelonStructure::edge_count() const {
  std::size_t m = 0;
  for (std::size_t i = 0; i < paths.size(); ++i) m += length(i);
  return m;
}

Graph MelonStructure::to_graph() const {
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(edge_count());
  for (const auto& path : paths) {
    for (std::size_t i = 0; i + 1 < path.size(); ++i) edges.emplace_back(path[i], path[i + 1]);
  }
  return Graph::build(vertex_count, edges);
}

namespace {

/// Follows degree-2 vertices from `start` through `first` until reaching a
/// vertex that is not an interior candidate.
std::vector<Vertex> walk(const Graph& g, Vertex start, Vertex first) {
  std::vector<Vertex> path{start, first};
  Vertex prev = start;
  Vertex cur = first;
  while (g.degree(cur) == 2 && cur != start) {
    const auto& nb = g.neighbors(cur);
    Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
    path.push_back(cur);
  }
  return path;
}

Vertex smallest_internal(const std::vector<Vertex>& path) {
  if (path.size() <= 2) return 0;
  return *std::min_element(path.begin() + 1, path.end() - 1);
}

void order_paths(std::vector<std::vector<Vertex>>& paths) {
  std::sort(paths.begin(), paths.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return smallest_internal(a) < smallest_internal(b);
  });
}

}  // namespace

std::optional<MelonStructure> recognize_melon(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraph();
  const std::size_t n = g.vertex_count();
  if (g.edge_count() == 0) return std::nullopt;

  std::vector<Vertex> irregular;
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < n; ++v) {
    max_degree = std::max(max_degree, g.degree(v));
    if (g.degree(v) != 2) irregular.push_back(v);
  }

  if (max_degree <= 2) {
    if (g.edge_count() + 1 == n) {
      // path: exactly two degree-1 endpoints
      Vertex s = irregular.front();
      std::vector<Vertex> path = walk(g, s, g.neighbors(s).front());
      Vertex t = path.back();
      return MelonStructure::from_paths(n, s, t, {std::move(path)});
    }
    // cycle through every vertex; split it at 0 and 1
    std::vector<std::vector<Vertex>> arcs;
    for (Vertex first : g.neighbors(0)) {
      std::vector<Vertex> arc{0};
      Vertex prev = 0;
      Vertex cur = first;
      arc.push_back(cur);
      while (cur != 1) {
        const auto& nb = g.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        arc.push_back(cur);
      }
      arcs.push_back(std::move(arc));
    }
    order_paths(arcs);
    return MelonStructure::from_paths(n, 0, 1, std::move(arcs));
  }

  if (irregular.size() != 2) return std::nullopt;
  const Vertex s = irregular[0];
  const Vertex t = irregular[1];
  if (g.degree(s) != g.degree(t) || g.degree(s) < 3) return std::nullopt;

  std::vector<std::vector<Vertex>> paths;
  std::size_t covered = 2;
  for (Vertex first : g.neighbors(s)) {
    std::vector<Vertex> path = walk(g, s, first);
    if (path.back() != t) return std::nullopt;
    covered += path.size() - 2;
    paths.push_back(std::move(path));
  }
  if (covered != n) return std::nullopt;
  order_paths(paths);
  return MelonStructure::from_paths(n, s, t, std::move(paths));
}

}  // namespace evc::sp
