#include "evc/graph.hpp"

#include <algorithm>
#include <set>

#include "evc/errors.hpp"

namespace evc {

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

Graph Graph::build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list) {
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edge_list.size());
  std::set<Edge> seen;
  for (const auto& [a, b] : edge_list) {
    const std::string pair = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    if (a >= n || b >= n) {
      throw GraphError("edge " + pair + " has an endpoint outside 0.." +
                       std::to_string(n == 0 ? 0 : n - 1));
    }
    if (a == b) throw GraphError("self-loop " + pair);
    Edge e(a, b);
    if (!seen.insert(e).second) throw GraphError("duplicate edge " + pair);
    g.edges_.push_back(e);
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

Graph Graph::build(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list) {
  return build(n, std::span<const std::pair<Vertex, Vertex>>(edge_list.begin(), edge_list.size()));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

std::optional<std::size_t> Graph::edge_index(Vertex a, Vertex b) const {
  if (!has_edge(a, b)) return std::nullopt;
  const Edge key(a, b);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i] == key) return i;
  }
  return std::nullopt;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return false;
  std::vector<char> seen(vertex_count(), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == vertex_count();
}

}  // namespace evc
