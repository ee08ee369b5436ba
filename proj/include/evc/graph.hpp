#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace evc {

using Vertex = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool has(Vertex x) const { return x == u || x == v; }
  Vertex other(Vertex x) const { return x == u ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

std::string to_string(const Edge& e);

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
/// Edge indices follow the construction order.
class Graph {
 public:
  Graph() = default;

  /// Throws GraphError on a self-loop, duplicate edge or out-of-range endpoint.
  static Graph build(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edge_list);
  static Graph build(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edge_list);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t index) const { return edges_[index]; }

  /// Sorted neighbor list.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool has_edge(Vertex a, Vertex b) const;
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

  /// True when b == a or b is adjacent to a.
  bool in_closed_neighborhood(Vertex a, Vertex b) const { return a == b || has_edge(a, b); }

  bool is_connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

}  // namespace evc
