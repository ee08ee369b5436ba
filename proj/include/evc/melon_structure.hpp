#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "evc/graph.hpp"

namespace evc::sp {

/// A melon: internally vertex-disjoint source-sink paths whose union is the
/// whole graph. Each path lists its vertices from source to sink.
struct MelonStructure {
  std::size_t vertex_count = 0;
  Vertex source = 0;
  Vertex sink = 1;
  std::vector<std::vector<Vertex>> paths;
  std::vector<std::size_t> even_paths;  // indices into `paths`
  std::vector<std::size_t> odd_paths;

  /// Fills the parity partition from `paths`.
  static MelonStructure from_paths(std::size_t vertex_count, Vertex source, Vertex sink,
                                   std::vector<std::vector<Vertex>> paths);

  std::size_t k() const { return paths.size(); }
  std::size_t length(std::size_t i) const { return paths[i].size() - 1; }
  std::vector<std::size_t> lengths() const;
  std::size_t edge_count() const;

  /// The graph spanned by the paths, edges listed path by path.
  Graph to_graph() const;

  friend bool operator==(const MelonStructure&, const MelonStructure&) = default;
};

/// Recognizes paths, cycles and k-melons (k >= 3) with a walk from the
/// source. Paths are ordered by length, then by smallest internal vertex.
/// Source choice: the smaller high-degree vertex (k >= 3), the smaller
/// endpoint (paths), or 0 with sink 1 (cycles). Throws DisconnectedGraph.
std::optional<MelonStructure> recognize_melon(const Graph& g);

}  // namespace evc::sp
