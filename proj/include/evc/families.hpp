#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "evc/graph.hpp"
#include "evc/melon_structure.hpp"
#include "evc/sp_tree.hpp"

namespace evc::families {

struct MelonGraph {
  Graph graph;
  sp::MelonStructure melon;
  sp::SPTree tree;
};

/// Melon with the given path lengths. Lengths are stably sorted; the source
/// is 0, the sink 1, and the internal vertices of each path are numbered
/// consecutively from 2 in source-to-sink order. Throws TwoUnitPaths, or
/// std::invalid_argument for an empty list or a zero length.
MelonGraph melon_graph(std::span<const std::size_t> lengths);

struct GkGraph {
  std::size_t k = 0;
  Graph graph;
  sp::SPTree tree;
  std::vector<Vertex> hubs;  // sources of the K_{2,k+3} blocks inside the side branches
  std::size_t expected_vc = 0;
  std::size_t evc_lower_bound = 0;
};

/// Parallel composition of k copies of S(S(e,e), H) and one copy of H,
/// where H is K_{2,k+3} as a melon of k+3 paths of length 2. Vertex 0 is the
/// source, 1 the sink, and hub i (1-based) is 2 + (i-1)(k+5).
/// Throws std::invalid_argument for k < 2.
GkGraph g_k(std::size_t k);

sp::SPTree sp_expression_of(const MelonGraph& m);
sp::SPTree sp_expression_of(const GkGraph& g);

/// Path 0-1-...-(n-1).
Graph path_graph(std::size_t n);
/// Cycle 0-1-...-(n-1)-0, n >= 3.
Graph cycle_graph(std::size_t n);

}  // namespace evc::families
