#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "evc/graph.hpp"

namespace evc::sp {

enum class NodeKind { Leaf, Series, Parallel };

/// Binary series-parallel decomposition tree; every leaf is one edge.
/// Immutable, cheap to copy (subtrees are shared).
class SPTree {
 public:
  /// A single edge.
  SPTree();

  static SPTree leaf() { return SPTree(); }
  static SPTree series(SPTree left, SPTree right);
  static SPTree parallel(SPTree left, SPTree right);

  NodeKind kind() const;
  bool is_leaf() const { return kind() == NodeKind::Leaf; }
  /// Children; only valid for Series and Parallel nodes.
  const SPTree& left() const;
  const SPTree& right() const;
  std::size_t leaf_count() const;

  friend bool operator==(const SPTree& a, const SPTree& b);

 private:
  struct Node;
  explicit SPTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Grammar: expr := "e" | "S(" expr "," expr ")" | "P(" expr "," expr ")",
/// whitespace allowed between tokens. Throws ParseError.
SPTree parse_sp(std::string_view text);

/// Prints the same grammar without whitespace.
std::string to_string(const SPTree& tree);

struct Realization {
  Graph graph;
  Vertex source = 0;
  Vertex sink = 1;
};

/// Builds the graph of an SP expression. Source is 0, sink is 1, and every
/// series node allocates its merge vertex in pre-order (left subtree first),
/// so the leaves of a right-nested chain S(e,S(e,...)) give consecutive ids
/// from source to sink. Edges are listed in leaf order.
/// Throws MultiEdgeError when a parallel composition repeats an edge.
Realization realize(const SPTree& tree);

/// Decomposition with maximal merging: no Series child under a Series node
/// and no Parallel child under a Parallel node.
struct CanonicalSPTree {
  NodeKind kind = NodeKind::Leaf;
  std::vector<CanonicalSPTree> children;

  friend bool operator==(const CanonicalSPTree&, const CanonicalSPTree&) = default;
};

CanonicalSPTree canonicalize(const SPTree& tree);

/// n-ary form with brackets, e.g. "P[S[e,e],S[e,e]]".
std::string to_string(const CanonicalSPTree& tree);

/// Maximum number of series/parallel kind changes along a root-to-leaf path
/// of the canonical decomposition.
std::size_t alt(const CanonicalSPTree& tree);
std::size_t alt(const SPTree& tree);

/// Vertex cover number of the realized graph by dynamic programming over the
/// tree. Throws MultiEdgeError for non-simple realizations.
std::size_t vc_sp(const SPTree& tree);

/// Right-nested chain S(e,S(e,...)) with `length` edges; length >= 1.
SPTree chain(std::size_t length);

/// Right-nested parallel composition of chains, in the given order.
SPTree melon_tree(std::span<const std::size_t> lengths);

}  // namespace evc::sp
