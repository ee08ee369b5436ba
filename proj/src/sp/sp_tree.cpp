#include "evc/sp_tree.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>

#include "evc/errors.hpp"

namespace evc::sp {

struct SPTree::Node {
  NodeKind kind = NodeKind::Leaf;
  SPTree left;
  SPTree right;
  std::size_t leaves = 1;
};

SPTree::SPTree() : node_(nullptr) {}

SPTree SPTree::series(SPTree left, SPTree right) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Series;
  node->leaves = left.leaf_count() + right.leaf_count();
  node->left = std::move(left);
  node->right = std::move(right);
  return SPTree(std::move(node));
}

SPTree SPTree::parallel(SPTree left, SPTree right) {
  auto node = std::make_shared<Node>();
  node->kind = NodeKind::Parallel;
  node->leaves = left.leaf_count() + right.leaf_count();
  node->left = std::move(left);
  node->right = std::move(right);
  return SPTree(std::move(node));
}

// A null node pointer is the leaf.
NodeKind SPTree::kind() const { return node_ ? node_->kind : NodeKind::Leaf; }

const SPTree& SPTree::left() const {
  if (!node_) throw std::logic_error("leaf has no children");
  return node_->left;
}

const SPTree& SPTree::right() const {
  if (!node_) throw std::logic_error("leaf has no children");
  return node_->right;
}

std::size_t SPTree::leaf_count() const { return node_ ? node_->leaves : 1; }

bool operator==(const SPTree& a, const SPTree& b) {
  if (a.kind() != b.kind()) return false;
  if (a.is_leaf()) return true;
  if (a.node_ == b.node_) return true;
  return a.leaf_count() == b.leaf_count() && a.left() == b.left() && a.right() == b.right();
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  SPTree parse() {
    SPTree tree = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return tree;
  }

 private:
  SPTree expr() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input, expected 'e', 'S(' or 'P('");
    char c = text_[pos_];
    if (c == 'e') {
      ++pos_;
      return SPTree::leaf();
    }
    if (c != 'S' && c != 'P') fail(std::string("unexpected '") + c + "', expected 'e', 'S' or 'P'");
    ++pos_;
    expect('(');
    SPTree left = expr();
    expect(',');
    SPTree right = expr();
    expect(')');
    return c == 'S' ? SPTree::series(std::move(left), std::move(right))
                    : SPTree::parallel(std::move(left), std::move(right));
  }

  void expect(char want) {
    skip_space();
    if (pos_ >= text_.size()) fail(std::string("unexpected end of input, expected '") + want + "'");
    if (text_[pos_] != want) {
      fail(std::string("unexpected '") + text_[pos_] + "', expected '" + want + "'");
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) const { throw ParseError(pos_ + 1, why); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print(const SPTree& tree, std::string& out) {
  switch (tree.kind()) {
    case NodeKind::Leaf:
      out += 'e';
      return;
    case NodeKind::Series:
      out += "S(";
      break;
    case NodeKind::Parallel:
      out += "P(";
      break;
  }
  print(tree.left(), out);
  out += ',';
  print(tree.right(), out);
  out += ')';
}

struct Realizer {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<Edge> seen;
  Vertex next = 2;

  void run(const SPTree& tree, Vertex s, Vertex t) {
    switch (tree.kind()) {
      case NodeKind::Leaf:
        if (!seen.insert(Edge(s, t)).second) {
          throw MultiEdgeError("parallel composition duplicates edge " + to_string(Edge(s, t)));
        }
        edges.emplace_back(s, t);
        return;
      case NodeKind::Series: {
        Vertex mid = next++;
        run(tree.left(), s, mid);
        run(tree.right(), mid, t);
        return;
      }
      case NodeKind::Parallel:
        run(tree.left(), s, t);
        run(tree.right(), s, t);
        return;
    }
  }
};

void flatten_into(const SPTree& tree, NodeKind parent, std::vector<CanonicalSPTree>& out);

CanonicalSPTree canonical(const SPTree& tree) {
  if (tree.is_leaf()) return {};
  CanonicalSPTree node;
  node.kind = tree.kind();
  flatten_into(tree.left(), node.kind, node.children);
  flatten_into(tree.right(), node.kind, node.children);
  return node;
}

void flatten_into(const SPTree& tree, NodeKind parent, std::vector<CanonicalSPTree>& out) {
  if (tree.kind() == parent) {
    flatten_into(tree.left(), parent, out);
    flatten_into(tree.right(), parent, out);
  } else {
    out.push_back(canonical(tree));
  }
}

void print(const CanonicalSPTree& tree, std::string& out) {
  if (tree.kind == NodeKind::Leaf) {
    out += 'e';
    return;
  }
  out += tree.kind == NodeKind::Series ? "S[" : "P[";
  for (std::size_t i = 0; i < tree.children.size(); ++i) {
    if (i) out += ',';
    print(tree.children[i], out);
  }
  out += ']';
}

/// Number of internal nodes on the deepest root-to-leaf path.
std::size_t internal_depth(const CanonicalSPTree& tree) {
  if (tree.kind == NodeKind::Leaf) return 0;
  std::size_t deepest = 0;
  for (const auto& child : tree.children) deepest = std::max(deepest, internal_depth(child));
  return deepest + 1;
}

// cost[s_in][t_in]: minimum cover of the subgraph with the terminals' status fixed.
using CoverTable = std::array<std::array<std::int64_t, 2>, 2>;
constexpr std::int64_t kInfeasible = std::numeric_limits<std::int64_t>::max() / 4;

CoverTable cover_table(const SPTree& tree) {
  CoverTable out{};
  switch (tree.kind()) {
    case NodeKind::Leaf:
      out[0][0] = kInfeasible;
      out[0][1] = 1;
      out[1][0] = 1;
      out[1][1] = 2;
      return out;
    case NodeKind::Series: {
      CoverTable a = cover_table(tree.left());
      CoverTable b = cover_table(tree.right());
      for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
          std::int64_t best = kInfeasible;
          for (int m = 0; m < 2; ++m) {
            if (a[s][m] >= kInfeasible || b[m][t] >= kInfeasible) continue;
            best = std::min(best, a[s][m] + b[m][t] - m);
          }
          out[s][t] = best;
        }
      }
      return out;
    }
    case NodeKind::Parallel: {
      CoverTable a = cover_table(tree.left());
      CoverTable b = cover_table(tree.right());
      for (int s = 0; s < 2; ++s) {
        for (int t = 0; t < 2; ++t) {
          out[s][t] = (a[s][t] >= kInfeasible || b[s][t] >= kInfeasible)
                          ? kInfeasible
                          : a[s][t] + b[s][t] - s - t;
        }
      }
      return out;
    }
  }
  return out;
}

}  // namespace

SPTree parse_sp(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const SPTree& tree) {
  std::string out;
  print(tree, out);
  return out;
}

Realization realize(const SPTree& tree) {
  Realizer r;
  r.run(tree, 0, 1);
  Realization out;
  out.graph = Graph::build(r.next, r.edges);
  return out;
}

CanonicalSPTree canonicalize(const SPTree& tree) { return canonical(tree); }

std::string to_string(const CanonicalSPTree& tree) {
  std::string out;
  print(tree, out);
  return out;
}

std::size_t alt(const CanonicalSPTree& tree) {
  std::size_t depth = internal_depth(tree);
  return depth == 0 ? 0 : depth - 1;
}

std::size_t alt(const SPTree& tree) { return alt(canonicalize(tree)); }

std::size_t vc_sp(const SPTree& tree) {
  (void)realize(tree);
  CoverTable table = cover_table(tree);
  std::int64_t best = kInfeasible;
  for (const auto& row : table) {
    for (std::int64_t v : row) best = std::min(best, v);
  }
  return static_cast<std::size_t>(best);
}

SPTree chain(std::size_t length) {
  if (length == 0) throw std::invalid_argument("chain length must be positive");
  SPTree tree = SPTree::leaf();
  for (std::size_t i = 1; i < length; ++i) tree = SPTree::series(SPTree::leaf(), std::move(tree));
  return tree;
}

SPTree melon_tree(std::span<const std::size_t> lengths) {
  if (lengths.empty()) throw std::invalid_argument("melon needs at least one path");
  SPTree tree = chain(lengths.back());
  for (std::size_t i = lengths.size() - 1; i-- > 0;) {
    tree = SPTree::parallel(chain(lengths[i]), std::move(tree));
  }
  return tree;
}

}  // namespace evc::sp
