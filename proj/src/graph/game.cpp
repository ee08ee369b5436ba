#include "evc/game.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <set>
#include <sstream>

#include "evc/errors.hpp"

namespace evc {

Configuration::Configuration(std::initializer_list<Vertex> vertices)
    : Configuration(std::vector<Vertex>(vertices)) {}

Configuration::Configuration(std::vector<Vertex> vertices) : occupied_(std::move(vertices)) {
  std::sort(occupied_.begin(), occupied_.end());
  occupied_.erase(std::unique(occupied_.begin(), occupied_.end()), occupied_.end());
}

bool Configuration::contains(Vertex v) const {
  return std::binary_search(occupied_.begin(), occupied_.end(), v);
}

std::string to_string(const Configuration& c) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (Vertex v : c) {
    if (!first) out << ',';
    out << v;
    first = false;
  }
  out << '}';
  return out.str();
}

DefenseFunction DefenseFunction::identity(const Configuration& c) {
  DefenseFunction d;
  for (Vertex v : c) d.set(v, v);
  return d;
}

std::optional<Vertex> DefenseFunction::target(Vertex from) const {
  auto it = moves_.find(from);
  if (it == moves_.end()) return std::nullopt;
  return it->second;
}

bool DefenseFunction::crosses(const Edge& e) const {
  auto tu = target(e.u);
  auto tv = target(e.v);
  return (tu && *tu == e.v) || (tv && *tv == e.u);
}

std::string to_string(const DefenseFunction& d) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [from, to] : d.moves()) {
    if (from == to) continue;
    if (!first) out << ", ";
    out << from << "->" << to;
    first = false;
  }
  out << '}';
  return out.str();
}

bool is_vertex_cover(const Graph& g, const Configuration& c) {
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return c.contains(e.u) || c.contains(e.v); });
}

Configuration apply_defense(const Graph& g, const Configuration& c, const DefenseFunction& d,
                            const Attack& a) {
  using Kind = DefenseError::Kind;
  if (!g.has_edge(a.edge.u, a.edge.v)) {
    throw DefenseError(Kind::NotAnEdge, "attack " + to_string(a.edge) + " is not an edge");
  }
  if (!is_vertex_cover(g, c)) {
    throw DefenseError(Kind::NotVertexCover, to_string(c) + " is not a vertex cover");
  }
  if (d.size() != c.size() ||
      !std::all_of(c.begin(), c.end(), [&](Vertex v) { return d.target(v).has_value(); })) {
    throw DefenseError(Kind::DomainMismatch,
                       "defense domain does not match configuration " + to_string(c));
  }
  std::set<Vertex> image;
  for (const auto& [from, to] : d.moves()) {
    if (!g.in_closed_neighborhood(from, to)) {
      throw DefenseError(Kind::IllegalMove, "illegal move " + std::to_string(from) + "->" +
                                                std::to_string(to) + ": target not in N[" +
                                                std::to_string(from) + "]");
    }
    if (!image.insert(to).second) {
      throw DefenseError(Kind::NotInjective,
                         "two guards land on vertex " + std::to_string(to));
    }
  }
  if (!d.crosses(a.edge)) {
    throw DefenseError(Kind::EdgeNotProtected,
                       "no guard crosses attacked edge " + to_string(a.edge));
  }
  return Configuration(std::vector<Vertex>(image.begin(), image.end()));
}

DefenseFunction swap_defense(const Configuration& c, const Edge& e) {
  DefenseFunction d = DefenseFunction::identity(c);
  d.set(e.u, e.v);
  d.set(e.v, e.u);
  return d;
}

MinimumVertexCovers min_vertex_covers_bruteforce(const Graph& g, std::size_t limit) {
  const std::size_t n = g.vertex_count();
  if (n > limit || n > 64) {
    throw LimitExceeded("brute-force vertex cover limited to " + std::to_string(limit) +
                        " vertices, graph has " + std::to_string(n));
  }
  std::vector<std::uint64_t> edge_masks;
  edge_masks.reserve(g.edge_count());
  for (const Edge& e : g.edges()) {
    edge_masks.push_back((std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v));
  }
  auto covers = [&](std::uint64_t mask) {
    return std::all_of(edge_masks.begin(), edge_masks.end(),
                       [&](std::uint64_t em) { return (em & mask) != 0; });
  };

  MinimumVertexCovers result;
  for (std::size_t k = 0; k <= n; ++k) {
    // k-combinations of 0..n-1 in lexicographic order
    std::vector<Vertex> pick(k);
    for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<Vertex>(i);
    while (true) {
      std::uint64_t mask = 0;
      for (Vertex v : pick) mask |= std::uint64_t{1} << v;
      if (covers(mask)) result.covers.emplace_back(pick);
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!result.covers.empty()) {
      result.size = k;
      return result;
    }
  }
  return result;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  if (!g.is_connected()) throw DisconnectedGraph();
  std::vector<int> color(g.vertex_count(), -1);
  std::deque<Vertex> queue{0};
  color[0] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (color[w] < 0) {
        color[w] = 1 - color[v];
        queue.push_back(w);
      } else if (color[w] == color[v]) {
        return std::nullopt;
      }
    }
  }
  Bipartition parts;
  for (Vertex v = 0; v < g.vertex_count(); ++v) (color[v] == 0 ? parts.a : parts.b).push_back(v);
  return parts;
}

}  // namespace evc
