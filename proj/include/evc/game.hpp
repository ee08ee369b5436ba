#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evc/graph.hpp"

namespace evc {

/// A guard placement: a set of occupied vertices, kept sorted.
/// Ordering is lexicographic on the sorted vertex sequence.
class Configuration {
 public:
  Configuration() = default;
  Configuration(std::initializer_list<Vertex> vertices);
  explicit Configuration(std::vector<Vertex> vertices);

  const std::vector<Vertex>& vertices() const { return occupied_; }
  std::size_t size() const { return occupied_.size(); }
  bool empty() const { return occupied_.empty(); }
  bool contains(Vertex v) const;

  auto begin() const { return occupied_.begin(); }
  auto end() const { return occupied_.end(); }

  auto operator<=>(const Configuration&) const = default;

 private:
  std::vector<Vertex> occupied_;
};

std::string to_string(const Configuration& c);

/// An attack selects one edge of the graph.
struct Attack {
  Edge edge;

  Attack() = default;
  Attack(Vertex a, Vertex b) : edge(a, b) {}
  explicit Attack(Edge e) : edge(e) {}
};

/// Guard moves for one round: occupied vertex -> target vertex.
class DefenseFunction {
 public:
  DefenseFunction() = default;
  DefenseFunction(std::initializer_list<std::pair<const Vertex, Vertex>> moves) : moves_(moves) {}

  /// Every vertex of `c` stays put.
  static DefenseFunction identity(const Configuration& c);

  void set(Vertex from, Vertex to) { moves_[from] = to; }
  std::optional<Vertex> target(Vertex from) const;
  const std::map<Vertex, Vertex>& moves() const { return moves_; }
  std::size_t size() const { return moves_.size(); }

  /// True when some guard traverses the attacked edge.
  bool crosses(const Edge& e) const;

  friend bool operator==(const DefenseFunction&, const DefenseFunction&) = default;

 private:
  std::map<Vertex, Vertex> moves_;
};

/// "{0->3, 2->0}" listing only guards that move.
std::string to_string(const DefenseFunction& d);

bool is_vertex_cover(const Graph& g, const Configuration& c);

/// Applies one defended round. Validates that the attack is an edge, `c` is a
/// vertex cover, the domain of `d` is exactly `c`, every move stays in the
/// closed neighborhood, the map is injective, and a guard crosses the attacked
/// edge. Returns the image configuration; throws DefenseError otherwise.
Configuration apply_defense(const Graph& g, const Configuration& c, const DefenseFunction& d,
                            const Attack& a);

/// Trivial defense of an edge whose endpoints are both occupied: the two
/// guards swap, everyone else stays.
DefenseFunction swap_defense(const Configuration& c, const Edge& e);

struct MinimumVertexCovers {
  std::size_t size = 0;
  std::vector<Configuration> covers;  // all covers of `size`, lexicographic
};

inline constexpr std::size_t kDefaultBruteForceLimit = 20;

/// Exhaustive minimum vertex cover enumeration. Throws LimitExceeded when the
/// graph has more than `limit` vertices.
MinimumVertexCovers min_vertex_covers_bruteforce(const Graph& g,
                                                 std::size_t limit = kDefaultBruteForceLimit);

struct Bipartition {
  std::vector<Vertex> a;  // side containing vertex 0
  std::vector<Vertex> b;
};

/// 2-coloring of a connected graph, or nullopt if it has an odd cycle.
/// Throws DisconnectedGraph.
std::optional<Bipartition> bipartition(const Graph& g);

/// A finite family of same-size configurations together with a responder.
/// Implemented by the melon strategy classes and by explicit families
/// backed by the exact solver.
class DefenseFamily {
 public:
  virtual ~DefenseFamily() = default;

  virtual const Graph& graph() const = 0;
  /// Every member, lexicographically sorted, no duplicates.
  virtual std::vector<Configuration> configurations() const = 0;
  virtual bool contains(const Configuration& c) const = 0;
  /// A defense of `a` from member `c`. Throws ConfigurationNotInClass when `c`
  /// is not a member.
  virtual DefenseFunction respond(const Configuration& c, const Attack& a) const = 0;
};

}  // namespace evc
