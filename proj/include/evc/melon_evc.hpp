#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "evc/game.hpp"
#include "evc/melon_structure.hpp"

namespace evc::melon {

using sp::MelonStructure;

enum class CaseTag { SingleEdge, Path, Cycle, Odd, Even, MixedBoth, MixedOneOdd, MixedOneEven };

/// Lower snake case name: "single_edge", "mixed_one_odd", ...
std::string_view to_string(CaseTag tag);

CaseTag classify(const MelonStructure& m);

struct EvcResult {
  CaseTag case_tag = CaseTag::SingleEdge;
  std::size_t vc = 0;
  std::size_t evc = 0;
  std::size_t class_size = 0;

  friend bool operator==(const EvcResult&, const EvcResult&) = default;
};

/// Vertex cover number from a per-path chain recurrence over the two
/// terminal states.
std::size_t vc_melon(const MelonStructure& m);

/// Linear-time eternal vertex cover number by case analysis. The vertex cover
/// number is computed twice (chain recurrence and SP dynamic program) and the
/// two must agree.
EvcResult evc_melon(const MelonStructure& m);

/// Number of distinct configurations of the strategy class. Paths of length 1
/// make some descriptors coincide; the count is of distinct vertex sets.
std::size_t class_size(const MelonStructure& m);

struct PathMatchings {
  std::vector<Edge> perfect;    // edges starting at even positions from the source
  std::vector<Edge> imperfect;  // the remaining edges
};

/// The two alternating matchings of an odd-length path. Throws EvenLengthPath.
PathMatchings odd_path_matchings(std::span<const Vertex> path);

/// Perfect matching of a melon whose paths are all odd that contains `e`.
/// Throws CaseMismatch if some path is even or there is only one path,
/// GraphError if `e` is not an edge.
std::vector<Edge> matching_through_edge(const MelonStructure& m, const Edge& e);

/// The eternal vertex cover class of a melon together with the structured
/// responder of its case. Paths and cycles use rotation classes.
class StrategyClass : public DefenseFamily {
 public:
  explicit StrategyClass(MelonStructure m);

  CaseTag case_tag() const { return tag_; }
  const MelonStructure& melon() const { return melon_; }

  const Graph& graph() const override { return graph_; }
  std::vector<Configuration> configurations() const override { return members_; }
  bool contains(const Configuration& c) const override;
  /// Throws ConfigurationNotInClass; throws std::logic_error if no candidate
  /// defense is valid (never happens for a correct class).
  DefenseFunction respond(const Configuration& c, const Attack& a) const override;

 private:
  enum class Dir { TowardS, TowardT };
  struct Shift {
    std::size_t path;
    Dir dir;
  };
  struct Plan {
    std::vector<Shift> shifts;
    std::optional<Vertex> s_to;
    std::optional<Vertex> t_to;
  };

  Configuration pattern(bool s_in, bool t_in, const std::vector<bool>& odd_positions) const;
  void enumerate();

  bool external(std::size_t path, const Configuration& c) const;
  bool s_mode(std::size_t path, const Configuration& c) const;
  bool t_mode(std::size_t path, const Configuration& c) const;

  DefenseFunction realize_plan(const Configuration& c, const Plan& plan) const;
  void even_candidates(const Configuration& c, std::size_t attacked,
                       std::vector<Plan>& out) const;
  void odd_pair_candidates(const Configuration& c, std::size_t attacked,
                           std::vector<Plan>& out) const;
  std::vector<DefenseFunction> candidates(const Configuration& c, const Edge& e) const;

  MelonStructure melon_;
  Graph graph_;
  CaseTag tag_;
  std::vector<Configuration> members_;
  std::map<Edge, std::size_t> path_of_edge_;
  std::vector<Vertex> cycle_order_;
};

StrategyClass strategy_class(const MelonStructure& m);

}  // namespace evc::melon
