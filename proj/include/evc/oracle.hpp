#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "evc/game.hpp"

namespace evc::oracle {

inline constexpr std::size_t kDefaultOracleLimit = 16;

struct OracleLimits {
  /// Largest vertex count accepted by safe_set and evc_exact (at most 64).
  std::size_t max_vertices = kDefaultOracleLimit;
  /// Largest vertex count for the exhaustive cover enumerations.
  std::size_t brute_force_limit = kDefaultBruteForceLimit;
  /// Throws TimeoutExceeded once passed.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

/// All vertex covers with exactly k vertices, lexicographically sorted.
/// Throws LimitExceeded above `limit` vertices.
std::vector<Configuration> vertex_covers_of_size(const Graph& g, std::size_t k,
                                                 std::size_t limit = kDefaultBruteForceLimit);

/// Whether some defense function maps `c` onto `c2` and protects `a`.
/// Throws SizeMismatch when the sizes differ.
bool can_shift(const Graph& g, const Configuration& c, const Configuration& c2, const Attack& a);

/// A concrete defense function for can_shift, if one exists.
std::optional<DefenseFunction> find_shift(const Graph& g, const Configuration& c,
                                          const Configuration& c2, const Attack& a);

struct SafeSet {
  std::size_t k = 0;
  std::vector<Configuration> configs;  // lexicographically sorted
};

/// Greatest family of k-vertex covers from which every edge attack can be
/// answered inside the family. Uses per-(configuration, edge) successor
/// counters so each deletion only revisits its predecessors.
SafeSet safe_set(const Graph& g, std::size_t k, const OracleLimits& limits = {});

/// Same fixed point by plain repeated sweeps. For cross-checking only.
SafeSet safe_set_naive(const Graph& g, std::size_t k, const OracleLimits& limits = {});

struct ExactResult {
  std::size_t vc = 0;
  std::size_t evc = 0;
  SafeSet witness;
};

/// Smallest k in [vc, 2 vc] with a nonempty safe set. Throws
/// DisconnectedGraph, LimitExceeded or TimeoutExceeded.
ExactResult evc_exact(const Graph& g, const OracleLimits& limits = {});

struct VerificationFailure {
  Configuration config;
  Edge edge;
  std::string reason;
};

struct VerificationReport {
  bool ok = true;
  std::vector<VerificationFailure> failures;
  std::size_t checked = 0;
  std::size_t class_size = 0;
};

/// Runs the family's responder on every (member, edge) pair, validates each
/// answer and checks that the image is a member. Independently checks that
/// each pair has some feasible shift inside the family.
VerificationReport verify_class(const Graph& g, const DefenseFamily& family);

/// A family given by its members. Responds with the lexicographically
/// smallest member reachable by a protecting shift.
class ExplicitFamily : public DefenseFamily {
 public:
  ExplicitFamily(Graph g, std::vector<Configuration> members);

  const Graph& graph() const override { return graph_; }
  std::vector<Configuration> configurations() const override { return members_; }
  bool contains(const Configuration& c) const override;
  /// Throws ConfigurationNotInClass, or Error when no member protects `a`.
  DefenseFunction respond(const Configuration& c, const Attack& a) const override;

 private:
  Graph graph_;
  std::vector<Configuration> members_;
};

}  // namespace evc::oracle
