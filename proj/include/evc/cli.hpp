#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "evc/game.hpp"

namespace evc::cli {

enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsage = 2,
  kUnrecognized = 3,
  kLimit = 4,
};

/// Runs one command. `args` excludes the program name. Structured output
/// goes to `out`, diagnostics to `err`; `play` reads commands from `in`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in);

struct Round {
  Edge attack;
  DefenseFunction moves;
  Configuration after;
};

/// Attacker-driven game loop against a defense family. The session starts
/// from the family's first member.
class PlaySession {
 public:
  PlaySession(std::shared_ptr<const DefenseFamily> defender, std::uint64_t seed);

  /// Executes one REPL line; returns false after `quit`. Throws DefenseError
  /// if the defender produces an invalid move.
  bool execute(const std::string& line, std::ostream& out);

  const Configuration& initial() const { return initial_; }
  const Configuration& current() const { return current_; }
  const std::vector<Round>& log() const { return log_; }

  /// Applies `log` to `start` with full validation.
  static Configuration replay(const Graph& g, const Configuration& start,
                              const std::vector<Round>& log);

 private:
  void attack(Vertex u, Vertex v, std::ostream& out);

  std::shared_ptr<const DefenseFamily> defender_;
  Configuration initial_;
  Configuration current_;
  std::vector<Round> log_;
  std::uint64_t rng_state_;
};

}  // namespace evc::cli
