#include <charconv>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "evc/cli.hpp"
#include "evc/errors.hpp"

namespace evc::cli {
namespace {

bool parse_uint(const std::string& token, std::uint64_t& value) {
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && ptr == token.data() + token.size();
}

}  // namespace

PlaySession::PlaySession(std::shared_ptr<const DefenseFamily> defender, std::uint64_t seed)
    : defender_(std::move(defender)), rng_state_(seed) {
  auto members = defender_->configurations();
  if (members.empty()) throw Error("the defense family is empty");
  initial_ = members.front();
  current_ = initial_;
}

void PlaySession::attack(Vertex u, Vertex v, std::ostream& out) {
  const Graph& g = defender_->graph();
  const Attack a(u, v);
  DefenseFunction d = defender_->respond(current_, a);
  Configuration next = apply_defense(g, current_, d, a);
  if (!is_vertex_cover(g, next)) {
    throw DefenseError(DefenseError::Kind::NotVertexCover, "defender left the edges uncovered");
  }
  out << "attack " << to_string(a.edge) << ": moves " << to_string(d) << "; configuration "
      << to_string(next) << '\n';
  log_.push_back({a.edge, std::move(d), next});
  current_ = std::move(next);
}

bool PlaySession::execute(const std::string& line, std::ostream& out) {
  std::istringstream fields(line);
  std::vector<std::string> tok;
  for (std::string t; fields >> t;) tok.push_back(t);
  if (tok.empty()) return true;
  const Graph& g = defender_->graph();
  const std::string& cmd = tok[0];

  if (cmd == "quit" || cmd == "exit") {
    out << "bye\n";
    return false;
  }
  if (cmd == "show") {
    out << "configuration " << to_string(current_)
        << (is_vertex_cover(g, current_) ? " (vertex cover)" : " (NOT a vertex cover)") << '\n';
    return true;
  }
  if (cmd == "log") {
    for (std::size_t i = 0; i < log_.size(); ++i) {
      out << "round " << i + 1 << ": attack " << to_string(log_[i].attack) << " moves "
          << to_string(log_[i].moves) << " -> " << to_string(log_[i].after) << '\n';
    }
    return true;
  }
  if (cmd == "attack") {
    std::uint64_t u = 0;
    std::uint64_t v = 0;
    if (tok.size() != 3 || !parse_uint(tok[1], u) || !parse_uint(tok[2], v)) {
      out << "usage: attack U V\n";
      return true;
    }
    if (u >= g.vertex_count() || v >= g.vertex_count() ||
        !g.has_edge(static_cast<Vertex>(u), static_cast<Vertex>(v))) {
      out << "not an edge: " << tok[1] << ' ' << tok[2] << '\n';
      return true;
    }
    attack(static_cast<Vertex>(u), static_cast<Vertex>(v), out);
    return true;
  }
  if (cmd == "auto") {
    std::uint64_t rounds = 0;
    if (tok.size() != 2 || !parse_uint(tok[1], rounds)) {
      out << "usage: auto N\n";
      return true;
    }
    std::mt19937_64 rng(rng_state_);
    for (std::uint64_t r = 0; r < rounds; ++r) {
      const Edge& e = g.edge(static_cast<std::size_t>(rng() % g.edge_count()));
      attack(e.u, e.v, out);
    }
    rng_state_ = rng();
    out << "auto: " << rounds << " rounds defended; configuration " << to_string(current_) << '\n';
    return true;
  }
  out << "unknown command '" << cmd << "' (show, attack U V, auto N, log, quit)\n";
  return true;
}

Configuration PlaySession::replay(const Graph& g, const Configuration& start,
                                  const std::vector<Round>& log) {
  Configuration c = start;
  for (const Round& r : log) c = apply_defense(g, c, r.moves, Attack(r.attack));
  return c;
}

}  // namespace evc::cli
