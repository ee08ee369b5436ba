#include "evc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "evc/errors.hpp"

namespace evc::oracle {
namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << v; }

Mask to_mask(const Configuration& c) {
  Mask m = 0;
  for (Vertex v : c) m |= bit(v);
  return m;
}

Configuration from_mask(Mask m) {
  std::vector<Vertex> vs;
  while (m) {
    vs.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return Configuration(std::move(vs));
}

void check_size(const Graph& g, std::size_t limit, const char* what) {
  if (g.vertex_count() > limit || g.vertex_count() > 64) {
    throw LimitExceeded(std::string(what) + ": " + std::to_string(g.vertex_count()) +
                        " vertices exceeds the limit of " + std::to_string(std::min<std::size_t>(limit, 64)));
  }
}

void check_deadline(const OracleLimits& limits) {
  if (limits.deadline && std::chrono::steady_clock::now() > *limits.deadline) {
    throw TimeoutExceeded("oracle deadline passed");
  }
}

/// Bitmask view of a graph: closed neighborhoods and edge endpoints.
struct MaskGraph {
  std::vector<Mask> closed;
  std::vector<Edge> edges;

  explicit MaskGraph(const Graph& g) : closed(g.vertex_count()), edges(g.edges()) {
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      closed[v] = bit(v);
      for (Vertex w : g.neighbors(v)) closed[v] |= bit(w);
    }
  }

  bool covers(Mask c) const {
    for (const Edge& e : edges) {
      if (!(c & (bit(e.u) | bit(e.v)))) return false;
    }
    return true;
  }
};

/// Augmenting-path bipartite matching between the guards in `from` and the
/// vertices in `to`, where a guard may take any vertex of its closed
/// neighborhood. Fills `owner[target] = source` for a perfect matching.
class Matcher {
 public:
  explicit Matcher(const MaskGraph& mg) : mg_(mg), owner_(mg.closed.size(), kFree) {}

  bool perfect(Mask from, Mask to) {
    if (std::popcount(from) != std::popcount(to)) return false;
    left_.clear();
    for (Mask m = from; m; m &= m - 1) left_.push_back(static_cast<Vertex>(std::countr_zero(m)));
    for (Mask m = to; m; m &= m - 1) owner_[std::countr_zero(m)] = kFree;
    to_ = to;
    for (Vertex u : left_) {
      Mask visited = 0;
      if (!augment(u, visited)) return false;
    }
    return true;
  }

  /// Valid after a successful perfect(): the source matched to `target`.
  Vertex owner(Vertex target) const { return owner_[target]; }

 private:
  static constexpr Vertex kFree = ~Vertex{0};

  bool augment(Vertex u, Mask& visited) {
    for (Mask cand = mg_.closed[u] & to_ & ~visited; cand; cand &= cand - 1) {
      Vertex w = static_cast<Vertex>(std::countr_zero(cand));
      visited |= bit(w);
      if (owner_[w] == kFree || augment(owner_[w], visited)) {
        owner_[w] = u;
        return true;
      }
    }
    return false;
  }

  const MaskGraph& mg_;
  std::vector<Vertex> owner_;
  std::vector<Vertex> left_;
  Mask to_ = 0;
};

/// Forced guard move x -> y across the attacked edge, if the orientation is
/// available for this pair of configurations.
std::optional<std::pair<Vertex, Vertex>> forced_shift(Matcher& matcher, Mask c, Mask c2,
                                                      const Edge& e) {
  for (auto [x, y] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    if (!(c & bit(x)) || !(c2 & bit(y))) continue;
    if (matcher.perfect(c & ~bit(x), c2 & ~bit(y))) return std::pair{x, y};
  }
  return std::nullopt;
}

bool cheap_compatible(const MaskGraph& mg, Mask c, Mask c2) {
  for (Mask m = c; m; m &= m - 1) {
    if (!(mg.closed[std::countr_zero(m)] & c2)) return false;
  }
  for (Mask m = c2; m; m &= m - 1) {
    if (!(mg.closed[std::countr_zero(m)] & c)) return false;
  }
  return true;
}

Mask closed_union(const MaskGraph& mg, Mask c) {
  Mask out = 0;
  for (Mask m = c; m; m &= m - 1) out |= mg.closed[std::countr_zero(m)];
  return out;
}

std::vector<Mask> cover_masks(const Graph& g, std::size_t k, std::size_t limit) {
  check_size(g, limit, "vertex cover enumeration");
  const std::size_t n = g.vertex_count();
  std::vector<Mask> out;
  if (k > n) return out;
  MaskGraph mg(g);
  std::vector<Vertex> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<Vertex>(i);
  while (true) {
    Mask m = 0;
    for (Vertex v : idx) m |= bit(v);
    if (mg.covers(m)) out.push_back(m);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

SafeSet to_safe_set(std::size_t k, const std::vector<Mask>& masks, const std::vector<char>& alive) {
  SafeSet out;
  out.k = k;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (alive[i]) out.configs.push_back(from_mask(masks[i]));
  }
  return out;
}

}  // namespace

std::vector<Configuration> vertex_covers_of_size(const Graph& g, std::size_t k, std::size_t limit) {
  std::vector<Configuration> out;
  for (Mask m : cover_masks(g, k, limit)) out.push_back(from_mask(m));
  return out;
}

std::optional<DefenseFunction> find_shift(const Graph& g, const Configuration& c,
                                          const Configuration& c2, const Attack& a) {
  if (c.size() != c2.size()) {
    throw SizeMismatch("configurations of sizes " + std::to_string(c.size()) + " and " +
                       std::to_string(c2.size()));
  }
  check_size(g, 64, "shift test");
  MaskGraph mg(g);
  Matcher matcher(mg);
  const Mask cm = to_mask(c);
  const Mask c2m = to_mask(c2);
  auto forced = forced_shift(matcher, cm, c2m, a.edge);
  if (!forced) return std::nullopt;
  DefenseFunction d;
  d.set(forced->first, forced->second);
  for (Mask m = c2m & ~bit(forced->second); m; m &= m - 1) {
    Vertex target = static_cast<Vertex>(std::countr_zero(m));
    d.set(matcher.owner(target), target);
  }
  return d;
}

bool can_shift(const Graph& g, const Configuration& c, const Configuration& c2, const Attack& a) {
  return find_shift(g, c, c2, a).has_value();
}

SafeSet safe_set(const Graph& g, std::size_t k, const OracleLimits& limits) {
  check_size(g, limits.max_vertices, "safe_set");
  const std::vector<Mask> covers = cover_masks(g, k, std::max(limits.brute_force_limit, g.vertex_count()));
  const MaskGraph mg(g);
  const std::size_t m = mg.edges.size();
  const std::size_t count = covers.size();
  std::unordered_map<Mask, std::uint32_t> index;
  for (std::size_t i = 0; i < count; ++i) index.emplace(covers[i], static_cast<std::uint32_t>(i));

  // successors[i * m + e]: members that answer edge e from member i.
  std::vector<std::uint32_t> counter(count * m, 0);
  // predecessors[j]: (i, e) pairs whose counters include member j.
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> predecessors(count);
  Matcher matcher(mg);
  for (std::size_t i = 0; i < count; ++i) {
    if (i % 64 == 0) check_deadline(limits);
    const Mask reach = closed_union(mg, covers[i]);
    for (std::size_t j = 0; j < count; ++j) {
      if ((covers[j] & ~reach) || !cheap_compatible(mg, covers[i], covers[j])) continue;
      if (!matcher.perfect(covers[i], covers[j])) continue;
      for (std::size_t e = 0; e < m; ++e) {
        if (!forced_shift(matcher, covers[i], covers[j], mg.edges[e])) continue;
        ++counter[i * m + e];
        predecessors[j].emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(e));
      }
    }
  }

  std::vector<char> alive(count, 1);
  std::deque<std::uint32_t> queue;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t e = 0; e < m; ++e) {
      if (counter[i * m + e] == 0) {
        alive[i] = 0;
        queue.push_back(static_cast<std::uint32_t>(i));
        break;
      }
    }
  }
  while (!queue.empty()) {
    const std::uint32_t dead = queue.front();
    queue.pop_front();
    for (auto [i, e] : predecessors[dead]) {
      if (!alive[i]) continue;
      if (--counter[i * m + e] == 0) {
        alive[i] = 0;
        queue.push_back(i);
      }
    }
  }
  return to_safe_set(k, covers, alive);
}

SafeSet safe_set_naive(const Graph& g, std::size_t k, const OracleLimits& limits) {
  check_size(g, limits.max_vertices, "safe_set");
  const std::vector<Mask> covers = cover_masks(g, k, std::max(limits.brute_force_limit, g.vertex_count()));
  const MaskGraph mg(g);
  Matcher matcher(mg);
  std::vector<char> alive(covers.size(), 1);
  bool changed = true;
  while (changed) {
    changed = false;
    check_deadline(limits);
    for (std::size_t i = 0; i < covers.size(); ++i) {
      if (!alive[i]) continue;
      for (const Edge& e : mg.edges) {
        bool answered = false;
        for (std::size_t j = 0; j < covers.size() && !answered; ++j) {
          answered = alive[j] && forced_shift(matcher, covers[i], covers[j], e).has_value();
        }
        if (!answered) {
          alive[i] = 0;
          changed = true;
          break;
        }
      }
    }
  }
  return to_safe_set(k, covers, alive);
}

ExactResult evc_exact(const Graph& g, const OracleLimits& limits) {
  if (!g.is_connected()) throw DisconnectedGraph();
  check_size(g, limits.max_vertices, "evc_exact");
  ExactResult out;
  out.vc = min_vertex_covers_bruteforce(g, std::max(limits.brute_force_limit, g.vertex_count())).size;
  for (std::size_t k = out.vc; k <= 2 * out.vc; ++k) {
    SafeSet s = safe_set(g, k, limits);
    if (!s.configs.empty()) {
      out.evc = k;
      out.witness = std::move(s);
      return out;
    }
  }
  throw std::logic_error("no safe set within twice the vertex cover number");
}

VerificationReport verify_class(const Graph& g, const DefenseFamily& family) {
  VerificationReport report;
  const std::vector<Configuration> members = family.configurations();
  report.class_size = members.size();
  for (const Configuration& c : members) {
    for (const Edge& e : g.edges()) {
      ++report.checked;
      const Attack a(e);
      try {
        DefenseFunction d = family.respond(c, a);
        Configuration image = apply_defense(g, c, d, a);
        if (!family.contains(image)) {
          report.failures.push_back({c, e, "image " + to_string(image) + " is not in the class"});
        }
      } catch (const std::exception& ex) {
        report.failures.push_back({c, e, std::string("responder failed: ") + ex.what()});
      }
      bool reachable = std::any_of(members.begin(), members.end(), [&](const Configuration& c2) {
        return c2.size() == c.size() && can_shift(g, c, c2, a);
      });
      if (!reachable) report.failures.push_back({c, e, "no member of the class protects the edge"});
    }
  }
  report.ok = report.failures.empty();
  return report;
}

ExplicitFamily::ExplicitFamily(Graph g, std::vector<Configuration> members)
    : graph_(std::move(g)), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool ExplicitFamily::contains(const Configuration& c) const {
  return std::binary_search(members_.begin(), members_.end(), c);
}

DefenseFunction ExplicitFamily::respond(const Configuration& c, const Attack& a) const {
  if (!contains(c)) throw ConfigurationNotInClass(to_string(c) + " is not in the family");
  for (const Configuration& c2 : members_) {
    if (c2.size() != c.size()) continue;
    if (auto d = find_shift(graph_, c, c2, a)) return *d;
  }
  throw Error("no member of the family protects " + to_string(a.edge) + " from " + to_string(c));
}

}  // namespace evc::oracle
