#include "evc/melon_evc.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <stdexcept>
#include <utility>

#include "evc/errors.hpp"
#include "evc/sp_tree.hpp"

namespace evc::melon {

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::SingleEdge: return "single_edge";
    case CaseTag::Path: return "path";
    case CaseTag::Cycle: return "cycle";
    case CaseTag::Odd: return "odd";
    case CaseTag::Even: return "even";
    case CaseTag::MixedBoth: return "mixed_both";
    case CaseTag::MixedOneOdd: return "mixed_one_odd";
    case CaseTag::MixedOneEven: return "mixed_one_even";
  }
  return "unknown";
}

CaseTag classify(const MelonStructure& m) {
  if (m.k() == 1) return m.length(0) == 1 ? CaseTag::SingleEdge : CaseTag::Path;
  if (m.k() == 2) return CaseTag::Cycle;
  if (m.odd_paths.empty()) return CaseTag::Even;
  if (m.even_paths.empty()) return CaseTag::Odd;
  if (m.odd_paths.size() == 1) return CaseTag::MixedOneOdd;
  if (m.even_paths.size() == 1) return CaseTag::MixedOneEven;
  return CaseTag::MixedBoth;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max() / 4;

// Minimum number of internal vertices covering a path of `length` edges
// when the terminal states are fixed.
std::size_t inner_cover(std::size_t length, bool s_in, bool t_in) {
  if (length == 1) return (s_in || t_in) ? 0 : kNone;
  // best[b]: cheapest cover so far with the previous vertex in cover iff b
  std::array<std::size_t, 2> best{kNone, kNone};
  best[s_in ? 1 : 0] = 0;
  for (std::size_t i = 1; i < length; ++i) {
    std::array<std::size_t, 2> next{kNone, kNone};
    next[1] = std::min(best[0], best[1]) + 1;
    next[0] = best[1];
    best = next;
  }
  return t_in ? std::min(best[0], best[1]) : best[1];
}

bool has_unit_path(const MelonStructure& m) {
  for (std::size_t i = 0; i < m.k(); ++i) {
    if (m.length(i) == 1) return true;
  }
  return false;
}

std::size_t pow2(std::size_t e) { return std::size_t{1} << e; }

}  // namespace

std::size_t vc_melon(const MelonStructure& m) {
  std::size_t best = kNone;
  for (int s = 0; s < 2; ++s) {
    for (int t = 0; t < 2; ++t) {
      std::size_t total = static_cast<std::size_t>(s + t);
      for (std::size_t i = 0; i < m.k() && total < kNone; ++i) {
        std::size_t c = inner_cover(m.length(i), s, t);
        total = c >= kNone ? kNone : total + c;
      }
      best = std::min(best, total);
    }
  }
  return best;
}

std::size_t class_size(const MelonStructure& m) {
  const std::size_t n = m.vertex_count;
  const std::size_t even = m.even_paths.size();
  const std::size_t odd = m.odd_paths.size();
  const bool unit = has_unit_path(m);
  switch (classify(m)) {
    case CaseTag::SingleEdge: return 2;
    case CaseTag::Path: return n;
    case CaseTag::Cycle: return n % 2 == 0 ? 2 : n;
    case CaseTag::Odd: return 2;
    case CaseTag::Even: return m.k();
    case CaseTag::MixedBoth: return unit ? even * pow2(odd - 1) : even * (pow2(odd) - 2);
    case CaseTag::MixedOneOdd: return unit ? even : 2 * even;
    case CaseTag::MixedOneEven: return unit ? 2 + pow2(odd - 1) : 2 + (pow2(odd) - 2);
  }
  return 0;
}

EvcResult evc_melon(const MelonStructure& m) {
  EvcResult r;
  r.case_tag = classify(m);
  r.vc = vc_melon(m);
  const std::vector<std::size_t> lengths = m.lengths();
  if (sp::vc_sp(sp::melon_tree(lengths)) != r.vc) {
    throw std::logic_error("vertex cover recurrences disagree");
  }
  const std::size_t n = m.vertex_count;
  switch (r.case_tag) {
    case CaseTag::SingleEdge: r.evc = 1; break;
    case CaseTag::Path: r.evc = n - 1; break;
    case CaseTag::Cycle: r.evc = (n + 1) / 2; break;
    case CaseTag::Odd:
    case CaseTag::MixedOneEven: r.evc = r.vc; break;
    case CaseTag::Even:
    case CaseTag::MixedBoth:
    case CaseTag::MixedOneOdd: r.evc = r.vc + 1; break;
  }
  r.class_size = class_size(m);
  return r;
}

PathMatchings odd_path_matchings(std::span<const Vertex> path) {
  if (path.size() < 2 || (path.size() - 1) % 2 == 0) {
    throw EvenLengthPath("path of length " + std::to_string(path.empty() ? 0 : path.size() - 1) +
                         " has no odd-perfect matching");
  }
  PathMatchings out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    (i % 2 == 0 ? out.perfect : out.imperfect).emplace_back(path[i], path[i + 1]);
  }
  return out;
}

std::vector<Edge> matching_through_edge(const MelonStructure& m, const Edge& e) {
  if (!m.even_paths.empty()) throw CaseMismatch("matching_through_edge needs all paths odd");
  if (m.k() < 2) throw CaseMismatch("matching_through_edge needs at least two paths");
  std::vector<PathMatchings> per_path;
  std::optional<std::size_t> home;
  bool in_perfect = false;
  for (std::size_t i = 0; i < m.k(); ++i) {
    per_path.push_back(odd_path_matchings(m.paths[i]));
    const auto& pm = per_path.back();
    if (std::find(pm.perfect.begin(), pm.perfect.end(), e) != pm.perfect.end()) {
      home = i;
      in_perfect = true;
    } else if (std::find(pm.imperfect.begin(), pm.imperfect.end(), e) != pm.imperfect.end()) {
      home = i;
    }
  }
  if (!home) throw GraphError(to_string(e) + " is not an edge of the melon");
  std::size_t perfect_path = *home;
  if (!in_perfect) {
    perfect_path = *home == 0 ? 1 : 0;
  }
  std::vector<Edge> out;
  for (std::size_t i = 0; i < m.k(); ++i) {
    const auto& part = i == perfect_path ? per_path[i].perfect : per_path[i].imperfect;
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

StrategyClass::StrategyClass(MelonStructure m)
    : melon_(std::move(m)), graph_(melon_.to_graph()), tag_(classify(melon_)) {
  for (std::size_t i = 0; i < melon_.k(); ++i) {
    const auto& p = melon_.paths[i];
    for (std::size_t j = 0; j + 1 < p.size(); ++j) path_of_edge_[Edge(p[j], p[j + 1])] = i;
  }
  if (tag_ == CaseTag::Cycle) {
    cycle_order_ = melon_.paths[0];
    const auto& back = melon_.paths[1];
    for (std::size_t j = back.size() - 2; j >= 1; --j) cycle_order_.push_back(back[j]);
  }
  enumerate();
}

Configuration StrategyClass::pattern(bool s_in, bool t_in,
                                     const std::vector<bool>& odd_positions) const {
  std::vector<Vertex> vs;
  if (s_in) vs.push_back(melon_.source);
  if (t_in) vs.push_back(melon_.sink);
  for (std::size_t i = 0; i < melon_.k(); ++i) {
    const auto& p = melon_.paths[i];
    for (std::size_t pos = 1; pos + 1 < p.size(); ++pos) {
      if ((pos % 2 == 1) == odd_positions[i]) vs.push_back(p[pos]);
    }
  }
  return Configuration(std::move(vs));
}

void StrategyClass::enumerate() {
  const std::size_t k = melon_.k();
  const auto& evens = melon_.even_paths;
  const auto& odds = melon_.odd_paths;
  std::vector<Configuration> out;
  // Odd paths: s-mode puts internal guards on even positions, t-mode on odd ones.
  auto with_odd_mask = [&](std::vector<bool> bits, std::size_t s_mask) {
    for (std::size_t j = 0; j < odds.size(); ++j) bits[odds[j]] = ((s_mask >> j) & 1) == 0;
    return bits;
  };
  switch (tag_) {
    case CaseTag::SingleEdge:
    case CaseTag::Path:
      for (Vertex h = 0; h < melon_.vertex_count; ++h) {
        std::vector<Vertex> vs;
        for (Vertex v = 0; v < melon_.vertex_count; ++v) {
          if (v != h) vs.push_back(v);
        }
        out.emplace_back(std::move(vs));
      }
      break;
    case CaseTag::Cycle: {
      const std::size_t n = cycle_order_.size();
      for (std::size_t r = 0; r < n; ++r) {
        std::vector<Vertex> vs;
        for (std::size_t i = 0; i < n; i += 2) vs.push_back(cycle_order_[(i + r) % n]);
        out.emplace_back(std::move(vs));
      }
      break;
    }
    case CaseTag::Odd: {
      auto parts = bipartition(graph_);
      out.emplace_back(parts->a);
      out.emplace_back(parts->b);
      break;
    }
    case CaseTag::Even:
      for (std::size_t i = 0; i < k; ++i) {
        std::vector<bool> bits(k, false);
        bits[i] = true;
        out.push_back(pattern(true, true, bits));
      }
      break;
    case CaseTag::MixedBoth:
      for (std::size_t e : evens) {
        std::vector<bool> bits(k, false);
        bits[e] = true;
        for (std::size_t mask = 1; mask + 1 < pow2(odds.size()); ++mask) {
          out.push_back(pattern(true, true, with_odd_mask(bits, mask)));
        }
      }
      break;
    case CaseTag::MixedOneOdd:
      for (std::size_t e : evens) {
        std::vector<bool> bits(k, false);
        bits[e] = true;
        out.push_back(pattern(true, true, with_odd_mask(bits, 1)));
        out.push_back(pattern(true, true, with_odd_mask(bits, 0)));
      }
      break;
    case CaseTag::MixedOneEven: {
      std::vector<bool> bits(k, false);
      bits[evens[0]] = true;
      out.push_back(pattern(true, false, with_odd_mask(bits, pow2(odds.size()) - 1)));
      out.push_back(pattern(false, true, with_odd_mask(bits, 0)));
      bits[evens[0]] = false;
      for (std::size_t mask = 1; mask + 1 < pow2(odds.size()); ++mask) {
        out.push_back(pattern(true, true, with_odd_mask(bits, mask)));
      }
      break;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  members_ = std::move(out);
}

bool StrategyClass::contains(const Configuration& c) const {
  return std::binary_search(members_.begin(), members_.end(), c);
}

bool StrategyClass::external(std::size_t path, const Configuration& c) const {
  return c.contains(melon_.paths[path][1]);
}

bool StrategyClass::s_mode(std::size_t path, const Configuration& c) const {
  const auto& p = melon_.paths[path];
  if (p.size() == 2) return c.contains(melon_.source);
  return !c.contains(p[1]);
}

bool StrategyClass::t_mode(std::size_t path, const Configuration& c) const {
  const auto& p = melon_.paths[path];
  if (p.size() == 2) return c.contains(melon_.sink);
  return c.contains(p[1]);
}

DefenseFunction StrategyClass::realize_plan(const Configuration& c, const Plan& plan) const {
  DefenseFunction d = DefenseFunction::identity(c);
  for (const Shift& sh : plan.shifts) {
    const auto& p = melon_.paths[sh.path];
    for (std::size_t pos = 1; pos + 1 < p.size(); ++pos) {
      if (!c.contains(p[pos])) continue;
      d.set(p[pos], sh.dir == Dir::TowardS ? p[pos - 1] : p[pos + 1]);
    }
  }
  if (plan.s_to && c.contains(melon_.source)) d.set(melon_.source, *plan.s_to);
  if (plan.t_to && c.contains(melon_.sink)) d.set(melon_.sink, *plan.t_to);
  return d;
}

// Two-path rotation on the even sub-melon: P internal, Q external.
void StrategyClass::even_candidates(const Configuration& c, std::size_t attacked,
                                    std::vector<Plan>& out) const {
  std::size_t ext = kNone;
  for (std::size_t i : melon_.even_paths) {
    if (external(i, c)) ext = i;
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  if (attacked == ext) {
    for (std::size_t i : melon_.even_paths) {
      if (i != ext) pairs.emplace_back(i, ext);
    }
  } else {
    pairs.emplace_back(attacked, ext);
  }
  for (auto [p, q] : pairs) {
    const auto& pp = melon_.paths[p];
    out.push_back({{{p, Dir::TowardS}, {q, Dir::TowardT}}, std::nullopt, pp[pp.size() - 2]});
    out.push_back({{{p, Dir::TowardT}, {q, Dir::TowardS}}, pp[1], std::nullopt});
  }
}

// Two-path rotation on an odd pair: P an s-path, P' a t-path.
void StrategyClass::odd_pair_candidates(const Configuration& c, std::size_t attacked,
                                        std::vector<Plan>& out) const {
  const bool attacked_s = s_mode(attacked, c);
  for (std::size_t other : melon_.odd_paths) {
    if (other == attacked) continue;
    std::size_t p = attacked;
    std::size_t q = other;
    if (attacked_s) {
      if (!t_mode(other, c)) continue;
    } else {
      if (!s_mode(other, c)) continue;
      std::swap(p, q);
    }
    const auto& pp = melon_.paths[p];
    const auto& qq = melon_.paths[q];
    out.push_back({{{p, Dir::TowardS}, {q, Dir::TowardT}}, std::nullopt, std::nullopt});
    out.push_back({{{p, Dir::TowardT}, {q, Dir::TowardS}}, pp[1], qq[qq.size() - 2]});
  }
}

std::vector<DefenseFunction> StrategyClass::candidates(const Configuration& c,
                                                       const Edge& e) const {
  std::vector<DefenseFunction> out;
  const std::size_t j = path_of_edge_.at(e);
  const bool attacked_even = melon_.length(j) % 2 == 0;
  const Vertex s = melon_.source;
  const Vertex t = melon_.sink;
  std::vector<Plan> plans;

  switch (tag_) {
    case CaseTag::SingleEdge:
    case CaseTag::Path: {
      Vertex z = c.contains(e.u) ? e.u : e.v;
      DefenseFunction d = DefenseFunction::identity(c);
      d.set(z, e.other(z));
      out.push_back(std::move(d));
      break;
    }
    case CaseTag::Cycle: {
      const std::size_t n = cycle_order_.size();
      for (std::size_t step : {std::size_t{1}, n - 1}) {
        DefenseFunction d;
        for (std::size_t i = 0; i < n; ++i) {
          if (c.contains(cycle_order_[i])) d.set(cycle_order_[i], cycle_order_[(i + step) % n]);
        }
        out.push_back(std::move(d));
      }
      break;
    }
    case CaseTag::Odd: {
      DefenseFunction d;
      for (const Edge& m : matching_through_edge(melon_, e)) {
        if (c.contains(m.u)) d.set(m.u, m.v);
        if (c.contains(m.v)) d.set(m.v, m.u);
      }
      out.push_back(std::move(d));
      break;
    }
    case CaseTag::Even:
      even_candidates(c, j, plans);
      break;
    case CaseTag::MixedBoth:
      if (attacked_even) {
        even_candidates(c, j, plans);
      } else {
        odd_pair_candidates(c, j, plans);
      }
      break;
    case CaseTag::MixedOneOdd: {
      if (attacked_even) {
        even_candidates(c, j, plans);
        break;
      }
      std::size_t ext = kNone;
      for (std::size_t i : melon_.even_paths) {
        if (external(i, c)) ext = i;
      }
      const auto& po = melon_.paths[j];
      if (s_mode(j, c)) {
        plans.push_back({{{j, Dir::TowardS}}, std::nullopt, std::nullopt});
        for (std::size_t other : melon_.even_paths) {
          if (other == ext) continue;
          const auto& q = melon_.paths[other];
          plans.push_back({{{j, Dir::TowardT}, {ext, Dir::TowardS}, {other, Dir::TowardS}},
                           po[1],
                           q[q.size() - 2]});
        }
      }
      if (t_mode(j, c)) {
        plans.push_back({{{j, Dir::TowardT}}, std::nullopt, std::nullopt});
        for (std::size_t other : melon_.even_paths) {
          if (other == ext) continue;
          const auto& q = melon_.paths[other];
          plans.push_back({{{j, Dir::TowardS}, {ext, Dir::TowardT}, {other, Dir::TowardT}},
                           q[1],
                           po[po.size() - 2]});
        }
      }
      break;
    }
    case CaseTag::MixedOneEven: {
      const std::size_t pe = melon_.even_paths[0];
      const auto& pev = melon_.paths[pe];
      const bool s_in = c.contains(s);
      const bool t_in = c.contains(t);
      if (s_in != t_in) {
        std::vector<std::size_t> partners;
        if (attacked_even) {
          partners = melon_.odd_paths;
        } else {
          partners.push_back(j);
        }
        for (std::size_t po : partners) {
          const auto& pov = melon_.paths[po];
          if (s_in) {
            plans.push_back({{{pe, Dir::TowardS}, {po, Dir::TowardT}}, pov[1], std::nullopt});
            plans.push_back({{{pe, Dir::TowardT}, {po, Dir::TowardS}}, std::nullopt, std::nullopt});
          } else {
            plans.push_back(
                {{{pe, Dir::TowardT}, {po, Dir::TowardS}}, std::nullopt, pov[pov.size() - 2]});
            plans.push_back({{{pe, Dir::TowardS}, {po, Dir::TowardT}}, std::nullopt, std::nullopt});
          }
        }
      } else if (attacked_even) {
        Plan to_s{{{pe, Dir::TowardS}}, std::nullopt, pev[pev.size() - 2]};
        Plan to_t{{{pe, Dir::TowardT}}, pev[1], std::nullopt};
        for (std::size_t po : melon_.odd_paths) {
          if (melon_.length(po) == 1) continue;
          if (t_mode(po, c)) to_s.shifts.push_back({po, Dir::TowardT});
          if (s_mode(po, c)) to_t.shifts.push_back({po, Dir::TowardS});
        }
        plans.push_back(std::move(to_s));
        plans.push_back(std::move(to_t));
      } else {
        odd_pair_candidates(c, j, plans);
      }
      break;
    }
  }
  for (const Plan& plan : plans) out.push_back(realize_plan(c, plan));
  return out;
}

DefenseFunction StrategyClass::respond(const Configuration& c, const Attack& a) const {
  if (!contains(c)) throw ConfigurationNotInClass(to_string(c) + " is not in the class");
  const Edge& e = a.edge;
  if (!graph_.has_edge(e.u, e.v)) {
    throw DefenseError(DefenseError::Kind::NotAnEdge, to_string(e) + " is not an edge");
  }
  if (c.contains(e.u) && c.contains(e.v)) return swap_defense(c, e);
  for (const DefenseFunction& d : candidates(c, e)) {
    if (!d.crosses(e)) continue;
    try {
      Configuration image = apply_defense(graph_, c, d, a);
      if (contains(image)) return d;
    } catch (const DefenseError&) {
    }
  }
  throw std::logic_error("no structured defense of " + to_string(e) + " from " + to_string(c));
}

StrategyClass strategy_class(const MelonStructure& m) { return StrategyClass(m); }

}  // namespace evc::melon
