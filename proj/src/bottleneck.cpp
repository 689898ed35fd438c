#include "grodiag/bottleneck.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

namespace grodiag {

GroupElement Matching::value(const Interval& left, const Interval& right) const {
  auto it = entries_.find({left, right});
  if (it == entries_.end()) return GroupElement::zero(backend_);
  return it->second;
}

void Matching::add(const Interval& left, const Interval& right, const GroupElement& v) {
  if (v.backend() != backend_) fail(Errc::backend_mismatch, "matching value from another backend");
  if (v.is_zero()) return;
  auto key = std::make_pair(left, right);
  auto it = entries_.find(key);
  if (it == entries_.end()) {
    entries_.emplace(key, v);
    return;
  }
  it->second = it->second + v;
  if (it->second.is_zero()) entries_.erase(it);
}

namespace {

double pair_cost(const Interval& a, const Interval& b) {
  const double dp = std::abs(a.birth - b.birth);
  double dq;
  if (a.death_finite() && b.death_finite())
    dq = std::abs(a.death - b.death);
  else if (!a.death_finite() && !b.death_finite())
    dq = 0; // both essential
  else
    return kInf;
  return std::max(dp, dq);
}

double diagonal_cost(const Interval& a) {
  if (!a.death_finite()) return kInf;
  return (a.death - a.birth) / 2;
}

Interval diagonal_partner(const Interval& a) {
  if (!a.death_finite()) return Interval(a.birth, a.birth);
  const double mid = (a.birth + a.death) / 2;
  return Interval(mid, mid);
}

} // namespace

double matching_norm(const Matching& gamma) {
  double norm = 0;
  for (const auto& [pair, v] : gamma.entries()) {
    (void)v;
    norm = std::max(norm, pair_cost(pair.first, pair.second));
  }
  return norm;
}

std::vector<std::string> validate_matching(const PersistenceDiagram& y1,
                                           const PersistenceDiagram& y2, const Matching& gamma) {
  if (y1.backend() != y2.backend() || gamma.backend() != y1.backend())
    fail(Errc::backend_mismatch, "matching validation across backends");

  std::map<Interval, GroupElement> row_sums, col_sums;
  for (const auto& [pair, v] : gamma.entries()) {
    if (!pair.first.is_diagonal()) {
      auto [it, fresh] = row_sums.try_emplace(pair.first, v);
      if (!fresh) it->second = it->second + v;
    }
    if (!pair.second.is_diagonal()) {
      auto [it, fresh] = col_sums.try_emplace(pair.second, v);
      if (!fresh) it->second = it->second + v;
    }
  }

  std::vector<std::string> violations;
  auto check_side = [&](const PersistenceDiagram& y, std::map<Interval, GroupElement>& sums,
                        const char* side) {
    std::set<Interval> keys;
    for (const auto& [i, v] : y.points()) {
      (void)v;
      keys.insert(i);
    }
    for (const auto& [i, v] : sums) {
      (void)v;
      keys.insert(i);
    }
    for (const Interval& i : keys) {
      GroupElement want = y.value(i);
      auto it = sums.find(i);
      GroupElement got = it == sums.end() ? GroupElement::zero(y.backend()) : it->second;
      if (!(want == got)) {
        std::ostringstream os;
        os << side << " marginal at " << to_string(i) << ": matching gives " << to_string(got)
           << ", diagram has " << to_string(want);
        violations.push_back(os.str());
      }
    }
  };
  check_side(y1, row_sums, "row");
  check_side(y2, col_sums, "column");
  return violations;
}

namespace {

// One generator component: intervals with positive integer multiplicity.
struct SidePoints {
  std::vector<Interval> intervals;
  std::vector<std::int64_t> mult;
  std::int64_t total = 0;
  std::int64_t infinite_mass = 0;
};

struct Component {
  GeneratorKey key;
  SidePoints left, right;
};

SidePoints side_points(const PersistenceDiagram& y, const GeneratorKey& key) {
  SidePoints s;
  for (const auto& [i, v] : y.points()) {
    std::int64_t c = v.coeff(key);
    if (c == 0) continue;
    if (c < 0) fail(Errc::domain, "bottleneck distance requires positive diagrams");
    s.intervals.push_back(i);
    s.mult.push_back(c);
    s.total += c;
    if (!i.death_finite()) s.infinite_mass += c;
  }
  return s;
}

std::vector<Component> decompose(const PersistenceDiagram& y1, const PersistenceDiagram& y2) {
  std::set<GeneratorKey> keys;
  for (const auto& [i, v] : y1.points()) {
    (void)i;
    for (const auto& [k, c] : v.terms()) {
      (void)c;
      keys.insert(k);
    }
  }
  for (const auto& [i, v] : y2.points()) {
    (void)i;
    for (const auto& [k, c] : v.terms()) {
      (void)c;
      keys.insert(k);
    }
  }
  std::vector<Component> comps;
  for (const GeneratorKey& k : keys)
    comps.push_back(Component{k, side_points(y1, k), side_points(y2, k)});
  return comps;
}

// Candidate thresholds: all realizable pair deviations plus all diagonal
// costs. The optimum is always one of these (or 0).
std::vector<double> candidate_thresholds(const Component& c) {
  std::set<double> cand{0.0};
  for (const Interval& a : c.left.intervals)
    for (const Interval& b : c.right.intervals) {
      if (a.death_finite() != b.death_finite()) continue;
      cand.insert(std::abs(a.birth - b.birth));
      if (a.death_finite()) cand.insert(std::abs(a.death - b.death));
    }
  for (const Interval& a : c.left.intervals)
    if (a.death_finite()) cand.insert(diagonal_cost(a));
  for (const Interval& b : c.right.intervals)
    if (b.death_finite()) cand.insert(diagonal_cost(b));
  return {cand.begin(), cand.end()};
}

// Dinic max-flow on a small dense-ish graph.
class MaxFlow {
public:
  explicit MaxFlow(int n) : head_(n, -1), level_(n), it_(n) {}

  void add_edge(int from, int to, std::int64_t cap) {
    edges_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(edges_.size()) - 1;
    edges_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(edges_.size()) - 1;
  }

  std::int64_t run(int s, int t) {
    std::int64_t flow = 0;
    while (bfs(s, t)) {
      it_ = head_;
      while (std::int64_t pushed = dfs(s, t, std::numeric_limits<std::int64_t>::max()))
        flow += pushed;
    }
    return flow;
  }

  // flow actually sent on forward edge index e (in insertion order)
  std::int64_t flow_on(std::size_t e) const { return edges_[2 * e + 1].cap; }

private:
  struct Edge {
    int to;
    int next;
    std::int64_t cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::queue<int> q;
    q.push(s);
    level_[s] = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int e = head_[u]; e >= 0; e = edges_[e].next)
        if (edges_[e].cap > 0 && level_[edges_[e].to] < 0) {
          level_[edges_[e].to] = level_[u] + 1;
          q.push(edges_[e].to);
        }
    }
    return level_[t] >= 0;
  }

  std::int64_t dfs(int u, int t, std::int64_t limit) {
    if (u == t) return limit;
    for (int& e = it_[u]; e >= 0; e = edges_[e].next) {
      Edge& ed = edges_[e];
      if (ed.cap <= 0 || level_[ed.to] != level_[u] + 1) continue;
      std::int64_t pushed = dfs(ed.to, t, std::min(limit, ed.cap));
      if (pushed > 0) {
        ed.cap -= pushed;
        edges_[e ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Edge> edges_;
  std::vector<int> head_, level_, it_;
};

// Transportation instance at threshold eps: every left unit must reach a
// compatible right point or the diagonal, and symmetrically. The diagonal
// nodes absorb/provide slack and trade the remainder between themselves.
struct FlowInstance {
  // forward edge ids for witness extraction
  struct CrossEdge {
    std::size_t left, right;
    std::size_t edge;
  };
  MaxFlow flow;
  std::vector<CrossEdge> cross;
  std::vector<std::pair<std::size_t, std::size_t>> left_diag;  // (left index, edge)
  std::vector<std::pair<std::size_t, std::size_t>> right_diag; // (right index, edge)
  std::int64_t need = 0;
  std::int64_t value = 0;

  FlowInstance(const Component& c, double eps)
      : flow(static_cast<int>(c.left.intervals.size() + c.right.intervals.size()) + 4) {
    const int nl = static_cast<int>(c.left.intervals.size());
    const int nr = static_cast<int>(c.right.intervals.size());
    const int src = nl + nr, sink = src + 1, dl = sink + 1, dr = dl + 1;
    std::size_t edge_id = 0;
    auto next_edge = [&edge_id] { return edge_id++; };

    for (int i = 0; i < nl; ++i) {
      flow.add_edge(src, i, c.left.mult[i]);
      next_edge();
    }
    for (int j = 0; j < nr; ++j) {
      flow.add_edge(nl + j, sink, c.right.mult[j]);
      next_edge();
    }
    // supply for the right diagonal node and demand of the left one
    flow.add_edge(src, dl, c.right.total);
    next_edge();
    flow.add_edge(dr, sink, c.left.total);
    next_edge();
    // leftover diagonal mass cancels directly
    flow.add_edge(dl, dr, c.left.total + c.right.total);
    next_edge();

    for (int i = 0; i < nl; ++i)
      for (int j = 0; j < nr; ++j) {
        if (pair_cost(c.left.intervals[i], c.right.intervals[j]) > eps) continue;
        flow.add_edge(i, nl + j, std::min(c.left.mult[i], c.right.mult[j]));
        cross.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j), next_edge()});
      }
    for (int i = 0; i < nl; ++i) {
      if (diagonal_cost(c.left.intervals[i]) > eps) continue;
      flow.add_edge(i, dr, c.left.mult[i]);
      left_diag.emplace_back(i, next_edge());
    }
    for (int j = 0; j < nr; ++j) {
      if (diagonal_cost(c.right.intervals[j]) > eps) continue;
      flow.add_edge(dl, nl + j, c.right.mult[j]);
      right_diag.emplace_back(j, next_edge());
    }

    need = c.left.total + c.right.total;
    value = flow.run(src, sink);
  }

  bool feasible() const { return value == need; }
};

bool feasible_at(const Component& c, double eps) { return FlowInstance(c, eps).feasible(); }

} // namespace

BottleneckResult bottleneck_distance(const PersistenceDiagram& y1, const PersistenceDiagram& y2) {
  if (y1.backend() != y2.backend())
    fail(Errc::backend_mismatch, "bottleneck distance across backends");
  if (!is_positive(y1) || !is_positive(y2))
    fail(Errc::domain, "bottleneck distance requires positive diagrams");

  BottleneckResult result{0, Matching(y1.backend())};
  for (const Component& c : decompose(y1, y2)) {
    // infinite-death mass can only pair with infinite-death mass
    const bool inf_balanced = c.left.infinite_mass == c.right.infinite_mass;
    std::vector<double> cand = candidate_thresholds(c);

    double best = kInf;
    if (inf_balanced && feasible_at(c, cand.back())) {
      // least feasible candidate; feasibility is monotone in eps
      std::size_t lo = 0, hi = cand.size() - 1;
      while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (feasible_at(c, cand[mid]))
          hi = mid;
        else
          lo = mid + 1;
      }
      best = cand[lo];
    }

    if (best == kInf) {
      // no finite plan: pair whatever is pairable at the largest
      // candidate, send the rest to the diagonal at infinite cost
      result.distance = kInf;
      FlowInstance inst(c, cand.back());
      std::vector<std::int64_t> left_used(c.left.intervals.size(), 0);
      std::vector<std::int64_t> right_used(c.right.intervals.size(), 0);
      for (const auto& e : inst.cross) {
        std::int64_t f = inst.flow.flow_on(e.edge);
        if (f <= 0) continue;
        result.witness.add(c.left.intervals[e.left], c.right.intervals[e.right],
                           GroupElement::single(c.key, f));
        left_used[e.left] += f;
        right_used[e.right] += f;
      }
      for (const auto& [i, edge] : inst.left_diag) {
        std::int64_t f = inst.flow.flow_on(edge);
        if (f <= 0) continue;
        result.witness.add(c.left.intervals[i], diagonal_partner(c.left.intervals[i]),
                           GroupElement::single(c.key, f));
        left_used[i] += f;
      }
      for (const auto& [j, edge] : inst.right_diag) {
        std::int64_t f = inst.flow.flow_on(edge);
        if (f <= 0) continue;
        result.witness.add(diagonal_partner(c.right.intervals[j]), c.right.intervals[j],
                           GroupElement::single(c.key, f));
        right_used[j] += f;
      }
      for (std::size_t i = 0; i < c.left.intervals.size(); ++i)
        if (left_used[i] < c.left.mult[i])
          result.witness.add(c.left.intervals[i], diagonal_partner(c.left.intervals[i]),
                             GroupElement::single(c.key, c.left.mult[i] - left_used[i]));
      for (std::size_t j = 0; j < c.right.intervals.size(); ++j)
        if (right_used[j] < c.right.mult[j])
          result.witness.add(diagonal_partner(c.right.intervals[j]), c.right.intervals[j],
                             GroupElement::single(c.key, c.right.mult[j] - right_used[j]));
      continue;
    }

    result.distance = std::max(result.distance, best);
    FlowInstance inst(c, best);
    for (const auto& e : inst.cross) {
      std::int64_t f = inst.flow.flow_on(e.edge);
      if (f > 0)
        result.witness.add(c.left.intervals[e.left], c.right.intervals[e.right],
                           GroupElement::single(c.key, f));
    }
    for (const auto& [i, edge] : inst.left_diag) {
      std::int64_t f = inst.flow.flow_on(edge);
      if (f > 0)
        result.witness.add(c.left.intervals[i], diagonal_partner(c.left.intervals[i]),
                           GroupElement::single(c.key, f));
    }
    for (const auto& [j, edge] : inst.right_diag) {
      std::int64_t f = inst.flow.flow_on(edge);
      if (f > 0)
        result.witness.add(diagonal_partner(c.right.intervals[j]), c.right.intervals[j],
                           GroupElement::single(c.key, f));
    }
  }
  return result;
}

namespace {

// Recursive plan enumeration for the oracle: each left unit picks an
// unused right unit or the diagonal; leftover right units must take the
// diagonal as well.
double oracle_component(const Component& c) {
  std::vector<Interval> left_units, right_units;
  for (std::size_t i = 0; i < c.left.intervals.size(); ++i)
    for (std::int64_t r = 0; r < c.left.mult[i]; ++r) left_units.push_back(c.left.intervals[i]);
  for (std::size_t j = 0; j < c.right.intervals.size(); ++j)
    for (std::int64_t r = 0; r < c.right.mult[j]; ++r) right_units.push_back(c.right.intervals[j]);
  if (left_units.size() > 6 || right_units.size() > 6)
    fail(Errc::size_bound, "oracle instance exceeds the mass bound");

  double best = kInf;
  std::vector<bool> used(right_units.size(), false);

  auto finish_cost = [&](double acc) {
    for (std::size_t j = 0; j < right_units.size(); ++j)
      if (!used[j]) acc = std::max(acc, diagonal_cost(right_units[j]));
    return acc;
  };

  std::function<void(std::size_t, double)> rec = [&](std::size_t i, double acc) {
    if (acc >= best) return;
    if (i == left_units.size()) {
      best = std::min(best, finish_cost(acc));
      return;
    }
    for (std::size_t j = 0; j < right_units.size(); ++j) {
      if (used[j]) continue;
      double cost = pair_cost(left_units[i], right_units[j]);
      used[j] = true;
      rec(i + 1, std::max(acc, cost));
      used[j] = false;
    }
    rec(i + 1, std::max(acc, diagonal_cost(left_units[i])));
  };
  rec(0, 0);
  return best;
}

} // namespace

double bottleneck_oracle(const PersistenceDiagram& y1, const PersistenceDiagram& y2) {
  if (y1.backend() != y2.backend())
    fail(Errc::backend_mismatch, "bottleneck oracle across backends");
  if (!is_positive(y1) || !is_positive(y2))
    fail(Errc::domain, "bottleneck oracle requires positive diagrams");
  double d = 0;
  for (const Component& c : decompose(y1, y2)) d = std::max(d, oracle_component(c));
  return d;
}

} // namespace grodiag
