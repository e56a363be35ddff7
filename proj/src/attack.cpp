#include "modvit/attack.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "modvit/error.hpp"
#include "modvit/residual.hpp"

namespace modvit {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::initial: return "initial";
    case Strategy::recomputed: return "recomputed";
    case Strategy::mba: return "mba";
  }
  return "?";
}

Strategy parse_strategy(const std::string& name) {
  for (Strategy s : {Strategy::initial, Strategy::recomputed, Strategy::mba})
    if (name == strategy_name(s)) return s;
  throw InputError("unknown strategy '" + name + "'");
}

namespace {

TraceStep snapshot(const ResidualState& state, int step, std::int64_t node_label) {
  TraceStep t;
  t.step = step;
  t.node_label = node_label;
  t.rho = state.rho();
  t.eta = state.eta();
  t.sigma = state.sigma();
  t.q = state.modularity();
  return t;
}

AttackTrace start_trace(const Graph& g, const ResidualState& state, Method method,
                        Strategy strategy) {
  AttackTrace trace;
  trace.method = method;
  trace.strategy = strategy;
  trace.node_count = g.node_count();
  trace.steps.push_back(snapshot(state, 0, -1));
  return trace;
}

NodeId removal_count(const Graph& g, double budget) {
  if (!(budget > 0.0) || budget > 1.0) throw InputError("budget must be in (0, 1]");
  const auto k = static_cast<NodeId>(std::llround(budget * g.node_count()));
  return std::min(g.node_count(), k);
}

}  // namespace

AttackTrace initial_attack(const Graph& g, const Partition& p, Method method,
                           double budget) {
  if (g.node_count() == 0) throw InputError("cannot attack an empty graph");
  const NodeId k = removal_count(g, budget);

  const ScoreVector sv = score(g, p, method);
  ResidualState state(g, p);
  AttackTrace trace = start_trace(g, state, method, Strategy::initial);
  for (NodeId step = 0; step < k; ++step) {
    const NodeId target = sv.ranking[step];
    state.remove(target);
    trace.removed.push_back(target);
    trace.steps.push_back(snapshot(state, step + 1, g.label(target)));
  }
  return trace;
}

AttackTrace recomputed_attack(const Graph& g, const Partition& p, Method method,
                              double budget) {
  if (g.node_count() == 0) throw InputError("cannot attack an empty graph");
  const NodeId k = removal_count(g, budget);

  ResidualState state(g, p);
  AttackTrace trace = start_trace(g, state, method, Strategy::recomputed);

  std::vector<char> keep(g.node_count(), 1);
  std::vector<NodeId> old_ids;
  for (NodeId step = 0; step < k; ++step) {
    const Graph sub = g.induced_subgraph(keep, &old_ids);
    const Partition sub_p = p.induced(old_ids);
    const ScoreVector sv = score(sub, sub_p, method);
    // top of the recomputed ranking, ties by original node id; compact ids
    // preserve the original order, so ranking[0] is already the answer
    const NodeId target = old_ids[sv.ranking[0]];
    state.remove(target);
    keep[target] = 0;
    trace.removed.push_back(target);
    trace.steps.push_back(snapshot(state, step + 1, g.label(target)));
  }
  return trace;
}

AttackTrace mba_attack(const Graph& g, const Partition& p, Method method) {
  if (g.node_count() == 0) throw InputError("cannot attack an empty graph");

  const ScoreVector sv = score(g, p, method);
  std::deque<NodeId> queue(sv.ranking.begin(), sv.ranking.end());

  ResidualState state(g, p);
  state.enable_bridge_tracking();
  AttackTrace trace = start_trace(g, state, method, Strategy::mba);

  int step = 0;
  while (state.bridges_in_largest() > 0) {
    const NodeId target = queue.front();
    queue.pop_front();
    const bool bridge = state.alive(target) && state.residual_external_degree(target) > 0.0;
    const bool in_lc = state.alive(target) &&
                       state.component_of(target) == state.largest_component_id();
    if (bridge && in_lc) {
      state.remove(target);
      trace.removed.push_back(target);
      trace.steps.push_back(snapshot(state, ++step, g.label(target)));
    } else if (!bridge) {
      // drop permanently: external degrees only shrink, so a non-bridge
      // can never become a bridge again
    } else {
      queue.push_back(target);  // bridge outside the largest component
    }
  }
  return trace;
}

CostReport cost_from_curve(const std::vector<TraceStep>& steps) {
  if (steps.empty()) throw InputError("cost of an empty trace is undefined");
  CostReport report;
  auto integrate = [&](auto x_of) {
    double area = 0.0;
    double prev_x = x_of(steps.front());
    double prev_s = steps.front().sigma;
    // the curve starts at the first record's abscissa; anything left of it
    // has sigma at the initial value
    area += prev_x * prev_s;
    for (std::size_t i = 1; i < steps.size(); ++i) {
      const double x = x_of(steps[i]);
      const double s = steps[i].sigma;
      area += (x - prev_x) * 0.5 * (prev_s + s);
      prev_x = x;
      prev_s = s;
    }
    if (prev_x < 1.0) area += (1.0 - prev_x) * prev_s;  // hold the last value
    return area;
  };
  report.c_rho = integrate([](const TraceStep& t) { return t.rho; });
  report.c_eta = integrate([](const TraceStep& t) { return t.eta; });
  return report;
}

CostReport cost(const AttackTrace& trace) { return cost_from_curve(trace.steps); }

namespace {

// inversion counting merge sort over the y sequence
std::int64_t count_inversions(std::vector<double>& y, std::vector<double>& tmp,
                              std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::int64_t inv = count_inversions(y, tmp, lo, mid) + count_inversions(y, tmp, mid, hi);
  std::size_t a = lo, b = mid, out = lo;
  while (a < mid && b < hi) {
    if (y[b] < y[a]) {
      inv += static_cast<std::int64_t>(mid - a);
      tmp[out++] = y[b++];
    } else {
      tmp[out++] = y[a++];
    }
  }
  while (a < mid) tmp[out++] = y[a++];
  while (b < hi) tmp[out++] = y[b++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, y.begin() + lo);
  return inv;
}

std::int64_t tie_pairs(const std::vector<double>& v) {
  std::int64_t total = 0;
  std::size_t i = 0;
  while (i < v.size()) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    const std::int64_t t = static_cast<std::int64_t>(j - i);
    total += t * (t - 1) / 2;
    i = j;
  }
  return total;
}

}  // namespace

double kendall_tau_values(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  if (y.size() != n) throw InputError("kendall_tau requires equal-length inputs");
  if (n < 2) throw InputError("kendall_tau requires at least 2 items");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (x[a] != x[b]) return x[a] < x[b];
    return y[a] < y[b];
  });

  // Knight's algorithm: n1 = pairs tied in x, n3 = pairs tied in both
  std::int64_t n1 = 0, n3 = 0;
  {
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j < n && x[order[j]] == x[order[i]]) ++j;
      const std::int64_t t = static_cast<std::int64_t>(j - i);
      n1 += t * (t - 1) / 2;
      std::size_t a = i;
      while (a < j) {
        std::size_t b = a;
        while (b < j && y[order[b]] == y[order[a]]) ++b;
        const std::int64_t u = static_cast<std::int64_t>(b - a);
        n3 += u * (u - 1) / 2;
        a = b;
      }
      i = j;
    }
  }

  std::vector<double> ys(n), tmp(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = y[order[i]];
  const std::int64_t discordant = count_inversions(ys, tmp, 0, n);
  const std::int64_t n2 = tie_pairs(ys);  // ys is sorted now

  const std::int64_t n0 = static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(n) - 1) / 2;
  const double num = static_cast<double>(n0 - n1 - n2 + n3 - 2 * discordant);
  const double den =
      std::sqrt(static_cast<double>(n0 - n1)) * std::sqrt(static_cast<double>(n0 - n2));
  if (den == 0.0) return 0.0;  // a constant ranking carries no order information
  return num / den;
}

double kendall_tau(const ScoreVector& a, const ScoreVector& b) {
  if (a.scores.size() != b.scores.size())
    throw InputError("kendall_tau requires score vectors over the same node set");
  std::vector<double> x(a.scores.size()), y(b.scores.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    x[i] = attack_priority(a.method, a.scores[i]);
    y[i] = attack_priority(b.method, b.scores[i]);
  }
  return kendall_tau_values(x, y);
}

}  // namespace modvit
