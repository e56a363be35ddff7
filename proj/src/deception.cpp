#include "modvit/deception.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "modvit/error.hpp"
#include "modvit/residual.hpp"
#include "modvit/vitality.hpp"

namespace modvit {

namespace {

DeceptionStep snapshot(const ResidualState& state, int step, std::int64_t label) {
  DeceptionStep s;
  s.step = step;
  s.node_label = label;
  s.rho = state.rho();
  s.eta = state.eta();
  s.q = state.modularity();
  return s;
}

NodeId budget_count(const Graph& g, double budget) {
  if (!(budget > 0.0) || budget > 1.0) throw InputError("budget must be in (0, 1]");
  return std::min<NodeId>(g.node_count(),
                          static_cast<NodeId>(std::llround(budget * g.node_count())));
}

}  // namespace

DeceptionPlan deceive_initial(const Graph& g, const Partition& p, double budget) {
  if (g.node_count() == 0) throw InputError("empty graph");
  const NodeId k = budget_count(g, budget);

  const auto report = modularity_vitality_all(g, p);
  std::vector<NodeId> order(g.node_count());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return report.vitality[a] > report.vitality[b];  // most positive first
  });

  ResidualState state(g, p);
  DeceptionPlan plan;
  plan.curve.push_back(snapshot(state, 0, -1));
  for (NodeId t = 0; t < k; ++t) {
    state.remove(order[t]);
    plan.removals.push_back(order[t]);
    plan.curve.push_back(snapshot(state, t + 1, g.label(order[t])));
  }
  return plan;
}

DeceptionPlan deceive_greedy(const Graph& g, const Partition& p, const StoppingRule& stop) {
  if (g.node_count() == 0) throw InputError("empty graph");
  const NodeId max_removals = budget_count(g, stop.node_budget);

  ResidualState state(g, p);
  DeceptionPlan plan;
  plan.curve.push_back(snapshot(state, 0, -1));

  for (NodeId t = 0; t < max_removals; ++t) {
    if (state.modularity() <= stop.target_q) break;
    const NodeId target = state.argmax_vitality();
    if (target == -1) break;  // nothing left to remove
    if (state.vitality(target) < stop.plateau_eps) break;
    state.remove(target);
    plan.removals.push_back(target);
    plan.curve.push_back(snapshot(state, t + 1, g.label(target)));
  }
  return plan;
}

}  // namespace modvit
