#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modvit/centrality.hpp"
#include "modvit/graph.hpp"
#include "modvit/partition.hpp"

namespace modvit {

enum class Strategy { initial, recomputed, mba };

const char* strategy_name(Strategy s);
Strategy parse_strategy(const std::string& name);

struct TraceStep {
  int step = 0;                 // 0 is the pre-attack record
  std::int64_t node_label = -1;  // external id of the removed node, -1 at step 0
  double rho = 0.0;             // fraction of nodes removed
  double eta = 0.0;             // fraction of edge weight removed
  double sigma = 0.0;           // largest component / original N
  double q = 0.0;               // residual modularity, induced partition
};

struct AttackTrace {
  Method method = Method::deg;
  Strategy strategy = Strategy::initial;
  NodeId node_count = 0;
  std::vector<NodeId> removed;   // internal ids, removal order
  std::vector<TraceStep> steps;  // steps[0] has node_label -1
};

struct CostReport {
  double c_rho = 0.0;
  double c_eta = 0.0;
};

/// Score once, then remove round(budget*N) nodes in ranking order.
AttackTrace initial_attack(const Graph& g, const Partition& p, Method method,
                           double budget);

/// Re-rank on the residual graph (induced partition, empty communities
/// dropped) after every single removal.
AttackTrace recomputed_attack(const Graph& g, const Partition& p, Method method,
                              double budget);

/// Module-based attack: scores are fixed, but a node is only removed while it
/// bridges communities (residual external degree > 0) and sits in the current
/// largest component. Non-bridges are discarded from the queue; bridges
/// outside the largest component are re-appended. Stops when no bridge
/// remains in the largest component.
AttackTrace mba_attack(const Graph& g, const Partition& p, Method method);

/// Area under sigma over [0,1] against rho and against eta (trapezoid rule,
/// final sigma held constant to the right boundary when the attack stopped
/// early).
CostReport cost(const AttackTrace& trace);
CostReport cost_from_curve(const std::vector<TraceStep>& steps);

/// Kendall tau-b between two methods' attack priorities, with tie
/// correction, via merge-sort inversion counting in O(n log n).
double kendall_tau(const ScoreVector& a, const ScoreVector& b);
double kendall_tau_values(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace modvit
