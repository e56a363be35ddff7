#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "modvit/graph.hpp"
#include "modvit/partition.hpp"

namespace modvit {

/// Community deception plan: nodes removed hub-first (highest positive
/// modularity vitality) to push the partition's residual modularity down.
struct DeceptionStep {
  int step = 0;
  std::int64_t node_label = -1;
  double rho = 0.0;
  double eta = 0.0;
  double q = 0.0;
};

struct DeceptionPlan {
  std::vector<NodeId> removals;      // internal ids, removal order
  std::vector<DeceptionStep> curve;  // curve[0] is the pre-removal record
};

/// When more than one rule is set the first one hit stops the run. The
/// plateau rule stops once the best achievable single-step modularity drop
/// falls below plateau_eps.
struct StoppingRule {
  double node_budget = 1.0;  // fraction of nodes
  double target_q = -std::numeric_limits<double>::infinity();
  double plateau_eps = 1e-9;

  static StoppingRule budget(double fraction) {
    StoppingRule r;
    r.node_budget = fraction;
    r.plateau_eps = -std::numeric_limits<double>::infinity();  // run the full budget
    return r;
  }
  static StoppingRule until_q(double q) {
    StoppingRule r;
    r.target_q = q;
    r.plateau_eps = -std::numeric_limits<double>::infinity();
    return r;
  }
};

/// Score vitality once; remove descending by vitality (most positive first).
DeceptionPlan deceive_initial(const Graph& g, const Partition& p, double budget);

/// Recompute vitality on the residual graph at every step and remove the
/// argmax (the greedy modularity-minimizing node removal).
DeceptionPlan deceive_greedy(const Graph& g, const Partition& p,
                             const StoppingRule& stop = {});

}  // namespace modvit
