#pragma once

#include <utility>
#include <vector>

#include "modvit/graph.hpp"
#include "modvit/partition.hpp"

namespace modvit {

/// Newman modularity Q = M_internal/M - sum_c d_c^2 / (4 M^2).
/// Defined as 0 for an edgeless graph.
double modularity(const PartitionStats& s);
double modularity(const Graph& g, const Partition& p);

/// Per-community weights h_{i,c} = k_i^c + k_i [c == c_i] for node i, as a
/// sparse (community, value) list. This is the only per-node quantity the
/// removal update needs beyond the community degree vector.
std::vector<std::pair<CommunityId, double>> h_values(const Graph& g, const Partition& p,
                                                     const PartitionStats& s, NodeId i);

/// Modularity of (G - {i}, partition - {i}) without rebuilding the graph:
///
///   (M_int - k_i^int) / (M - k_i)
///     - [ sum_c d_c^2 - sum_{c: h != 0} (2 d_c h_{i,c} - h_{i,c}^2) ]
///       / (4 (M - k_i)^2)
///
/// O(deg_i) per call. Returns 0 when no edge weight remains (M = k_i).
double modularity_after_removal(const Graph& g, const Partition& p,
                                const PartitionStats& s, NodeId i);

struct VitalityReport {
  double q_original = 0.0;
  std::vector<double> vitality;  // q_original - Q(G - {i}), per node
};

/// Modularity vitality for every node in O(M + N + C) total. Negative values
/// mark community bridges (removal raises Q), positive values community hubs.
/// jobs > 1 splits the per-node loop across threads; output is identical
/// regardless of schedule.
VitalityReport modularity_vitality_all(const Graph& g, const Partition& p,
                                       const PartitionStats& s, int jobs = 1);
VitalityReport modularity_vitality_all(const Graph& g, const Partition& p);

/// Community-Degree: CD_i = sum_c (d_c + h_{i,c})^2 / (4 (M - k_i)^2),
/// crediting hub and bridge contributions alike. Defined as 0 when M = k_i.
std::vector<double> community_degree_all(const Graph& g, const Partition& p,
                                         const PartitionStats& s);

}  // namespace modvit
