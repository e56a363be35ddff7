#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modvit/graph.hpp"

namespace modvit {

using CommunityId = std::int32_t;

/// Node -> community assignment. Community ids are compact (0..C-1) and every
/// community is non-empty; the vector representation makes the assignment a
/// true partition (disjoint cover) by construction.
class Partition {
 public:
  Partition() = default;

  /// Compacts arbitrary community ids to 0..C-1 preserving ascending order.
  static Partition from_assignment(std::vector<CommunityId> community_of);

  NodeId node_count() const { return static_cast<NodeId>(community_of_.size()); }
  CommunityId community_count() const { return community_count_; }
  CommunityId community_of(NodeId i) const { return community_of_[i]; }
  const std::vector<CommunityId>& assignment() const { return community_of_; }
  const std::vector<std::vector<NodeId>>& members() const { return members_; }
  std::int64_t community_size(CommunityId c) const {
    return static_cast<std::int64_t>(members_[c].size());
  }

  /// Partition for the graph with node i deleted: node ids above i shift down
  /// by one, emptied communities are dropped and community ids re-compacted.
  Partition remove_node(NodeId i) const;

  /// Partition induced on the kept nodes of Graph::induced_subgraph.
  Partition induced(const std::vector<NodeId>& original_ids) const;

 private:
  std::vector<CommunityId> community_of_;
  std::vector<std::vector<NodeId>> members_;
  CommunityId community_count_ = 0;
};

/// Per-partition quantities every scoring formula consumes, built in a single
/// O(M + N + C) pass.
struct PartitionStats {
  std::vector<double> community_degree;  // d_c = sum of member degrees
  double internal_weight = 0.0;          // M_internal
  std::vector<double> internal_degree;   // per node, weight to own community
  // sparse per-node community incidence: for node i, communities
  // comm_index[comm_offset[i]..comm_offset[i+1]) with weights comm_weight
  std::vector<std::size_t> comm_offset;
  std::vector<CommunityId> comm_index;
  std::vector<double> comm_weight;
  std::vector<double> group_fraction;     // mu_c (a sum of ratios, not a fraction)
  double sum_sq_community_degree = 0.0;   // sum over c of d_c^2
  double total_weight = 0.0;              // M, copied from the graph

  double external_degree(const Graph& g, NodeId i) const {
    return g.degree(i) - internal_degree[i];
  }
};

PartitionStats compute_stats(const Graph& g, const Partition& p);

/// Number of distinct communities, other than node i's own, among its
/// neighbors (b_i).
int neighboring_communities(const Graph& g, const Partition& p, NodeId i);

/// b_i for every node in one pass.
std::vector<int> neighboring_communities_all(const Graph& g, const Partition& p);

struct DetectOptions {
  std::uint64_t seed = 0;
  int max_levels = 32;
  double min_gain = 1e-9;  // modularity gain threshold for a single move
};

/// Greedy multi-level modularity maximization (local moves + aggregation)
/// followed by a refinement pass that splits internally disconnected
/// communities into their connected components. Deterministic for a fixed
/// seed; ties between equally good target communities go to the lowest id.
Partition detect_communities(const Graph& g, const DetectOptions& opt = {});
Partition detect_communities(const Graph& g, std::uint64_t seed);

/// Partition CSV I/O ("node_id,community_id" with node_id an external graph
/// label). Loading requires exactly one line per graph node; community ids
/// are compacted ascending. Errors list offending/missing ids.
Partition load_partition(const std::string& path, const Graph& g);
void save_partition(const Partition& p, const Graph& g, const std::string& path,
                    const std::string& header_comment = {});

}  // namespace modvit
