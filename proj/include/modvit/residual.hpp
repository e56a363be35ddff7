#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "modvit/graph.hpp"
#include "modvit/partition.hpp"

namespace modvit {

/// Mutable view of a graph under progressive node removal. Maintains, per
/// removal in O(deg + affected component):
///   - residual degrees, external degrees, community degrees, M, M_internal
///     and sum_c d_c^2 (so residual modularity is O(1)),
///   - connected components (BFS re-label of the fragment that contained the
///     removed node; components only ever split),
///   - the largest component via a lazy max-heap keyed by (size, min node id).
///
/// The original Graph and Partition stay untouched; communities shrink with
/// their members and an emptied community simply stops contributing.
class ResidualState {
 public:
  ResidualState(const Graph& g, const Partition& p);

  void remove(NodeId i);

  bool alive(NodeId i) const { return alive_[i] != 0; }
  NodeId alive_count() const { return alive_count_; }
  double residual_degree(NodeId i) const { return degree_[i]; }
  double residual_external_degree(NodeId i) const { return external_degree_[i]; }
  double residual_weight() const { return total_weight_; }

  /// Fraction of original nodes removed / edge weight removed.
  double rho() const;
  double eta() const;
  /// Largest residual component size over the ORIGINAL node count.
  double sigma() const;
  std::int64_t largest_component_size() const;
  /// Component id holding the largest component (ties: smallest min node id).
  int largest_component_id() const;
  int component_of(NodeId i) const { return component_id_[i]; }

  /// Residual modularity under the induced partition (0 once edgeless).
  double modularity() const;

  /// Modularity of the residual graph with node i additionally removed,
  /// via the O(deg_i) removal update on the residual statistics.
  double modularity_after_removal(NodeId i) const;

  /// q() - modularity_after_removal(i).
  double vitality(NodeId i) const { return modularity() - modularity_after_removal(i); }

  /// Alive node with maximal vitality (ties: smallest id); -1 if none alive.
  NodeId argmax_vitality() const;

  /// Number of alive bridge nodes (external degree > 0) inside the largest
  /// component. Costs O(N) per removal once enabled, so it is off by default.
  void enable_bridge_tracking();
  std::int64_t bridges_in_largest() const { return bridges_in_largest_; }

  const Graph& graph() const { return graph_; }
  const Partition& partition() const { return partition_; }

  /// Full recount of every incremental quantity (debug cross-check).
  void verify_consistency() const;

 private:
  void split_component(NodeId removed);
  void recount_bridges_in_largest();

  const Graph& graph_;
  const Partition& partition_;

  std::vector<char> alive_;
  NodeId alive_count_ = 0;
  std::vector<double> degree_;
  std::vector<double> external_degree_;
  std::vector<double> community_degree_;
  double total_weight_ = 0.0;
  double internal_weight_ = 0.0;
  double sum_sq_community_degree_ = 0.0;
  double removed_weight_ = 0.0;
  double original_weight_ = 0.0;
  NodeId original_count_ = 0;

  // component bookkeeping
  std::vector<int> component_id_;
  std::vector<std::int64_t> component_size_;
  std::vector<NodeId> component_min_;
  struct HeapEntry {
    std::int64_t size;
    NodeId min_id;
    int comp;
    bool operator<(const HeapEntry& o) const {
      if (size != o.size) return size < o.size;
      return min_id > o.min_id;  // smaller min id ranks higher
    }
  };
  mutable std::priority_queue<HeapEntry> heap_;
  bool track_bridges_ = false;
  std::int64_t bridges_in_largest_ = 0;

  // scratch for the split BFS
  std::vector<std::uint32_t> visit_mark_;
  std::uint32_t visit_epoch_ = 0;
  std::vector<NodeId> bfs_queue_;
};

}  // namespace modvit
