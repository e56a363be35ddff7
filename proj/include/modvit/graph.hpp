#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

namespace modvit {

using NodeId = std::int32_t;

struct WeightedEdge {
  NodeId u;
  NodeId v;
  double weight;
  bool operator==(const WeightedEdge&) const = default;
};

/// Immutable undirected weighted graph in CSR form.
///
/// Node ids are compact (0..N-1). Each node keeps an external label so that
/// graphs loaded from files and graphs derived by node removal report results
/// in the caller's id space. Invariants enforced at construction: no
/// self-loops, all weights > 0, at most one edge per unordered pair, and a
/// symmetric adjacency. total_weight() is the sum of edge weights (M), which
/// equals the edge count for unweighted graphs.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list over ids 0..node_count-1. Duplicate
  /// undirected pairs are merged by summing their weights. Throws InputError
  /// on self-loops, non-positive weights, or out-of-range endpoints.
  static Graph from_edges(NodeId node_count, std::vector<WeightedEdge> edges,
                          std::vector<std::int64_t> labels = {});

  NodeId node_count() const { return node_count_; }
  std::size_t edge_count() const { return neighbor_.size() / 2; }
  double total_weight() const { return total_weight_; }
  double degree(NodeId i) const;

  std::int64_t label(NodeId i) const { return labels_[i]; }
  const std::vector<std::int64_t>& labels() const { return labels_; }

  /// Neighbor range of node i as indices into neighbors()/weights().
  std::size_t adj_begin(NodeId i) const { return offset_[i]; }
  std::size_t adj_end(NodeId i) const { return offset_[i + 1]; }
  NodeId neighbor(std::size_t e) const { return neighbor_[e]; }
  double weight(std::size_t e) const { return weight_[e]; }

  /// Undirected edges, each reported once with u < v.
  std::vector<WeightedEdge> edges() const;

  /// New graph with node i and its incident edges deleted. Remaining nodes
  /// are re-compacted; external labels are preserved.
  Graph remove_node(NodeId i) const;

  /// Subgraph induced on nodes with keep[i] true. original_ids receives the
  /// mapping from new compact ids back to this graph's ids.
  Graph induced_subgraph(const std::vector<char>& keep,
                         std::vector<NodeId>* original_ids = nullptr) const;

 private:
  NodeId node_count_ = 0;
  std::vector<std::size_t> offset_;     // node_count_+1
  std::vector<NodeId> neighbor_;        // 2M entries
  std::vector<double> weight_;          // 2M entries
  std::vector<double> degree_;          // cached weighted degrees
  std::vector<std::int64_t> labels_;    // external ids
  double total_weight_ = 0.0;
};

struct ComponentResult {
  std::int64_t size = 0;
  std::vector<NodeId> members;  // sorted ascending
};

/// Largest connected component among nodes with removed[i] == false. Ties
/// between equal-size components go to the one containing the smallest node
/// id. All nodes removed (or empty graph) yields size 0.
ComponentResult largest_component(const Graph& g, const std::vector<char>& removed);

/// Parses a whitespace-separated edge list ("u v" or "u v w", '#' comments).
/// External ids are compacted to 0..N-1 in ascending order and kept as
/// labels. Duplicate pairs merge by weight sum; unweighted lines get w = 1.
/// When weighted is false a third column is ignored and all weights are 1.
Graph load_edge_list(const std::string& path, bool weighted = true);

/// Writes "u v w" lines using external labels, one undirected edge per line.
void save_edge_list(const Graph& g, const std::string& path,
                    const std::string& header_comment = {});

/// Writes the external->internal id map as CSV ("external_id,internal_id").
void save_id_map(const Graph& g, const std::string& path);

}  // namespace modvit
