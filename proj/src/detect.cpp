#include <algorithm>
#include <numeric>
#include <vector>

#include "modvit/partition.hpp"
#include "modvit/rng.hpp"

namespace modvit {

namespace {

// Working graph for the aggregation levels. Unlike modvit::Graph it allows
// self-loops: an aggregated node carries twice its cluster's internal weight
// as a loop so that node strengths equal community degrees.
struct WorkGraph {
  std::vector<std::size_t> offset;
  std::vector<NodeId> neighbor;
  std::vector<double> weight;
  std::vector<double> loop;      // self-loop weight per node
  std::vector<double> strength;  // loop + incident weight
  double total_weight = 0.0;     // M of the original graph

  NodeId size() const { return static_cast<NodeId>(loop.size()); }
};

WorkGraph to_work_graph(const Graph& g) {
  WorkGraph w;
  const NodeId n = g.node_count();
  w.offset.assign(static_cast<std::size_t>(n) + 1, 0);
  for (NodeId i = 0; i < n; ++i) w.offset[i + 1] = w.offset[i] + (g.adj_end(i) - g.adj_begin(i));
  w.neighbor.resize(w.offset[n]);
  w.weight.resize(w.offset[n]);
  for (NodeId i = 0; i < n; ++i) {
    std::size_t out = w.offset[i];
    for (std::size_t e = g.adj_begin(i); e < g.adj_end(i); ++e) {
      w.neighbor[out] = g.neighbor(e);
      w.weight[out++] = g.weight(e);
    }
  }
  w.loop.assign(n, 0.0);
  w.strength.assign(n, 0.0);
  for (NodeId i = 0; i < n; ++i) w.strength[i] = g.degree(i);
  w.total_weight = g.total_weight();
  return w;
}

// One pass of greedy local moves. Returns true if any move improved
// modularity by more than min_gain. comm/comm_degree are updated in place.
bool local_moves(const WorkGraph& g, std::vector<CommunityId>& comm,
                 std::vector<double>& comm_degree, double min_gain, Rng& rng) {
  const NodeId n = g.size();
  const double m = g.total_weight;
  if (m <= 0.0) return false;

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (NodeId i = n - 1; i > 0; --i)
    std::swap(order[i], order[rng.uniform_index(i + 1)]);

  // scratch: weight from the current node to each touched community
  std::vector<double> w_to(comm_degree.size(), 0.0);
  std::vector<CommunityId> touched;

  bool improved = false;
  bool moved_any = true;
  while (moved_any) {
    moved_any = false;
    for (const NodeId i : order) {
      const CommunityId from = comm[i];
      touched.clear();
      for (std::size_t e = g.offset[i]; e < g.offset[i + 1]; ++e) {
        const NodeId j = g.neighbor[e];
        if (j == i) continue;
        const CommunityId c = comm[j];
        if (w_to[c] == 0.0) touched.push_back(c);
        w_to[c] += g.weight[e];
      }
      const double k = g.strength[i];
      // gain of joining community c once i is detached from its own:
      //   w_to[c]/m - k * d_c / (2 m^2), with d_c excluding i itself
      const double d_from = comm_degree[from] - k;
      const double stay_gain = w_to[from] / m - k * d_from / (2.0 * m * m);
      double best_gain = stay_gain;
      CommunityId best = from;
      std::sort(touched.begin(), touched.end());  // ascending scan: lowest id wins ties
      for (const CommunityId c : touched) {
        if (c == from) continue;
        const double gain = w_to[c] / m - k * comm_degree[c] / (2.0 * m * m);
        if (gain > best_gain) {
          best_gain = gain;
          best = c;
        }
      }
      for (const CommunityId c : touched) w_to[c] = 0.0;
      if (best != from && best_gain - stay_gain > min_gain) {
        comm_degree[from] -= k;
        comm_degree[best] += k;
        comm[i] = best;
        moved_any = true;
        improved = true;
      }
    }
  }
  return improved;
}

WorkGraph aggregate(const WorkGraph& g, const std::vector<CommunityId>& comm,
                    CommunityId n_comm) {
  WorkGraph out;
  out.total_weight = g.total_weight;
  out.loop.assign(n_comm, 0.0);
  out.strength.assign(n_comm, 0.0);

  // accumulate inter-community weights in sorted-pair order
  std::vector<std::vector<std::pair<CommunityId, double>>> rows(n_comm);
  for (NodeId i = 0; i < g.size(); ++i) {
    const CommunityId ci = comm[i];
    out.loop[ci] += g.loop[i];
    out.strength[ci] += g.strength[i];
    for (std::size_t e = g.offset[i]; e < g.offset[i + 1]; ++e) {
      const NodeId j = g.neighbor[e];
      if (j == i) continue;
      const CommunityId cj = comm[j];
      if (ci == cj) {
        out.loop[ci] += g.weight[e];  // both endpoints contribute once
      } else {
        rows[ci].emplace_back(cj, g.weight[e]);
      }
    }
  }
  out.offset.assign(static_cast<std::size_t>(n_comm) + 1, 0);
  for (CommunityId c = 0; c < n_comm; ++c) {
    auto& row = rows[c];
    std::sort(row.begin(), row.end());
    std::size_t keep = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (keep > 0 && row[keep - 1].first == row[k].first)
        row[keep - 1].second += row[k].second;
      else
        row[keep++] = row[k];
    }
    row.resize(keep);
    out.offset[c + 1] = out.offset[c] + keep;
  }
  out.neighbor.resize(out.offset[n_comm]);
  out.weight.resize(out.offset[n_comm]);
  for (CommunityId c = 0; c < n_comm; ++c) {
    std::size_t at = out.offset[c];
    for (const auto& [nb, w] : rows[c]) {
      out.neighbor[at] = nb;
      out.weight[at++] = w;
    }
  }
  return out;
}

// Relabel communities to compact ids in order of first appearance.
CommunityId compact(std::vector<CommunityId>& comm) {
  std::vector<CommunityId> remap(comm.size(), -1);
  CommunityId next = 0;
  for (auto& c : comm) {
    if (remap[c] == -1) remap[c] = next++;
    c = remap[c];
  }
  return next;
}

// Split communities that are not internally connected into their connected
// components (each split strictly increases modularity).
std::vector<CommunityId> split_disconnected(const Graph& g,
                                            const std::vector<CommunityId>& comm) {
  const NodeId n = g.node_count();
  std::vector<CommunityId> out(n, -1);
  CommunityId next = 0;
  std::vector<NodeId> queue;
  for (NodeId s = 0; s < n; ++s) {
    if (out[s] != -1) continue;
    const CommunityId c = comm[s];
    queue.assign(1, s);
    out[s] = next;
    while (!queue.empty()) {
      const NodeId u = queue.back();
      queue.pop_back();
      for (std::size_t e = g.adj_begin(u); e < g.adj_end(u); ++e) {
        const NodeId v = g.neighbor(e);
        if (comm[v] == c && out[v] == -1) {
          out[v] = next;
          queue.push_back(v);
        }
      }
    }
    ++next;
  }
  return out;
}

}  // namespace

Partition detect_communities(const Graph& g, const DetectOptions& opt) {
  const NodeId n = g.node_count();
  if (n == 0) return Partition::from_assignment({});

  Rng rng(opt.seed);
  WorkGraph work = to_work_graph(g);

  // node -> community on the original graph, refined level by level
  std::vector<CommunityId> node_comm(n);
  std::iota(node_comm.begin(), node_comm.end(), 0);

  for (int level = 0; level < opt.max_levels; ++level) {
    std::vector<CommunityId> comm(work.size());
    std::iota(comm.begin(), comm.end(), 0);
    std::vector<double> comm_degree(work.strength);

    if (!local_moves(work, comm, comm_degree, opt.min_gain, rng)) break;

    const CommunityId n_comm = compact(comm);
    for (NodeId i = 0; i < n; ++i) node_comm[i] = comm[node_comm[i]];
    if (n_comm == work.size()) break;  // no merge happened, fixed point
    work = aggregate(work, comm, n_comm);
  }

  return Partition::from_assignment(split_disconnected(g, node_comm));
}

Partition detect_communities(const Graph& g, std::uint64_t seed) {
  DetectOptions opt;
  opt.seed = seed;
  return detect_communities(g, opt);
}

}  // namespace modvit
