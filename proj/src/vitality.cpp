#include "modvit/vitality.hpp"

#include <thread>

#include "modvit/error.hpp"

namespace modvit {

double modularity(const PartitionStats& s) {
  const double m = s.total_weight;
  if (m <= 0.0) return 0.0;
  return s.internal_weight / m - s.sum_sq_community_degree / (4.0 * m * m);
}

double modularity(const Graph& g, const Partition& p) {
  return modularity(compute_stats(g, p));
}

std::vector<std::pair<CommunityId, double>> h_values(const Graph& g, const Partition& p,
                                                     const PartitionStats& s, NodeId i) {
  if (i < 0 || i >= g.node_count()) throw InputError("node id out of range");
  std::vector<std::pair<CommunityId, double>> h;
  const CommunityId ci = p.community_of(i);
  const double k = g.degree(i);
  bool own_seen = false;
  for (std::size_t e = s.comm_offset[i]; e < s.comm_offset[i + 1]; ++e) {
    double v = s.comm_weight[e];
    if (s.comm_index[e] == ci) {
      v += k;
      own_seen = true;
    }
    h.emplace_back(s.comm_index[e], v);
  }
  if (!own_seen && k > 0.0) h.emplace_back(ci, k);
  return h;
}

namespace {

// Shared kernel: sum over touched communities of (2 d_c h - h^2), i.e. the
// sparse correction to sum_c d_c^2 when every d_c drops by h_{i,c}.
double removal_correction(const Graph& g, const Partition& p, const PartitionStats& s,
                          NodeId i) {
  const CommunityId ci = p.community_of(i);
  const double k = g.degree(i);
  double corr = 0.0;
  bool own_seen = false;
  for (std::size_t e = s.comm_offset[i]; e < s.comm_offset[i + 1]; ++e) {
    const CommunityId c = s.comm_index[e];
    double h = s.comm_weight[e];
    if (c == ci) {
      h += k;
      own_seen = true;
    }
    corr += (2.0 * s.community_degree[c] - h) * h;
  }
  if (!own_seen && k > 0.0) corr += (2.0 * s.community_degree[ci] - k) * k;
  return corr;
}

double after_removal_from_correction(const PartitionStats& s, double k, double k_int,
                                     double corr) {
  const double m_rem = s.total_weight - k;
  if (!(m_rem > 0.0)) return 0.0;  // nothing but isolates remains
  const double sq = s.sum_sq_community_degree - corr;
  return (s.internal_weight - k_int) / m_rem - sq / (4.0 * m_rem * m_rem);
}

}  // namespace

double modularity_after_removal(const Graph& g, const Partition& p,
                                const PartitionStats& s, NodeId i) {
  if (i < 0 || i >= g.node_count()) throw InputError("node id out of range");
  return after_removal_from_correction(s, g.degree(i), s.internal_degree[i],
                                       removal_correction(g, p, s, i));
}

VitalityReport modularity_vitality_all(const Graph& g, const Partition& p,
                                       const PartitionStats& s, int jobs) {
  const NodeId n = g.node_count();
  VitalityReport report;
  report.q_original = modularity(s);
  report.vitality.assign(n, 0.0);

  auto run = [&](NodeId lo, NodeId hi) {
    for (NodeId i = lo; i < hi; ++i) {
      const double q_after = after_removal_from_correction(
          s, g.degree(i), s.internal_degree[i], removal_correction(g, p, s, i));
      report.vitality[i] = report.q_original - q_after;
    }
  };

  if (jobs <= 1 || n < 4096) {
    run(0, n);
  } else {
    std::vector<std::thread> pool;
    const NodeId chunk = (n + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      const NodeId lo = t * chunk;
      const NodeId hi = std::min<NodeId>(n, lo + chunk);
      if (lo < hi) pool.emplace_back(run, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  return report;
}

VitalityReport modularity_vitality_all(const Graph& g, const Partition& p) {
  return modularity_vitality_all(g, p, compute_stats(g, p));
}

std::vector<double> community_degree_all(const Graph& g, const Partition& p,
                                         const PartitionStats& s) {
  const NodeId n = g.node_count();
  std::vector<double> cd(n, 0.0);
  for (NodeId i = 0; i < n; ++i) {
    const double k = g.degree(i);
    const double m_rem = s.total_weight - k;
    if (!(m_rem > 0.0)) {
      cd[i] = 0.0;  // the formula's denominator vanishes; pin a finite value
      continue;
    }
    const CommunityId ci = p.community_of(i);
    double corr = 0.0;
    bool own_seen = false;
    for (std::size_t e = s.comm_offset[i]; e < s.comm_offset[i + 1]; ++e) {
      const CommunityId c = s.comm_index[e];
      double h = s.comm_weight[e];
      if (c == ci) {
        h += k;
        own_seen = true;
      }
      corr += (2.0 * s.community_degree[c] + h) * h;
    }
    if (!own_seen && k > 0.0) corr += (2.0 * s.community_degree[ci] + k) * k;
    cd[i] = (s.sum_sq_community_degree + corr) / (4.0 * m_rem * m_rem);
  }
  return cd;
}

}  // namespace modvit
