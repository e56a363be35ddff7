#include "modvit/partition.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "modvit/error.hpp"

namespace modvit {

Partition Partition::from_assignment(std::vector<CommunityId> community_of) {
  // compact ids ascending
  std::vector<CommunityId> ids(community_of);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::unordered_map<CommunityId, CommunityId> remap;
  remap.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    remap.emplace(ids[i], static_cast<CommunityId>(i));

  Partition p;
  p.community_count_ = static_cast<CommunityId>(ids.size());
  p.community_of_.resize(community_of.size());
  p.members_.resize(ids.size());
  for (std::size_t i = 0; i < community_of.size(); ++i) {
    const CommunityId c = remap[community_of[i]];
    p.community_of_[i] = c;
    p.members_[c].push_back(static_cast<NodeId>(i));
  }
  return p;
}

Partition Partition::remove_node(NodeId i) const {
  if (i < 0 || i >= node_count()) throw InputError("node id out of range");
  std::vector<CommunityId> assign;
  assign.reserve(community_of_.size() - 1);
  for (NodeId j = 0; j < node_count(); ++j)
    if (j != i) assign.push_back(community_of_[j]);
  return from_assignment(std::move(assign));
}

Partition Partition::induced(const std::vector<NodeId>& original_ids) const {
  std::vector<CommunityId> assign(original_ids.size());
  for (std::size_t k = 0; k < original_ids.size(); ++k)
    assign[k] = community_of_[original_ids[k]];
  return from_assignment(std::move(assign));
}

PartitionStats compute_stats(const Graph& g, const Partition& p) {
  const NodeId n = g.node_count();
  if (p.node_count() != n)
    throw InputError("partition covers " + std::to_string(p.node_count()) +
                     " nodes, graph has " + std::to_string(n));
  const CommunityId nc = p.community_count();

  PartitionStats s;
  s.total_weight = g.total_weight();
  s.community_degree.assign(nc, 0.0);
  s.internal_degree.assign(n, 0.0);
  s.group_fraction.assign(nc, 0.0);
  s.comm_offset.assign(static_cast<std::size_t>(n) + 1, 0);

  for (NodeId i = 0; i < n; ++i) s.community_degree[p.community_of(i)] += g.degree(i);

  // per-node sparse community weights via a scratch accumulator
  std::vector<double> acc(nc, 0.0);
  std::vector<CommunityId> touched;
  double m_int = 0.0, m_int_comp = 0.0;  // Kahan
  for (NodeId i = 0; i < n; ++i) {
    touched.clear();
    const CommunityId ci = p.community_of(i);
    for (std::size_t e = g.adj_begin(i); e < g.adj_end(i); ++e) {
      const CommunityId cj = p.community_of(g.neighbor(e));
      if (acc[cj] == 0.0) touched.push_back(cj);
      acc[cj] += g.weight(e);
    }
    std::sort(touched.begin(), touched.end());
    s.comm_offset[static_cast<std::size_t>(i) + 1] =
        s.comm_offset[i] + touched.size();
    for (const CommunityId c : touched) {
      s.comm_index.push_back(c);
      s.comm_weight.push_back(acc[c]);
      if (c == ci) {
        s.internal_degree[i] = acc[c];
        const double y = acc[c] - m_int_comp;
        const double t = m_int + y;
        m_int_comp = (t - m_int) - y;
        m_int = t;
      }
      acc[c] = 0.0;
    }
    const double k = g.degree(i);
    if (k > 0.0) s.group_fraction[ci] += s.internal_degree[i] / k;
    // isolated nodes contribute 0 to mu by convention
  }
  s.internal_weight = m_int / 2.0;  // every internal edge was seen from both ends

  for (const double d : s.community_degree) s.sum_sq_community_degree += d * d;
  return s;
}

int neighboring_communities(const Graph& g, const Partition& p, NodeId i) {
  if (i < 0 || i >= g.node_count()) throw InputError("node id out of range");
  std::vector<char> seen(p.community_count(), 0);
  int count = 0;
  const CommunityId ci = p.community_of(i);
  for (std::size_t e = g.adj_begin(i); e < g.adj_end(i); ++e) {
    const CommunityId cj = p.community_of(g.neighbor(e));
    if (cj != ci && !seen[cj]) {
      seen[cj] = 1;
      ++count;
    }
  }
  return count;
}

std::vector<int> neighboring_communities_all(const Graph& g, const Partition& p) {
  const NodeId n = g.node_count();
  std::vector<int> b(n, 0);
  std::vector<NodeId> stamp(p.community_count(), -1);
  for (NodeId i = 0; i < n; ++i) {
    const CommunityId ci = p.community_of(i);
    for (std::size_t e = g.adj_begin(i); e < g.adj_end(i); ++e) {
      const CommunityId cj = p.community_of(g.neighbor(e));
      if (cj != ci && stamp[cj] != i) {
        stamp[cj] = i;
        ++b[i];
      }
    }
  }
  return b;
}

Partition load_partition(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open partition: " + path);

  std::unordered_map<std::int64_t, NodeId> label_to_id;
  label_to_id.reserve(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) label_to_id.emplace(g.label(i), i);

  std::vector<CommunityId> assign(g.node_count(), -1);
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream ls(line);
    std::int64_t label;
    long long comm;
    if (!(ls >> label >> comm)) {
      // tolerate one header row ahead of the data
      if (!seen_data) continue;
      throw InputError(path + ":" + std::to_string(line_no) + ": expected 'node_id,community_id'");
    }
    seen_data = true;
    auto it = label_to_id.find(label);
    if (it == label_to_id.end())
      throw InputError(path + ":" + std::to_string(line_no) + ": unknown node id " +
                       std::to_string(label));
    if (assign[it->second] != -1)
      throw InputError(path + ":" + std::to_string(line_no) + ": duplicate node id " +
                       std::to_string(label));
    assign[it->second] = static_cast<CommunityId>(comm);
  }
  std::string missing;
  int missing_count = 0;
  for (NodeId i = 0; i < g.node_count(); ++i)
    if (assign[i] == -1 && missing_count++ < 10)
      missing += (missing.empty() ? "" : ", ") + std::to_string(g.label(i));
  if (missing_count > 0)
    throw InputError(path + ": " + std::to_string(missing_count) +
                     " node(s) missing from partition: " + missing +
                     (missing_count > 10 ? ", ..." : ""));
  return Partition::from_assignment(std::move(assign));
}

void save_partition(const Partition& p, const Graph& g, const std::string& path,
                    const std::string& header_comment) {
  if (p.node_count() != g.node_count())
    throw InputError("partition does not cover the graph");
  std::ofstream out(path);
  if (!out) throw InputError("cannot write partition: " + path);
  if (!header_comment.empty()) out << "# " << header_comment << "\n";
  out << "node_id,community_id\n";
  for (NodeId i = 0; i < p.node_count(); ++i)
    out << g.label(i) << ',' << p.community_of(i) << '\n';
}

}  // namespace modvit
