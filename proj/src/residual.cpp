#include "modvit/residual.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "modvit/error.hpp"

namespace modvit {

ResidualState::ResidualState(const Graph& g, const Partition& p)
    : graph_(g), partition_(p) {
  const NodeId n = g.node_count();
  if (p.node_count() != n) throw InputError("partition does not cover the graph");
  alive_.assign(n, 1);
  alive_count_ = n;
  original_count_ = n;
  degree_.resize(n);
  external_degree_.assign(n, 0.0);
  community_degree_.assign(p.community_count(), 0.0);
  for (NodeId i = 0; i < n; ++i) {
    degree_[i] = g.degree(i);
    community_degree_[p.community_of(i)] += g.degree(i);
  }
  double m_int = 0.0;
  for (NodeId i = 0; i < n; ++i) {
    const CommunityId ci = p.community_of(i);
    for (std::size_t e = g.adj_begin(i); e < g.adj_end(i); ++e) {
      if (p.community_of(g.neighbor(e)) == ci)
        m_int += g.weight(e);
      else
        external_degree_[i] += g.weight(e);
    }
  }
  internal_weight_ = m_int / 2.0;
  total_weight_ = g.total_weight();
  original_weight_ = total_weight_;
  for (const double d : community_degree_) sum_sq_community_degree_ += d * d;

  // initial components by BFS from ascending ids (=> min id is the seed)
  component_id_.assign(n, -1);
  visit_mark_.assign(n, 0);
  for (NodeId s = 0; s < n; ++s) {
    if (component_id_[s] != -1) continue;
    const int comp = static_cast<int>(component_size_.size());
    std::int64_t size = 0;
    bfs_queue_.assign(1, s);
    component_id_[s] = comp;
    while (!bfs_queue_.empty()) {
      const NodeId u = bfs_queue_.back();
      bfs_queue_.pop_back();
      ++size;
      for (std::size_t e = g.adj_begin(u); e < g.adj_end(u); ++e) {
        const NodeId v = g.neighbor(e);
        if (component_id_[v] == -1) {
          component_id_[v] = comp;
          bfs_queue_.push_back(v);
        }
      }
    }
    component_size_.push_back(size);
    component_min_.push_back(s);
    heap_.push({size, s, comp});
  }
}

void ResidualState::enable_bridge_tracking() {
  track_bridges_ = true;
  recount_bridges_in_largest();
}

void ResidualState::remove(NodeId i) {
  if (i < 0 || i >= original_count_) throw InputError("node id out of range");
  if (!alive_[i]) throw InputError("node already removed: " + std::to_string(i));

  const CommunityId ci = partition_.community_of(i);
  const double k_i = degree_[i];

  removed_weight_ += k_i;
  total_weight_ -= k_i;

  for (std::size_t e = graph_.adj_begin(i); e < graph_.adj_end(i); ++e) {
    const NodeId j = graph_.neighbor(e);
    if (!alive_[j]) continue;
    const double w = graph_.weight(e);
    const CommunityId cj = partition_.community_of(j);
    degree_[j] -= w;
    if (cj == ci) {
      internal_weight_ -= w;
    } else {
      external_degree_[j] -= w;
    }
    if (cj != ci) {
      const double old_d = community_degree_[cj];
      const double new_d = old_d - w;
      sum_sq_community_degree_ += new_d * new_d - old_d * old_d;
      community_degree_[cj] = new_d;
    }
  }
  // i's own community loses k_i (edges toward dead neighbors were already
  // deducted from degree_[i] in earlier removals)
  {
    const double old_d = community_degree_[ci];
    // intra-community edges of i also reduce d_{ci} via the neighbor side
    double intra = 0.0;
    for (std::size_t e = graph_.adj_begin(i); e < graph_.adj_end(i); ++e) {
      const NodeId j = graph_.neighbor(e);
      if (alive_[j] && partition_.community_of(j) == ci) intra += graph_.weight(e);
    }
    const double new_d = old_d - k_i - intra;
    sum_sq_community_degree_ += new_d * new_d - old_d * old_d;
    community_degree_[ci] = new_d;
  }
  degree_[i] = 0.0;
  external_degree_[i] = 0.0;
  alive_[i] = 0;
  --alive_count_;

  split_component(i);
  if (track_bridges_) recount_bridges_in_largest();
}

void ResidualState::split_component(NodeId removed) {
  const int old_comp = component_id_[removed];
  component_id_[removed] = -1;
  const std::int64_t old_size = component_size_[old_comp];

  std::vector<NodeId> seeds;
  for (std::size_t e = graph_.adj_begin(removed); e < graph_.adj_end(removed); ++e) {
    const NodeId v = graph_.neighbor(e);
    if (alive_[v]) seeds.push_back(v);
  }

  if (seeds.empty()) {
    // no alive neighbor means the node was a singleton component
    assert(old_size == 1);
    (void)old_size;
    component_size_[old_comp] = 0;
    return;
  }

  if (++visit_epoch_ == 0) {
    std::fill(visit_mark_.begin(), visit_mark_.end(), 0);
    visit_epoch_ = 1;
  }

  std::int64_t covered = 0;
  bool first_fragment = true;
  for (const NodeId seed : seeds) {
    if (visit_mark_[seed] == visit_epoch_) continue;
    // BFS one fragment
    int comp;
    if (first_fragment) {
      comp = old_comp;
    } else {
      comp = static_cast<int>(component_size_.size());
      component_size_.push_back(0);
      component_min_.push_back(seed);
    }
    std::int64_t size = 0;
    NodeId min_id = seed;
    bfs_queue_.assign(1, seed);
    visit_mark_[seed] = visit_epoch_;
    while (!bfs_queue_.empty()) {
      const NodeId u = bfs_queue_.back();
      bfs_queue_.pop_back();
      component_id_[u] = comp;
      min_id = std::min(min_id, u);
      ++size;
      for (std::size_t e = graph_.adj_begin(u); e < graph_.adj_end(u); ++e) {
        const NodeId v = graph_.neighbor(e);
        if (alive_[v] && visit_mark_[v] != visit_epoch_) {
          visit_mark_[v] = visit_epoch_;
          bfs_queue_.push_back(v);
        }
      }
    }
    component_size_[comp] = size;
    component_min_[comp] = min_id;
    heap_.push({size, min_id, comp});
    covered += size;
    first_fragment = false;
  }
  // every fragment of the old component touches a neighbor of the removed
  // node, so full coverage is guaranteed
  assert(covered == old_size - 1);
  (void)old_size;
  (void)covered;
}

std::int64_t ResidualState::largest_component_size() const {
  return largest_component_id() == -1 ? 0 : component_size_[largest_component_id()];
}

int ResidualState::largest_component_id() const {
  while (!heap_.empty()) {
    const HeapEntry top = heap_.top();
    if (top.size == component_size_[top.comp] && top.min_id == component_min_[top.comp] &&
        top.size > 0 && component_min_[top.comp] >= 0 &&
        alive_[component_min_[top.comp]] && component_id_[component_min_[top.comp]] == top.comp)
      return top.comp;
    heap_.pop();  // stale entry
  }
  return -1;
}

double ResidualState::rho() const {
  return original_count_ == 0
             ? 0.0
             : double(original_count_ - alive_count_) / double(original_count_);
}

double ResidualState::eta() const {
  return original_weight_ > 0.0 ? removed_weight_ / original_weight_ : 0.0;
}

double ResidualState::sigma() const {
  return original_count_ == 0 ? 0.0
                              : double(largest_component_size()) / double(original_count_);
}

double ResidualState::modularity() const {
  if (!(total_weight_ > 0.0)) return 0.0;
  return internal_weight_ / total_weight_ -
         sum_sq_community_degree_ / (4.0 * total_weight_ * total_weight_);
}

double ResidualState::modularity_after_removal(NodeId i) const {
  const double k = degree_[i];
  const double m_rem = total_weight_ - k;
  if (!(m_rem > 0.0)) return 0.0;

  const CommunityId ci = partition_.community_of(i);
  double k_int = 0.0;
  double corr = 0.0;
  // aggregate h over the (few) distinct neighbor communities; communities of
  // consecutive neighbors repeat rarely enough that a local pass suffices
  thread_local std::vector<double> acc;
  thread_local std::vector<CommunityId> touched;
  if (acc.size() < community_degree_.size()) acc.assign(community_degree_.size(), 0.0);
  touched.clear();
  for (std::size_t e = graph_.adj_begin(i); e < graph_.adj_end(i); ++e) {
    const NodeId j = graph_.neighbor(e);
    if (!alive_[j]) continue;
    const CommunityId cj = partition_.community_of(j);
    if (acc[cj] == 0.0) touched.push_back(cj);
    acc[cj] += graph_.weight(e);
  }
  for (const CommunityId c : touched) {
    double h = acc[c];
    if (c == ci) {
      k_int = acc[c];
      h += k;
    }
    corr += (2.0 * community_degree_[c] - h) * h;
    acc[c] = 0.0;
  }
  const bool own_touched =
      std::find(touched.begin(), touched.end(), ci) != touched.end();
  if (!own_touched && k > 0.0) corr += (2.0 * community_degree_[ci] - k) * k;

  const double sq = sum_sq_community_degree_ - corr;
  return (internal_weight_ - k_int) / m_rem - sq / (4.0 * m_rem * m_rem);
}

NodeId ResidualState::argmax_vitality() const {
  NodeId best = -1;
  double best_v = 0.0;
  for (NodeId i = 0; i < original_count_; ++i) {
    if (!alive_[i]) continue;
    const double v = vitality(i);
    if (best == -1 || v > best_v) {
      best = i;
      best_v = v;
    }
  }
  return best;
}

void ResidualState::recount_bridges_in_largest() {
  const int lc = largest_component_id();
  bridges_in_largest_ = 0;
  if (lc == -1) return;
  for (NodeId i = 0; i < original_count_; ++i)
    if (alive_[i] && component_id_[i] == lc && external_degree_[i] > 0.0)
      ++bridges_in_largest_;
}

void ResidualState::verify_consistency() const {
  std::vector<char> removed(original_count_, 0);
  for (NodeId i = 0; i < original_count_; ++i) removed[i] = alive_[i] ? 0 : 1;
  const auto lc = largest_component(graph_, removed);
  if (lc.size != largest_component_size())
    throw std::logic_error("residual component size drifted from full recompute");

  double m = 0.0, m_int = 0.0;
  std::vector<double> d(community_degree_.size(), 0.0);
  for (NodeId i = 0; i < original_count_; ++i) {
    if (!alive_[i]) continue;
    const CommunityId ci = partition_.community_of(i);
    for (std::size_t e = graph_.adj_begin(i); e < graph_.adj_end(i); ++e) {
      const NodeId j = graph_.neighbor(e);
      if (!alive_[j]) continue;
      const double w = graph_.weight(e);
      d[ci] += w;
      m += w;
      if (partition_.community_of(j) == ci) m_int += w;
    }
  }
  const double tol = 1e-6 * std::max(1.0, original_weight_);
  if (std::abs(m / 2.0 - total_weight_) > tol ||
      std::abs(m_int / 2.0 - internal_weight_) > tol)
    throw std::logic_error("residual weight totals drifted from full recompute");
  for (std::size_t c = 0; c < d.size(); ++c)
    if (std::abs(d[c] - community_degree_[c]) > tol)
      throw std::logic_error("residual community degree drifted from full recompute");
}

}  // namespace modvit
