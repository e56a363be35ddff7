#include "modvit/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "modvit/error.hpp"
#include "modvit/vitality.hpp"

namespace modvit {

const char* method_name(Method m) {
  switch (m) {
    case Method::mv: return "mv";
    case Method::amv: return "amv";
    case Method::cd: return "cd";
    case Method::mas: return "mas";
    case Method::chb: return "chb";
    case Method::wmc_d: return "wmc-d";
    case Method::amc_d: return "amc-d";
    case Method::cc: return "cc";
    case Method::deg: return "deg";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  for (Method m : {Method::mv, Method::amv, Method::cd, Method::mas, Method::chb,
                   Method::wmc_d, Method::amc_d, Method::cc, Method::deg})
    if (name == method_name(m)) return m;
  throw InputError("unknown method '" + name + "'");
}

std::vector<Method> all_methods() {
  return {Method::mv,  Method::amv,   Method::cd,    Method::amc_d,
          Method::mas, Method::chb,   Method::wmc_d, Method::deg};
}

bool removes_ascending(Method m) { return m == Method::mv; }

double attack_priority(Method m, double score) {
  return removes_ascending(m) ? -score : score;
}

std::vector<NodeId> make_ranking(Method m, const std::vector<double>& scores) {
  std::vector<NodeId> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
    return attack_priority(m, scores[a]) > attack_priority(m, scores[b]);
  });
  return order;  // stable sort keeps ascending-id order inside ties
}

namespace {

ScoreVector finish(Method m, std::vector<double> scores) {
  ScoreVector sv;
  sv.method = m;
  sv.ranking = make_ranking(m, scores);
  sv.scores = std::move(scores);
  return sv;
}

// Dominant eigenpair of the community-to-community weight matrix by power
// iteration on B + cI (the shift breaks the +/- oscillation of bipartite
// components). Returns the largest eigenvalue; u receives its nonnegative
// unit-L2 eigenvector. A disconnected group network is handled per component
// with only the dominant component's entries kept.
double group_network_eigenpair(const std::vector<std::vector<double>>& b,
                               std::vector<double>& u) {
  const std::size_t c = b.size();
  u.assign(c, 0.0);

  std::vector<int> comp(c, -1);
  int n_comp = 0;
  for (std::size_t s = 0; s < c; ++s) {
    if (comp[s] != -1) continue;
    std::vector<std::size_t> queue{s};
    comp[s] = n_comp;
    while (!queue.empty()) {
      const std::size_t x = queue.back();
      queue.pop_back();
      for (std::size_t y = 0; y < c; ++y)
        if (b[x][y] > 0.0 && comp[y] == -1) {
          comp[y] = n_comp;
          queue.push_back(y);
        }
    }
    ++n_comp;
  }

  double best_lambda = 0.0;
  std::vector<double> best_vec;
  std::vector<std::size_t> best_ids;
  for (int k = 0; k < n_comp; ++k) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < c; ++i)
      if (comp[i] == k) ids.push_back(i);
    if (ids.size() < 2) continue;  // isolated community, eigenvalue 0

    double row_max = 0.0;
    for (const std::size_t i : ids) {
      double row = 0.0;
      for (const std::size_t j : ids) row += b[i][j];
      row_max = std::max(row_max, row);
    }
    if (row_max == 0.0) continue;
    const double shift = 0.5 * row_max;

    std::vector<double> v(ids.size(), 1.0 / std::sqrt(double(ids.size())));
    std::vector<double> w(ids.size());
    double lambda = 0.0;
    bool converged = false;
    for (int it = 0; it < 10000; ++it) {
      for (std::size_t a = 0; a < ids.size(); ++a) {
        double acc = shift * v[a];
        for (std::size_t bb = 0; bb < ids.size(); ++bb)
          acc += b[ids[a]][ids[bb]] * v[bb];
        w[a] = acc;
      }
      double norm = 0.0;
      for (const double x : w) norm += x * x;
      norm = std::sqrt(norm);
      if (norm == 0.0) break;
      double delta = 0.0;
      for (std::size_t a = 0; a < ids.size(); ++a) {
        const double nv = w[a] / norm;
        delta = std::max(delta, std::abs(nv - v[a]));
        v[a] = nv;
      }
      lambda = norm - shift;  // Rayleigh quotient of the unshifted matrix
      if (delta < 1e-10) {
        converged = true;
        break;
      }
    }
    if (!converged)
      throw NumericalError("group-network power iteration did not converge");
    if (lambda > best_lambda) {
      best_lambda = lambda;
      best_vec = v;
      best_ids = ids;
    }
  }

  for (std::size_t a = 0; a < best_ids.size(); ++a)
    u[best_ids[a]] = std::max(0.0, best_vec[a]);
  return best_lambda;
}

}  // namespace

ScoreVector masuda_scores(const Graph& g, const Partition& p, const PartitionStats& s,
                          bool group_self_loops) {
  const CommunityId nc = p.community_count();
  std::vector<std::vector<double>> b(nc, std::vector<double>(nc, 0.0));
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const CommunityId ci = p.community_of(i);
    for (std::size_t e = s.comm_offset[i]; e < s.comm_offset[i + 1]; ++e) {
      const CommunityId cj = s.comm_index[e];
      if (cj != ci)
        b[ci][cj] += s.comm_weight[e];  // each inter edge lands once per direction
      else if (group_self_loops)
        b[ci][ci] += s.comm_weight[e];  // totals 2x the intra weight
    }
  }

  std::vector<double> u;
  const double lambda = group_network_eigenpair(b, u);

  std::vector<double> scores(g.node_count(), 0.0);
  if (lambda > 0.0) {
    for (NodeId i = 0; i < g.node_count(); ++i) {
      const CommunityId ci = p.community_of(i);
      double sum = 0.0;
      for (std::size_t e = s.comm_offset[i]; e < s.comm_offset[i + 1]; ++e)
        if (s.comm_index[e] != ci) sum += u[s.comm_index[e]] * s.comm_weight[e];
      const double x = sum / lambda;
      scores[i] = (2.0 * u[ci] - x) * sum;
    }
  }
  return finish(Method::mas, std::move(scores));
}

ScoreVector chb_scores(const Graph& g, const Partition& p, const PartitionStats& s) {
  const auto b = neighboring_communities_all(g, p);
  std::vector<double> scores(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double k_int = s.internal_degree[i];
    const double k_ext = g.degree(i) - k_int;
    scores[i] = double(p.community_size(p.community_of(i))) * k_int + double(b[i]) * k_ext;
  }
  return finish(Method::chb, std::move(scores));
}

namespace {

ScoreVector modular_degree(const Graph& g, const Partition& p, const PartitionStats& s,
                           bool adjusted) {
  std::vector<double> scores(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const double mu = s.group_fraction[p.community_of(i)];
    const double k_int = s.internal_degree[i];
    const double k_ext = g.degree(i) - k_int;
    scores[i] = adjusted ? (1.0 - mu) * k_int + mu * k_ext
                         : mu * k_int + (1.0 - mu) * k_ext;
  }
  return finish(adjusted ? Method::amc_d : Method::wmc_d, std::move(scores));
}

}  // namespace

ScoreVector wmc_scores(const Graph& g, const Partition& p, const PartitionStats& s) {
  return modular_degree(g, p, s, false);
}

ScoreVector amc_scores(const Graph& g, const Partition& p, const PartitionStats& s) {
  return modular_degree(g, p, s, true);
}

ScoreVector commn_scores(const Graph& g, const Partition& p, const PartitionStats& s,
                         const std::vector<double>* r_override) {
  const CommunityId nc = p.community_count();
  std::vector<double> max_int(nc, 0.0), max_ext(nc, 0.0);
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const CommunityId c = p.community_of(i);
    max_int[c] = std::max(max_int[c], s.internal_degree[i]);
    max_ext[c] = std::max(max_ext[c], g.degree(i) - s.internal_degree[i]);
  }
  for (CommunityId c = 0; c < nc; ++c)
    if (max_ext[c] == 0.0)
      throw InputError("commn-centrality undefined: community " + std::to_string(c) +
                       " has no external links");
  if (r_override && static_cast<CommunityId>(r_override->size()) != nc)
    throw InputError("R override length does not match community count");

  std::vector<double> scores(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) {
    const CommunityId c = p.community_of(i);
    const double r = r_override ? (*r_override)[c] : max_int[c];
    const double mu_over_size = s.group_fraction[c] / double(p.community_size(c));
    const double k_int = s.internal_degree[i];
    const double k_ext = g.degree(i) - k_int;
    const double int_ratio = max_int[c] > 0.0 ? k_int / max_int[c] : 0.0;
    const double ext_part = (k_ext / max_ext[c]) * r;
    scores[i] = (1.0 - mu_over_size) * int_ratio * r +
                (1.0 + mu_over_size) * ext_part * ext_part;
  }
  return finish(Method::cc, std::move(scores));
}

ScoreVector degree_scores(const Graph& g) {
  std::vector<double> scores(g.node_count());
  for (NodeId i = 0; i < g.node_count(); ++i) scores[i] = g.degree(i);
  return finish(Method::deg, std::move(scores));
}

ScoreVector score(const Graph& g, const Partition& p, Method m, const PartitionStats* stats) {
  PartitionStats local;
  if (!stats && m != Method::deg) {
    local = compute_stats(g, p);
    stats = &local;
  }
  switch (m) {
    case Method::mv: {
      auto report = modularity_vitality_all(g, p, *stats);
      return finish(Method::mv, std::move(report.vitality));
    }
    case Method::amv: {
      auto report = modularity_vitality_all(g, p, *stats);
      for (auto& v : report.vitality) v = std::abs(v);
      return finish(Method::amv, std::move(report.vitality));
    }
    case Method::cd:
      return finish(Method::cd, community_degree_all(g, p, *stats));
    case Method::mas:
      return masuda_scores(g, p, *stats);
    case Method::chb:
      return chb_scores(g, p, *stats);
    case Method::wmc_d:
      return wmc_scores(g, p, *stats);
    case Method::amc_d:
      return amc_scores(g, p, *stats);
    case Method::cc:
      return commn_scores(g, p, *stats);
    case Method::deg:
      return degree_scores(g);
  }
  throw InputError("unknown method");
}

}  // namespace modvit
