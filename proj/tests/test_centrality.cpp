#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "modvit/centrality.hpp"
#include "modvit/error.hpp"
#include "oracles.hpp"

using namespace modvit;

namespace {

Graph two_cliques() {
  std::vector<WeightedEdge> edges;
  for (NodeId i = 0; i < 4; ++i)
    for (NodeId j = i + 1; j < 4; ++j) {
      edges.push_back({i, j, 1.0});
      edges.push_back({NodeId(i + 4), NodeId(j + 4), 1.0});
    }
  return Graph::from_edges(8, edges);
}

}  // namespace

TEST_CASE("masuda on the barbell") {
  const Graph g = oracles::barbell();
  const Partition p = oracles::barbell_partition();
  const PartitionStats s = compute_stats(g, p);
  const ScoreVector sv = masuda_scores(g, p, s);

  // 2x2 group eigenproblem by hand: lambda = 1, u = (1/sqrt2, 1/sqrt2)
  CHECK(sv.scores[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sv.scores[3] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sv.scores[0] == doctest::Approx(0.0));  // no external links
}

TEST_CASE("masuda degenerate cases") {
  SUBCASE("single community scores all zero") {
    const Graph g = oracles::barbell();
    const Partition p = Partition::from_assignment({0, 0, 0, 0, 0, 0});
    const ScoreVector sv = masuda_scores(g, p, compute_stats(g, p));
    for (const double v : sv.scores) CHECK(v == 0.0);
  }
  SUBCASE("no inter-community edges scores all zero") {
    const Graph g = two_cliques();
    const Partition p = Partition::from_assignment({0, 0, 0, 0, 1, 1, 1, 1});
    const ScoreVector sv = masuda_scores(g, p, compute_stats(g, p));
    for (const double v : sv.scores) CHECK(v == 0.0);
  }
  SUBCASE("disconnected group network uses the dominant component") {
    // two barbell pairs: communities {0,1} tied strongly, {2,3} weakly
    const Graph g = Graph::from_edges(
        8, {{0, 1, 1}, {2, 3, 1}, {1, 2, 5}, {4, 5, 1}, {6, 7, 1}, {5, 6, 1}});
    // communities: {0,1},{2,3} joined by weight 5; {4,5},{6,7} joined by 1
    const Partition p = Partition::from_assignment({0, 0, 1, 1, 2, 2, 3, 3});
    const ScoreVector sv = masuda_scores(g, p, compute_stats(g, p));
    // dominant component is (0,1); nodes of the weak pair get 0
    CHECK(sv.scores[1] > 0.0);
    CHECK(sv.scores[5] == 0.0);
    CHECK(sv.scores[6] == 0.0);
  }
}

TEST_CASE("masuda ranking is invariant to uniform weight scaling") {
  Rng rng(3);
  const Graph g = oracles::random_weighted_er(rng, 60, 0.1);
  const Partition p = oracles::random_partition(rng, 60, 4);
  const PartitionStats s = compute_stats(g, p);
  const ScoreVector base = masuda_scores(g, p, s);

  auto scaled_edges = g.edges();
  for (auto& e : scaled_edges) e.weight *= 4.0;  // power of two: exact scaling
  const Graph g4 = Graph::from_edges(g.node_count(), scaled_edges);
  const ScoreVector scaled = masuda_scores(g4, p, compute_stats(g4, p));
  CHECK(base.ranking == scaled.ranking);
}

TEST_CASE("community hub-bridge") {
  const Graph g = oracles::barbell();
  const Partition p = oracles::barbell_partition();
  const ScoreVector sv = chb_scores(g, p, compute_stats(g, p));
  CHECK(sv.scores[2] == doctest::Approx(7.0));  // 3*2 + 1*1
  CHECK(sv.scores[0] == doctest::Approx(6.0));  // 3*2 + 0

  const Graph with_isolate = Graph::from_edges(3, {{0, 1, 1}});
  const Partition q = Partition::from_assignment({0, 0, 1});
  const ScoreVector iso = chb_scores(with_isolate, q, compute_stats(with_isolate, q));
  CHECK(iso.scores[2] == 0.0);
}

TEST_CASE("weighted and adjusted modular degree") {
  const Graph g = oracles::barbell();
  const Partition p = oracles::barbell_partition();
  const PartitionStats s = compute_stats(g, p);

  // mu = 8/3 leaves [0,1] by design; the formula is applied literally
  CHECK(wmc_scores(g, p, s).scores[2] == doctest::Approx(11.0 / 3.0).epsilon(1e-12));
  CHECK(amc_scores(g, p, s).scores[2] == doctest::Approx(-2.0 / 3.0).epsilon(1e-12));

  // a node with no external links scores mu * k_i (here mu is the literal
  // Definition-5 sum: 1 + 1 = 2 for the two-node community)
  const Graph pair = Graph::from_edges(2, {{0, 1, 1}});
  const Partition one = Partition::from_assignment({0, 0});
  const PartitionStats ps = compute_stats(pair, one);
  CHECK(ps.group_fraction[0] == doctest::Approx(2.0));
  CHECK(wmc_scores(pair, one, ps).scores[0] ==
        doctest::Approx(ps.group_fraction[0] * pair.degree(0)).epsilon(1e-12));
}

TEST_CASE("commn-centrality") {
  SUBCASE("undefined on isolated communities, naming the culprit") {
    const Graph g = two_cliques();
    const Partition p = Partition::from_assignment({0, 0, 0, 0, 1, 1, 1, 1});
    CHECK_THROWS_WITH_AS(commn_scores(g, p, compute_stats(g, p)),
                         doctest::Contains("community 0"), InputError);
  }
  SUBCASE("finite on the barbell") {
    const Graph g = oracles::barbell();
    const Partition p = oracles::barbell_partition();
    const ScoreVector sv = commn_scores(g, p, compute_stats(g, p));
    for (const double v : sv.scores) {
      CHECK(std::isfinite(v));
    }
    // node 2: (1 - (8/3)/3)*(2/2)*2 + (1 + (8/3)/3)*((1/1)*2)^2 = 2/9 + (17/9)*4
    CHECK(sv.scores[2] == doctest::Approx(2.0 / 9.0 + 68.0 / 9.0).epsilon(1e-12));
  }
}

TEST_CASE("degree scores") {
  const Graph triangle = Graph::from_edges(3, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}});
  const ScoreVector sv = degree_scores(triangle);
  for (const double v : sv.scores) CHECK(v == doctest::Approx(2.0));
  CHECK(degree_scores(oracles::barbell()).scores[2] == doctest::Approx(3.0));
}

TEST_CASE("singleton communities collapse the degree family") {
  const Graph g = oracles::barbell();
  std::vector<CommunityId> singleton(6);
  std::iota(singleton.begin(), singleton.end(), 0);
  const Partition p = Partition::from_assignment(singleton);
  const PartitionStats s = compute_stats(g, p);

  const auto chb = chb_scores(g, p, s);
  const auto wmc = wmc_scores(g, p, s);
  const auto b = neighboring_communities_all(g, p);
  for (NodeId i = 0; i < 6; ++i) {
    CHECK(s.internal_degree[i] == 0.0);
    CHECK(chb.scores[i] == doctest::Approx(double(b[i]) * g.degree(i)));
    CHECK(wmc.scores[i] == doctest::Approx(g.degree(i)));  // (1-mu)*k_ext with mu=0
  }
}

TEST_CASE("label equivariance") {
  Rng rng(8);
  const NodeId n = 40;
  const Graph g = oracles::random_weighted_er(rng, n, 0.15);
  const Partition p = oracles::random_partition(rng, n, 4);

  // permute labels
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (NodeId i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.uniform_index(i + 1)]);

  std::vector<WeightedEdge> perm_edges;
  for (const auto& e : g.edges()) perm_edges.push_back({perm[e.u], perm[e.v], e.weight});
  const Graph pg = Graph::from_edges(n, perm_edges);
  std::vector<CommunityId> passign(n);
  for (NodeId i = 0; i < n; ++i) passign[perm[i]] = p.community_of(i);
  const Partition pp = Partition::from_assignment(passign);

  const PartitionStats s = compute_stats(g, p);
  const PartitionStats ps = compute_stats(pg, pp);
  for (const Method m : {Method::mv, Method::amv, Method::cd, Method::mas, Method::chb,
                         Method::wmc_d, Method::amc_d, Method::deg}) {
    const auto base = score(g, p, m, &s);
    const auto permuted = score(pg, pp, m, &ps);
    for (NodeId i = 0; i < n; ++i)
      CHECK(permuted.scores[perm[i]] == doctest::Approx(base.scores[i]).epsilon(1e-9));
  }
}

TEST_CASE("rankings break ties by ascending node id") {
  const std::vector<double> scores{1.0, 3.0, 3.0, 0.5};
  CHECK(make_ranking(Method::deg, scores) == std::vector<NodeId>{1, 2, 0, 3});
  CHECK(make_ranking(Method::mv, scores) == std::vector<NodeId>{3, 0, 1, 2});
}
