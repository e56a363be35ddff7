#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "modvit/generator.hpp"
#include "modvit/partition.hpp"
#include "modvit/vitality.hpp"
#include "oracles.hpp"

using namespace modvit;

TEST_CASE("barbell optimum found (checked against exhaustive search)") {
  const Graph g = oracles::barbell();

  // brute-force the best partition of 6 nodes with the dense Eq.-1 oracle
  double best_q = -2.0;
  std::vector<CommunityId> best;
  for (const auto& rgs : oracles::all_set_partitions(6)) {
    const double q = oracles::modularity_dense(g, Partition::from_assignment(rgs));
    if (q > best_q) {
      best_q = q;
      best = rgs;
    }
  }
  CHECK(best_q == doctest::Approx(5.0 / 14.0).epsilon(1e-12));
  CHECK(best == std::vector<CommunityId>{0, 0, 0, 1, 1, 1});

  const Partition detected = detect_communities(g, 1);
  CHECK(modularity(g, detected) == doctest::Approx(best_q).epsilon(1e-12));
  CHECK(detected.assignment() == best);
}

TEST_CASE("two disjoint cliques become one community each") {
  std::vector<WeightedEdge> edges;
  for (NodeId i = 0; i < 4; ++i)
    for (NodeId j = i + 1; j < 4; ++j) {
      edges.push_back({i, j, 1.0});
      edges.push_back({NodeId(i + 4), NodeId(j + 4), 1.0});
    }
  const Graph g = Graph::from_edges(8, edges);
  const Partition p = detect_communities(g, 3);
  CHECK(p.community_count() == 2);
  for (NodeId i = 0; i < 4; ++i) {
    CHECK(p.community_of(i) == p.community_of(0));
    CHECK(p.community_of(i + 4) == p.community_of(4));
  }
  CHECK(p.community_of(0) != p.community_of(4));
}

TEST_CASE("detected communities are internally connected") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    GeneratorConfig cfg;
    cfg.family = Family::cellular;
    cfg.seed = seed;
    const auto [g, truth] = generate_cellular(cfg);
    const Partition p = detect_communities(g, seed);
    for (CommunityId c = 0; c < p.community_count(); ++c) {
      // BFS within the community must reach every member
      const auto& members = p.members()[c];
      std::set<NodeId> inside(members.begin(), members.end());
      std::vector<NodeId> queue{members.front()};
      std::set<NodeId> seen{members.front()};
      while (!queue.empty()) {
        const NodeId u = queue.back();
        queue.pop_back();
        for (std::size_t e = g.adj_begin(u); e < g.adj_end(u); ++e) {
          const NodeId v = g.neighbor(e);
          if (inside.count(v) && !seen.count(v)) {
            seen.insert(v);
            queue.push_back(v);
          }
        }
      }
      CHECK(seen.size() == members.size());
    }
  }
}

TEST_CASE("detection beats the singleton baseline and is deterministic") {
  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    const Graph g = oracles::random_er(rng, 80, 0.06);
    if (g.total_weight() == 0.0) continue;

    std::vector<CommunityId> singleton(g.node_count());
    std::iota(singleton.begin(), singleton.end(), 0);
    const double q_single = modularity(g, Partition::from_assignment(singleton));

    const Partition p1 = detect_communities(g, 17);
    const Partition p2 = detect_communities(g, 17);
    CHECK(p1.assignment() == p2.assignment());
    CHECK(modularity(g, p1) >= q_single - 1e-12);
  }
}

TEST_CASE("fast modularity equals the dense oracle") {
  Rng rng(23);
  for (int trial = 0; trial < 8; ++trial) {
    const auto n = static_cast<NodeId>(rng.uniform_int(4, 90));
    const Graph g = oracles::random_weighted_er(rng, n, 0.12);
    const Partition p = oracles::random_partition(rng, n, 1 + int(rng.uniform_int(1, 5)));
    CHECK(modularity(g, p) ==
          doctest::Approx(oracles::modularity_dense(g, p)).epsilon(1e-12));
  }
}
