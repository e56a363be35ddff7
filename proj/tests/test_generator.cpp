#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <set>

#include "doctest.h"
#include "modvit/error.hpp"
#include "modvit/generator.hpp"
#include "oracles.hpp"

using namespace modvit;

TEST_CASE("cellular networks respect the construction constraints") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    GeneratorConfig cfg;
    cfg.seed = seed;
    const auto [g, p] = generate_cellular(cfg);

    CHECK(g.node_count() == 1000);
    CHECK(p.node_count() == 1000);
    CHECK(p.community_count() >= 10);
    CHECK(p.community_count() <= 20);

    std::int64_t covered = 0;
    for (CommunityId c = 0; c < p.community_count(); ++c) {
      CHECK(p.community_size(c) >= 2);
      covered += p.community_size(c);
    }
    CHECK(covered == 1000);

    // graph invariants re-checked through the public surface
    for (const auto& e : g.edges()) {
      CHECK(e.u != e.v);
      CHECK(e.weight > 0.0);
    }
  }
}

TEST_CASE("generators are deterministic per (family, seed)") {
  for (const Family family : {Family::cellular, Family::er, Family::scale_free}) {
    GeneratorConfig cfg;
    cfg.family = family;
    cfg.seed = 1234;
    const auto [g1, p1] = generate(cfg);
    const auto [g2, p2] = generate(cfg);
    const auto e1 = g1.edges();
    const auto e2 = g2.edges();
    REQUIRE(e1.size() == e2.size());
    for (std::size_t k = 0; k < e1.size(); ++k) {
      CHECK(e1[k].u == e2[k].u);
      CHECK(e1[k].v == e2[k].v);
    }
    CHECK(p1.assignment() == p2.assignment());

    GeneratorConfig other = cfg;
    other.seed = 1235;
    const auto [g3, p3] = generate(other);
    CHECK(g3.edges() != g1.edges());  // different seed, different graph
  }
}

TEST_CASE("connected ER generation") {
  SUBCASE("defaults give a connected graph with the binomial edge count") {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      GeneratorConfig cfg;
      cfg.family = Family::er;
      cfg.seed = seed;
      const Graph g = generate_er_connected(cfg);
      CHECK(g.node_count() == 1000);
      CHECK(largest_component(g, std::vector<char>(1000, 0)).size == 1000);
      // E[M] = p * n(n-1)/2 = 7492.5, sd ~ 86; +-300 is a 3.5 sigma band
      CHECK(std::abs(g.total_weight() - 7492.5) <= 300.0);
    }
  }
  SUBCASE("p = 1 yields the complete graph on the first draw") {
    GeneratorConfig cfg;
    cfg.family = Family::er;
    cfg.n = 30;
    cfg.er_p = 1.0;
    const Graph g = generate_er_connected(cfg);
    CHECK(g.edge_count() == 30u * 29u / 2u);
  }
  SUBCASE("hopeless density errors out with a diagnostic") {
    GeneratorConfig cfg;
    cfg.family = Family::er;
    cfg.n = 200;
    cfg.er_p = 1e-6;
    CHECK_THROWS_AS(generate_er_connected(cfg), NumericalError);
  }
}

TEST_CASE("scale-free growth arithmetic") {
  GeneratorConfig cfg;
  cfg.family = Family::scale_free;
  cfg.seed = 5;
  const Graph g = generate_scale_free(cfg);
  CHECK(g.node_count() == 1000);
  // seed 9-clique (36 edges) plus 8 per arrival
  CHECK(g.edge_count() == std::size_t(8 * (1000 - 9) + 36));

  SUBCASE("gamma = 1 produces heavy tails") {
    int heavy = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      GeneratorConfig c2;
      c2.family = Family::scale_free;
      c2.seed = seed;
      c2.sf_gamma = 1.0;
      const Graph sf = generate_scale_free(c2);
      double max_degree = 0.0;
      for (NodeId i = 0; i < sf.node_count(); ++i)
        max_degree = std::max(max_degree, sf.degree(i));
      if (max_degree > 10.0 * c2.sf_m) ++heavy;
    }
    CHECK(heavy >= 18);  // statistical: nearly every draw grows a big hub
  }
}

TEST_CASE("config validation") {
  GeneratorConfig cfg;
  cfg.n = 1;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.n = 100;
  cfg.family = Family::er;
  cfg.er_p = 0.0;
  CHECK_THROWS_AS(cfg.validate(), InputError);
  cfg.family = Family::scale_free;
  cfg.er_p = 0.5;
  cfg.sf_m = 100;
  CHECK_THROWS_AS(cfg.validate(), InputError);
}
