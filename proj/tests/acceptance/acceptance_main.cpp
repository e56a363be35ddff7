// Acceptance suite: every release-blocking check as one pass/fail line.
// Thresholds are pinned in code; run via ctest (test name "acceptance") or
// directly. Exit status is the number of failing criteria.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "modvit/attack.hpp"
#include "modvit/centrality.hpp"
#include "modvit/deception.hpp"
#include "modvit/generator.hpp"
#include "modvit/partition.hpp"
#include "modvit/residual.hpp"
#include "modvit/rng.hpp"
#include "modvit/vitality.hpp"

using namespace modvit;
using Clock = std::chrono::steady_clock;

namespace {

constexpr std::uint64_t kMasterSeed = 20268;

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const std::string& name, bool pass, const std::string& detail) {
  std::printf("[%s] %-28s %s\n", pass ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// ---------------------------------------------------------------------------
// 1. Fast removal formula == naive remove-and-recompute, 100 random pairs.
void criterion_oracle_equivalence() {
  const auto t0 = Clock::now();
  Rng rng(Rng::derive_seed(kMasterSeed, 1));
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<WeightedEdge> edges;
    const NodeId n = 100;
    for (NodeId i = 0; i < n; ++i)
      for (NodeId j = i + 1; j < n; ++j)
        if (rng.uniform() < 0.05) edges.push_back({i, j, 1.0});
    const Graph g = Graph::from_edges(n, std::move(edges));
    const int communities = 2 + static_cast<int>(rng.uniform_int(0, 6));
    std::vector<CommunityId> assign(n);
    for (auto& c : assign) c = static_cast<CommunityId>(rng.uniform_index(communities));
    const Partition p = Partition::from_assignment(std::move(assign));
    const PartitionStats s = compute_stats(g, p);

    for (NodeId i = 0; i < n; ++i) {
      const double fast = modularity_after_removal(g, p, s, i);
      const double naive = modularity(g.remove_node(i), p.remove_node(i));
      const double rel = std::abs(fast - naive) / std::max({1.0, std::abs(fast), std::abs(naive)});
      worst = std::max(worst, rel);
    }
  }
  const double elapsed = seconds_since(t0);
  report("oracle-equivalence", worst <= 1e-12 && elapsed < 10.0,
         "worst rel err " + fmt(worst) + ", " + fmt(elapsed) + " s (limit 1e-12, 10 s)");
}

// ---------------------------------------------------------------------------
// 2. Barbell hand fixtures, exact to 1e-12.
void criterion_hand_fixtures() {
  const Graph g = Graph::from_edges(6, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1},
                                        {3, 4, 1}, {3, 5, 1}, {4, 5, 1},
                                        {2, 3, 1}});
  const Partition p = Partition::from_assignment({0, 0, 0, 1, 1, 1});
  const PartitionStats s = compute_stats(g, p);
  const auto mv = modularity_vitality_all(g, p, s);
  const auto cd = community_degree_all(g, p, s);
  const auto chb = chb_scores(g, p, s);
  const auto mas = masuda_scores(g, p, s);

  const std::vector<std::pair<std::string, double>> checks = {
      {"Q", std::abs(mv.q_original - 5.0 / 14.0)},
      {"MV(0)", std::abs(mv.vitality[0] - (5.0 / 14.0 - 0.22))},
      {"MV(2)", std::abs(mv.vitality[2] - (-1.0 / 56.0))},
      {"CHB(2)", std::abs(chb.scores[2] - 7.0)},
      {"Mas(2)", std::abs(mas.scores[2] - 0.5)},
      {"CD(0)", std::abs(cd[0] - 1.70)},
  };
  double worst = 0.0;
  std::string worst_name;
  for (const auto& [name, err] : checks)
    if (err > worst) {
      worst = err;
      worst_name = name;
    }
  report("hand-fixtures", worst <= 1e-12,
         "worst abs err " + fmt(worst) + (worst_name.empty() ? "" : " (" + worst_name + ")") +
             " (limit 1e-12)");
}

// ---------------------------------------------------------------------------
// Shared benchmark machinery for criteria 3-6.
struct CellularRun {
  std::map<Strategy, std::map<Method, double>> mean_c_rho;
  std::vector<double> detected_q;
  double tau_mv_amv = 0.0;
  double tau_amc_amv = 0.0;
  double tau_amc_mv = 0.0;
};

CellularRun run_cellular_benchmark(int reps, int correlation_reps) {
  CellularRun out;
  std::map<Strategy, std::map<Method, double>> sums;
  double t_mv_amv = 0.0, t_amc_amv = 0.0, t_amc_mv = 0.0;

  for (int rep = 0; rep < reps; ++rep) {
    GeneratorConfig cfg;
    cfg.family = Family::cellular;
    cfg.seed = Rng::derive_seed(kMasterSeed, 100 + 2 * rep);
    const auto [g, truth] = generate_cellular(cfg);
    const Partition p =
        detect_communities(g, Rng::derive_seed(kMasterSeed, 100 + 2 * rep + 1));
    out.detected_q.push_back(modularity(g, p));

    if (rep < correlation_reps) {
      const PartitionStats s = compute_stats(g, p);
      const auto sv_mv = score(g, p, Method::mv, &s);
      const auto sv_amv = score(g, p, Method::amv, &s);
      const auto sv_amc = score(g, p, Method::amc_d, &s);
      t_mv_amv += kendall_tau(sv_mv, sv_amv);
      t_amc_amv += kendall_tau(sv_amc, sv_amv);
      t_amc_mv += kendall_tau(sv_amc, sv_mv);
    }

    for (const Method m : all_methods()) {
      for (const Strategy strat :
           {Strategy::initial, Strategy::recomputed, Strategy::mba}) {
        AttackTrace trace;
        switch (strat) {
          case Strategy::initial: trace = initial_attack(g, p, m, 1.0); break;
          case Strategy::recomputed: trace = recomputed_attack(g, p, m, 1.0); break;
          case Strategy::mba: trace = mba_attack(g, p, m); break;
        }
        sums[strat][m] += cost(trace).c_rho;
      }
    }
  }
  for (auto& [strat, per_method] : sums)
    for (auto& [m, total] : per_method) out.mean_c_rho[strat][m] = total / reps;
  out.tau_mv_amv = t_mv_amv / correlation_reps;
  out.tau_amc_amv = t_amc_amv / correlation_reps;
  out.tau_amc_mv = t_amc_mv / correlation_reps;
  return out;
}

void criterion_table2(const CellularRun& run, double elapsed_s) {
  const std::map<Strategy, double> expected = {{Strategy::initial, 0.165},
                                               {Strategy::recomputed, 0.107},
                                               {Strategy::mba, 0.086}};
  bool pass = elapsed_s < 1800.0;
  std::string detail;
  for (const auto& [strat, target] : expected) {
    const double mv = run.mean_c_rho.at(strat).at(Method::mv);
    const bool in_band = std::abs(mv - target) <= 0.07;
    bool best = true;
    for (const auto& [m, value] : run.mean_c_rho.at(strat))
      if (m != Method::mv && value < mv) best = false;
    pass = pass && in_band && best;
    detail += std::string(strategy_name(strat)) + " mv=" + fmt(mv) + (in_band ? "" : "!band") +
              (best ? "" : "!best") + " ";
  }
  report("table2-cellular", pass,
         detail + "(targets 0.165/0.107/0.086 +-0.07, mv best; " + fmt(elapsed_s) + " s)");
}

void criterion_correlations(const CellularRun& run) {
  const bool pass = run.tau_mv_amv < 0.0 && run.tau_amc_amv > run.tau_amc_mv;
  report("correlation-structure", pass,
         "tau(mv,amv)=" + fmt(run.tau_mv_amv) + " tau(amc-d,amv)=" + fmt(run.tau_amc_amv) +
             " tau(amc-d,mv)=" + fmt(run.tau_amc_mv));
}

// ---------------------------------------------------------------------------
// 4+5. Appendix-B orderings and detector sanity on ER / scale-free.
struct FamilyRun {
  std::map<Method, double> mean_initial_c_rho;
  std::map<Method, double> mean_initial_c_eta;
  double mean_q = 0.0;
};

FamilyRun run_family(Family family, int reps, std::uint64_t stream_base) {
  FamilyRun out;
  std::map<Method, double> rho_sum, eta_sum;
  double q_sum = 0.0;
  for (int rep = 0; rep < reps; ++rep) {
    GeneratorConfig cfg;
    cfg.family = family;
    cfg.seed = Rng::derive_seed(kMasterSeed, stream_base + 2 * rep);
    const auto [g, truth] = generate(cfg);
    const Partition p =
        detect_communities(g, Rng::derive_seed(kMasterSeed, stream_base + 2 * rep + 1));
    q_sum += modularity(g, p);
    for (const Method m : all_methods()) {
      const CostReport c = cost(initial_attack(g, p, m, 1.0));
      rho_sum[m] += c.c_rho;
      eta_sum[m] += c.c_eta;
    }
  }
  for (const Method m : all_methods()) {
    out.mean_initial_c_rho[m] = rho_sum[m] / reps;
    out.mean_initial_c_eta[m] = eta_sum[m] / reps;
  }
  out.mean_q = q_sum / reps;
  return out;
}

void criterion_appendix_b(const FamilyRun& sf, const FamilyRun& er) {
  // scale-free: MV carries the lowest mean initial C_eta
  const double mv_eta = sf.mean_initial_c_eta.at(Method::mv);
  bool mv_best_eta = true;
  for (const auto& [m, v] : sf.mean_initial_c_eta)
    if (m != Method::mv && v < mv_eta) mv_best_eta = false;

  // ER: a degree-family method (deg / wmc-d / amc-d) attains the lowest C_rho
  double best_overall = 1e9, best_degree_family = 1e9;
  for (const auto& [m, v] : er.mean_initial_c_rho) {
    best_overall = std::min(best_overall, v);
    if (m == Method::deg || m == Method::wmc_d || m == Method::amc_d)
      best_degree_family = std::min(best_degree_family, v);
  }
  const bool deg_best = best_degree_family <= best_overall + 1e-12;

  report("appendixB-orderings", mv_best_eta && deg_best,
         "sf mv C_eta=" + fmt(mv_eta) + (mv_best_eta ? " (lowest)" : " (NOT lowest)") +
             ", er degree-family best C_rho=" + fmt(best_degree_family) +
             (deg_best ? " (lowest)" : " (NOT lowest, " + fmt(best_overall) + ")"));
}

void criterion_detector(const CellularRun& cellular, const FamilyRun& er, const FamilyRun& sf) {
  double cellular_q = 0.0;
  for (const double q : cellular.detected_q) cellular_q += q;
  cellular_q /= double(cellular.detected_q.size());

  const bool pass = std::abs(cellular_q - 0.91) <= 0.05 && std::abs(er.mean_q - 0.240) <= 0.05 &&
                    std::abs(sf.mean_q - 0.196) <= 0.05;
  report("detector-sanity", pass,
         "mean q cellular=" + fmt(cellular_q) + " er=" + fmt(er.mean_q) +
             " sf=" + fmt(sf.mean_q) + " (targets 0.91/0.240/0.196 +-0.05)");
}

// ---------------------------------------------------------------------------
// 7. Near-linear scaling of the batch vitality computation.
void criterion_scaling() {
  const double targets[3] = {1e5, 2e5, 4e5};
  double times[3] = {0, 0, 0};
  double sizes[3] = {0, 0, 0};
  bool all_fast = true;

  for (int level = 0; level < 3; ++level) {
    // pick the first seed whose edge count lands near the target
    GeneratorConfig cfg;
    cfg.family = Family::cellular;
    cfg.n = static_cast<NodeId>(std::llround(std::sqrt(targets[level] * 171.4)));
    Graph g;
    Partition p;
    for (std::uint64_t s = 0; s < 100; ++s) {
      cfg.seed = Rng::derive_seed(kMasterSeed, 900 + 100 * level + s);
      auto [graph, truth] = generate_cellular(cfg);
      if (graph.total_weight() >= 0.75 * targets[level] &&
          graph.total_weight() <= 1.35 * targets[level]) {
        g = std::move(graph);
        p = std::move(truth);
        break;
      }
    }
    sizes[level] = g.total_weight();

    modularity_vitality_all(g, p);  // warm-up
    double best = 1e18;
    for (int run = 0; run < 5; ++run) {
      const auto t0 = Clock::now();
      const auto report_ = modularity_vitality_all(g, p);
      const double dt = seconds_since(t0);
      best = std::min(best, dt);
      if (dt >= 5.0) all_fast = false;
      if (report_.vitality.empty()) std::printf("unreachable\n");
    }
    times[level] = best;
  }
  const double r1 = times[1] / times[0];
  const double r2 = times[2] / times[1];
  report("scaling-near-linear", r1 <= 3.0 && r2 <= 3.0 && all_fast,
         "M=" + fmt(sizes[0]) + "/" + fmt(sizes[1]) + "/" + fmt(sizes[2]) + " best times " +
             fmt(times[0]) + "/" + fmt(times[1]) + "/" + fmt(times[2]) + " s, ratios " +
             fmt(r1) + ", " + fmt(r2) + " (limit 3)");
}

// ---------------------------------------------------------------------------
// 8. Greedy deception step identity and dominance at equal budget.
void criterion_deception() {
  double worst_identity = 0.0;
  double greedy_q_sum = 0.0, initial_q_sum = 0.0;
  const double budget = 0.05;

  for (int rep = 0; rep < 20; ++rep) {
    GeneratorConfig cfg;
    cfg.family = Family::cellular;
    cfg.seed = Rng::derive_seed(kMasterSeed, 700 + 2 * rep);
    const auto [g, truth] = generate_cellular(cfg);
    const Partition p =
        detect_communities(g, Rng::derive_seed(kMasterSeed, 700 + 2 * rep + 1));

    const DeceptionPlan greedy = deceive_greedy(g, p, StoppingRule::budget(budget));
    ResidualState replay(g, p);
    for (std::size_t t = 0; t < greedy.removals.size(); ++t) {
      const double v = replay.vitality(greedy.removals[t]);
      const double q_t = replay.modularity();
      replay.remove(greedy.removals[t]);
      worst_identity =
          std::max(worst_identity, std::abs(greedy.curve[t + 1].q - (q_t - v)));
    }
    greedy_q_sum += greedy.curve.back().q;
    initial_q_sum += deceive_initial(g, p, budget).curve.back().q;
  }
  const bool identity_ok = worst_identity <= 1e-12;
  const bool dominates = greedy_q_sum <= initial_q_sum + 1e-9;
  report("deception-step-identity", identity_ok && dominates,
         "worst |Q_{t+1}-(Q_t-v_t)| = " + fmt(worst_identity) +
             " (limit 1e-12), mean final q greedy=" + fmt(greedy_q_sum / 20.0) +
             " initial=" + fmt(initial_q_sum / 20.0));
}

}  // namespace

int main() {
  const auto t_all = Clock::now();
  criterion_oracle_equivalence();
  criterion_hand_fixtures();

  const auto t_bench = Clock::now();
  const CellularRun cellular = run_cellular_benchmark(100, 20);
  const double bench_s = seconds_since(t_bench);
  criterion_table2(cellular, bench_s);

  const FamilyRun sf = run_family(Family::scale_free, 100, 300);
  const FamilyRun er = run_family(Family::er, 100, 500);
  criterion_appendix_b(sf, er);
  criterion_detector(cellular, er, sf);
  criterion_correlations(cellular);
  criterion_scaling();
  criterion_deception();

  std::printf("%d criteria failed, total %.1f s\n", g_failures, seconds_since(t_all));
  return g_failures;
}
