#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "modvit/attack.hpp"
#include "modvit/centrality.hpp"
#include "modvit/deception.hpp"
#include "modvit/error.hpp"
#include "modvit/generator.hpp"
#include "modvit/io.hpp"
#include "modvit/partition.hpp"
#include "modvit/rng.hpp"
#include "modvit/vitality.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace modvit;

namespace {

constexpr const char* kVersion = "0.1.0";

int default_jobs() {
  if (const char* env = std::getenv("MODVIT_JOBS")) {
    const int j = std::atoi(env);
    if (j > 0) return j;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

double now_ms() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

/// Collects inputs/outputs/timings for one invocation and writes the
/// manifest JSON every produced file points back to.
class Manifest {
 public:
  Manifest(std::string command, std::uint64_t seed) : seed_(seed), command_(std::move(command)) {}

  void add_input(const std::string& path) { inputs_.push_back({path, file_digest(path)}); }
  void add_output(const std::string& path) { outputs_.push_back(path); }
  void add_time(const std::string& stage, double ms) { times_[stage] = ms; }

  std::string path_for(const std::string& primary_output) const {
    return primary_output + ".manifest.json";
  }

  void write(const std::string& path) const {
    json j;
    j["tool"] = "modvit";
    j["version"] = kVersion;
    j["command"] = command_;
    j["seed"] = seed_;
    j["inputs"] = json::array();
    for (const auto& [p, digest] : inputs_) j["inputs"].push_back({{"path", p}, {"digest", digest}});
    j["outputs"] = outputs_;
    j["wall_ms"] = times_;
    if (!failures_.empty()) j["failed_cells"] = failures_;
    std::ofstream out(path);
    if (!out) throw InputError("cannot write manifest: " + path);
    out << j.dump(2) << "\n";
  }

  void add_failure(const std::string& cell, const std::string& what) {
    failures_.push_back(cell + ": " + what);
  }
  bool has_failures() const { return !failures_.empty(); }

 private:
  std::uint64_t seed_;
  std::string command_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::string> outputs_;
  std::map<std::string, double> times_;
  std::vector<std::string> failures_;
};

std::string join_args(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    s += argv[i];
  }
  return s;
}

CsvMeta manifest_meta(const Manifest& m, const std::string& primary) {
  return {{"manifest", fs::path(m.path_for(primary)).filename().string()}};
}

struct GraphArgs {
  std::string graph_path;
  std::string partition_path;
  bool unweighted = false;
};

void add_graph_options(CLI::App* cmd, GraphArgs& args, bool partition_optional = true) {
  cmd->add_option("--graph", args.graph_path, "edge list file (u v [w], # comments)")
      ->required();
  auto* p = cmd->add_option("--partition", args.partition_path,
                            "partition CSV (node_id,community_id); detected when absent");
  if (!partition_optional) p->required();
  cmd->add_flag("--unweighted", args.unweighted, "ignore weight columns, treat all edges as 1");
}

struct Loaded {
  Graph graph;
  Partition partition;
  bool detected = false;
};

Loaded load_inputs(const GraphArgs& args, std::uint64_t seed, Manifest& manifest,
                   bool need_partition = true) {
  Loaded l;
  l.graph = load_edge_list(args.graph_path, !args.unweighted);
  manifest.add_input(args.graph_path);
  if (!need_partition) return l;
  if (!args.partition_path.empty()) {
    l.partition = load_partition(args.partition_path, l.graph);
    manifest.add_input(args.partition_path);
  } else {
    l.partition = detect_communities(l.graph, seed);
    l.detected = true;
  }
  return l;
}

void write_sidecar_id_map(const Graph& g, const std::string& primary_output,
                          Manifest& manifest) {
  bool identity = true;
  for (NodeId i = 0; i < g.node_count() && identity; ++i) identity = g.label(i) == i;
  if (identity) return;  // nothing was re-numbered
  const std::string path = primary_output + ".idmap.csv";
  save_id_map(g, path);
  manifest.add_output(path);
}

// ---------------------------------------------------------------- generate
int cmd_generate(const std::string& family, NodeId n, double er_p, int sf_m, double sf_gamma,
                 std::uint64_t seed, const std::string& out,
                 const std::string& partition_out, Manifest& manifest) {
  GeneratorConfig cfg;
  cfg.family = parse_family(family);
  cfg.n = n;
  cfg.seed = seed;
  cfg.er_p = er_p;
  cfg.sf_m = sf_m;
  cfg.sf_gamma = sf_gamma;

  const double t0 = now_ms();
  auto [graph, partition] = generate(cfg);
  manifest.add_time("generate", now_ms() - t0);

  save_edge_list(graph, out, "manifest: " + fs::path(manifest.path_for(out)).filename().string());
  manifest.add_output(out);
  if (!partition_out.empty()) {
    if (cfg.family != Family::cellular)
      throw InputError("--partition-out is only meaningful for the cellular family");
    save_partition(partition, graph, partition_out,
                   "manifest: " + fs::path(manifest.path_for(out)).filename().string());
    manifest.add_output(partition_out);
  }
  manifest.write(manifest.path_for(out));
  std::cout << "family=" << family << " n=" << graph.node_count()
            << " m=" << format_double(graph.total_weight()) << " -> " << out << "\n";
  return 0;
}

// --------------------------------------------------------------- partition
int cmd_partition(const GraphArgs& args, std::uint64_t seed, int max_levels, double min_gain,
                  const std::string& out, Manifest& manifest) {
  Loaded l = load_inputs(args, seed, manifest, /*need_partition=*/false);
  DetectOptions opt;
  opt.seed = seed;
  opt.max_levels = max_levels;
  opt.min_gain = min_gain;
  const double t0 = now_ms();
  const Partition p = detect_communities(l.graph, opt);
  manifest.add_time("detect", now_ms() - t0);

  const double q = modularity(l.graph, p);
  save_partition(p, l.graph, out,
                 "manifest: " + fs::path(manifest.path_for(out)).filename().string());
  manifest.add_output(out);
  write_sidecar_id_map(l.graph, out, manifest);
  manifest.write(manifest.path_for(out));
  std::cout << "communities=" << p.community_count() << " q=" << format_double(q) << "\n";
  return 0;
}

// ------------------------------------------------------------------- score
int cmd_score(const GraphArgs& args, const std::string& method_name_, std::uint64_t seed,
              const std::string& out, bool group_self_loops, Manifest& manifest) {
  const Method method = parse_method(method_name_);
  Loaded l = load_inputs(args, seed, manifest);

  const double t0 = now_ms();
  const PartitionStats stats = compute_stats(l.graph, l.partition);
  ScoreVector sv = method == Method::mas
                       ? masuda_scores(l.graph, l.partition, stats, group_self_loops)
                       : score(l.graph, l.partition, method, &stats);
  manifest.add_time("score", now_ms() - t0);

  CsvMeta meta = manifest_meta(manifest, out);
  if (method == Method::mv || method == Method::amv) {
    const double q = modularity(stats);
    meta["q"] = format_double(q);
    std::cout << "q=" << format_double(q) << "\n";
  }
  write_scores_csv(out, l.graph, sv, meta);
  manifest.add_output(out);
  write_sidecar_id_map(l.graph, out, manifest);
  manifest.write(manifest.path_for(out));
  return 0;
}

// ------------------------------------------------------------------ attack
int cmd_attack(const GraphArgs& args, const std::string& strategy_name_,
               const std::string& method_name_, double budget, std::uint64_t seed,
               const std::string& out, Manifest& manifest) {
  const Strategy strategy = parse_strategy(strategy_name_);
  const Method method = parse_method(method_name_);
  Loaded l = load_inputs(args, seed, manifest);

  const double t0 = now_ms();
  AttackTrace trace;
  switch (strategy) {
    case Strategy::initial: trace = initial_attack(l.graph, l.partition, method, budget); break;
    case Strategy::recomputed:
      trace = recomputed_attack(l.graph, l.partition, method, budget);
      break;
    case Strategy::mba: trace = mba_attack(l.graph, l.partition, method); break;
  }
  manifest.add_time("attack", now_ms() - t0);

  write_trace_csv(out, trace, manifest_meta(manifest, out));
  manifest.add_output(out);
  write_sidecar_id_map(l.graph, out, manifest);
  manifest.write(manifest.path_for(out));

  const CostReport c = cost(trace);
  std::cout << "steps=" << trace.removed.size() << " c_rho=" << format_double(c.c_rho)
            << " c_eta=" << format_double(c.c_eta) << "\n";
  return 0;
}

// ----------------------------------------------------------------- deceive
int cmd_deceive(const GraphArgs& args, const std::string& strategy, double budget,
                std::optional<double> target_q, double plateau_eps, std::uint64_t seed,
                const std::string& out, Manifest& manifest) {
  Loaded l = load_inputs(args, seed, manifest);

  const double t0 = now_ms();
  DeceptionPlan plan;
  if (strategy == "initial") {
    plan = deceive_initial(l.graph, l.partition, budget);
  } else if (strategy == "greedy") {
    StoppingRule stop;
    stop.node_budget = budget;
    if (target_q) stop.target_q = *target_q;
    stop.plateau_eps = plateau_eps;
    plan = deceive_greedy(l.graph, l.partition, stop);
  } else {
    throw InputError("unknown deception strategy '" + strategy + "'");
  }
  manifest.add_time("deceive", now_ms() - t0);

  CsvMeta meta = manifest_meta(manifest, out);
  meta["strategy"] = strategy;
  meta["nodes"] = std::to_string(l.graph.node_count());
  write_plan_csv(out, plan, meta);
  manifest.add_output(out);
  write_sidecar_id_map(l.graph, out, manifest);
  manifest.write(manifest.path_for(out));

  const double q0 = plan.curve.front().q;
  const double q1 = plan.curve.back().q;
  std::cout << "removed=" << plan.removals.size() << " q0=" << format_double(q0)
            << " q_final=" << format_double(q1) << "\n";
  return 0;
}

// -------------------------------------------------------------------- cost
int cmd_cost(const std::string& trace_path) {
  const TraceFile f = read_trace_csv(trace_path);
  const CostReport c = cost_from_curve(f.steps);
  std::cout << "c_rho,c_eta\n" << format_double(c.c_rho) << ',' << format_double(c.c_eta) << "\n";
  return 0;
}

// --------------------------------------------------------------- correlate
int cmd_correlate(const std::vector<std::string>& score_paths, const std::string& out,
                  Manifest& manifest) {
  if (score_paths.size() < 2) throw InputError("correlate needs at least two score files");
  std::vector<ScoresFile> files;
  for (const auto& p : score_paths) {
    files.push_back(read_scores_csv(p));
    manifest.add_input(p);
  }
  for (const auto& f : files)
    if (f.node_ids != files.front().node_ids)
      throw InputError("score files do not cover the same node set");

  const std::size_t k = files.size();
  std::vector<std::vector<double>> tau(k, std::vector<double>(k, 1.0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      ScoreVector va{files[a].method, files[a].scores, {}};
      ScoreVector vb{files[b].method, files[b].scores, {}};
      tau[a][b] = tau[b][a] = kendall_tau(va, vb);
    }

  std::ostream* os = &std::cout;
  std::ofstream file_out;
  if (!out.empty()) {
    file_out.open(out);
    if (!file_out) throw InputError("cannot write " + out);
    os = &file_out;
    for (const auto& [key, value] : manifest_meta(manifest, out))
      file_out << "# " << key << ": " << value << "\n";
  }
  *os << "method";
  for (const auto& f : files) *os << ',' << method_name(f.method);
  *os << "\n";
  for (std::size_t a = 0; a < k; ++a) {
    *os << method_name(files[a].method);
    for (std::size_t b = 0; b < k; ++b) *os << ',' << format_double(tau[a][b]);
    *os << "\n";
  }
  if (!out.empty()) {
    manifest.add_output(out);
    manifest.write(manifest.path_for(out));
  }
  return 0;
}

// ------------------------------------------------------------------ report
int cmd_report(const std::vector<std::string>& trace_paths, const std::string& out,
               Manifest& manifest) {
  if (trace_paths.empty()) throw InputError("report needs at least one trace");
  std::vector<TraceFile> traces;
  for (const auto& p : trace_paths) {
    traces.push_back(read_trace_csv(p));
    manifest.add_input(p);
  }
  for (const auto& t : traces)
    if (t.node_count != traces.front().node_count)
      throw InputError("traces disagree on node count; refusing to merge");

  std::ofstream file_out(out);
  if (!file_out) throw InputError("cannot write " + out);
  for (const auto& [key, value] : manifest_meta(manifest, out))
    file_out << "# " << key << ": " << value << "\n";
  file_out << "method,x,x_value,sigma,q\n";
  for (const auto& t : traces) {
    for (const auto& s : t.steps)
      file_out << t.method << ",rho," << format_double(s.rho) << ','
               << format_double(s.sigma) << ',' << format_double(s.q) << "\n";
    for (const auto& s : t.steps)
      file_out << t.method << ",eta," << format_double(s.eta) << ','
               << format_double(s.sigma) << ',' << format_double(s.q) << "\n";
  }
  file_out.close();
  manifest.add_output(out);
  manifest.write(manifest.path_for(out));
  return 0;
}

// --------------------------------------------------------------- benchmark
struct BenchmarkCell {
  int replication = 0;
  Method method{};
  Strategy strategy{};
  double c_rho = 0.0;
  double c_eta = 0.0;
  bool ok = false;
  std::string error;
};

int cmd_benchmark(const std::vector<std::string>& families, int replications,
                  const std::vector<std::string>& method_names,
                  const std::vector<std::string>& strategy_names, double budget,
                  std::uint64_t seed, int jobs, const std::string& out_dir, bool dump_traces,
                  Manifest& manifest) {
  if (replications < 1) throw InputError("--replications must be >= 1");
  std::vector<Method> methods;
  if (method_names.empty() || (method_names.size() == 1 && method_names[0] == "all")) {
    methods = all_methods();
  } else {
    for (const auto& m : method_names) methods.push_back(parse_method(m));
  }
  std::vector<Strategy> strategies;
  if (strategy_names.empty() || (strategy_names.size() == 1 && strategy_names[0] == "all")) {
    strategies = {Strategy::initial, Strategy::recomputed, Strategy::mba};
  } else {
    for (const auto& s : strategy_names) strategies.push_back(parse_strategy(s));
  }

  fs::create_directories(out_dir);
  const std::string manifest_path = (fs::path(out_dir) / "manifest.json").string();
  const CsvMeta meta{{"manifest", "manifest.json"}};

  for (const auto& family_str : families) {
    const Family family = parse_family(family_str);
    const double t_family = now_ms();

    std::vector<std::vector<BenchmarkCell>> per_rep(replications);
    std::atomic<int> next_rep{0};
    std::mutex trace_mutex;

    auto worker = [&]() {
      for (int rep = next_rep.fetch_add(1); rep < replications; rep = next_rep.fetch_add(1)) {
        GeneratorConfig cfg;
        cfg.family = family;
        cfg.seed = Rng::derive_seed(seed, 2 * static_cast<std::uint64_t>(rep));
        auto [graph, truth] = generate(cfg);
        const Partition partition = detect_communities(
            graph, Rng::derive_seed(seed, 2 * static_cast<std::uint64_t>(rep) + 1));

        for (const Method method : methods) {
          for (const Strategy strategy : strategies) {
            BenchmarkCell cell;
            cell.replication = rep;
            cell.method = method;
            cell.strategy = strategy;
            try {
              AttackTrace trace;
              switch (strategy) {
                case Strategy::initial:
                  trace = initial_attack(graph, partition, method, budget);
                  break;
                case Strategy::recomputed:
                  trace = recomputed_attack(graph, partition, method, budget);
                  break;
                case Strategy::mba: trace = mba_attack(graph, partition, method); break;
              }
              const CostReport c = cost(trace);
              cell.c_rho = c.c_rho;
              cell.c_eta = c.c_eta;
              cell.ok = true;
              if (dump_traces) {
                const std::string name = family_str + "_r" + std::to_string(rep) + "_" +
                                         method_name(method) + "_" + strategy_name(strategy) +
                                         ".trace.csv";
                const std::string path = (fs::path(out_dir) / name).string();
                write_trace_csv(path, trace, meta);
                std::lock_guard<std::mutex> lock(trace_mutex);
                manifest.add_output(path);
              }
            } catch (const std::exception& e) {
              cell.error = e.what();
            }
            per_rep[rep].push_back(cell);
          }
        }
      }
    };

    std::vector<std::thread> pool;
    const int n_workers = std::max(1, std::min(jobs, replications));
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    manifest.add_time("benchmark_" + family_str, now_ms() - t_family);

    // per-run CSV in deterministic order
    const std::string runs_path = (fs::path(out_dir) / ("runs_" + family_str + ".csv")).string();
    {
      std::ofstream runs(runs_path);
      for (const auto& [key, value] : meta) runs << "# " << key << ": " << value << "\n";
      runs << "replication,method,strategy,c_rho,c_eta,status\n";
      for (int rep = 0; rep < replications; ++rep)
        for (const auto& cell : per_rep[rep])
          runs << rep << ',' << method_name(cell.method) << ',' << strategy_name(cell.strategy)
               << ',' << (cell.ok ? format_double(cell.c_rho) : "") << ','
               << (cell.ok ? format_double(cell.c_eta) : "") << ','
               << (cell.ok ? "ok" : "failed") << "\n";
    }
    manifest.add_output(runs_path);

    // aggregate in the result-table layout: one row per strategy x metric
    const std::string agg_path =
        (fs::path(out_dir) / ("aggregate_" + family_str + ".csv")).string();
    {
      std::ofstream agg(agg_path);
      for (const auto& [key, value] : meta) agg << "# " << key << ": " << value << "\n";
      agg << "row";
      for (const Method m : methods) agg << ',' << method_name(m);
      agg << "\n";
      for (const Strategy s : strategies) {
        for (const bool eta : {false, true}) {
          agg << strategy_name(s) << (eta ? "_c_eta" : "_c_rho");
          for (const Method m : methods) {
            double sum = 0.0;
            int count = 0;
            for (int rep = 0; rep < replications; ++rep)
              for (const auto& cell : per_rep[rep])
                if (cell.ok && cell.method == m && cell.strategy == s) {
                  sum += eta ? cell.c_eta : cell.c_rho;
                  ++count;
                }
            agg << ',' << (count > 0 ? format_double(sum / count) : "");
          }
          agg << "\n";
        }
      }
    }
    manifest.add_output(agg_path);

    for (int rep = 0; rep < replications; ++rep)
      for (const auto& cell : per_rep[rep])
        if (!cell.ok)
          manifest.add_failure(family_str + "/r" + std::to_string(rep) + "/" +
                                   method_name(cell.method) + "/" + strategy_name(cell.strategy),
                               cell.error);
  }

  manifest.write(manifest_path);
  if (manifest.has_failures()) {
    std::cerr << "benchmark finished with failed cells; see " << manifest_path << "\n";
    return 4;
  }
  std::cout << "benchmark written to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"modularity-vitality centrality, attacks, and deception toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("modvit ") + kVersion);

  std::uint64_t seed = 0;
  int jobs = default_jobs();
  std::string format = "csv";
  app.add_option("--seed", seed, "master random seed")->capture_default_str();
  app.add_option("--jobs", jobs, "parallel jobs (default: MODVIT_JOBS or hardware)")
      ->capture_default_str();
  app.add_option("--format", format, "output format (csv or tsv; csv only for now)")
      ->check(CLI::IsMember({"csv"}));

  // generate
  auto* gen = app.add_subcommand("generate", "synthesize a benchmark network");
  std::string family = "cellular";
  NodeId gen_n = 1000;
  double er_p = 0.015, sf_gamma = 1.5;
  int sf_m = 8;
  std::string gen_out = "edges.tsv", gen_partition_out;
  gen->add_option("--family", family, "cellular | er | sf")->capture_default_str();
  gen->add_option("-n,--nodes", gen_n, "node count")->capture_default_str();
  gen->add_option("--er-p", er_p, "ER edge probability")->capture_default_str();
  gen->add_option("--sf-m", sf_m, "scale-free edges per new node")->capture_default_str();
  gen->add_option("--sf-gamma", sf_gamma, "scale-free attachment exponent")
      ->capture_default_str();
  gen->add_option("-o,--out", gen_out, "edge list output")->capture_default_str();
  gen->add_option("--partition-out", gen_partition_out, "ground-truth partition output");

  // partition
  auto* part = app.add_subcommand("partition", "detect communities (greedy modularity)");
  GraphArgs part_args;
  int max_levels = 32;
  double min_gain = 1e-9;
  std::string part_out = "partition.csv";
  part->add_option("--graph", part_args.graph_path, "edge list file")->required();
  part->add_flag("--unweighted", part_args.unweighted, "ignore weight columns");
  part->add_option("--max-levels", max_levels, "aggregation level cap")->capture_default_str();
  part->add_option("--min-gain", min_gain, "modularity gain threshold per move")
      ->capture_default_str();
  part->add_option("-o,--out", part_out, "partition CSV output")->capture_default_str();

  // score
  auto* sc = app.add_subcommand("score", "compute one centrality for every node");
  GraphArgs score_args;
  std::string score_method = "mv", score_out = "scores.csv";
  bool group_self_loops = false;
  add_graph_options(sc, score_args);
  sc->add_option("--method", score_method, "mv|amv|cd|mas|chb|wmc-d|amc-d|cc|deg")
      ->capture_default_str();
  sc->add_flag("--group-self-loops", group_self_loops,
               "include intra-community weight on the group network diagonal (mas)");
  sc->add_option("-o,--out", score_out, "scores CSV output")->capture_default_str();

  // attack
  auto* att = app.add_subcommand("attack", "run a fragmentation attack");
  GraphArgs attack_args;
  std::string attack_strategy = "initial", attack_method = "mv", attack_out = "trace.csv";
  double attack_budget = 1.0;
  add_graph_options(att, attack_args);
  att->add_option("--strategy", attack_strategy, "initial | recomputed | mba")
      ->capture_default_str();
  att->add_option("--method", attack_method, "scoring method")->capture_default_str();
  att->add_option("--budget", attack_budget, "fraction of nodes to remove (ignored by mba)")
      ->capture_default_str();
  att->add_option("-o,--out", attack_out, "trace CSV output")->capture_default_str();

  // deceive
  auto* dec = app.add_subcommand("deceive", "community deception by hub removal");
  GraphArgs deceive_args;
  std::string deceive_strategy = "greedy", deceive_out = "plan.csv";
  double deceive_budget = 1.0, plateau_eps = 1e-9;
  std::optional<double> target_q;
  double target_q_value = 0.0;
  add_graph_options(dec, deceive_args);
  dec->add_option("--strategy", deceive_strategy, "initial | greedy")->capture_default_str();
  dec->add_option("--budget", deceive_budget, "node budget fraction")->capture_default_str();
  auto* tq = dec->add_option("--target-q", target_q_value, "stop once modularity <= this");
  dec->add_option("--plateau-eps", plateau_eps,
                  "greedy stops when the best step gain falls below this (<=0 disables)")
      ->capture_default_str();
  dec->add_option("-o,--out", deceive_out, "plan CSV output")->capture_default_str();

  // cost
  auto* cst = app.add_subcommand("cost", "integrate a trace into C_rho / C_eta");
  std::string cost_trace;
  cst->add_option("trace", cost_trace, "trace CSV")->required();

  // correlate
  auto* corr = app.add_subcommand("correlate", "Kendall tau matrix between score files");
  std::vector<std::string> corr_scores;
  std::string corr_out;
  corr->add_option("scores", corr_scores, "two or more score CSVs")->required();
  corr->add_option("-o,--out", corr_out, "tau matrix CSV (stdout when omitted)");

  // benchmark
  auto* bench = app.add_subcommand("benchmark", "full methods x strategies cost table");
  std::vector<std::string> bench_families{"cellular"};
  std::vector<std::string> bench_methods{"all"};
  std::vector<std::string> bench_strategies{"all"};
  int replications = 100;
  double bench_budget = 1.0;
  std::string bench_out = "benchmark_out";
  bool dump_traces = false;
  bench->add_option("--family", bench_families, "families to run (repeatable)")
      ->capture_default_str();
  bench->add_option("--replications", replications, "networks per family")
      ->capture_default_str();
  bench->add_option("--methods", bench_methods, "methods or 'all'")->capture_default_str();
  bench->add_option("--strategies", bench_strategies, "strategies or 'all'")
      ->capture_default_str();
  bench->add_option("--budget", bench_budget, "attack budget")->capture_default_str();
  bench->add_option("-o,--out-dir", bench_out, "output directory")->capture_default_str();
  bench->add_flag("--traces", dump_traces, "also write every per-run trace");

  // report
  auto* rep = app.add_subcommand("report", "merge traces into a plot-ready long CSV");
  std::vector<std::string> report_traces;
  std::string report_out = "report.csv";
  rep->add_option("traces", report_traces, "trace CSVs sharing one graph")->required();
  rep->add_option("-o,--out", report_out, "long-format CSV output")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (tq->count() > 0) target_q = target_q_value;

  Manifest manifest(join_args(argc, argv), seed);
  try {
    if (gen->parsed())
      return cmd_generate(family, gen_n, er_p, sf_m, sf_gamma, seed, gen_out,
                          gen_partition_out, manifest);
    if (part->parsed())
      return cmd_partition(part_args, seed, max_levels, min_gain, part_out, manifest);
    if (sc->parsed())
      return cmd_score(score_args, score_method, seed, score_out, group_self_loops, manifest);
    if (att->parsed())
      return cmd_attack(attack_args, attack_strategy, attack_method, attack_budget, seed,
                        attack_out, manifest);
    if (dec->parsed())
      return cmd_deceive(deceive_args, deceive_strategy, deceive_budget, target_q, plateau_eps,
                         seed, deceive_out, manifest);
    if (cst->parsed()) return cmd_cost(cost_trace);
    if (corr->parsed()) return cmd_correlate(corr_scores, corr_out, manifest);
    if (bench->parsed())
      return cmd_benchmark(bench_families, replications, bench_methods, bench_strategies,
                           bench_budget, seed, jobs, bench_out, dump_traces, manifest);
    if (rep->parsed()) return cmd_report(report_traces, report_out, manifest);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
