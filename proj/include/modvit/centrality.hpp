#pragma once

#include <string>
#include <vector>

#include "modvit/graph.hpp"
#include "modvit/partition.hpp"

namespace modvit {

enum class Method { mv, amv, cd, mas, chb, wmc_d, amc_d, cc, deg };

const char* method_name(Method m);
Method parse_method(const std::string& name);
std::vector<Method> all_methods();  // the benchmark roster (no cc)

/// Attack direction: mv removes ascending (most negative first); every other
/// method removes descending by score.
bool removes_ascending(Method m);

struct ScoreVector {
  Method method = Method::deg;
  std::vector<double> scores;
  std::vector<NodeId> ranking;  // removal order; ties broken by ascending id
};

/// Sort node ids by the method's attack direction, ties by ascending id.
std::vector<NodeId> make_ranking(Method m, const std::vector<double>& scores);

/// Score priority as used for ranking: -score for ascending methods, score
/// otherwise. Rank correlations compare these keys so that two methods agree
/// exactly when their attack orders agree.
double attack_priority(Method m, double score);

ScoreVector masuda_scores(const Graph& g, const Partition& p, const PartitionStats& s,
                          bool group_self_loops = false);
ScoreVector chb_scores(const Graph& g, const Partition& p, const PartitionStats& s);
ScoreVector wmc_scores(const Graph& g, const Partition& p, const PartitionStats& s);
ScoreVector amc_scores(const Graph& g, const Partition& p, const PartitionStats& s);

/// Gupta's commn-centrality with the customary R_c = max internal degree of
/// community c (overridable). Throws InputError naming the first community
/// whose max external degree is zero (the measure is undefined there).
ScoreVector commn_scores(const Graph& g, const Partition& p, const PartitionStats& s,
                         const std::vector<double>* r_override = nullptr);
ScoreVector degree_scores(const Graph& g);

/// Dispatch by method; stats are computed when not supplied.
ScoreVector score(const Graph& g, const Partition& p, Method m,
                  const PartitionStats* stats = nullptr);

}  // namespace modvit
