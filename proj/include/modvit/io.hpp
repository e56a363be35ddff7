#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "modvit/attack.hpp"
#include "modvit/centrality.hpp"
#include "modvit/deception.hpp"
#include "modvit/graph.hpp"

namespace modvit {

/// Key-value comment headers shared by every CSV this tool writes
/// ("# key: value" lines before the column header).
using CsvMeta = std::map<std::string, std::string>;

void write_scores_csv(const std::string& path, const Graph& g, const ScoreVector& sv,
                      const CsvMeta& meta = {});

struct ScoresFile {
  Method method = Method::deg;
  std::vector<std::int64_t> node_ids;  // ascending
  std::vector<double> scores;
  CsvMeta meta;
};
ScoresFile read_scores_csv(const std::string& path);

void write_trace_csv(const std::string& path, const AttackTrace& trace,
                     const CsvMeta& meta = {});

struct TraceFile {
  std::string method;
  std::string strategy;
  NodeId node_count = 0;
  std::vector<TraceStep> steps;
  CsvMeta meta;
};
TraceFile read_trace_csv(const std::string& path);

void write_plan_csv(const std::string& path, const DeceptionPlan& plan,
                    const CsvMeta& meta = {});

/// 64-bit FNV-1a digest of a file's bytes, as fixed-width hex.
std::string file_digest(const std::string& path);

/// Shortest round-trip decimal form of a double (printf %.17g trimmed).
std::string format_double(double v);

}  // namespace modvit
