#pragma once

#include <cstdint>
#include <string>
#include <utility>

#include "modvit/graph.hpp"
#include "modvit/partition.hpp"

namespace modvit {

enum class Family { cellular, er, scale_free };

const char* family_name(Family f);
Family parse_family(const std::string& name);

/// Seeded parameters for the three benchmark families. Defaults reproduce
/// the experiment-scale setups: cellular n=1000 with cells drawn per the
/// benchmark distributions, ER n=1000 p=0.015 (resampled until connected),
/// scale-free n=1000 m=8 gamma=1.5.
struct GeneratorConfig {
  Family family = Family::cellular;
  NodeId n = 1000;
  std::uint64_t seed = 0;
  double er_p = 0.015;
  int sf_m = 8;
  double sf_gamma = 1.5;

  void validate() const;
};

/// Cellular benchmark: the number of cells is uniform on {10..20}, cell sizes
/// are Normal(n/cells, cells/5) rounded and clamped to >= 2 with the last
/// cell absorbing the remainder, each cell is an internal ER graph with
/// density uniform on (0.1, 0.25), and cell pairs are linked by a single
/// edge between uniformly chosen endpoints with probability drawn once from
/// uniform (0, 0.5). Returns the ground-truth cell partition.
std::pair<Graph, Partition> generate_cellular(const GeneratorConfig& cfg);

/// Erdos-Renyi G(n, p), resampled until connected (diagnostic error after
/// 10^4 attempts).
Graph generate_er_connected(const GeneratorConfig& cfg);

/// Growth model: an (m+1)-clique seed, then each new node attaches to m
/// distinct existing nodes with probability proportional to degree^gamma
/// (gamma = 1 recovers linear preferential attachment).
Graph generate_scale_free(const GeneratorConfig& cfg);

/// Dispatch on cfg.family; the partition is empty except for cellular.
std::pair<Graph, Partition> generate(const GeneratorConfig& cfg);

}  // namespace modvit
