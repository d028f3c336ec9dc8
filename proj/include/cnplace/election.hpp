#pragma once

#include <array>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cnplace/centrality.hpp"
#include "cnplace/community.hpp"
#include "cnplace/graph.hpp"

namespace cnplace {

/// Heuristic order everywhere: [betweenness a1, closeness a2,
/// availability b1, latency b2, computational class b3].
inline constexpr int kNumHeuristics = 5;
using HeuristicVector = std::array<double, kNumHeuristics>;

extern const std::array<const char*, kNumHeuristics> kHeuristicNames;

/// 1-based heuristic index from a name like "a1" or "b3".
int heuristic_index(std::string_view name);

struct WeightConfig {
  std::array<double, kNumHeuristics> w{};
  void validate() const;  // all >= 0, at least one > 0
};

/// Weight vector selecting exactly heuristic h (1-based, 1..5).
WeightConfig absolute_config(int h);

/// Two-heuristic mix: weight (1-f) on m1 and f on m2, 0 < f < 1, m1 != m2.
WeightConfig combined_config(int m1, int m2, double f);

struct NodeScore {
  NodeId node;
  double score;
  HeuristicVector components;
};

struct Ranking {
  std::vector<NodeScore> ordered;  // score descending, ties by ascending id
  NodeId leader = 0;
};

/// Min-max normalizes each heuristic to [0,1] over the largest connected
/// component of the community. Latency is inverted after normalization so
/// that higher is always better; a heuristic that is constant across the
/// component maps to 0.5 for every node. Throws MissingDataError when
/// availability or latency is absent for a member.
std::unordered_map<NodeId, HeuristicVector> normalize_heuristics(
    const Community& c, const CentralityScores& cent);

/// Scores s_i = sum_k w_k * component_k(i) over the largest component of
/// the community and returns the full descending ranking; the head is the
/// leader.
Ranking elect(const Community& c, const CentralityScores& cent,
              const WeightConfig& w);

/// Baseline: a uniformly random leader from the largest component of the
/// community (score 1, everyone else 0). Deterministic for a given seed.
Ranking elect_random(const Community& c, std::uint64_t seed);

/// How a pipeline run elects leaders; Random derives one sub-stream per
/// community label from the seed.
struct ElectionPolicy {
  enum class Mode { Weighted, Random };
  Mode mode = Mode::Weighted;
  WeightConfig weights{};
  std::uint64_t seed = 0;
};

Ranking run_election(const Community& c, const CentralityScores& cent,
                     const ElectionPolicy& policy);

}  // namespace cnplace
