#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cnplace/community.hpp"
#include "cnplace/election.hpp"
#include "cnplace/graph.hpp"

namespace cnplace {

/// Mean BFS hop distance from the community's nodes (largest component
/// only) to the given leader. The leader itself is excluded from the mean
/// unless include_leader is set; a singleton component yields 0.
double hops_to_leader(const Community& c, NodeId leader,
                      bool include_leader = false);

struct DegreeStats {
  int max_degree = 0;
  double avg_degree = 0.0;  // 2m/n over the induced subgraph
};
DegreeStats degree_stats(const Community& c);

/// Right-continuous empirical CDF with duplicate values merged.
struct Ecdf {
  std::vector<std::pair<double, double>> points;  // (value, cumulative fraction]
  double at(double x) const;
};
Ecdf ecdf(std::span<const double> xs);

/// Kolmogorov-Smirnov statistic sup |ECDF - CDF|.
double gof_ks(std::span<const double> xs,
              const std::function<double(double)>& cdf);

/// L-moment fits of the candidate families with their KS statistics,
/// one row per family ("gev", "kappa4", "normal"); lower is better.
struct GofRow {
  std::string family;
  double ks = 0.0;
};
std::vector<GofRow> gof_compare(std::span<const double> xs);

struct PlacementRow {
  Label label = 0;
  std::size_t size = 0;
  NodeId leader = 0;
  double avg_hops = 0.0;
  int max_degree = 0;
  double avg_degree = 0.0;
  // Bottleneck (min) bandwidth and total RTT along the BFS hop path from
  // each member to the leader, averaged over members with fully-attributed
  // paths; NaN when no member qualifies.
  double avg_bw_to_leader = 0.0;
  double avg_rtt_to_leader = 0.0;
};

PlacementRow placement_row(const Community& c, const Ranking& r,
                           bool include_leader = false);

struct PartitionReport {
  std::vector<PlacementRow> rows;  // sorted by community label
  double mean_avg_hops = 0.0;
  double mean_avg_degree = 0.0;
  // Per-member hop samples (one per non-leader component node), pooled
  // across communities; source data for the hops ECDF.
  std::vector<double> hop_samples;
  std::vector<double> bw_samples;
  std::vector<double> rtt_samples;
};

PartitionReport partition_report(const std::vector<Community>& partition,
                                 const ElectionPolicy& policy,
                                 bool include_leader = false);

struct ComparisonReport {
  PartitionReport a;
  PartitionReport b;
};

/// Runs the election per community under both partitions and reports them
/// side by side. Both partitions must cover the graph's node set exactly.
ComparisonReport compare_partitions(const NetworkGraph& g,
                                    const std::vector<Community>& part_a,
                                    const std::vector<Community>& part_b,
                                    const ElectionPolicy& policy,
                                    bool include_leader = false);

/// Baseline partition: seeded shuffle split into `parts` near-equal sets.
std::vector<Community> random_equal_partition(const NetworkGraph& g,
                                              std::size_t parts,
                                              std::uint64_t seed);

}  // namespace cnplace
