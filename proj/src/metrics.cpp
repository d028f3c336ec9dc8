#include "cnplace/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <unordered_map>

#include "cnplace/centrality.hpp"
#include "cnplace/distributions.hpp"
#include "cnplace/preprocess.hpp"
#include "cnplace/rng.hpp"

namespace cnplace {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

/// BFS from the leader over its component, visiting neighbors in ascending
/// id order so parent choices (and thus paths) are deterministic.
struct LeaderTree {
  std::unordered_map<NodeId, int> dist;
  std::unordered_map<NodeId, NodeId> parent;
};

LeaderTree bfs_from_leader(const NetworkGraph& sub, NodeId leader) {
  LeaderTree t;
  t.dist.emplace(leader, 0);
  std::deque<NodeId> queue{leader};
  while (!queue.empty()) {
    NodeId v = queue.front();
    queue.pop_front();
    for (NodeId w : sub.neighbors(v)) {
      if (!t.dist.contains(w)) {
        t.dist.emplace(w, t.dist[v] + 1);
        t.parent.emplace(w, v);
        queue.push_back(w);
      }
    }
  }
  return t;
}

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return kNaN;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

/// Per-member path samples within one community: hop count, bottleneck
/// (min) bandwidth and summed RTT along the deterministic BFS path to the
/// leader. Members whose path has a missing attribute contribute no
/// bandwidth/RTT sample.
struct PathSamples {
  std::vector<double> hops;
  std::vector<double> bw;
  std::vector<double> rtt;
};

PathSamples leader_path_samples(const NetworkGraph& sub,
                                const std::vector<NodeId>& comp,
                                NodeId leader) {
  PathSamples out;
  const LeaderTree tree = bfs_from_leader(sub, leader);
  for (NodeId v : comp) {
    if (v == leader) continue;
    out.hops.push_back(static_cast<double>(tree.dist.at(v)));
    double bottleneck = std::numeric_limits<double>::infinity();
    double total_rtt = 0.0;
    bool bw_ok = true;
    bool rtt_ok = true;
    for (NodeId cur = v; cur != leader;) {
      const NodeId par = tree.parent.at(cur);
      const EdgeAttributes* ea = sub.edge_attributes(cur, par);
      if (!ea || !ea->bandwidth_mbps) {
        bw_ok = false;
      } else {
        bottleneck = std::min(bottleneck, *ea->bandwidth_mbps);
      }
      if (!ea || !ea->rtt_ms) {
        rtt_ok = false;
      } else {
        total_rtt += *ea->rtt_ms;
      }
      cur = par;
    }
    if (bw_ok) out.bw.push_back(bottleneck);
    if (rtt_ok) out.rtt.push_back(total_rtt);
  }
  return out;
}

}  // namespace

double hops_to_leader(const Community& c, NodeId leader, bool include_leader) {
  auto comps = connected_components(c.subgraph);
  if (comps.empty()) {
    throw EmptyGraphError("hops_to_leader on empty community");
  }
  const auto& comp = comps.front();
  if (!std::binary_search(comp.begin(), comp.end(), leader)) {
    throw ArgumentError("leader " + std::to_string(leader) +
                        " outside the largest component");
  }
  if (comp.size() == 1) return 0.0;
  const LeaderTree tree = bfs_from_leader(c.subgraph.induced(comp), leader);
  long total = 0;
  for (NodeId v : comp) total += tree.dist.at(v);
  const double denom =
      static_cast<double>(include_leader ? comp.size() : comp.size() - 1);
  return static_cast<double>(total) / denom;
}

DegreeStats degree_stats(const Community& c) {
  if (c.subgraph.empty()) {
    throw EmptyGraphError("degree_stats on empty community");
  }
  DegreeStats st;
  for (NodeId v : c.subgraph.nodes()) {
    st.max_degree =
        std::max(st.max_degree, static_cast<int>(c.subgraph.degree(v)));
  }
  st.avg_degree = 2.0 * static_cast<double>(c.subgraph.edge_count()) /
                  static_cast<double>(c.subgraph.node_count());
  return st;
}

Ecdf ecdf(std::span<const double> xs) {
  if (xs.empty()) {
    throw ArgumentError("ecdf of empty sample");
  }
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  Ecdf e;
  const double n = static_cast<double>(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (i + 1 < sorted.size() && sorted[i + 1] == sorted[i]) continue;
    e.points.emplace_back(sorted[i], static_cast<double>(i + 1) / n);
  }
  return e;
}

double Ecdf::at(double x) const {
  double f = 0.0;
  for (const auto& [value, frac] : points) {
    if (value > x) break;
    f = frac;
  }
  return f;
}

double gof_ks(std::span<const double> xs,
              const std::function<double(double)>& cdf) {
  if (xs.empty()) {
    throw ArgumentError("KS statistic of empty sample");
  }
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const double f = cdf(sorted[i]);
    d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
    d = std::max(d, f - static_cast<double>(i) / n);
  }
  return d;
}

std::vector<GofRow> gof_compare(std::span<const double> xs) {
  const LMoments lm = sample_lmoments(xs);
  std::vector<GofRow> rows;

  const GevParams gev = fit_gev(lm);
  rows.push_back({"gev", gof_ks(xs, [&](double x) { return gev_cdf(gev, x); })});

  const Kappa4Fit kap = fit_kappa4(lm);
  rows.push_back({"kappa4",
                  gof_ks(xs, [&](double x) { return kappa4_cdf(kap.params, x); })});

  const NormalParams norm = fit_normal(lm);
  rows.push_back(
      {"normal", gof_ks(xs, [&](double x) { return normal_cdf(norm, x); })});
  return rows;
}

PlacementRow placement_row(const Community& c, const Ranking& r,
                           bool include_leader) {
  PlacementRow row;
  row.label = c.label;
  row.size = c.members.size();
  row.leader = r.leader;
  row.avg_hops = hops_to_leader(c, r.leader, include_leader);
  const DegreeStats ds = degree_stats(c);
  row.max_degree = ds.max_degree;
  row.avg_degree = ds.avg_degree;

  const auto comps = connected_components(c.subgraph);
  const NetworkGraph sub = c.subgraph.induced(comps.front());
  const PathSamples ps = leader_path_samples(sub, comps.front(), r.leader);
  row.avg_bw_to_leader = mean(ps.bw);
  row.avg_rtt_to_leader = mean(ps.rtt);
  return row;
}

PartitionReport partition_report(const std::vector<Community>& partition,
                                 const ElectionPolicy& policy,
                                 bool include_leader) {
  PartitionReport rep;
  auto sorted = partition;
  std::sort(sorted.begin(), sorted.end(), [](const Community& a, const Community& b) {
    return a.label < b.label;
  });
  std::vector<double> hop_means, deg_means;
  for (const Community& c : sorted) {
    const CentralityScores cent = centrality_scores(c.subgraph);
    const Ranking r = run_election(c, cent, policy);
    rep.rows.push_back(placement_row(c, r, include_leader));
    hop_means.push_back(rep.rows.back().avg_hops);
    deg_means.push_back(rep.rows.back().avg_degree);

    const auto comps = connected_components(c.subgraph);
    const NetworkGraph sub = c.subgraph.induced(comps.front());
    PathSamples ps = leader_path_samples(sub, comps.front(), r.leader);
    rep.hop_samples.insert(rep.hop_samples.end(), ps.hops.begin(), ps.hops.end());
    rep.bw_samples.insert(rep.bw_samples.end(), ps.bw.begin(), ps.bw.end());
    rep.rtt_samples.insert(rep.rtt_samples.end(), ps.rtt.begin(), ps.rtt.end());
  }
  rep.mean_avg_hops = mean(hop_means);
  rep.mean_avg_degree = mean(deg_means);
  return rep;
}

namespace {

void check_cover(const NetworkGraph& g, const std::vector<Community>& part,
                 const char* which) {
  std::unordered_map<NodeId, int> seen;
  std::size_t total = 0;
  for (const Community& c : part) {
    for (NodeId v : c.members) {
      if (!g.has_node(v)) {
        throw ConsistencyError(std::string(which) +
                               ": member not in graph: " + std::to_string(v));
      }
      if (++seen[v] > 1) {
        throw ConsistencyError(std::string(which) +
                               ": node assigned twice: " + std::to_string(v));
      }
      ++total;
    }
  }
  if (total != g.node_count()) {
    throw ConsistencyError(std::string(which) +
                           ": partition does not cover the graph");
  }
}

}  // namespace

ComparisonReport compare_partitions(const NetworkGraph& g,
                                    const std::vector<Community>& part_a,
                                    const std::vector<Community>& part_b,
                                    const ElectionPolicy& policy,
                                    bool include_leader) {
  check_cover(g, part_a, "partition A");
  check_cover(g, part_b, "partition B");
  return {partition_report(part_a, policy, include_leader),
          partition_report(part_b, policy, include_leader)};
}

std::vector<Community> random_equal_partition(const NetworkGraph& g,
                                              std::size_t parts,
                                              std::uint64_t seed) {
  if (parts == 0 || parts > g.node_count()) {
    throw ArgumentError("partition count must be in [1, n]");
  }
  std::vector<NodeId> shuffled = g.nodes();
  Rng rng(derive_stream(seed, "partition"));
  rng.shuffle(shuffled);

  std::vector<std::vector<NodeId>> sets(parts);
  const std::size_t base = shuffled.size() / parts;
  const std::size_t extra = shuffled.size() % parts;
  std::size_t at = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    const std::size_t take = base + (i < extra ? 1 : 0);
    sets[i].assign(shuffled.begin() + at, shuffled.begin() + at + take);
    at += take;
  }
  return communities_from_sets(g, sets);
}

}  // namespace cnplace
