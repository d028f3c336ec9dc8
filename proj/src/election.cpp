#include "cnplace/election.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "cnplace/preprocess.hpp"
#include "cnplace/rng.hpp"

namespace cnplace {

const std::array<const char*, kNumHeuristics> kHeuristicNames = {
    "a1", "a2", "b1", "b2", "b3"};

int heuristic_index(std::string_view name) {
  for (int i = 0; i < kNumHeuristics; ++i) {
    if (name == kHeuristicNames[i]) return i + 1;
  }
  throw ArgumentError("unknown heuristic '" + std::string(name) + "'");
}

void WeightConfig::validate() const {
  double total = 0.0;
  for (double x : w) {
    if (!(x >= 0.0)) {
      throw ArgumentError("weights must be non-negative");
    }
    total += x;
  }
  if (total <= 0.0) {
    throw ArgumentError("at least one weight must be positive");
  }
}

WeightConfig absolute_config(int h) {
  if (h < 1 || h > kNumHeuristics) {
    throw ArgumentError("heuristic index " + std::to_string(h) +
                        " out of range 1.." + std::to_string(kNumHeuristics));
  }
  WeightConfig cfg;
  cfg.w[h - 1] = 1.0;
  return cfg;
}

WeightConfig combined_config(int m1, int m2, double f) {
  if (m1 < 1 || m1 > kNumHeuristics || m2 < 1 || m2 > kNumHeuristics) {
    throw ArgumentError("heuristic index out of range 1.." +
                        std::to_string(kNumHeuristics));
  }
  if (m1 == m2) {
    throw ArgumentError("combined heuristics must differ");
  }
  if (!(f > 0.0 && f < 1.0)) {
    throw ArgumentError("fraction f must lie in (0,1)");
  }
  WeightConfig cfg;
  cfg.w[m1 - 1] = 1.0 - f;
  cfg.w[m2 - 1] = f;
  return cfg;
}

namespace {

std::vector<NodeId> election_scope(const Community& c) {
  if (c.members.empty()) {
    throw EmptyGraphError("community has no members");
  }
  auto comps = connected_components(c.subgraph);
  return comps.front();
}

double minmax(double x, double lo, double hi) {
  if (hi <= lo) return 0.5;  // constant heuristic stays neutral
  return (x - lo) / (hi - lo);
}

}  // namespace

std::unordered_map<NodeId, HeuristicVector> normalize_heuristics(
    const Community& c, const CentralityScores& cent) {
  const std::vector<NodeId> scope = election_scope(c);

  std::vector<std::array<double, kNumHeuristics>> raw(scope.size());
  std::vector<std::string> missing;
  for (std::size_t i = 0; i < scope.size(); ++i) {
    NodeId v = scope[i];
    auto bit = cent.betweenness.find(v);
    auto cit = cent.closeness.find(v);
    if (bit == cent.betweenness.end() || cit == cent.closeness.end()) {
      throw ConsistencyError("centrality scores missing node " +
                             std::to_string(v));
    }
    const NodeAttributes& a = c.subgraph.attributes(v);
    if (!a.availability) {
      missing.push_back(c.subgraph.external_id(v) + ".availability");
    }
    if (!a.latency_ms) {
      missing.push_back(c.subgraph.external_id(v) + ".latency_ms");
    }
    raw[i] = {bit->second, cit->second, a.availability.value_or(0.0),
              a.latency_ms.value_or(0.0), a.comp_class};
  }
  if (!missing.empty()) {
    std::ostringstream os;
    os << "missing attributes:";
    for (const auto& m : missing) os << ' ' << m;
    throw MissingDataError(os.str());
  }

  std::array<double, kNumHeuristics> lo{}, hi{};
  for (int k = 0; k < kNumHeuristics; ++k) {
    lo[k] = raw[0][k];
    hi[k] = raw[0][k];
    for (const auto& r : raw) {
      lo[k] = std::min(lo[k], r[k]);
      hi[k] = std::max(hi[k], r[k]);
    }
  }

  std::unordered_map<NodeId, HeuristicVector> out;
  out.reserve(scope.size());
  for (std::size_t i = 0; i < scope.size(); ++i) {
    HeuristicVector h;
    for (int k = 0; k < kNumHeuristics; ++k) {
      h[k] = minmax(raw[i][k], lo[k], hi[k]);
    }
    h[3] = 1.0 - h[3];  // lower latency is better
    out.emplace(scope[i], h);
  }
  return out;
}

Ranking elect(const Community& c, const CentralityScores& cent,
              const WeightConfig& w) {
  w.validate();
  auto components = normalize_heuristics(c, cent);

  Ranking r;
  r.ordered.reserve(components.size());
  for (const auto& [node, h] : components) {
    double s = 0.0;
    for (int k = 0; k < kNumHeuristics; ++k) s += w.w[k] * h[k];
    r.ordered.push_back({node, s, h});
  }
  std::sort(r.ordered.begin(), r.ordered.end(),
            [](const NodeScore& a, const NodeScore& b) {
              if (a.score != b.score) return a.score > b.score;
              return a.node < b.node;
            });
  r.leader = r.ordered.front().node;
  return r;
}

Ranking elect_random(const Community& c, std::uint64_t seed) {
  std::vector<NodeId> scope = election_scope(c);
  Rng rng(seed);
  NodeId leader = scope[rng.uniform_int(scope.size())];

  Ranking r;
  r.leader = leader;
  r.ordered.reserve(scope.size());
  r.ordered.push_back({leader, 1.0, {}});
  for (NodeId v : scope) {
    if (v != leader) r.ordered.push_back({v, 0.0, {}});
  }
  return r;
}

Ranking run_election(const Community& c, const CentralityScores& cent,
                     const ElectionPolicy& policy) {
  if (policy.mode == ElectionPolicy::Mode::Random) {
    return elect_random(c, mix64(derive_stream(policy.seed, "election") ^ c.label));
  }
  return elect(c, cent, policy.weights);
}

}  // namespace cnplace
