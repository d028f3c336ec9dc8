#pragma once

#include <unordered_map>

#include "cnplace/graph.hpp"

namespace cnplace {

struct CentralityScores {
  std::unordered_map<NodeId, double> betweenness;  // alpha1
  std::unordered_map<NodeId, double> closeness;    // alpha2
};

/// Exact betweenness centrality over unweighted shortest paths (Brandes
/// accumulation). Each unordered pair {u,v} is counted once; no
/// normalization is applied. Pairs in different components contribute 0.
std::unordered_map<NodeId, double> betweenness(const NetworkGraph& g);

/// Closeness centrality (n-1) / sum of hop distances to reachable peers,
/// with n the size of the whole input graph. Unreachable pairs are left
/// out of the sum; a node with no reachable peer scores 0.
std::unordered_map<NodeId, double> closeness(const NetworkGraph& g);

CentralityScores centrality_scores(const NetworkGraph& g);

}  // namespace cnplace
