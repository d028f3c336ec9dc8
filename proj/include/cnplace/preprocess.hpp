#pragma once

#include <vector>

#include "cnplace/graph.hpp"

namespace cnplace {

/// Removes every node whose degree in `g` is <= 1, in a single pass.
/// Degrees are evaluated against the input graph only, so nodes that become
/// leaves through the removal survive; a second call may remove more.
NetworkGraph prune_leaves(const NetworkGraph& g);

/// Maximal connected node sets, sorted by size descending, ties broken by
/// the smallest contained node id. Each set is sorted ascending.
std::vector<std::vector<NodeId>> connected_components(const NetworkGraph& g);

/// Induced subgraph on the largest connected component (ties: component
/// containing the smallest node id). Throws EmptyGraphError on an empty
/// graph.
NetworkGraph largest_component(const NetworkGraph& g);

}  // namespace cnplace
