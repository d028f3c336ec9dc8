#pragma once

#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "cnplace/graph.hpp"

namespace cnplace {

struct LabelState {
  std::unordered_map<NodeId, Label> labels;
  int iteration = 0;   // supersteps executed
  bool changed = false;  // whether the last executed superstep changed a label
};

struct Community {
  Label label = 0;
  std::vector<NodeId> members;  // ascending
  NetworkGraph subgraph;        // induced on members
};

/// Synchronous label propagation. Every node starts with its own id as
/// label; in each superstep all nodes simultaneously adopt the most
/// frequent label among their neighbors' previous-superstep labels,
/// breaking frequency ties by the numerically highest label. A node's own
/// label does not participate in the count, and nodes without neighbors
/// keep theirs. Stops after a superstep with no change, or after
/// `max_iters` supersteps. Deterministic.
LabelState propagate_labels(const NetworkGraph& g, int max_iters = 10);

/// One community per distinct final label; output sorted by label.
/// Throws ConsistencyError when the label map does not cover the graph.
std::vector<Community> group_by_labels(const NetworkGraph& g,
                                       const LabelState& s);

/// Partition a node-set partition (e.g. a baseline zone file or a random
/// split) into Community values with labels 0..k-1.
std::vector<Community> communities_from_sets(
    const NetworkGraph& g, const std::vector<std::vector<NodeId>>& sets);

/// [{"label": int, "members": [external ids]}...], sorted by label.
nlohmann::ordered_json communities_to_json(const NetworkGraph& g,
                                           const std::vector<Community>& cs);

/// Inverse of communities_to_json against a given graph. Unknown external
/// ids are a ConsistencyError.
std::vector<Community> communities_from_json(const NetworkGraph& g,
                                             const nlohmann::json& doc);

}  // namespace cnplace
