#include "cnplace/preprocess.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace cnplace {

NetworkGraph prune_leaves(const NetworkGraph& g) {
  std::vector<NodeId> keep;
  keep.reserve(g.node_count());
  for (NodeId v : g.nodes()) {
    if (g.degree(v) >= 2) keep.push_back(v);
  }
  return g.induced(keep);
}

std::vector<std::vector<NodeId>> connected_components(const NetworkGraph& g) {
  std::vector<std::vector<NodeId>> comps;
  std::unordered_set<NodeId> visited;
  visited.reserve(g.node_count());
  for (NodeId start : g.nodes()) {
    if (visited.contains(start)) continue;
    std::vector<NodeId> comp;
    std::deque<NodeId> queue{start};
    visited.insert(start);
    while (!queue.empty()) {
      NodeId v = queue.front();
      queue.pop_front();
      comp.push_back(v);
      for (NodeId w : g.neighbors(v)) {
        if (visited.insert(w).second) queue.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.front() < b.front();
  });
  return comps;
}

NetworkGraph largest_component(const NetworkGraph& g) {
  if (g.empty()) {
    throw EmptyGraphError("largest_component of empty graph");
  }
  auto comps = connected_components(g);
  return g.induced(comps.front());
}

}  // namespace cnplace
