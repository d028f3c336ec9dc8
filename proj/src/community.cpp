#include "cnplace/community.hpp"

#include <algorithm>
#include <map>

namespace cnplace {

LabelState propagate_labels(const NetworkGraph& g, int max_iters) {
  if (max_iters < 1) {
    throw ArgumentError("max_iters must be >= 1");
  }
  const auto& nodes = g.nodes();
  std::unordered_map<NodeId, Label> current;
  current.reserve(nodes.size());
  for (NodeId v : nodes) current.emplace(v, v);

  LabelState state;
  std::unordered_map<NodeId, Label> next = current;
  std::unordered_map<Label, int> freq;
  for (int step = 1; step <= max_iters; ++step) {
    bool any_change = false;
    for (NodeId v : nodes) {
      auto nb = g.neighbors(v);
      if (nb.empty()) continue;  // no inbound messages, label kept
      freq.clear();
      for (NodeId w : nb) ++freq[current[w]];
      int best_count = 0;
      Label best_label = 0;
      for (const auto& [label, count] : freq) {
        if (count > best_count || (count == best_count && label > best_label)) {
          best_count = count;
          best_label = label;
        }
      }
      next[v] = best_label;
      if (best_label != current[v]) any_change = true;
    }
    current = next;
    state.iteration = step;
    state.changed = any_change;
    if (!any_change) break;
  }
  state.labels = std::move(current);
  return state;
}

std::vector<Community> group_by_labels(const NetworkGraph& g,
                                       const LabelState& s) {
  std::map<Label, std::vector<NodeId>> groups;
  for (NodeId v : g.nodes()) {
    auto it = s.labels.find(v);
    if (it == s.labels.end()) {
      throw ConsistencyError("label map missing node " + std::to_string(v));
    }
    groups[it->second].push_back(v);
  }
  std::vector<Community> out;
  out.reserve(groups.size());
  for (auto& [label, members] : groups) {
    std::sort(members.begin(), members.end());
    Community c;
    c.label = label;
    c.subgraph = g.induced(members);
    c.members = std::move(members);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Community> communities_from_sets(
    const NetworkGraph& g, const std::vector<std::vector<NodeId>>& sets) {
  std::vector<Community> out;
  out.reserve(sets.size());
  Label label = 0;
  for (const auto& set : sets) {
    Community c;
    c.label = label++;
    c.members = set;
    std::sort(c.members.begin(), c.members.end());
    c.subgraph = g.induced(c.members);
    out.push_back(std::move(c));
  }
  return out;
}

nlohmann::ordered_json communities_to_json(const NetworkGraph& g,
                                           const std::vector<Community>& cs) {
  auto sorted = cs;
  std::sort(sorted.begin(), sorted.end(),
            [](const Community& a, const Community& b) { return a.label < b.label; });
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const Community& c : sorted) {
    nlohmann::ordered_json entry;
    entry["label"] = c.label;
    auto& members = entry["members"] = nlohmann::ordered_json::array();
    for (NodeId v : c.members) members.push_back(g.external_id(v));
    arr.push_back(std::move(entry));
  }
  return arr;
}

std::vector<Community> communities_from_json(const NetworkGraph& g,
                                             const nlohmann::json& doc) {
  if (!doc.is_array()) {
    throw SchemaError("communities document must be an array");
  }
  std::vector<Community> out;
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("label") || !entry.contains("members")) {
      throw SchemaError("community entries need 'label' and 'members'");
    }
    Community c;
    c.label = entry["label"].get<Label>();
    for (const auto& m : entry["members"]) {
      auto id = g.find_external(m.get<std::string>());
      if (!id) {
        throw ConsistencyError("community member '" + m.get<std::string>() +
                               "' not in graph");
      }
      c.members.push_back(*id);
    }
    std::sort(c.members.begin(), c.members.end());
    c.subgraph = g.induced(c.members);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace cnplace
