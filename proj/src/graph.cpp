#include "cnplace/graph.hpp"

#include <algorithm>

namespace cnplace {

double comp_class_for(bool is_server, int device_count) {
  if (device_count < 1) {
    throw ArgumentError("device_count must be >= 1");
  }
  if (is_server) return 1.0;
  return device_count > 1 ? 0.5 : 0.1;
}

std::uint32_t NetworkGraph::pos_of(NodeId v) const {
  if (v >= pos_.size() || pos_[v] == kNoPos) {
    throw ArgumentError("node " + std::to_string(v) + " not in graph");
  }
  return pos_[v];
}

std::span<const NodeId> NetworkGraph::neighbors(NodeId v) const {
  return adj_[pos_of(v)];
}

const NodeAttributes& NetworkGraph::attributes(NodeId v) const {
  pos_of(v);
  return reg_->attrs[v];
}

const std::string& NetworkGraph::external_id(NodeId v) const {
  pos_of(v);
  return reg_->external_ids[v];
}

std::optional<NodeId> NetworkGraph::find_external(std::string_view ext) const {
  if (!reg_) return std::nullopt;
  auto it = reg_->by_external.find(std::string(ext));
  if (it == reg_->by_external.end() || !has_node(it->second)) {
    return std::nullopt;
  }
  return it->second;
}

bool NetworkGraph::has_edge(NodeId a, NodeId b) const {
  if (!has_node(a) || !has_node(b)) return false;
  const auto& nb = adj_[pos_[a]];
  return std::binary_search(nb.begin(), nb.end(), b);
}

const EdgeAttributes* NetworkGraph::edge_attributes(NodeId a, NodeId b) const {
  auto it = eattrs_.find(edge_key(a, b));
  return it == eattrs_.end() ? nullptr : &it->second;
}

std::vector<Edge> NetworkGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (NodeId v : nodes_) {
    for (NodeId w : adj_[pos_[v]]) {
      if (v < w) out.push_back({v, w});
    }
  }
  return out;
}

NetworkGraph NetworkGraph::induced(std::span<const NodeId> members) const {
  NetworkGraph sub;
  sub.reg_ = reg_;
  sub.nodes_.assign(members.begin(), members.end());
  std::sort(sub.nodes_.begin(), sub.nodes_.end());
  sub.nodes_.erase(std::unique(sub.nodes_.begin(), sub.nodes_.end()),
                   sub.nodes_.end());
  sub.pos_.assign(pos_.size(), kNoPos);
  for (std::size_t i = 0; i < sub.nodes_.size(); ++i) {
    if (!has_node(sub.nodes_[i])) {
      throw ConsistencyError("induced: node " + std::to_string(sub.nodes_[i]) +
                             " not in parent graph");
    }
    sub.pos_[sub.nodes_[i]] = static_cast<std::uint32_t>(i);
  }
  sub.adj_.resize(sub.nodes_.size());
  for (std::size_t i = 0; i < sub.nodes_.size(); ++i) {
    NodeId v = sub.nodes_[i];
    for (NodeId w : adj_[pos_[v]]) {
      if (sub.pos_[w] != kNoPos) {
        sub.adj_[i].push_back(w);
        if (v < w) {
          ++sub.edge_count_;
          auto it = eattrs_.find(edge_key(v, w));
          if (it != eattrs_.end()) sub.eattrs_.insert(*it);
        }
      }
    }
  }
  return sub;
}

NetworkGraph NetworkGraph::with_edge_attributes(
    std::unordered_map<std::uint64_t, EdgeAttributes> replacement) const {
  NetworkGraph g = *this;
  for (const auto& [key, _] : replacement) {
    NodeId a = static_cast<NodeId>(key >> 32);
    NodeId b = static_cast<NodeId>(key & 0xffffffffu);
    if (!has_edge(a, b)) {
      throw ConsistencyError("edge attribute for non-existent edge");
    }
  }
  g.eattrs_ = std::move(replacement);
  return g;
}

NetworkGraph NetworkGraph::with_node_attributes(
    std::vector<NodeAttributes> attrs) const {
  if (!reg_ || attrs.size() != reg_->attrs.size()) {
    throw ArgumentError("attribute vector does not match node universe");
  }
  auto reg = std::make_shared<Registry>(*reg_);
  reg->attrs = std::move(attrs);
  NetworkGraph g = *this;
  g.reg_ = std::move(reg);
  return g;
}

NodeId NetworkGraph::Builder::add_node(std::string external_id,
                                       NodeAttributes attrs) {
  if (reg_.by_external.contains(external_id)) {
    throw SchemaError("duplicate node id '" + external_id + "'");
  }
  attrs.comp_class = comp_class_for(attrs.is_server, attrs.device_count);
  if (attrs.availability && (*attrs.availability < 0.0 || *attrs.availability > 1.0)) {
    throw SchemaError("availability out of [0,1] for node '" + external_id + "'");
  }
  if (attrs.latency_ms && *attrs.latency_ms < 0.0) {
    throw SchemaError("negative latency for node '" + external_id + "'");
  }
  NodeId id = static_cast<NodeId>(reg_.external_ids.size());
  reg_.by_external.emplace(external_id, id);
  reg_.external_ids.push_back(std::move(external_id));
  reg_.attrs.push_back(attrs);
  adj_.emplace_back();
  return id;
}

void NetworkGraph::Builder::add_edge(NodeId a, NodeId b, EdgeAttributes attrs) {
  if (a >= adj_.size() || b >= adj_.size()) {
    throw ArgumentError("edge endpoint out of range");
  }
  if (a == b) return;  // self-loops are dropped
  if (attrs.bandwidth_mbps && *attrs.bandwidth_mbps <= 0.0) {
    throw SchemaError("bandwidth must be positive");
  }
  if (attrs.rtt_ms && *attrs.rtt_ms <= 0.0) {
    throw SchemaError("rtt must be positive");
  }
  const std::uint64_t key = NetworkGraph::edge_key(a, b);
  auto it = eattrs_.find(key);
  if (it == eattrs_.end()) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
    eattrs_.emplace(key, attrs);
    return;
  }
  // Parallel links collapse to one edge: keep max bandwidth, min RTT.
  EdgeAttributes& cur = it->second;
  if (attrs.bandwidth_mbps) {
    cur.bandwidth_mbps = cur.bandwidth_mbps
                             ? std::max(*cur.bandwidth_mbps, *attrs.bandwidth_mbps)
                             : attrs.bandwidth_mbps;
  }
  if (attrs.rtt_ms) {
    cur.rtt_ms = cur.rtt_ms ? std::min(*cur.rtt_ms, *attrs.rtt_ms) : attrs.rtt_ms;
  }
  cur.synthetic = cur.synthetic || attrs.synthetic;
}

NetworkGraph NetworkGraph::Builder::build() {
  NetworkGraph g;
  const std::size_t n = reg_.external_ids.size();
  g.reg_ = std::make_shared<Registry>(std::move(reg_));
  g.nodes_.resize(n);
  g.pos_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.nodes_[i] = static_cast<NodeId>(i);
    g.pos_[i] = static_cast<std::uint32_t>(i);
  }
  g.adj_ = std::move(adj_);
  std::size_t m = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    m += nb.size();
  }
  g.edge_count_ = m / 2;
  g.eattrs_ = std::move(eattrs_);
  return g;
}

}  // namespace cnplace
