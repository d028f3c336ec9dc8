#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cnplace/errors.hpp"

namespace cnplace {

/// Dense node identifier, assigned in document order at parse time.
/// Stable across subgraph operations: an induced subgraph keeps the
/// ids of the parent graph.
using NodeId = std::uint32_t;

/// A community label. Labels start out equal to node ids and propagation
/// never invents new values, so the two share a representation.
using Label = std::uint32_t;

inline constexpr std::uint32_t kNoPos = std::numeric_limits<std::uint32_t>::max();

/// Computational class: 1.0 for servers, 0.5 for multi-device non-servers,
/// 0.1 for single-device non-servers.
double comp_class_for(bool is_server, int device_count);

struct NodeAttributes {
  std::optional<double> availability;  // fraction in [0,1]
  std::optional<double> latency_ms;    // >= 0
  double comp_class = 0.1;             // one of {1.0, 0.5, 0.1}
  int device_count = 1;                // >= 1
  bool is_server = false;
};

struct EdgeAttributes {
  std::optional<double> bandwidth_mbps;  // > 0 when present
  std::optional<double> rtt_ms;          // > 0 when present
  bool synthetic = false;                // true when values were simulated
};

struct Edge {
  NodeId a;  // a < b
  NodeId b;
};

/// Undirected attributed graph. Immutable after construction; cheap to
/// copy subgraphs because node records are shared. No self-loops, no
/// parallel edges, adjacency kept symmetric by construction.
class NetworkGraph {
 public:
  class Builder;

  NetworkGraph() = default;

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  bool empty() const { return nodes_.empty(); }

  /// Present node ids, ascending.
  const std::vector<NodeId>& nodes() const { return nodes_; }
  bool has_node(NodeId v) const {
    return v < pos_.size() && pos_[v] != kNoPos;
  }

  std::span<const NodeId> neighbors(NodeId v) const;
  std::size_t degree(NodeId v) const { return neighbors(v).size(); }

  const NodeAttributes& attributes(NodeId v) const;
  const std::string& external_id(NodeId v) const;
  /// Looks up a node by its external (document) id. Nodes dropped at parse
  /// time (non-working) are not found.
  std::optional<NodeId> find_external(std::string_view ext) const;

  bool has_edge(NodeId a, NodeId b) const;
  /// nullptr when the edge is absent.
  const EdgeAttributes* edge_attributes(NodeId a, NodeId b) const;

  /// All edges in canonical (a < b) order, sorted. Materialized on demand.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `members` (all of which must be present).
  NetworkGraph induced(std::span<const NodeId> members) const;

  /// Copy with the edge-attribute table replaced. Keys must refer to
  /// existing edges.
  NetworkGraph with_edge_attributes(
      std::unordered_map<std::uint64_t, EdgeAttributes> replacement) const;

  /// Copy with per-node attributes replaced (indexed by NodeId over the
  /// whole universe that was built at parse time).
  NetworkGraph with_node_attributes(std::vector<NodeAttributes> attrs) const;

  /// Number of node records created at build time; subgraphs share the
  /// parent's universe, so this can exceed node_count().
  std::size_t universe_size() const { return reg_ ? reg_->attrs.size() : 0; }

  static std::uint64_t edge_key(NodeId a, NodeId b) {
    NodeId lo = a < b ? a : b;
    NodeId hi = a < b ? b : a;
    return (static_cast<std::uint64_t>(lo) << 32) | hi;
  }

  const std::unordered_map<std::uint64_t, EdgeAttributes>& edge_attribute_map()
      const {
    return eattrs_;
  }

 private:
  struct Registry {
    std::vector<std::string> external_ids;
    std::vector<NodeAttributes> attrs;
    std::unordered_map<std::string, NodeId> by_external;
  };

  std::uint32_t pos_of(NodeId v) const;

  std::shared_ptr<const Registry> reg_;
  std::vector<NodeId> nodes_;              // ascending
  std::vector<std::uint32_t> pos_;         // NodeId -> index into adj_, or kNoPos
  std::vector<std::vector<NodeId>> adj_;   // per present node, sorted
  std::unordered_map<std::uint64_t, EdgeAttributes> eattrs_;
  std::size_t edge_count_ = 0;
};

/// Single-use builder. Collapses parallel links (max bandwidth, min RTT)
/// and drops self-loops so every built graph satisfies the invariants.
class NetworkGraph::Builder {
 public:
  /// Registers a node; ids are handed out densely in call order.
  /// comp_class is derived from is_server/device_count, not taken from
  /// the argument.
  NodeId add_node(std::string external_id, NodeAttributes attrs = {});

  void add_edge(NodeId a, NodeId b, EdgeAttributes attrs = {});

  std::size_t node_count() const { return reg_.external_ids.size(); }

  NetworkGraph build();

 private:
  NetworkGraph::Registry reg_;
  std::vector<std::vector<NodeId>> adj_;
  std::unordered_map<std::uint64_t, EdgeAttributes> eattrs_;
};

}  // namespace cnplace
