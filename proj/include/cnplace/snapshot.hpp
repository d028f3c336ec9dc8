#pragma once

#include <filesystem>
#include <string_view>

#include <json.hpp>

#include "cnplace/graph.hpp"

namespace cnplace {

enum class SnapshotFormat { Json, Csv };

SnapshotFormat snapshot_format_from_name(std::string_view name);

/// Builds a graph from a snapshot document. Only links whose both endpoint
/// nodes are marked working (and the link itself is working) survive;
/// non-working nodes are absent from the result entirely.
///
/// JSON schema: {"nodes": [{"id", "working", "is_server", "device_count",
/// "availability_pct"?, "latency_ms"?}], "links": [{"a", "b", "working",
/// "bandwidth_mbps"?, "rtt_ms"?, "synthetic"?}]}. Unknown top-level keys
/// are ignored so annotated snapshots round-trip.
///
/// CSV is a plain edge list: one "a,b[,bandwidth_mbps[,rtt_ms]]" row per
/// link, '#' comments and blank lines skipped, an optional literal header
/// row. Nodes are implied (working, non-server, single device) in
/// first-mention order.
NetworkGraph parse_snapshot(std::string_view data, SnapshotFormat format);

NetworkGraph load_snapshot(const std::filesystem::path& path,
                           SnapshotFormat format);

/// Serializes a graph back into the JSON snapshot schema. Node and link
/// ordering follows ascending node ids, so output is deterministic.
nlohmann::ordered_json snapshot_to_json(const NetworkGraph& g);

}  // namespace cnplace
