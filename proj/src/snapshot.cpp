#include "cnplace/snapshot.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace cnplace {

namespace {

using nlohmann::json;

std::string field_path(std::string_view array, std::size_t index,
                       std::string_view field) {
  std::ostringstream os;
  os << array << "[" << index << "]." << field;
  return os.str();
}

const json& require(const json& obj, std::string_view array, std::size_t index,
                    const char* field) {
  auto it = obj.find(field);
  if (it == obj.end()) {
    throw SchemaError("missing field " + field_path(array, index, field));
  }
  return *it;
}

double require_number(const json& obj, std::string_view array,
                      std::size_t index, const char* field) {
  const json& v = require(obj, array, index, field);
  if (!v.is_number()) {
    throw SchemaError("expected number at " + field_path(array, index, field));
  }
  return v.get<double>();
}

bool require_bool(const json& obj, std::string_view array, std::size_t index,
                  const char* field) {
  const json& v = require(obj, array, index, field);
  if (!v.is_boolean()) {
    throw SchemaError("expected bool at " + field_path(array, index, field));
  }
  return v.get<bool>();
}

std::string require_string(const json& obj, std::string_view array,
                           std::size_t index, const char* field) {
  const json& v = require(obj, array, index, field);
  if (!v.is_string()) {
    throw SchemaError("expected string at " + field_path(array, index, field));
  }
  return v.get<std::string>();
}

NetworkGraph parse_json_snapshot(std::string_view data) {
  json doc;
  try {
    doc = json::parse(data);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("snapshot: ") + e.what());
  }
  if (!doc.is_object()) {
    throw SchemaError("snapshot root must be an object");
  }
  auto nodes_it = doc.find("nodes");
  auto links_it = doc.find("links");
  if (nodes_it == doc.end() || !nodes_it->is_array()) {
    throw SchemaError("snapshot needs a 'nodes' array");
  }
  if (links_it == doc.end() || !links_it->is_array()) {
    throw SchemaError("snapshot needs a 'links' array");
  }

  NetworkGraph::Builder builder;
  // External id -> node, for working nodes only. Non-working ids are
  // remembered so links touching them can be silently dropped while links
  // to unknown ids stay schema errors.
  std::unordered_map<std::string, NodeId> working;
  std::unordered_map<std::string, bool> seen;

  std::size_t i = 0;
  for (const json& nd : *nodes_it) {
    if (!nd.is_object()) {
      throw SchemaError("nodes[" + std::to_string(i) + "] must be an object");
    }
    std::string id = require_string(nd, "nodes", i, "id");
    if (seen.contains(id)) {
      throw SchemaError("duplicate node id '" + id + "'");
    }
    bool is_working = require_bool(nd, "nodes", i, "working");
    seen.emplace(id, is_working);
    if (is_working) {
      NodeAttributes attrs;
      attrs.is_server = require_bool(nd, "nodes", i, "is_server");
      double dc = require_number(nd, "nodes", i, "device_count");
      if (dc < 1 || dc != static_cast<int>(dc)) {
        throw SchemaError("device_count must be an integer >= 1 at " +
                          field_path("nodes", i, "device_count"));
      }
      attrs.device_count = static_cast<int>(dc);
      if (auto it = nd.find("availability_pct"); it != nd.end() && !it->is_null()) {
        if (!it->is_number()) {
          throw SchemaError("expected number at " +
                            field_path("nodes", i, "availability_pct"));
        }
        double pct = it->get<double>();
        if (pct < 0.0 || pct > 100.0) {
          throw SchemaError("availability_pct out of [0,100] at nodes[" +
                            std::to_string(i) + "]");
        }
        attrs.availability = pct / 100.0;  // stored normalized
      }
      if (auto it = nd.find("latency_ms"); it != nd.end() && !it->is_null()) {
        if (!it->is_number()) {
          throw SchemaError("expected number at " +
                            field_path("nodes", i, "latency_ms"));
        }
        double lat = it->get<double>();
        if (lat < 0.0) {
          throw SchemaError("negative latency_ms at nodes[" + std::to_string(i) + "]");
        }
        attrs.latency_ms = lat;
      }
      NodeId nid = builder.add_node(id, attrs);
      working.emplace(std::move(id), nid);
    }
    ++i;
  }

  i = 0;
  for (const json& ln : *links_it) {
    if (!ln.is_object()) {
      throw SchemaError("links[" + std::to_string(i) + "] must be an object");
    }
    std::string a = require_string(ln, "links", i, "a");
    std::string b = require_string(ln, "links", i, "b");
    if (!seen.contains(a)) {
      throw SchemaError("links[" + std::to_string(i) + "] references unknown node '" + a + "'");
    }
    if (!seen.contains(b)) {
      throw SchemaError("links[" + std::to_string(i) + "] references unknown node '" + b + "'");
    }
    bool link_working = require_bool(ln, "links", i, "working");
    auto ita = working.find(a);
    auto itb = working.find(b);
    if (link_working && ita != working.end() && itb != working.end()) {
      EdgeAttributes attrs;
      if (auto it = ln.find("bandwidth_mbps"); it != ln.end() && !it->is_null()) {
        if (!it->is_number()) {
          throw SchemaError("expected number at " +
                            field_path("links", i, "bandwidth_mbps"));
        }
        attrs.bandwidth_mbps = it->get<double>();
      }
      if (auto it = ln.find("rtt_ms"); it != ln.end() && !it->is_null()) {
        if (!it->is_number()) {
          throw SchemaError("expected number at " + field_path("links", i, "rtt_ms"));
        }
        attrs.rtt_ms = it->get<double>();
      }
      if (auto it = ln.find("synthetic"); it != ln.end() && it->is_boolean()) {
        attrs.synthetic = it->get<bool>();
      }
      builder.add_edge(ita->second, itb->second, attrs);
    }
    ++i;
  }
  return builder.build();
}

std::vector<std::string> split_csv_row(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    std::string_view cell = comma == std::string_view::npos
                                ? line.substr(start)
                                : line.substr(start, comma - start);
    while (!cell.empty() && (cell.front() == ' ' || cell.front() == '\t')) cell.remove_prefix(1);
    while (!cell.empty() && (cell.back() == ' ' || cell.back() == '\t' || cell.back() == '\r')) cell.remove_suffix(1);
    out.emplace_back(cell);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_positive(const std::string& cell, std::size_t lineno,
                      const char* what) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || p != cell.data() + cell.size()) {
    throw ParseError("csv line " + std::to_string(lineno) + ": bad " + what +
                     " '" + cell + "'");
  }
  if (v <= 0.0) {
    throw SchemaError("csv line " + std::to_string(lineno) + ": " + what +
                      " must be positive");
  }
  return v;
}

NetworkGraph parse_csv_snapshot(std::string_view data) {
  NetworkGraph::Builder builder;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& ext) {
    auto it = ids.find(ext);
    if (it != ids.end()) return it->second;
    NodeId id = builder.add_node(ext);
    ids.emplace(ext, id);
    return id;
  };

  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= data.size()) {
    std::size_t nl = data.find('\n', start);
    std::string_view line = nl == std::string_view::npos
                                ? data.substr(start)
                                : data.substr(start, nl - start);
    start = nl == std::string_view::npos ? data.size() + 1 : nl + 1;
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (lineno == 1 && (line == "a,b" || line == "a,b,bandwidth_mbps,rtt_ms")) continue;
    auto cells = split_csv_row(line);
    if (cells.size() != 2 && cells.size() != 3 && cells.size() != 4) {
      throw ParseError("csv line " + std::to_string(lineno) +
                       ": expected 2-4 columns, got " + std::to_string(cells.size()));
    }
    if (cells[0].empty() || cells[1].empty()) {
      throw ParseError("csv line " + std::to_string(lineno) + ": empty endpoint id");
    }
    EdgeAttributes attrs;
    if (cells.size() >= 3 && !cells[2].empty()) {
      attrs.bandwidth_mbps = parse_positive(cells[2], lineno, "bandwidth");
    }
    if (cells.size() == 4 && !cells[3].empty()) {
      attrs.rtt_ms = parse_positive(cells[3], lineno, "rtt");
    }
    builder.add_edge(intern(cells[0]), intern(cells[1]), attrs);
  }
  return builder.build();
}

}  // namespace

SnapshotFormat snapshot_format_from_name(std::string_view name) {
  if (name == "json") return SnapshotFormat::Json;
  if (name == "csv") return SnapshotFormat::Csv;
  throw ArgumentError("unknown snapshot format '" + std::string(name) + "'");
}

NetworkGraph parse_snapshot(std::string_view data, SnapshotFormat format) {
  return format == SnapshotFormat::Json ? parse_json_snapshot(data)
                                        : parse_csv_snapshot(data);
}

NetworkGraph load_snapshot(const std::filesystem::path& path,
                           SnapshotFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open snapshot file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_snapshot(buf.str(), format);
}

nlohmann::ordered_json snapshot_to_json(const NetworkGraph& g) {
  nlohmann::ordered_json doc;
  auto& nodes = doc["nodes"] = nlohmann::ordered_json::array();
  for (NodeId v : g.nodes()) {
    const NodeAttributes& a = g.attributes(v);
    nlohmann::ordered_json nd;
    nd["id"] = g.external_id(v);
    nd["working"] = true;
    nd["is_server"] = a.is_server;
    nd["device_count"] = a.device_count;
    if (a.availability) nd["availability_pct"] = *a.availability * 100.0;
    if (a.latency_ms) nd["latency_ms"] = *a.latency_ms;
    nodes.push_back(std::move(nd));
  }
  auto& links = doc["links"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    const EdgeAttributes* attrs = g.edge_attributes(e.a, e.b);
    nlohmann::ordered_json ln;
    ln["a"] = g.external_id(e.a);
    ln["b"] = g.external_id(e.b);
    ln["working"] = true;
    if (attrs) {
      if (attrs->bandwidth_mbps) ln["bandwidth_mbps"] = *attrs->bandwidth_mbps;
      if (attrs->rtt_ms) ln["rtt_ms"] = *attrs->rtt_ms;
      if (attrs->synthetic) ln["synthetic"] = true;
    }
    links.push_back(std::move(ln));
  }
  return doc;
}

}  // namespace cnplace
