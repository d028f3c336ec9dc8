#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cnplace/preprocess.hpp"
#include "cnplace/snapshot.hpp"
#include "testutil.hpp"

using namespace cnplace;
using testutil::make_graph;
using testutil::make_gnp;

namespace {

const char* kTwoNodesOneLink = R"({
  "nodes": [
    {"id": "a", "working": true, "is_server": false, "device_count": 1},
    {"id": "b", "working": true, "is_server": true, "device_count": 3}
  ],
  "links": [
    {"a": "a", "b": "b", "working": true, "bandwidth_mbps": 10.0, "rtt_ms": 2.5}
  ]
})";

}  // namespace

TEST_CASE("parse: minimal well-formed snapshot") {
  NetworkGraph g = parse_snapshot(kTwoNodesOneLink, SnapshotFormat::Json);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.external_id(0) == "a");
  CHECK(g.attributes(1).is_server);
  CHECK(g.attributes(1).comp_class == 1.0);
  CHECK(g.attributes(0).comp_class == 0.1);
  const EdgeAttributes* ea = g.edge_attributes(0, 1);
  REQUIRE(ea != nullptr);
  CHECK(*ea->bandwidth_mbps == 10.0);
  CHECK(*ea->rtt_ms == 2.5);
  CHECK_FALSE(ea->synthetic);
}

TEST_CASE("parse: non-working node drops its links and itself") {
  const char* doc = R"({
    "nodes": [
      {"id": "A", "working": true, "is_server": false, "device_count": 1},
      {"id": "B", "working": true, "is_server": false, "device_count": 1},
      {"id": "C", "working": false, "is_server": false, "device_count": 1}
    ],
    "links": [
      {"a": "A", "b": "B", "working": true},
      {"a": "B", "b": "C", "working": true}
    ]
  })";
  NetworkGraph g = parse_snapshot(doc, SnapshotFormat::Json);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 1);
  CHECK(g.find_external("A").has_value());
  CHECK(g.find_external("B").has_value());
  CHECK_FALSE(g.find_external("C").has_value());
}

TEST_CASE("parse: non-working link is dropped") {
  const char* doc = R"({
    "nodes": [
      {"id": "A", "working": true, "is_server": false, "device_count": 1},
      {"id": "B", "working": true, "is_server": false, "device_count": 1}
    ],
    "links": [{"a": "A", "b": "B", "working": false}]
  })";
  NetworkGraph g = parse_snapshot(doc, SnapshotFormat::Json);
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("parse: empty node list gives an empty graph") {
  NetworkGraph g = parse_snapshot(R"({"nodes": [], "links": []})",
                                  SnapshotFormat::Json);
  CHECK(g.node_count() == 0);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("parse: malformed document") {
  CHECK_THROWS_AS(parse_snapshot("{not json", SnapshotFormat::Json), ParseError);
}

TEST_CASE("parse: duplicate node id") {
  const char* doc = R"({
    "nodes": [
      {"id": "A", "working": true, "is_server": false, "device_count": 1},
      {"id": "A", "working": true, "is_server": false, "device_count": 1}
    ],
    "links": []
  })";
  CHECK_THROWS_AS(parse_snapshot(doc, SnapshotFormat::Json), SchemaError);
}

TEST_CASE("parse: link to unknown node") {
  const char* doc = R"({
    "nodes": [{"id": "A", "working": true, "is_server": false, "device_count": 1}],
    "links": [{"a": "A", "b": "Z", "working": true}]
  })";
  CHECK_THROWS_AS(parse_snapshot(doc, SnapshotFormat::Json), SchemaError);
}

TEST_CASE("parse: availability percent is normalized, latency kept") {
  const char* doc = R"({
    "nodes": [{"id": "A", "working": true, "is_server": false,
               "device_count": 2, "availability_pct": 87.5, "latency_ms": 12.0}],
    "links": []
  })";
  NetworkGraph g = parse_snapshot(doc, SnapshotFormat::Json);
  CHECK(g.attributes(0).availability == doctest::Approx(0.875));
  CHECK(g.attributes(0).latency_ms == doctest::Approx(12.0));
  CHECK(g.attributes(0).comp_class == 0.5);  // multi-device non-server
}

TEST_CASE("parse: self-loops dropped, parallel links collapse") {
  const char* doc = R"({
    "nodes": [
      {"id": "A", "working": true, "is_server": false, "device_count": 1},
      {"id": "B", "working": true, "is_server": false, "device_count": 1}
    ],
    "links": [
      {"a": "A", "b": "A", "working": true},
      {"a": "A", "b": "B", "working": true, "bandwidth_mbps": 5.0, "rtt_ms": 9.0},
      {"a": "B", "b": "A", "working": true, "bandwidth_mbps": 8.0, "rtt_ms": 11.0}
    ]
  })";
  NetworkGraph g = parse_snapshot(doc, SnapshotFormat::Json);
  CHECK(g.edge_count() == 1);
  CHECK_FALSE(g.has_edge(0, 0));
  const EdgeAttributes* ea = g.edge_attributes(0, 1);
  REQUIRE(ea != nullptr);
  CHECK(*ea->bandwidth_mbps == 8.0);  // max of the parallel links
  CHECK(*ea->rtt_ms == 9.0);          // min
}

TEST_CASE("parse: csv edge list") {
  const char* doc =
      "# comment\n"
      "a,b,10.0,2.0\n"
      "b,c\n"
      "\n"
      "c,a,3.5\n";
  NetworkGraph g = parse_snapshot(doc, SnapshotFormat::Csv);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  auto a = g.find_external("a");
  auto b = g.find_external("b");
  REQUIRE(a);
  REQUIRE(b);
  const EdgeAttributes* ea = g.edge_attributes(*a, *b);
  REQUIRE(ea != nullptr);
  CHECK(*ea->bandwidth_mbps == 10.0);
  CHECK(*ea->rtt_ms == 2.0);
  CHECK_THROWS_AS(parse_snapshot("a,b,-3\n", SnapshotFormat::Csv), SchemaError);
  CHECK_THROWS_AS(parse_snapshot("a\n", SnapshotFormat::Csv), ParseError);
}

TEST_CASE("parse output always satisfies the graph invariants") {
  // Adjacency symmetric, no self-loops, attributes for every node.
  NetworkGraph g = parse_snapshot(kTwoNodesOneLink, SnapshotFormat::Json);
  for (NodeId v : g.nodes()) {
    for (NodeId w : g.neighbors(v)) {
      CHECK(w != v);
      auto back = g.neighbors(w);
      CHECK(std::find(back.begin(), back.end(), v) != back.end());
    }
  }
}

TEST_CASE("prune_leaves: path collapses to the middle node") {
  NetworkGraph g = make_graph(3, {{0, 1}, {1, 2}});
  NetworkGraph p = prune_leaves(g);
  CHECK(p.node_count() == 1);
  CHECK(p.edge_count() == 0);
  CHECK(p.has_node(1));
}

TEST_CASE("prune_leaves: triangle unchanged") {
  NetworkGraph g = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  NetworkGraph p = prune_leaves(g);
  CHECK(p.node_count() == 3);
  CHECK(p.edge_count() == 3);
}

TEST_CASE("prune_leaves: star keeps only the center") {
  NetworkGraph g = make_graph(4, {{0, 1}, {0, 2}, {0, 3}});
  NetworkGraph p = prune_leaves(g);
  CHECK(p.node_count() == 1);
  CHECK(p.has_node(0));
}

TEST_CASE("prune_leaves is single-pass, not iterated") {
  // Path of 5: one pass strips the endpoints only; the nodes that become
  // leaves stay. A second pass removes more, so prune(prune(g)) differs.
  NetworkGraph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  NetworkGraph once = prune_leaves(g);
  CHECK(once.node_count() == 3);
  NetworkGraph twice = prune_leaves(once);
  CHECK(twice.node_count() == 1);
}

TEST_CASE("connected_components examples") {
  NetworkGraph g = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<NodeId>{0, 1, 2});
  CHECK(comps[1] == std::vector<NodeId>{3, 4});

  CHECK(connected_components(NetworkGraph{}).empty());

  NetworkGraph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  auto pc = connected_components(path);
  REQUIRE(pc.size() == 1);
  CHECK(pc[0].size() == 4);
}

TEST_CASE("connected_components cover the node set and are disjoint") {
  for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
    NetworkGraph g = make_gnp(40, 0.05, seed);
    auto comps = connected_components(g);
    std::set<NodeId> all;
    std::size_t total = 0;
    for (const auto& comp : comps) {
      total += comp.size();
      all.insert(comp.begin(), comp.end());
    }
    CHECK(total == g.node_count());
    CHECK(all.size() == g.node_count());
  }
}

TEST_CASE("largest_component examples") {
  NetworkGraph g = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  NetworkGraph lc = largest_component(g);
  CHECK(lc.node_count() == 3);
  CHECK(lc.edge_count() == 3);

  NetworkGraph single = make_graph(1, {});
  CHECK(largest_component(single).node_count() == 1);

  CHECK_THROWS_AS(largest_component(NetworkGraph{}), EmptyGraphError);
}

TEST_CASE("largest_component tie goes to the smallest node id") {
  NetworkGraph g = make_graph(4, {{2, 3}, {0, 1}});
  NetworkGraph lc = largest_component(g);
  CHECK(lc.node_count() == 2);
  CHECK(lc.has_node(0));
  CHECK(lc.has_node(1));
}

TEST_CASE("induced subgraph keeps exactly the internal edges") {
  NetworkGraph g = make_gnp(30, 0.2, 99);
  std::vector<NodeId> keep;
  for (NodeId v = 0; v < 15; ++v) keep.push_back(v);
  NetworkGraph sub = g.induced(keep);
  std::size_t expect = 0;
  for (const Edge& e : g.edges()) {
    if (e.a < 15 && e.b < 15) {
      ++expect;
      CHECK(sub.has_edge(e.a, e.b));
    }
  }
  CHECK(sub.edge_count() == expect);
}

TEST_CASE("snapshot round-trips through its JSON form") {
  NetworkGraph g = parse_snapshot(kTwoNodesOneLink, SnapshotFormat::Json);
  auto doc = snapshot_to_json(g);
  NetworkGraph h = parse_snapshot(doc.dump(), SnapshotFormat::Json);
  CHECK(h.node_count() == g.node_count());
  CHECK(h.edge_count() == g.edge_count());
  CHECK(snapshot_to_json(h) == doc);
}
