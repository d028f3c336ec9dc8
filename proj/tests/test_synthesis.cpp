#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cnplace/synthesis.hpp"
#include "testutil.hpp"

using namespace cnplace;
using testutil::make_graph;

namespace {

const Kappa4Params kBw{10.0, 5.0, 0.3, 0.5};
const GevParams kRtt{20.0, 8.0, 0.1};

NetworkGraph chain(std::size_t n) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return make_graph(n, edges);
}

}  // namespace

TEST_CASE("fully measured graph comes back unchanged") {
  NetworkGraph::Builder b;
  NodeId a = b.add_node("a");
  NodeId c = b.add_node("b");
  EdgeAttributes ea;
  ea.bandwidth_mbps = 100.0;
  ea.rtt_ms = 3.0;
  b.add_edge(a, c, ea);
  NetworkGraph g = b.build();

  NetworkGraph out = synthesize_attributes(g, kBw, kRtt, 1);
  const EdgeAttributes* attrs = out.edge_attributes(a, c);
  REQUIRE(attrs != nullptr);
  CHECK(*attrs->bandwidth_mbps == 100.0);
  CHECK(*attrs->rtt_ms == 3.0);
  CHECK_FALSE(attrs->synthetic);
}

TEST_CASE("missing values are filled, flagged, positive, deterministic") {
  NetworkGraph g = chain(50);
  NetworkGraph a = synthesize_attributes(g, kBw, kRtt, 42);
  NetworkGraph b = synthesize_attributes(g, kBw, kRtt, 42);
  for (const Edge& e : a.edges()) {
    const EdgeAttributes* ea = a.edge_attributes(e.a, e.b);
    const EdgeAttributes* eb = b.edge_attributes(e.a, e.b);
    REQUIRE(ea != nullptr);
    REQUIRE(eb != nullptr);
    CHECK(ea->synthetic);
    CHECK(*ea->bandwidth_mbps > 0.0);
    CHECK(*ea->rtt_ms > 0.0);
    CHECK(*ea->bandwidth_mbps == *eb->bandwidth_mbps);
    CHECK(*ea->rtt_ms == *eb->rtt_ms);
  }

  NetworkGraph c = synthesize_attributes(g, kBw, kRtt, 43);
  bool any_diff = false;
  for (const Edge& e : a.edges()) {
    if (*a.edge_attributes(e.a, e.b)->bandwidth_mbps !=
        *c.edge_attributes(e.a, e.b)->bandwidth_mbps) {
      any_diff = true;
    }
  }
  CHECK(any_diff);
}

TEST_CASE("measured values survive synthesis of the rest") {
  NetworkGraph::Builder b;
  for (int i = 0; i < 3; ++i) b.add_node("n" + std::to_string(i));
  EdgeAttributes measured;
  measured.bandwidth_mbps = 55.0;
  b.add_edge(0, 1, measured);
  b.add_edge(1, 2);
  NetworkGraph g = b.build();

  NetworkGraph out = synthesize_attributes(g, kBw, kRtt, 7);
  const EdgeAttributes* e01 = out.edge_attributes(0, 1);
  CHECK(*e01->bandwidth_mbps == 55.0);  // untouched
  CHECK(e01->rtt_ms.has_value());       // filled
  CHECK(e01->synthetic);                // partially simulated
  const EdgeAttributes* e12 = out.edge_attributes(1, 2);
  CHECK(e12->bandwidth_mbps.has_value());
  CHECK(e12->synthetic);
}

TEST_CASE("bandwidth and RTT streams are independent") {
  NetworkGraph g = chain(10001);
  NetworkGraph out = synthesize_attributes(g, kBw, kRtt, 99);
  std::vector<double> bw, rtt;
  for (const Edge& e : out.edges()) {
    bw.push_back(*out.edge_attributes(e.a, e.b)->bandwidth_mbps);
    rtt.push_back(*out.edge_attributes(e.a, e.b)->rtt_ms);
  }
  CHECK(std::abs(testutil::pearson(bw, rtt)) < 0.03);
}

TEST_CASE("node attribute synthesis fills only the gaps") {
  NetworkGraph::Builder b;
  NodeAttributes full;
  full.availability = 0.77;
  full.latency_ms = 5.0;
  b.add_node("full", full);
  b.add_node("empty");
  b.add_edge(0, 1);
  NetworkGraph g = b.build();

  NetworkGraph out = synthesize_node_attributes(g, kRtt, 11);
  CHECK(*out.attributes(0).availability == 0.77);
  CHECK(*out.attributes(0).latency_ms == 5.0);
  REQUIRE(out.attributes(1).availability.has_value());
  CHECK(*out.attributes(1).availability >= 0.9);
  CHECK(*out.attributes(1).availability <= 1.0);
  REQUIRE(out.attributes(1).latency_ms.has_value());
  CHECK(*out.attributes(1).latency_ms > 0.0);

  NetworkGraph rerun = synthesize_node_attributes(g, kRtt, 11);
  CHECK(*rerun.attributes(1).availability == *out.attributes(1).availability);
  CHECK(*rerun.attributes(1).latency_ms == *out.attributes(1).latency_ms);
}
