#include "cnplace/synthesis.hpp"

#include "cnplace/rng.hpp"

namespace cnplace {

namespace {

template <typename Quantile>
double draw_positive(Rng& rng, const Quantile& q) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    const double x = q(rng.uniform01());
    if (x > 0.0) return x;
  }
  return kPositiveFloor;
}

}  // namespace

NetworkGraph synthesize_attributes(const NetworkGraph& g,
                                   const Kappa4Params& bw,
                                   const GevParams& rtt, std::uint64_t seed) {
  bw.validate();
  rtt.validate();
  Rng bw_rng(derive_stream(seed, "bw"));
  Rng rtt_rng(derive_stream(seed, "rtt"));
  auto bw_quantile = [&](double u) { return kappa4_quantile(bw, u); };
  auto rtt_quantile = [&](double u) { return gev_quantile(rtt, u); };

  auto attrs = g.edge_attribute_map();
  for (const Edge& e : g.edges()) {  // canonical order fixes the draw order
    EdgeAttributes& a = attrs[NetworkGraph::edge_key(e.a, e.b)];
    if (!a.bandwidth_mbps) {
      a.bandwidth_mbps = draw_positive(bw_rng, bw_quantile);
      a.synthetic = true;
    }
    if (!a.rtt_ms) {
      a.rtt_ms = draw_positive(rtt_rng, rtt_quantile);
      a.synthetic = true;
    }
  }
  return g.with_edge_attributes(std::move(attrs));
}

NetworkGraph synthesize_node_attributes(const NetworkGraph& g,
                                        const GevParams& rtt,
                                        std::uint64_t seed) {
  rtt.validate();
  Rng avail_rng(derive_stream(seed, "avail"));
  Rng lat_rng(derive_stream(seed, "latency"));
  auto rtt_quantile = [&](double u) { return gev_quantile(rtt, u); };

  bool any = false;
  std::vector<NodeAttributes> attrs(g.universe_size());
  for (NodeId v = 0; v < attrs.size(); ++v) {
    if (g.has_node(v)) attrs[v] = g.attributes(v);
  }
  for (NodeId v : g.nodes()) {
    NodeAttributes& a = attrs[v];
    if (!a.availability) {
      a.availability = avail_rng.uniform(0.9, 1.0);
      any = true;
    }
    if (!a.latency_ms) {
      a.latency_ms = draw_positive(lat_rng, rtt_quantile);
      any = true;
    }
  }
  if (!any) return g;
  return g.with_node_attributes(std::move(attrs));
}

}  // namespace cnplace
