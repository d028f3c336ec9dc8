#pragma once

#include <cstdint>

#include "cnplace/distributions.hpp"
#include "cnplace/graph.hpp"

namespace cnplace {

/// Lowest value a truncated draw can be clamped to when resampling fails
/// to produce a positive value.
inline constexpr double kPositiveFloor = 1e-6;

/// Fills in missing edge attributes: bandwidth from the Kappa model, RTT
/// from the GEV model, drawn from two independent streams derived from
/// `seed` ("bw" and "rtt"). Draws are resampled until positive (at most
/// 100 tries, then clamped to kPositiveFloor). Measured values are left
/// untouched; edges that received any simulated value get the `synthetic`
/// flag. Deterministic for a given (graph, params, seed).
NetworkGraph synthesize_attributes(const NetworkGraph& g,
                                   const Kappa4Params& bw,
                                   const GevParams& rtt, std::uint64_t seed);

/// Fills in missing per-node heuristics ahead of an election: latency from
/// the RTT model (stream "latency", positive-truncated) and availability
/// from Uniform(0.9, 1.0) (stream "avail"). Present values are kept.
NetworkGraph synthesize_node_attributes(const NetworkGraph& g,
                                        const GevParams& rtt,
                                        std::uint64_t seed);

}  // namespace cnplace
