#include "cnplace/centrality.hpp"

#include <cstdint>
#include <deque>
#include <vector>

namespace cnplace {

namespace {

// Local dense indexing for the BFS working arrays.
struct DenseIndex {
  explicit DenseIndex(const NetworkGraph& g) : nodes(g.nodes()) {
    if (!nodes.empty()) {
      of.assign(nodes.back() + 1, kNoPos);
      for (std::uint32_t i = 0; i < nodes.size(); ++i) of[nodes[i]] = i;
    }
  }
  const std::vector<NodeId>& nodes;
  std::vector<std::uint32_t> of;
};

}  // namespace

std::unordered_map<NodeId, double> betweenness(const NetworkGraph& g) {
  DenseIndex idx(g);
  const std::size_t n = idx.nodes.size();
  std::vector<double> score(n, 0.0);

  std::vector<std::int64_t> dist(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<std::vector<std::uint32_t>> preds(n);
  std::vector<std::uint32_t> order;
  order.reserve(n);

  for (std::uint32_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();

    dist[s] = 0;
    sigma[s] = 1.0;
    std::deque<std::uint32_t> queue{s};
    while (!queue.empty()) {
      std::uint32_t v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (NodeId wn : g.neighbors(idx.nodes[v])) {
        std::uint32_t w = idx.of[wn];
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          preds[w].push_back(v);
        }
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      std::uint32_t w = *it;
      for (std::uint32_t v : preds[w]) {
        delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      if (w != s) score[w] += delta[w];
    }
  }

  std::unordered_map<NodeId, double> out;
  out.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    // Brandes counts ordered pairs; halve for the unordered convention.
    out.emplace(idx.nodes[i], score[i] / 2.0);
  }
  return out;
}

std::unordered_map<NodeId, double> closeness(const NetworkGraph& g) {
  DenseIndex idx(g);
  const std::size_t n = idx.nodes.size();
  std::unordered_map<NodeId, double> out;
  out.reserve(n);

  std::vector<std::int64_t> dist(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    std::deque<std::uint32_t> queue{s};
    std::int64_t total = 0;
    std::size_t reached = 0;
    while (!queue.empty()) {
      std::uint32_t v = queue.front();
      queue.pop_front();
      for (NodeId wn : g.neighbors(idx.nodes[v])) {
        std::uint32_t w = idx.of[wn];
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          total += dist[w];
          ++reached;
          queue.push_back(w);
        }
      }
    }
    double c = reached == 0 ? 0.0
                            : static_cast<double>(n - 1) / static_cast<double>(total);
    out.emplace(idx.nodes[s], c);
  }
  return out;
}

CentralityScores centrality_scores(const NetworkGraph& g) {
  return {betweenness(g), closeness(g)};
}

}  // namespace cnplace
