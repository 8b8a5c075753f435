#include "resolvekit/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <thread>

#include "resolvekit/errors.hpp"

namespace resolvekit {

Graph Graph::from_edge_list(int n, std::span<const std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return from_edge_list(n, edges);
}

Graph Graph::from_edge_list(int n, std::span<const Edge> input) {
  if (n < 0) throw GraphError("negative vertex count");
  Graph g;
  g.n_ = n;
  g.edges_.reserve(input.size());
  for (const auto& e : input) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") has an endpoint outside 0.." + std::to_string(n - 1));
    }
    if (e.u == e.v) throw GraphError("self-loop at vertex " + std::to_string(e.u));
    g.edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  g.adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const auto& e : g.edges_) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nbrs = adjacency_.at(u);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::queue<Vertex> frontier;
  dist.at(source) = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int DistanceMatrix::diameter() const noexcept {
  return d_.empty() ? 0 : *std::max_element(d_.begin(), d_.end());
}

DistanceMatrix all_pairs_distances(const Graph& g, unsigned threads) {
  if (!is_connected(g)) throw ContractViolation("distances requested for a disconnected graph");
  const int n = g.order();
  DistanceMatrix dm;
  dm.n_ = n;
  dm.d_.resize(static_cast<std::size_t>(n) * n);

  auto fill_rows = [&](int first, int stride) {
    for (int s = first; s < n; s += stride) {
      const auto dist = bfs_distances(g, s);
      std::copy(dist.begin(), dist.end(), dm.d_.begin() + static_cast<std::ptrdiff_t>(s) * n);
    }
  };

  const int workers = std::clamp(static_cast<int>(threads), 1, std::max(1, n));
  if (workers == 1 || n < 64) {
    fill_rows(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(fill_rows, w, workers);
    for (auto& t : pool) t.join();
  }
  return dm;
}

int distance_to_set(const DistanceMatrix& dm, Vertex v, std::span<const Vertex> set) {
  if (set.empty()) throw ContractViolation("distance to an empty vertex set is undefined");
  int best = dm(v, set.front());
  for (Vertex x : set.subspan(1)) best = std::min(best, dm(v, x));
  return best;
}

ProductGraph cartesian_product(const Graph& g1, const Graph& g2) {
  const ProductVertexCodec codec(g1.order(), g2.order());
  std::vector<Edge> edges;
  edges.reserve(g1.size() * g2.order() + g2.size() * g1.order());
  for (Vertex a = 0; a < g1.order(); ++a) {
    for (const auto& e : g2.edges()) edges.push_back({codec.encode(a, e.u), codec.encode(a, e.v)});
  }
  for (Vertex b = 0; b < g2.order(); ++b) {
    for (const auto& e : g1.edges()) edges.push_back({codec.encode(e.u, b), codec.encode(e.v, b)});
  }
  return {Graph::from_edge_list(codec.order(), edges), codec};
}

int product_set_distance(const DistanceMatrix& d1, const DistanceMatrix& d2, Vertex a, Vertex b,
                         std::span<const Vertex> s1, std::span<const Vertex> s2) {
  if (s1.empty() || s2.empty()) throw ContractViolation("product set has an empty factor");
  return distance_to_set(d1, a, s1) + distance_to_set(d2, b, s2);
}

}  // namespace resolvekit
