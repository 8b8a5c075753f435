#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "resolvekit/graph.hpp"

namespace resolvekit::testing {

// Random labelled spanning tree plus independent extra edges with
// probability `density`, then a random relabeling. Always connected.
Graph random_connected_graph(std::mt19937_64& rng, int n, double density);

// Vertex count uniform in [min_n, max_n], density uniform in [0, 0.6].
Graph random_connected_graph(std::mt19937_64& rng, int min_n, int max_n);

// Uniform random k-subset of 0..n-1, ascending.
std::vector<Vertex> random_subset(std::mt19937_64& rng, int n, int k);

// Deduplicate by canonical edge list (labelled, not up to isomorphism).
std::vector<Graph> unique_graphs(std::vector<Graph> graphs);

}  // namespace resolvekit::testing
