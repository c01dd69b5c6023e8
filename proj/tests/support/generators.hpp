#pragma once

#include <beslab/hypergraph.hpp>

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace beslab::gen
{
    using Rng = std::mt19937_64;

    // m distinct uniformly random r-edges on n vertices (fewer if C(n,r) < m).
    auto random_hypergraph(Rng & rng, int r, int n, int m) -> Hypergraph;

    // Randomized edge addition with G^(r)_k-freeness rejection. With probability `pair_bias` a
    // candidate edge extends a pair already in the shadow, which produces trees and diamonds far
    // more often than uniform sampling.
    auto random_free_graph(Rng & rng, int r, int n, int k, int max_edges, double pair_bias = 0.7, int attempts = 400) -> Hypergraph;

    // Shuffles the vertex labels.
    auto relabel_randomly(Rng & rng, const Hypergraph & g) -> Hypergraph;

    // Every set partition of [0,m) into at most max_parts blocks, as block lists.
    auto set_partitions(int m, int max_parts) -> std::vector<std::vector<std::vector<int>>>;

    // Calls fn once for every vertex-connected edge set with at most max_size edges.
    void connected_subsets(const Hypergraph & g, std::size_t max_size, const std::function<void (const EdgeSet &)> & fn);
}
