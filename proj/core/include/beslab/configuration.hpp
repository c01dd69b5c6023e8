#pragma once

#include <beslab/hypergraph.hpp>

#include <functional>
#include <optional>
#include <span>

namespace beslab
{
    // k' edges spanning at most s' vertices.
    struct ConfigQuery
    {
        int edge_count = 1;
        int max_vertices = 0;
    };

    // Receives the chosen edge indices (ascending) and the number of vertices spanned together
    // with the base. Return true to stop the search.
    using ConfigVisitor = std::function<bool (std::span<const EdgeIndex>, int)>;

    // Visits every set of `count` distinct edges, drawn from `pool` (ascending indices; all edges
    // when null), whose union with `base` has at most `max_vertices` vertices. Sets are visited in
    // lexicographic order of their index sequences. Returns true iff the visitor stopped the search.
    auto for_each_configuration(const Hypergraph & g, int count, int max_vertices, const ConfigVisitor & visit,
        std::span<const Vertex> base = {}, const EdgeSet * pool = nullptr) -> bool;

    // The lexicographically smallest witness, if any. May split top-level branches over
    // worker_limit() threads; the answer does not depend on the thread count.
    auto find_configuration(const Hypergraph & g, ConfigQuery q) -> std::optional<EdgeSet>;

    // Witness through a base vertex set, e.g. a pair for claim sets.
    auto find_configuration_with_base(const Hypergraph & g, int count, int max_vertices,
        std::span<const Vertex> base, const EdgeSet * pool = nullptr) -> std::optional<EdgeSet>;
}
