#pragma once

#include <beslab/claims.hpp>
#include <beslab/hypergraph.hpp>
#include <beslab/rational.hpp>
#include <beslab/structure.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace beslab
{
    // Two r-edges sharing exactly the pair {0,1}.
    auto diamond(int r) -> Hypergraph;

    // t diamonds {x_i y_i a, x_i y_i b} sharing the pair ab = {0,1}; x_i = 2+2i, y_i = 3+2i.
    auto diamond_star(int t) -> Hypergraph;

    // The 3-graph on 63 vertices with 61 edges: a central edge, six diamonds on its pairs, and
    // two diamonds on each of the twelve pairs joining a central vertex to the level-1 diamond
    // pair opposite it.
    auto f63() -> Hypergraph;

    auto single_edge(int r) -> Hypergraph;

    struct RatioResult
    {
        Rational ratio;
        PairSet pairs;
    };

    // |F| / (2 |P_{<=floor(k/2)}(F)|). Throws NotFree if F is not G^(r)_k-free.
    auto lower_bound_ratio(const Hypergraph & f, int k) -> RatioResult;

    // Same quantity with no freeness check; 0 for an empty F.
    auto ratio_of(const Hypergraph & f, int t) -> RatioResult;

    // Edge subsets with e edges and defect exactly d (arity*e - |V| = d).
    auto enumerate_S(const Hypergraph & k, int e, int d) -> std::vector<EdgeSet>;

    struct ConflictFamily
    {
        int e1, d1, e2, d2;
        // Only extensions without an edge disjoint from the other edges count.
        bool no_isolated = false;

        auto name() const -> std::string;

        static auto all() -> std::vector<ConflictFamily>;
    };

    // Bipartite graph H between the edges of two packings.
    struct PackingPair
    {
        Hypergraph k1, k2;
        std::vector<std::pair<EdgeIndex, EdgeIndex>> h_edges;
    };

    // H-matchings (as ascending H-edge index sets) pairing an S_{e2,d2} subgraph of one side
    // fully into e2 edges of the other side that extend to an S_{e1,d1} subgraph there.
    auto enumerate_conflicts(const PackingPair & h, const ConflictFamily & family) -> std::vector<EdgeSet>;

    // Reduces g by repeatedly deleting a lone edge (sharing at most one vertex with the rest) or
    // a diamond sharing at most two vertices with the rest, where two shared vertices must form
    // the pair the diamond 1̄2-claims. Returns the deleted pieces in build order, or nullopt if
    // the reduction gets stuck.
    auto lone_edge_diamond_sequence(const Hypergraph & g) -> std::optional<std::vector<EdgeSet>>;

    // 1/2 - lim f^(4)(n; p, p/2-1)/n^2 for p in {12, 14, 16}.
    auto gr_limit(int p) -> Rational;

    // (p, 1 - lim f^(3)(n; p, p-2)/n^2) for p = 7, 8, 9.
    auto gr_linear_bounds() -> std::vector<std::pair<int, Rational>>;

    struct FreenessFact
    {
        ConfigQuery query;
        bool free = true;
        std::optional<EdgeSet> witness;
    };

    struct ConstructionReport
    {
        Hypergraph graph;
        int k = 0;
        std::vector<FreenessFact> freeness;
        std::size_t shadow_size = 0;
        std::size_t p_le_3_size = 0;
        std::size_t p_le_half_k_size = 0;
        Rational ratio;

        auto all_free() const -> bool;
    };

    // Freeness facts for the family G^(r)_k plus the sizes and ratio.
    auto describe_construction(const Hypergraph & f, int k) -> ConstructionReport;

    auto freeness_facts(const Hypergraph & f, const std::vector<ConfigQuery> & queries) -> std::vector<FreenessFact>;
}
