#pragma once

#include <beslab/constructions.hpp>
#include <beslab/rational.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace beslab
{
    struct RandomParams
    {
        int r = 4;
        int m = 24;
        Rational alpha{3, 10};
        Rational mu{1, 8};
        int girth_cap = 8;
        std::uint64_t seed = 0;
        // Only decides which P_{<=floor(k/2)} the ratio uses.
        int k = 7;

        // Throws std::invalid_argument on r < 4, m < r, alpha or mu outside (0,1), girth_cap < 2.
        void validate() const;
    };

    // mt19937_64 keyed by (seed, stage name) so stages draw from independent streams.
    class StageRng
    {
    private:
        std::mt19937_64 _gen;

    public:
        StageRng(std::uint64_t seed, const std::string & stage);

        // Uniform in [0,1) from the top 53 bits of one draw.
        auto uniform() -> double;

        auto accept(double threshold) -> bool { return uniform() < threshold; }
    };

    struct CliquePacking
    {
        Hypergraph cliques;
        std::size_t covered_edges = 0;
        std::size_t graph_edges = 0;
    };

    // Greedy edge-disjoint a-clique packing of a 2-graph whose girth stays above girth_cap.
    // For a = 2 every edge is taken.
    auto greedy_clique_packing(const Hypergraph & graph, int arity, int girth_cap) -> CliquePacking;

    struct PackingStats
    {
        double beta_threshold = 0;
        std::size_t g1_edges = 0;
        std::size_t g3_edges = 0;
        std::size_t packing_size = 0;
        Rational coverage;
        std::size_t h_edges = 0;
        Rational d;
        double selection_threshold = 0;
        std::size_t selected = 0;
        std::size_t dropped_overlap = 0;
        std::size_t dropped_conflict = 0;
        std::size_t matching_size = 0;
        Rational expected_selected;
        std::vector<std::pair<std::string, std::size_t>> conflicts;
        std::vector<std::pair<EdgeIndex, EdgeIndex>> matching;
        bool is_matching = true;
        bool p_le_3_in_g3 = true;
        std::vector<Pair> containment_failures;
        bool empty_packing = false;
    };

    struct RandomConstruction
    {
        ConstructionReport report;
        PackingStats stats;
        Hypergraph g1, g3;
        PackingPair packing;
    };

    // Freeness queries checked on the emitted graph: (2r-3,2), (3r-5,3), (3r-4,3), (4r-7,4),
    // (5r-8,5), (6r-11,6), (7r-12,7).
    auto random_construction_queries(int r) -> std::vector<ConfigQuery>;

    // Vertex layout: A1 = [0,m), A2 = [m,2m), then x_j = 2m+2j, y_j = 2m+2j+1 for the j-th
    // matching edge. A degenerate sample (empty packing or empty H) yields an empty F and sets
    // stats.empty_packing.
    auto random_packing_construction(const RandomParams & p) -> RandomConstruction;
}
