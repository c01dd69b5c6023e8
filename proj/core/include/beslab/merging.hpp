#pragma once

#include <beslab/claims.hpp>
#include <beslab/hypergraph.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace beslab
{
    struct MergeRule
    {
        enum class Kind
        {
            Sets,
            TwoPlus,
            ThreePlus
        };

        Kind kind = Kind::Sets;
        std::vector<int> a, b;

        static auto sets(std::vector<int> a, std::vector<int> b) -> MergeRule;
        static auto two_plus() -> MergeRule;
        static auto three_plus() -> MergeRule;

        // Largest claim index the rule ever inspects.
        auto cap() const -> int;

        auto operator==(const MergeRule &) const -> bool = default;
    };

    auto to_string(const MergeRule & rule) -> std::string;

    // a_side is the part playing the A role (for TwoPlus and ThreePlus: the 1-claiming part).
    // Parts are named by their smallest ambient edge index.
    struct MergeEvent
    {
        std::size_t stage = 0;
        EdgeIndex a_side = 0;
        EdgeIndex b_side = 0;
        Pair via;

        auto operator==(const MergeEvent &) const -> bool = default;
    };

    struct Cluster
    {
        EdgeSet edges;
        Hypergraph part;
        std::vector<MergeEvent> trace;

        auto id() const -> EdgeIndex { return edges.front(); }
    };

    struct Partition
    {
        Hypergraph ambient;
        std::vector<Cluster> clusters;
        std::vector<MergeRule> rule_stack;

        auto cluster_of(EdgeIndex e) const -> std::size_t;

        // Sets of edge indices, ordered by smallest member.
        auto parts() const -> std::vector<EdgeSet>;
    };

    auto trivial_partition(const Hypergraph & g) -> Partition;

    // With a seed, each step merges a uniformly random mergeable pair of parts instead of the
    // canonical one. The resulting parts are the same either way; only traces differ.
    auto merge(const Hypergraph & g, const Partition & start, const MergeRule & rule,
        std::optional<std::uint64_t> shuffle_seed = std::nullopt) -> Partition;

    auto m11(const Hypergraph & g) -> Partition;
    auto m12(const Hypergraph & g) -> Partition;
    auto m2plus(const Hypergraph & g) -> Partition;
    auto m3plus(const Hypergraph & g) -> Partition;

    // Some 3-edge subtree of F 2-claims p.
    auto two_plus_claims(const Hypergraph & f, Pair p) -> bool;

    // Everything F 2+-claims: the pairs inside diamonds that extend to a 3-edge subtree.
    auto two_plus_claimed_pairs(const Hypergraph & f) -> PairSet;

    // 2+-claimed but not 1-claimed.
    auto one_bar_two_plus(const Hypergraph & f) -> PairSet;

    // Smallest pair via which `first` and `second` are mergeable in this order. Only rules where
    // neither side needs a 1-claim look at `universe` (default: V(first) ∪ V(second)).
    auto merge_pair(const Hypergraph & first, const Hypergraph & second, const MergeRule & rule,
        const std::vector<Vertex> & universe = {}) -> std::optional<Pair>;

    auto mergeable(const Hypergraph & f, const Hypergraph & h, const MergeRule & rule,
        const std::vector<Vertex> & universe = {}) -> bool;

    // Rebuilds a part from base parts and a trace. Throws std::logic_error on a malformed trace.
    auto replay(const std::vector<EdgeSet> & base_parts, const std::vector<MergeEvent> & trace, EdgeIndex id) -> EdgeSet;

    // Non-increasing sizes of the pair-connected components (the m11 clusters) inside the part.
    auto composition(const Cluster & c) -> std::vector<int>;

    class NoOrder : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // An ordering of the parts of `base` lying in F but not in F0 such that each one is mergeable
    // with the union of F0 and its predecessors. F0 must be a union of base parts inside F.
    auto trimming_order(const Partition & base, const EdgeSet & f0, const EdgeSet & f, const MergeRule & rule)
        -> std::vector<EdgeSet>;
}
