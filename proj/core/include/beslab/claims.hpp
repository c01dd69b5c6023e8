#pragma once

#include <beslab/hypergraph.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace beslab
{
    // The indices i in [0,cap] for which a fixed pair is i-claimed.
    class ClaimSet
    {
    private:
        int _cap = 0;
        std::uint32_t _bits = 1;

    public:
        static constexpr int max_cap = 31;

        ClaimSet() = default;
        ClaimSet(int cap, std::uint32_t bits);

        auto cap() const -> int { return _cap; }
        auto bits() const -> std::uint32_t { return _bits; }
        auto contains(int i) const -> bool { return i >= 0 && i <= _cap && ((_bits >> i) & 1u); }
        auto members() const -> std::vector<int>;

        auto operator==(const ClaimSet &) const -> bool = default;
    };

    auto to_string(const ClaimSet & c) -> std::string;

    // i distinct edges X_1..X_i with |{u,v} ∪ X_1 ∪ ... ∪ X_i| <= (r-2)i + 2.
    auto claims(const Hypergraph & f, Pair p, int i) -> bool;

    auto claim_set(const Hypergraph & f, Pair p, int cap) -> ClaimSet;

    // P_1(F): pairs inside a single edge.
    auto shadow(const Hypergraph & f) -> PairSet;

    // P_i(F): i-claimed pairs of V(F).
    auto claimed_pairs(const Hypergraph & f, int i) -> PairSet;

    // P_2(F) \ P_1(F).
    auto one_bar_two(const Hypergraph & f) -> PairSet;

    // Pairs of V(F) whose claim set meets [1,t].
    auto claimed_pairs_up_to(const Hypergraph & f, int t) -> PairSet;

    // Minkowski sum of claim sets, truncated at cap.
    auto sum_set(const std::vector<ClaimSet> & parts, int cap) -> ClaimSet;
}
