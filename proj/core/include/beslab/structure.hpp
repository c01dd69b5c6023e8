#pragma once

#include <beslab/configuration.hpp>
#include <beslab/hypergraph.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace beslab
{
    struct Violation
    {
        ConfigQuery query;
        EdgeSet edges;
    };

    // Raised when an operation needs a G^(r)_k-free input and did not get one.
    class NotFree : public std::runtime_error
    {
    private:
        Violation _witness;

    public:
        explicit NotFree(Violation witness);

        auto witness() const -> const Violation & { return _witness; }
    };

    struct FreenessResult
    {
        bool free = true;
        std::optional<Violation> witness;

        explicit operator bool() const { return free; }
    };

    // The forbidden queries of the family G^(r)_k: (rl-2l+1, l) for l in [2,k-1], then (rk-2k+2, k).
    auto family_queries(int r, int k) -> std::vector<ConfigQuery>;

    auto is_family_free(const Hypergraph & g, int k) -> FreenessResult;

    auto is_free_of(const Hypergraph & g, ConfigQuery q) -> FreenessResult;

    // Smallest l in [2,cap] with l edges on at most (r-2)l+2 vertices; nullopt means above the cap.
    auto girth(const Hypergraph & g, int cap) -> std::optional<int>;

    // arity * |F| - |V(F)|.
    auto defect(const Hypergraph & f) -> int;

    // Components under "two edges share at least two vertices", as ascending edge index lists,
    // ordered by smallest member.
    auto pair_components(const Hypergraph & f) -> std::vector<EdgeSet>;

    auto is_pair_connected(const Hypergraph & f) -> bool;

    enum class TreeKind
    {
        NotTree,
        Tree,
        Path
    };

    struct TreeShape
    {
        TreeKind kind = TreeKind::NotTree;
        int edges = 0;

        auto operator==(const TreeShape &) const -> bool = default;
    };

    auto to_string(const TreeShape & t) -> std::string;

    auto classify_tree(const Hypergraph & f) -> TreeShape;
}
