#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace beslab
{
    using Vertex = int;
    using EdgeIndex = std::size_t;
    using EdgeSet = std::vector<EdgeIndex>;

    struct Pair
    {
        Vertex u = 0, v = 1;

        // Orders the endpoints; a == b is rejected.
        static auto of(Vertex a, Vertex b) -> Pair;

        auto operator<=>(const Pair &) const = default;
    };

    using PairSet = std::set<Pair>;

    auto to_string(Pair p) -> std::string;

    enum class BuildErrorKind
    {
        WrongArity,
        VertexOutOfRange,
        DuplicateEdge
    };

    class BuildError : public std::invalid_argument
    {
    private:
        BuildErrorKind _kind;

    public:
        BuildError(BuildErrorKind kind, const std::string & message);

        auto kind() const -> BuildErrorKind;
    };

    // An r-uniform hypergraph on vertices [0,n). Edges are strictly sorted r-sets kept in
    // lexicographic order, so two hypergraphs are equal iff they are structurally equal.
    class Hypergraph
    {
    private:
        int _r = 2;
        int _n = 0;
        std::vector<Vertex> _flat;

        Hypergraph(int r, int n, std::vector<Vertex> flat);

    public:
        Hypergraph() = default;

        static auto build(int r, int n, const std::vector<std::vector<Vertex>> & raw_edges) -> Hypergraph;

        // Empty hypergraph of the given shape.
        static auto empty(int r, int n) -> Hypergraph;

        auto uniformity() const -> int { return _r; }
        auto vertex_count() const -> int { return _n; }
        auto size() const -> std::size_t { return _r == 0 ? 0 : _flat.size() / _r; }
        auto empty() const -> bool { return _flat.empty(); }

        auto edge(EdgeIndex i) const -> std::span<const Vertex>
        {
            return {_flat.data() + i * _r, static_cast<std::size_t>(_r)};
        }

        auto edges() const -> std::vector<std::vector<Vertex>>;

        // Index of the given sorted edge, or size() if absent.
        auto find_edge(std::span<const Vertex> sorted_edge) const -> EdgeIndex;

        // V(F): the union of all edges, sorted.
        auto support() const -> std::vector<Vertex>;

        // Same r and n, keeping the listed edges.
        auto subgraph(const EdgeSet & indices) const -> Hypergraph;

        // Everything except the listed edges.
        auto complement_edges(const EdgeSet & indices) const -> Hypergraph;

        auto with_vertex_count(int n) const -> Hypergraph;

        auto with_edge(std::span<const Vertex> e) const -> Hypergraph;

        // perm[v] is the new name of v.
        auto relabel(const std::vector<Vertex> & perm) const -> Hypergraph;

        auto operator==(const Hypergraph &) const -> bool = default;
    };

    // All pairs of V(F) in increasing order.
    auto pairs_of(const std::vector<Vertex> & vertices) -> std::vector<Pair>;

    auto count_union(const Hypergraph & g, const EdgeSet & edges) -> int;
}
