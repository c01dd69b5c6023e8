#include <beslab/hypergraph.hpp>

#include <algorithm>
#include <numeric>

namespace beslab
{
    auto Pair::of(Vertex a, Vertex b) -> Pair
    {
        if (a == b)
            throw std::invalid_argument("a pair needs two distinct vertices");
        return a < b ? Pair{a, b} : Pair{b, a};
    }

    auto to_string(Pair p) -> std::string
    {
        return std::to_string(p.u) + "-" + std::to_string(p.v);
    }

    BuildError::BuildError(BuildErrorKind kind, const std::string & message) :
        std::invalid_argument(message),
        _kind(kind)
    {
    }

    auto BuildError::kind() const -> BuildErrorKind
    {
        return _kind;
    }

    Hypergraph::Hypergraph(int r, int n, std::vector<Vertex> flat) :
        _r(r),
        _n(n),
        _flat(std::move(flat))
    {
    }

    auto Hypergraph::build(int r, int n, const std::vector<std::vector<Vertex>> & raw_edges) -> Hypergraph
    {
        if (r < 1)
            throw std::invalid_argument("uniformity must be positive");
        if (n < 0)
            throw std::invalid_argument("vertex count must be non-negative");

        std::vector<std::vector<Vertex>> sorted;
        sorted.reserve(raw_edges.size());
        for (const auto & raw : raw_edges) {
            auto e = raw;
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            if (raw.size() != static_cast<std::size_t>(r) || e.size() != raw.size())
                throw BuildError(BuildErrorKind::WrongArity, "edge does not have " + std::to_string(r) + " distinct vertices");
            for (auto v : e)
                if (v < 0 || v >= n)
                    throw BuildError(BuildErrorKind::VertexOutOfRange, "vertex " + std::to_string(v) + " not in [0," + std::to_string(n) + ")");
            sorted.push_back(std::move(e));
        }

        std::sort(sorted.begin(), sorted.end());
        if (auto dup = std::adjacent_find(sorted.begin(), sorted.end()); dup != sorted.end()) {
            std::string text;
            for (auto v : *dup)
                text += (text.empty() ? "" : " ") + std::to_string(v);
            throw BuildError(BuildErrorKind::DuplicateEdge, "duplicate edge {" + text + "}");
        }

        std::vector<Vertex> flat;
        flat.reserve(sorted.size() * r);
        for (const auto & e : sorted)
            flat.insert(flat.end(), e.begin(), e.end());
        return Hypergraph(r, n, std::move(flat));
    }

    auto Hypergraph::empty(int r, int n) -> Hypergraph
    {
        return build(r, n, {});
    }

    auto Hypergraph::edges() const -> std::vector<std::vector<Vertex>>
    {
        std::vector<std::vector<Vertex>> result;
        result.reserve(size());
        for (EdgeIndex i = 0; i < size(); ++i) {
            auto e = edge(i);
            result.emplace_back(e.begin(), e.end());
        }
        return result;
    }

    auto Hypergraph::find_edge(std::span<const Vertex> sorted_edge) const -> EdgeIndex
    {
        EdgeIndex lo = 0, hi = size();
        while (lo < hi) {
            EdgeIndex mid = (lo + hi) / 2;
            auto e = edge(mid);
            if (std::lexicographical_compare(e.begin(), e.end(), sorted_edge.begin(), sorted_edge.end()))
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo < size() && std::ranges::equal(edge(lo), sorted_edge))
            return lo;
        return size();
    }

    auto Hypergraph::support() const -> std::vector<Vertex>
    {
        std::vector<Vertex> result(_flat);
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
        return result;
    }

    auto Hypergraph::subgraph(const EdgeSet & indices) const -> Hypergraph
    {
        auto sorted = indices;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<Vertex> flat;
        flat.reserve(sorted.size() * _r);
        for (auto i : sorted) {
            auto e = edge(i);
            flat.insert(flat.end(), e.begin(), e.end());
        }
        return Hypergraph(_r, _n, std::move(flat));
    }

    auto Hypergraph::complement_edges(const EdgeSet & indices) const -> Hypergraph
    {
        std::vector<bool> drop(size(), false);
        for (auto i : indices)
            drop.at(i) = true;
        EdgeSet keep;
        for (EdgeIndex i = 0; i < size(); ++i)
            if (! drop[i])
                keep.push_back(i);
        return subgraph(keep);
    }

    auto Hypergraph::with_vertex_count(int n) const -> Hypergraph
    {
        return build(_r, n, edges());
    }

    auto Hypergraph::with_edge(std::span<const Vertex> e) const -> Hypergraph
    {
        auto all = edges();
        all.emplace_back(e.begin(), e.end());
        return build(_r, _n, all);
    }

    auto Hypergraph::relabel(const std::vector<Vertex> & perm) const -> Hypergraph
    {
        auto all = edges();
        for (auto & e : all)
            for (auto & v : e)
                v = perm.at(v);
        return build(_r, _n, all);
    }

    auto pairs_of(const std::vector<Vertex> & vertices) -> std::vector<Pair>
    {
        std::vector<Pair> result;
        for (std::size_t i = 0; i < vertices.size(); ++i)
            for (std::size_t j = i + 1; j < vertices.size(); ++j)
                result.push_back(Pair::of(vertices[i], vertices[j]));
        std::sort(result.begin(), result.end());
        return result;
    }

    auto count_union(const Hypergraph & g, const EdgeSet & edges) -> int
    {
        std::vector<Vertex> all;
        for (auto i : edges) {
            auto e = g.edge(i);
            all.insert(all.end(), e.begin(), e.end());
        }
        std::sort(all.begin(), all.end());
        return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
    }
}
