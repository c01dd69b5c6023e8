#include <beslab/claims.hpp>
#include <beslab/structure.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace beslab
{
    NotFree::NotFree(Violation witness) :
        std::runtime_error("found a (" + std::to_string(witness.query.max_vertices) + "," + std::to_string(witness.query.edge_count) + ")-configuration"),
        _witness(std::move(witness))
    {
    }

    auto family_queries(int r, int k) -> std::vector<ConfigQuery>
    {
        if (k < 2)
            throw std::invalid_argument("family needs k >= 2");
        std::vector<ConfigQuery> result;
        for (int l = 2; l <= k - 1; ++l)
            result.push_back({l, r * l - 2 * l + 1});
        result.push_back({k, r * k - 2 * k + 2});
        return result;
    }

    auto is_free_of(const Hypergraph & g, ConfigQuery q) -> FreenessResult
    {
        if (auto w = find_configuration(g, q))
            return {false, Violation{q, *w}};
        return {};
    }

    auto is_family_free(const Hypergraph & g, int k) -> FreenessResult
    {
        for (auto q : family_queries(g.uniformity(), k))
            if (auto result = is_free_of(g, q); ! result.free)
                return result;
        return {};
    }

    auto girth(const Hypergraph & g, int cap) -> std::optional<int>
    {
        if (cap < 2)
            throw std::invalid_argument("girth cap must be at least 2");
        int r = g.uniformity();
        if (r <= 2)
            return std::nullopt;
        for (int l = 2; l <= cap; ++l)
            if (find_configuration(g, {l, (r - 2) * l + 2}))
                return l;
        return std::nullopt;
    }

    auto defect(const Hypergraph & f) -> int
    {
        return f.uniformity() * static_cast<int>(f.size()) - static_cast<int>(f.support().size());
    }

    namespace
    {
        auto shared(std::span<const Vertex> a, std::span<const Vertex> b) -> int
        {
            int c = 0;
            auto i = a.begin();
            auto j = b.begin();
            while (i != a.end() && j != b.end()) {
                if (*i < *j)
                    ++i;
                else if (*j < *i)
                    ++j;
                else {
                    ++c;
                    ++i;
                    ++j;
                }
            }
            return c;
        }
    }

    auto pair_components(const Hypergraph & f) -> std::vector<EdgeSet>
    {
        std::vector<EdgeIndex> parent(f.size());
        std::iota(parent.begin(), parent.end(), EdgeIndex{0});
        auto find = [&] (EdgeIndex x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (EdgeIndex i = 0; i < f.size(); ++i)
            for (EdgeIndex j = i + 1; j < f.size(); ++j)
                if (shared(f.edge(i), f.edge(j)) >= 2) {
                    auto a = find(i), b = find(j);
                    if (a != b)
                        parent[std::max(a, b)] = std::min(a, b);
                }

        std::vector<EdgeSet> result;
        std::vector<std::size_t> slot(f.size(), f.size());
        for (EdgeIndex i = 0; i < f.size(); ++i) {
            auto root = find(i);
            if (slot[root] == f.size()) {
                slot[root] = result.size();
                result.emplace_back();
            }
            result[slot[root]].push_back(i);
        }
        return result;
    }

    auto is_pair_connected(const Hypergraph & f) -> bool
    {
        return pair_components(f).size() <= 1;
    }

    auto to_string(const TreeShape & t) -> std::string
    {
        switch (t.kind) {
            case TreeKind::NotTree: return "NotTree";
            case TreeKind::Tree: return "Tree(" + std::to_string(t.edges) + ")";
            case TreeKind::Path: return "Path(" + std::to_string(t.edges) + ")";
        }
        return "?";
    }

    namespace
    {
        // Search for an ordering where each edge attaches to the previous one along a pair that
        // no earlier edge contains.
        class PathSearch
        {
        private:
            const Hypergraph & _f;
            std::vector<bool> _used;
            std::vector<EdgeIndex> _order;
            std::unordered_set<std::uint64_t> _dead;
            std::uint64_t _mask = 0;

            auto attaches(EdgeIndex prev, EdgeIndex next) const -> bool
            {
                std::vector<Vertex> seen;
                for (auto i : _order)
                    for (auto v : _f.edge(i))
                        seen.push_back(v);
                std::sort(seen.begin(), seen.end());
                seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

                std::vector<Vertex> meet;
                for (auto v : _f.edge(next))
                    if (std::binary_search(seen.begin(), seen.end(), v))
                        meet.push_back(v);
                if (meet.size() != 2)
                    return false;
                auto in = [&] (EdgeIndex e, Vertex v) {
                    auto span = _f.edge(e);
                    return std::binary_search(span.begin(), span.end(), v);
                };
                if (! in(prev, meet[0]) || ! in(prev, meet[1]))
                    return false;
                for (std::size_t j = 0; j + 1 < _order.size(); ++j)
                    if (in(_order[j], meet[0]) && in(_order[j], meet[1]))
                        return false;
                return true;
            }

            auto extend() -> bool
            {
                if (_order.size() == _f.size())
                    return true;
                std::uint64_t key = _mask * 64 + _order.back();
                if (_dead.contains(key))
                    return false;
                for (EdgeIndex e = 0; e < _f.size(); ++e) {
                    if (_used[e] || ! attaches(_order.back(), e))
                        continue;
                    _used[e] = true;
                    _mask |= std::uint64_t{1} << e;
                    _order.push_back(e);
                    bool ok = extend();
                    _order.pop_back();
                    _mask &= ~(std::uint64_t{1} << e);
                    _used[e] = false;
                    if (ok)
                        return true;
                }
                _dead.insert(key);
                return false;
            }

        public:
            explicit PathSearch(const Hypergraph & f) :
                _f(f),
                _used(f.size(), false)
            {
            }

            auto run() -> bool
            {
                for (EdgeIndex first = 0; first < _f.size(); ++first) {
                    _used[first] = true;
                    _mask = std::uint64_t{1} << first;
                    _order = {first};
                    bool ok = extend();
                    _used[first] = false;
                    if (ok)
                        return true;
                }
                return false;
            }
        };
    }

    auto classify_tree(const Hypergraph & f) -> TreeShape
    {
        int i = static_cast<int>(f.size());
        int r = f.uniformity();
        if (i == 0)
            return {};
        // A pair-connected graph grown edge by edge gains at most r-2 vertices per edge, so hitting
        // exactly (r-2)i+2 forces every attachment to be a single shadow pair.
        if (static_cast<int>(f.support().size()) != (r - 2) * i + 2 || ! is_pair_connected(f))
            return {};
        if (i <= 2)
            return {TreeKind::Path, i};
        // Paths are only tracked up to 63 edges (bitmask memo).
        if (i < 64 && PathSearch(f).run())
            return {TreeKind::Path, i};
        return {TreeKind::Tree, i};
    }
}
