#include <beslab/configuration.hpp>
#include <beslab/constructions.hpp>
#include <beslab/weights.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace beslab
{
    auto diamond(int r) -> Hypergraph
    {
        std::vector<Vertex> x{0, 1}, y{0, 1};
        for (int i = 0; i < r - 2; ++i) {
            x.push_back(2 + i);
            y.push_back(r + i);
        }
        return Hypergraph::build(r, 2 * r - 2, {x, y});
    }

    auto diamond_star(int t) -> Hypergraph
    {
        if (t < 1)
            throw std::invalid_argument("diamond star needs t >= 1");
        std::vector<std::vector<Vertex>> edges;
        for (int i = 0; i < t; ++i) {
            Vertex x = 2 + 2 * i, y = 3 + 2 * i;
            edges.push_back({x, y, 0});
            edges.push_back({x, y, 1});
        }
        return Hypergraph::build(3, 2 * t + 2, edges);
    }

    auto f63() -> Hypergraph
    {
        std::vector<std::vector<Vertex>> edges;
        edges.push_back({0, 1, 2});
        Vertex next = 15;
        for (Vertex i = 0; i < 3; ++i) {
            Vertex s = (i + 1) % 3, t = (i + 2) % 3;
            Vertex level1[4] = {3 + 4 * i, 4 + 4 * i, 5 + 4 * i, 6 + 4 * i};
            edges.push_back({level1[0], level1[1], s});
            edges.push_back({level1[0], level1[1], t});
            edges.push_back({level1[2], level1[3], s});
            edges.push_back({level1[2], level1[3], t});
            for (auto y : level1)
                for (int copy = 0; copy < 2; ++copy) {
                    edges.push_back({i, next, next + 1});
                    edges.push_back({y, next, next + 1});
                    next += 2;
                }
        }
        return Hypergraph::build(3, next, edges);
    }

    auto single_edge(int r) -> Hypergraph
    {
        std::vector<Vertex> e(r);
        for (int i = 0; i < r; ++i)
            e[i] = i;
        return Hypergraph::build(r, r, {e});
    }

    auto ratio_of(const Hypergraph & f, int t) -> RatioResult
    {
        auto pairs = claimed_pairs_up_to(f, t);
        if (pairs.empty())
            return {Rational(0), pairs};
        return {Rational(static_cast<long long>(f.size()), 2 * static_cast<long long>(pairs.size())), pairs};
    }

    auto lower_bound_ratio(const Hypergraph & f, int k) -> RatioResult
    {
        if (auto free = is_family_free(f, k); ! free)
            throw NotFree(*free.witness);
        return ratio_of(f, k / 2);
    }

    auto enumerate_S(const Hypergraph & k, int e, int d) -> std::vector<EdgeSet>
    {
        std::vector<EdgeSet> result;
        int target = k.uniformity() * e - d;
        if (e < 1 || target < 0)
            return result;
        for_each_configuration(k, e, target, [&] (std::span<const EdgeIndex> edges, int vertices) {
            if (vertices == target)
                result.emplace_back(edges.begin(), edges.end());
            return false;
        });
        return result;
    }

    auto ConflictFamily::name() const -> std::string
    {
        return std::string(no_isolated ? "C'" : "C") + "(" + std::to_string(e1) + "," + std::to_string(d1) + ";"
            + std::to_string(e2) + "," + std::to_string(d2) + ")";
    }

    auto ConflictFamily::all() -> std::vector<ConflictFamily>
    {
        return {
            {3, 3, 2, 1, false},
            {4, 4, 3, 2, false},
            {4, 5, 2, 1, false},
            {5, 7, 2, 1, false},
            {4, 3, 3, 3, true},
        };
    }

    namespace
    {
        auto has_isolated_edge(const Hypergraph & k, const EdgeSet & edges) -> bool
        {
            for (auto i : edges) {
                bool touches = false;
                for (auto j : edges) {
                    if (i == j)
                        continue;
                    auto a = k.edge(i), b = k.edge(j);
                    for (auto v : a)
                        if (std::binary_search(b.begin(), b.end(), v))
                            touches = true;
                }
                if (! touches)
                    return true;
            }
            return false;
        }

        auto extends(const Hypergraph & k, const EdgeSet & q, const ConflictFamily & fam) -> bool
        {
            std::vector<Vertex> base;
            for (auto i : q)
                for (auto v : k.edge(i))
                    base.push_back(v);
            std::sort(base.begin(), base.end());
            base.erase(std::unique(base.begin(), base.end()), base.end());

            int target = k.uniformity() * fam.e1 - fam.d1;
            EdgeSet pool;
            for (EdgeIndex i = 0; i < k.size(); ++i)
                if (std::find(q.begin(), q.end(), i) == q.end())
                    pool.push_back(i);

            return for_each_configuration(k, fam.e1 - fam.e2, target, [&] (std::span<const EdgeIndex> extra, int vertices) {
                if (vertices != target)
                    return false;
                if (! fam.no_isolated)
                    return true;
                EdgeSet all = q;
                all.insert(all.end(), extra.begin(), extra.end());
                return ! has_isolated_edge(k, all);
            }, base, &pool);
        }

        // Conflicts whose S_{e2,d2} part lives on `small` and whose images live on `large`.
        void conflicts_one_side(const Hypergraph & small, const Hypergraph & large,
            const std::vector<std::vector<std::pair<EdgeIndex, std::size_t>>> & incident,
            const ConflictFamily & fam, std::set<EdgeSet> & out)
        {
            EdgeSet active;
            for (EdgeIndex i = 0; i < small.size(); ++i)
                if (! incident[i].empty())
                    active.push_back(i);
            auto restricted = small.subgraph(active);

            for (const auto & local : enumerate_S(restricted, fam.e2, fam.d2)) {
                EdgeSet s2;
                for (auto i : local)
                    s2.push_back(active[i]);

                std::vector<EdgeIndex> images;
                EdgeSet chosen;
                auto rec = [&] (auto & self, std::size_t j) -> void {
                    if (j == s2.size()) {
                        EdgeSet q = images;
                        std::sort(q.begin(), q.end());
                        if (extends(large, q, fam)) {
                            EdgeSet key = chosen;
                            std::sort(key.begin(), key.end());
                            out.insert(key);
                        }
                        return;
                    }
                    for (auto [other, h] : incident[s2[j]]) {
                        if (std::find(images.begin(), images.end(), other) != images.end())
                            continue;
                        images.push_back(other);
                        chosen.push_back(h);
                        self(self, j + 1);
                        chosen.pop_back();
                        images.pop_back();
                    }
                };
                rec(rec, 0);
            }
        }
    }

    auto enumerate_conflicts(const PackingPair & h, const ConflictFamily & fam) -> std::vector<EdgeSet>
    {
        std::vector<std::vector<std::pair<EdgeIndex, std::size_t>>> from1(h.k1.size()), from2(h.k2.size());
        for (std::size_t i = 0; i < h.h_edges.size(); ++i) {
            auto [a, b] = h.h_edges[i];
            from1.at(a).emplace_back(b, i);
            from2.at(b).emplace_back(a, i);
        }
        std::set<EdgeSet> found;
        conflicts_one_side(h.k1, h.k2, from1, fam, found);
        conflicts_one_side(h.k2, h.k1, from2, fam, found);
        return {found.begin(), found.end()};
    }

    auto lone_edge_diamond_sequence(const Hypergraph & g) -> std::optional<std::vector<EdgeSet>>
    {
        std::vector<bool> alive(g.size(), true);
        std::size_t left = g.size();
        std::vector<int> degree(std::max(g.vertex_count(), 1), 0);
        for (EdgeIndex i = 0; i < g.size(); ++i)
            for (auto v : g.edge(i))
                ++degree[v];

        auto in = [&] (EdgeIndex e, Vertex v) {
            auto span = g.edge(e);
            return std::binary_search(span.begin(), span.end(), v);
        };

        std::vector<EdgeSet> removed;
        auto drop = [&] (const EdgeSet & piece) {
            for (auto e : piece) {
                alive[e] = false;
                --left;
                for (auto v : g.edge(e))
                    --degree[v];
            }
            removed.push_back(piece);
        };

        while (left > 0) {
            bool progress = false;
            for (EdgeIndex x = 0; x < g.size() && ! progress; ++x) {
                if (! alive[x])
                    continue;
                int shared = 0;
                for (auto v : g.edge(x))
                    shared += degree[v] >= 2;
                if (shared <= 1) {
                    drop({x});
                    progress = true;
                }
            }
            for (EdgeIndex x = 0; x < g.size() && ! progress; ++x) {
                if (! alive[x])
                    continue;
                for (EdgeIndex y = x + 1; y < g.size() && ! progress; ++y) {
                    if (! alive[y])
                        continue;
                    int common = 0;
                    for (auto v : g.edge(x))
                        common += in(y, v);
                    if (common != 2)
                        continue;
                    std::set<Vertex> both;
                    for (auto v : g.edge(x))
                        both.insert(v);
                    for (auto v : g.edge(y))
                        both.insert(v);
                    std::vector<Vertex> outside;
                    for (auto v : both) {
                        int own = in(x, v) + in(y, v);
                        if (degree[v] > own)
                            outside.push_back(v);
                    }
                    bool ok = outside.size() <= 1;
                    if (outside.size() == 2) {
                        bool in_x = in(x, outside[0]) && in(x, outside[1]);
                        bool in_y = in(y, outside[0]) && in(y, outside[1]);
                        ok = ! in_x && ! in_y;
                    }
                    if (ok) {
                        drop({x, y});
                        progress = true;
                    }
                }
            }
            if (! progress)
                return std::nullopt;
        }
        std::reverse(removed.begin(), removed.end());
        return removed;
    }

    auto gr_limit(int p) -> Rational
    {
        if (p != 12 && p != 14 && p != 16)
            throw UnknownLimit("gr_limit is only known for p in {12, 14, 16}");
        return Rational(1, 2) - limit_table(4, p / 2 - 1);
    }

    auto gr_linear_bounds() -> std::vector<std::pair<int, Rational>>
    {
        std::vector<std::pair<int, Rational>> result;
        for (int p : {7, 8, 9})
            result.emplace_back(p, 1 - limit_table(3, p - 2));
        return result;
    }

    auto ConstructionReport::all_free() const -> bool
    {
        return std::all_of(freeness.begin(), freeness.end(), [] (const FreenessFact & f) { return f.free; });
    }

    auto freeness_facts(const Hypergraph & f, const std::vector<ConfigQuery> & queries) -> std::vector<FreenessFact>
    {
        std::vector<FreenessFact> result;
        for (auto q : queries) {
            auto w = find_configuration(f, q);
            result.push_back(FreenessFact{q, ! w.has_value(), w});
        }
        return result;
    }

    auto describe_construction(const Hypergraph & f, int k) -> ConstructionReport
    {
        ConstructionReport report;
        report.graph = f;
        report.k = k;
        report.freeness = freeness_facts(f, family_queries(f.uniformity(), k));
        report.shadow_size = shadow(f).size();
        report.p_le_3_size = claimed_pairs_up_to(f, 3).size();
        auto ratio = ratio_of(f, k / 2);
        report.p_le_half_k_size = ratio.pairs.size();
        report.ratio = ratio.ratio;
        return report;
    }
}
