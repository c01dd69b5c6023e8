#include <beslab/claims.hpp>
#include <beslab/packing.hpp>
#include <beslab/text_format.hpp>

#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace beslab;

namespace
{
    auto params(std::uint64_t seed, int r = 4, int m = 16) -> RandomParams
    {
        RandomParams p;
        p.r = r;
        p.m = m;
        p.seed = seed;
        return p;
    }

    auto has_edge(const Hypergraph & g, Vertex a, Vertex b) -> bool
    {
        std::vector<Vertex> e{std::min(a, b), std::max(a, b)};
        return g.find_edge(e) < g.size();
    }
}

TEST_CASE("stage streams")
{
    StageRng a(5, "G1"), b(5, "G1"), c(5, "G3"), d(6, "G1");
    bool differs_stage = false, differs_seed = false;
    for (int i = 0; i < 50; ++i) {
        auto x = a.uniform(), y = b.uniform(), z = c.uniform(), w = d.uniform();
        CHECK(x == y);
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
        differs_stage = differs_stage || x != z;
        differs_seed = differs_seed || x != w;
    }
    CHECK(differs_stage);
    CHECK(differs_seed);
    StageRng e(1, "select");
    CHECK(! e.accept(0.0));
    CHECK(e.accept(1.0));
}

TEST_CASE("parameter validation")
{
    CHECK_NOTHROW(RandomParams{}.validate());
    auto p = RandomParams{};
    p.r = 3;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = RandomParams{};
    p.m = 3;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = RandomParams{};
    p.alpha = 1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = RandomParams{};
    p.mu = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = RandomParams{};
    p.girth_cap = 1;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    CHECK_THROWS_AS(random_packing_construction(p), std::invalid_argument);
}

TEST_CASE("greedy packing of edges and triangles")
{
    auto g = Hypergraph::build(2, 4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    auto all = greedy_clique_packing(g, 2, 8);
    CHECK(all.cliques.size() == 4);
    CHECK(all.covered_edges == 4);

    auto tri = greedy_clique_packing(g, 3, 8);
    CHECK(tri.cliques.size() == 1);
    CHECK(tri.covered_edges == 3);
    CHECK(tri.graph_edges == 4);

    CHECK_THROWS_AS(greedy_clique_packing(Hypergraph::empty(3, 3), 3, 8), std::invalid_argument);
    CHECK_THROWS_AS(greedy_clique_packing(g, 1, 8), std::invalid_argument);
}

TEST_CASE("greedy packings are edge-disjoint, keep girth above the cap and are maximal")
{
    gen::Rng rng(9101);
    for (int round = 0; round < 30; ++round) {
        int n = 7 + static_cast<int>(rng() % 4);
        int cap = 3 + static_cast<int>(rng() % 3);
        auto g = gen::random_hypergraph(rng, 2, n, n * (n - 1) / 4);
        auto packing = greedy_clique_packing(g, 3, cap);
        const auto & k = packing.cliques;
        CAPTURE(cap);

        std::set<Pair> used;
        for (auto e : k.edges())
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    CHECK(has_edge(g, e[i], e[j]));
                    CHECK(used.insert(Pair::of(e[i], e[j])).second);
                }
        CHECK(! oracle::girth(k, cap));

        // No triangle can be added without sharing an edge or closing a short cycle.
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c) {
                    if (! has_edge(g, a, b) || ! has_edge(g, b, c) || ! has_edge(g, a, c))
                        continue;
                    if (used.contains(Pair::of(a, b)) || used.contains(Pair::of(b, c)) || used.contains(Pair::of(a, c)))
                        continue;
                    auto edges = k.edges();
                    edges.push_back({a, b, c});
                    CHECK(oracle::girth(Hypergraph::build(3, n, edges), cap));
                }
    }
}

TEST_CASE("random construction is deterministic per seed")
{
    auto a = random_packing_construction(params(3));
    auto b = random_packing_construction(params(3));
    CHECK(to_text(a.report.graph) == to_text(b.report.graph));
    CHECK(a.stats.matching == b.stats.matching);
    CHECK(a.stats.conflicts == b.stats.conflicts);
    CHECK(a.report.ratio == b.report.ratio);

    bool any_difference = false;
    for (std::uint64_t seed = 4; seed < 8 && ! any_difference; ++seed)
        any_difference = to_text(random_packing_construction(params(seed)).report.graph) != to_text(a.report.graph);
    CHECK(any_difference);
}

TEST_CASE("random construction pipeline, rebuilt independently")
{
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        auto p = params(seed, 4, seed % 2 ? 24 : 16);
        auto rc = random_packing_construction(p);
        const auto & s = rc.stats;
        const auto & h = rc.packing;
        int m = p.m, r = p.r;
        CAPTURE(seed);

        // Mirror and H.
        REQUIRE(h.k1.size() == h.k2.size());
        REQUIRE(h.k1.size() == rc.g1.size());
        for (EdgeIndex i = 0; i < h.k1.size(); ++i)
            for (int t = 0; t < h.k1.uniformity(); ++t)
                CHECK(h.k2.edge(i)[t] == h.k1.edge(i)[t] + m);
        std::vector<std::pair<EdgeIndex, EdgeIndex>> expect_h;
        for (EdgeIndex i = 0; i < h.k1.size(); ++i)
            for (EdgeIndex j = 0; j < h.k2.size(); ++j) {
                bool all = true;
                for (auto u : h.k1.edge(i))
                    for (auto v : h.k2.edge(j))
                        all = all && has_edge(rc.g3, u, v);
                if (all)
                    expect_h.emplace_back(i, j);
            }
        CHECK(h.h_edges == expect_h);
        CHECK(s.d == p.alpha * p.alpha * p.alpha * p.alpha * static_cast<long long>(h.k1.size()));

        // Matching and conflict avoidance.
        std::set<EdgeIndex> left, right;
        for (auto [i, j] : s.matching) {
            CHECK(left.insert(i).second);
            CHECK(right.insert(j).second);
            CHECK(std::find(h.h_edges.begin(), h.h_edges.end(), std::pair{i, j}) != h.h_edges.end());
        }
        CHECK(s.is_matching);
        std::set<std::size_t> kept;
        for (std::size_t i = 0; i < h.h_edges.size(); ++i)
            if (std::find(s.matching.begin(), s.matching.end(), h.h_edges[i]) != s.matching.end())
                kept.insert(i);
        for (const auto & fam : ConflictFamily::all())
            for (const auto & c : enumerate_conflicts(h, fam))
                CHECK(! std::all_of(c.begin(), c.end(), [&] (std::size_t i) { return kept.contains(i); }));
        CHECK(s.selected >= s.matching_size);
        CHECK(s.selected - s.matching_size <= s.dropped_overlap + s.dropped_conflict);

        // F is the union of the matched diamonds.
        const auto & f = rc.report.graph;
        CHECK(f.size() == 2 * s.matching_size);
        CHECK(f.vertex_count() == 2 * m + 2 * static_cast<int>(s.matching_size));
        std::set<std::vector<Vertex>> expect_f;
        Vertex x = 2 * m;
        for (auto [i, j] : s.matching) {
            for (auto side : {h.k1.edge(i), h.k2.edge(j)}) {
                std::vector<Vertex> e(side.begin(), side.end());
                e.push_back(x);
                e.push_back(x + 1);
                std::sort(e.begin(), e.end());
                expect_f.insert(e);
            }
            x += 2;
        }
        std::set<std::vector<Vertex>> got_f;
        for (auto e : f.edges())
            got_f.insert(e);
        CHECK(got_f == expect_f);

        // Freeness against the naive search, for the queries small enough to brute force.
        auto queries = random_construction_queries(r);
        REQUIRE(rc.report.freeness.size() == queries.size());
        for (std::size_t q = 0; q < queries.size(); ++q) {
            CHECK(rc.report.freeness[q].free);
            if (queries[q].edge_count <= 4)
                CHECK(! oracle::find(f, queries[q].edge_count, queries[q].max_vertices));
        }

        // P_{<=3} \ P_1 sits inside G3, by naive claim sets.
        auto support = f.support();
        std::size_t p3 = 0;
        for (std::size_t a = 0; a < support.size(); ++a)
            for (std::size_t b = a + 1; b < support.size(); ++b) {
                auto pair = Pair::of(support[a], support[b]);
                auto claims = oracle::claim_set(f, pair, 3);
                if (! claims.contains(1) && ! claims.contains(2) && ! claims.contains(3))
                    continue;
                ++p3;
                if (claims.contains(1))
                    continue;
                CHECK(pair.u < m);
                CHECK(pair.v >= m);
                CHECK(has_edge(rc.g3, pair.u, pair.v));
            }
        CHECK(rc.report.p_le_3_size == p3);
        CHECK(s.p_le_3_in_g3);
        CHECK(s.containment_failures.empty());
    }
}

TEST_CASE("random construction with triangle cliques")
{
    auto p = params(2, 5, 12);
    p.alpha = Rational(1, 2);
    p.mu = Rational(1, 2);
    auto rc = random_packing_construction(p);
    CHECK(rc.stats.is_matching);
    CHECK(rc.report.all_free());
    CHECK(rc.report.graph.uniformity() == 5);
    CHECK(! oracle::girth(rc.packing.k1, p.girth_cap));
    CHECK(rc.stats.p_le_3_in_g3);
}

TEST_CASE("empty samples are reported, not thrown")
{
    auto p = params(1, 6, 6);
    p.alpha = Rational(1, 1000);
    auto rc = random_packing_construction(p);
    CHECK(rc.stats.empty_packing);
    CHECK(rc.report.graph.size() == 0);
    CHECK(rc.report.all_free());
}
