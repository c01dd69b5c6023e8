#include <beslab/claims.hpp>
#include <beslab/configuration.hpp>
#include <beslab/constructions.hpp>
#include <beslab/parallel.hpp>
#include <beslab/structure.hpp>

#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace beslab;

namespace
{
    auto to_std(const ClaimSet & c) -> std::set<int>
    {
        auto m = c.members();
        return {m.begin(), m.end()};
    }

    // Random i-tree: each new edge takes a random shadow pair and r-2 fresh vertices.
    auto random_tree(gen::Rng & rng, int r, int i, bool path) -> Hypergraph
    {
        std::vector<std::vector<Vertex>> edges;
        std::vector<Vertex> first(r);
        for (int v = 0; v < r; ++v)
            first[v] = v;
        edges.push_back(first);
        Vertex next = r;
        PairSet earlier;
        while (static_cast<int>(edges.size()) < i) {
            std::vector<Pair> choices;
            if (path) {
                for (auto p : pairs_of(edges.back()))
                    if (! earlier.contains(p))
                        choices.push_back(p);
            }
            else
                for (const auto & e : edges)
                    for (auto p : pairs_of(e))
                        choices.push_back(p);
            auto p = choices[std::uniform_int_distribution<std::size_t>(0, choices.size() - 1)(rng)];
            std::vector<Vertex> e{p.u, p.v};
            for (int j = 0; j < r - 2; ++j)
                e.push_back(next++);
            std::sort(e.begin(), e.end());
            for (auto q : pairs_of(edges.back()))
                earlier.insert(q);
            edges.push_back(e);
        }
        auto g = Hypergraph::build(r, next, edges);
        return gen::relabel_randomly(rng, g);
    }

    auto diamond3() -> Hypergraph
    {
        // {x y a, x y b} with a = 0, b = 1, x = 2, y = 3.
        return Hypergraph::build(3, 4, {{2, 3, 0}, {2, 3, 1}});
    }
}

TEST_CASE("shadow examples")
{
    CHECK(shadow(single_edge(3)).size() == 3);
    CHECK(shadow(diamond(3)).size() == 5);
    auto path = Hypergraph::build(4, 8, {{0, 1, 2, 3}, {2, 3, 4, 5}, {4, 5, 6, 7}});
    CHECK(classify_tree(path).kind == TreeKind::Path);
    CHECK(shadow(path).size() == 16);
}

TEST_CASE("claim set examples")
{
    CHECK(to_std(claim_set(diamond3(), Pair::of(0, 1), 3)) == std::set<int>{0, 2});
    CHECK(to_std(claim_set(f63(), Pair::of(0, 1), 0)) == std::set<int>{0});
    CHECK(to_std(claim_set(Hypergraph::empty(3, 5), Pair::of(0, 4), 4)) == std::set<int>{0});
    auto path = Hypergraph::build(3, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}});
    CHECK(claim_set(path, Pair::of(0, 4), 3).contains(3));
    CHECK(! claim_set(path, Pair::of(0, 4), 3).contains(2));
    // A pair outside V(F) can still be claimed by a dense piece.
    auto dense = Hypergraph::build(3, 6, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    CHECK(claims(dense, Pair::of(0, 5), 3));
}

TEST_CASE("claimed pairs examples")
{
    CHECK(claimed_pairs(diamond(3), 2).size() == 6);
    CHECK(claimed_pairs(single_edge(3), 2).empty());
    CHECK(claimed_pairs(f63(), 1).size() == 153);
    CHECK(claimed_pairs(f63(), 1) == shadow(f63()));
    CHECK(one_bar_two(diamond(3)).size() == 1);
    CHECK(one_bar_two(Hypergraph::build(3, 5, {{0, 1, 2}, {1, 2, 3}, {2, 3, 4}})).size() == 2);
    CHECK(one_bar_two(Hypergraph::build(3, 6, {{0, 1, 2}, {3, 4, 5}})).empty());
}

TEST_CASE("configuration search examples")
{
    CHECK(find_configuration(diamond3(), {2, 4}));
    CHECK(! find_configuration(f63(), {6, 8}));
    CHECK(! find_configuration(diamond_star(3), {5, 7}));
    CHECK(find_configuration(diamond_star(3), {5, 8}));
    CHECK(*find_configuration(diamond_star(3), {2, 4}) == EdgeSet{0, 3});
}

TEST_CASE("family freeness examples")
{
    CHECK(is_family_free(diamond_star(2), 5));
    CHECK(is_family_free(f63(), 6));
    auto close = Hypergraph::build(4, 5, {{0, 1, 2, 3}, {0, 1, 2, 4}});
    auto result = is_family_free(close, 3);
    REQUIRE(! result);
    CHECK(result.witness->query.edge_count == 2);
    CHECK(result.witness->query.max_vertices == 5);
    auto close3 = Hypergraph::build(3, 5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    auto r3 = is_family_free(close3, 3);
    REQUIRE(! r3);
    CHECK(r3.witness->query.edge_count == 3);
    CHECK(r3.witness->query.max_vertices == 5);
    CHECK(family_queries(3, 5).size() == 4);
}

TEST_CASE("girth examples")
{
    CHECK(girth(diamond3(), 8) == 2);
    auto pasch = Hypergraph::build(3, 6, {{0, 1, 2}, {0, 3, 4}, {1, 3, 5}, {2, 4, 5}});
    CHECK(girth(pasch, 8) == 4);
    CHECK(! girth(Hypergraph::build(2, 3, {{0, 1}, {1, 2}, {0, 2}}), 8));
    CHECK(! girth(Hypergraph::build(3, 6, {{0, 1, 2}, {3, 4, 5}}), 8));
}

TEST_CASE("defect examples")
{
    CHECK(defect(Hypergraph::build(3, 5, {{0, 1, 2}, {2, 3, 4}})) == 1);
    CHECK(defect(Hypergraph::build(3, 6, {{0, 1, 2}, {3, 4, 5}})) == 0);
    CHECK(defect(Hypergraph::build(3, 6, {{0, 1, 2}, {2, 3, 4}, {4, 5, 0}})) == 3);
    CHECK(defect(Hypergraph::empty(3, 4)) == 0);
}

TEST_CASE("tree classification examples")
{
    CHECK(classify_tree(single_edge(3)) == TreeShape{TreeKind::Path, 1});
    CHECK(classify_tree(diamond(3)) == TreeShape{TreeKind::Path, 2});
    auto fan = Hypergraph::build(3, 5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}});
    CHECK(classify_tree(fan) == TreeShape{TreeKind::Tree, 3});
    CHECK(oracle::tree_shape(fan) == TreeShape{TreeKind::Tree, 3});
    CHECK(classify_tree(Hypergraph::build(3, 6, {{0, 1, 2}, {3, 4, 5}})).kind == TreeKind::NotTree);
    CHECK(classify_tree(Hypergraph::empty(3, 3)).kind == TreeKind::NotTree);
}

TEST_CASE("configuration search matches the naive search")
{
    gen::Rng rng(2024);
    for (int round = 0; round < 400; ++round) {
        int r = 3 + round % 2;
        int n = 6 + round % 5;
        auto g = gen::random_hypergraph(rng, r, n, 1 + round % 10);
        int count = 1 + round % 5;
        int max_vertices = r + round % (2 * r);
        auto got = find_configuration(g, {count, max_vertices});
        auto want = oracle::find(g, count, max_vertices);
        REQUIRE(got.has_value() == want.has_value());
        if (got)
            CHECK(*got == *want);

        std::vector<Vertex> base{0, 1};
        auto with_base = find_configuration_with_base(g, count, max_vertices, base);
        auto want_base = oracle::find(g, count, max_vertices, base);
        REQUIRE(with_base.has_value() == want_base.has_value());
        if (with_base)
            CHECK(*with_base == *want_base);
    }
}

TEST_CASE("configuration witnesses do not depend on the worker count")
{
    gen::Rng rng(77);
    for (int round = 0; round < 60; ++round) {
        auto g = gen::random_hypergraph(rng, 3, 12, 40 + round);
        ConfigQuery q{3 + round % 3, 5 + round % 4};
        set_worker_limit(1);
        auto one = find_configuration(g, q);
        set_worker_limit(4);
        auto four = find_configuration(g, q);
        set_worker_limit(1);
        CHECK(one == four);
    }
}

TEST_CASE("visitor sees every configuration once")
{
    gen::Rng rng(5);
    for (int round = 0; round < 100; ++round) {
        auto g = gen::random_hypergraph(rng, 3, 7, 8);
        int count = 1 + round % 4;
        int s = 3 + round % 6;
        std::vector<EdgeSet> seen;
        for_each_configuration(g, count, s, [&] (std::span<const EdgeIndex> edges, int spanned) {
            seen.emplace_back(edges.begin(), edges.end());
            CHECK(spanned == count_union(g, seen.back()));
            return false;
        });
        std::vector<EdgeSet> want;
        oracle::for_each_subset(static_cast<int>(g.size()), count, [&] (const std::vector<int> & sub) {
            if (oracle::span(g, sub) <= s)
                want.emplace_back(sub.begin(), sub.end());
            return false;
        });
        CHECK(seen == want);
    }
}

TEST_CASE("claim sets match the naive definition")
{
    gen::Rng rng(99);
    for (int round = 0; round < 150; ++round) {
        int r = 3 + round % 2;
        auto g = gen::random_hypergraph(rng, r, 7, 1 + round % 7);
        int cap = 1 + round % 5;
        for (Vertex u = 0; u < 7; ++u)
            for (Vertex v = u + 1; v < 7; ++v)
                CHECK(to_std(claim_set(g, Pair::of(u, v), cap)) == oracle::claim_set(g, Pair::of(u, v), cap));
    }
}

TEST_CASE("claim sets grow with the hypergraph")
{
    gen::Rng rng(100);
    for (int round = 0; round < 100; ++round) {
        auto h = gen::random_hypergraph(rng, 3, 8, 8);
        EdgeSet keep;
        for (EdgeIndex e = 0; e < h.size(); ++e)
            if (rng() % 2)
                keep.push_back(e);
        auto f = h.subgraph(keep);
        for (Vertex u = 0; u < 8; ++u)
            for (Vertex v = u + 1; v < 8; ++v) {
                auto p = Pair::of(u, v);
                auto small = claim_set(f, p, 5), big = claim_set(h, p, 5);
                CHECK((small.bits() & ~big.bits()) == 0u);
                CHECK(small.contains(1) == shadow(f).contains(p));
            }
    }
}

TEST_CASE("claimed pair sets agree with claim sets")
{
    gen::Rng rng(101);
    for (int round = 0; round < 60; ++round) {
        auto f = gen::random_free_graph(rng, 3, 9, 6, 8);
        for (int i = 1; i <= 3; ++i) {
            PairSet want;
            auto vs = f.support();
            for (auto p : pairs_of(vs))
                if (claim_set(f, p, i).contains(i))
                    want.insert(p);
            CHECK(claimed_pairs(f, i) == want);
        }
        auto b = one_bar_two(f);
        for (auto p : b)
            CHECK(! shadow(f).contains(p));
        PairSet up_to;
        for (int i = 1; i <= 3; ++i)
            for (auto p : claimed_pairs(f, i))
                up_to.insert(p);
        CHECK(claimed_pairs_up_to(f, 3) == up_to);
    }
}

TEST_CASE("tree sizes")
{
    gen::Rng rng(7);
    for (int round = 0; round < 200; ++round) {
        int r = 3 + round % 3;
        int i = 1 + round % 6;
        auto t = random_tree(rng, r, i, false);
        CHECK(classify_tree(t).kind != TreeKind::NotTree);
        CHECK(static_cast<int>(shadow(t).size()) == i * (r * (r - 1) / 2) - i + 1);
        CHECK(static_cast<int>(one_bar_two(t).size()) >= (i - 1) * (r - 2) * (r - 2));

        auto p = random_tree(rng, r, i, true);
        CHECK(classify_tree(p) == TreeShape{TreeKind::Path, i});
        CHECK(static_cast<int>(one_bar_two(p).size()) == (i - 1) * (r - 2) * (r - 2));
    }
}

TEST_CASE("tree classification matches the recursive definition")
{
    gen::Rng rng(8);
    for (int round = 0; round < 300; ++round) {
        int r = 3 + round % 2;
        Hypergraph g;
        if (round % 3 == 0)
            g = random_tree(rng, r, 1 + round % 6, round % 2 == 0);
        else
            g = gen::random_free_graph(rng, r, 7, 7, 1 + round % 6, 0.9);
        CHECK(classify_tree(g) == oracle::tree_shape(g));
    }
}

TEST_CASE("pair components match union find")
{
    gen::Rng rng(9);
    for (int round = 0; round < 200; ++round) {
        auto g = gen::random_hypergraph(rng, 3 + round % 2, 8, round % 12);
        auto got = pair_components(g);
        CHECK(got == oracle::components(g));
        if (! g.empty())
            CHECK(is_pair_connected(g) == (got.size() == 1));
    }
}

TEST_CASE("girth matches the naive search and ignores labels")
{
    gen::Rng rng(10);
    for (int round = 0; round < 150; ++round) {
        auto g = gen::random_hypergraph(rng, 3 + round % 2, 9, 2 + round % 7);
        auto got = girth(g, 8);
        CHECK(got == oracle::girth(g, 8));
        CHECK(girth(gen::relabel_randomly(rng, g), 8) == got);
    }
}

TEST_CASE("family freeness matches the naive check")
{
    gen::Rng rng(12);
    for (int round = 0; round < 200; ++round) {
        int r = 3 + round % 2;
        int k = 3 + round % 5;
        auto g = gen::random_hypergraph(rng, r, 8, 2 + round % 8);
        CHECK(static_cast<bool>(is_family_free(g, k)) == oracle::family_free(g, k));
        auto f = gen::random_free_graph(rng, r, 9, k, 9);
        CHECK(oracle::family_free(f, k));
    }
}

TEST_CASE("sum sets of claim sets avoid k on free graphs")
{
    gen::Rng rng(13);
    for (int round = 0; round < 80; ++round) {
        int r = 3 + round % 2;
        int k = 5 + round % 3;
        auto g = gen::random_free_graph(rng, r, 8, k, 6);
        int m = static_cast<int>(g.size());
        auto partitions = gen::set_partitions(m, 4);
        auto vs = g.support();
        for (auto p : pairs_of(vs)) {
            for (const auto & blocks : partitions) {
                std::vector<ClaimSet> sets;
                std::vector<std::set<int>> naive;
                for (const auto & b : blocks) {
                    auto part = g.subgraph(EdgeSet(b.begin(), b.end()));
                    sets.push_back(claim_set(part, p, k));
                    naive.push_back(to_std(sets.back()));
                }
                auto s = sum_set(sets, k);
                CHECK(to_std(s) == oracle::sum_set(naive, k));
                CHECK(! s.contains(k));
            }
        }
    }
}
