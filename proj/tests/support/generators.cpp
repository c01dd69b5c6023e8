#include "generators.hpp"

#include <beslab/structure.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace beslab::gen
{
    namespace
    {
        auto shares(const Hypergraph & g, EdgeIndex a, EdgeIndex b) -> bool
        {
            for (auto v : g.edge(a))
                for (auto w : g.edge(b))
                    if (v == w)
                        return true;
            return false;
        }

        auto random_edge(Rng & rng, int r, int n) -> std::vector<Vertex>
        {
            std::vector<Vertex> all(n);
            std::iota(all.begin(), all.end(), 0);
            std::shuffle(all.begin(), all.end(), rng);
            std::vector<Vertex> e(all.begin(), all.begin() + r);
            std::sort(e.begin(), e.end());
            return e;
        }
    }

    auto random_hypergraph(Rng & rng, int r, int n, int m) -> Hypergraph
    {
        std::set<std::vector<Vertex>> edges;
        double total = 1;
        for (int i = 0; i < r; ++i)
            total = total * (n - i) / (i + 1);
        int target = static_cast<int>(std::min<double>(m, total));
        while (static_cast<int>(edges.size()) < target)
            edges.insert(random_edge(rng, r, n));
        return Hypergraph::build(r, n, {edges.begin(), edges.end()});
    }

    auto random_free_graph(Rng & rng, int r, int n, int k, int max_edges, double pair_bias, int attempts) -> Hypergraph
    {
        auto g = Hypergraph::empty(r, n);
        std::uniform_real_distribution<double> coin(0, 1);
        for (int tries = 0; tries < attempts && static_cast<int>(g.size()) < max_edges; ++tries) {
            std::vector<Vertex> e;
            if (! g.empty() && coin(rng) < pair_bias) {
                auto host = g.edge(std::uniform_int_distribution<std::size_t>(0, g.size() - 1)(rng));
                std::vector<Vertex> pick(host.begin(), host.end());
                std::shuffle(pick.begin(), pick.end(), rng);
                std::set<Vertex> chosen{pick[0], pick[1]};
                std::uniform_int_distribution<Vertex> any(0, n - 1);
                while (static_cast<int>(chosen.size()) < r)
                    chosen.insert(any(rng));
                e.assign(chosen.begin(), chosen.end());
            }
            else
                e = random_edge(rng, r, n);
            if (g.find_edge(e) != g.size())
                continue;
            auto next = g.with_edge(e);
            if (is_family_free(next, k))
                g = next;
        }
        return g;
    }

    auto relabel_randomly(Rng & rng, const Hypergraph & g) -> Hypergraph
    {
        std::vector<Vertex> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        return g.relabel(perm);
    }

    auto set_partitions(int m, int max_parts) -> std::vector<std::vector<std::vector<int>>>
    {
        std::vector<std::vector<std::vector<int>>> result;
        std::vector<std::vector<int>> blocks;
        std::function<void (int)> place = [&] (int x) {
            if (x == m) {
                result.push_back(blocks);
                return;
            }
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                blocks[b].push_back(x);
                place(x + 1);
                blocks[b].pop_back();
            }
            if (static_cast<int>(blocks.size()) < max_parts) {
                blocks.push_back({x});
                place(x + 1);
                blocks.pop_back();
            }
        };
        place(0);
        return result;
    }

    void connected_subsets(const Hypergraph & g, std::size_t max_size, const std::function<void (const EdgeSet &)> & fn)
    {
        std::vector<std::vector<EdgeIndex>> adj(g.size());
        for (EdgeIndex a = 0; a < g.size(); ++a)
            for (EdgeIndex b = 0; b < g.size(); ++b)
                if (a != b && shares(g, a, b))
                    adj[a].push_back(b);

        for (EdgeIndex root = 0; root < g.size(); ++root) {
            EdgeSet current{root};
            auto grow = [&] (auto & self, std::vector<EdgeIndex> extension) -> void {
                fn(current);
                if (current.size() == max_size)
                    return;
                while (! extension.empty()) {
                    auto w = extension.back();
                    extension.pop_back();
                    auto next = extension;
                    for (auto u : adj[w]) {
                        if (u <= root || std::find(current.begin(), current.end(), u) != current.end())
                            continue;
                        bool near = false;
                        for (auto c : current)
                            if (c == u || shares(g, c, u))
                                near = true;
                        if (! near && std::find(next.begin(), next.end(), u) == next.end())
                            next.push_back(u);
                    }
                    current.push_back(w);
                    self(self, next);
                    current.pop_back();
                }
            };
            std::vector<EdgeIndex> start;
            for (auto u : adj[root])
                if (u > root)
                    start.push_back(u);
            grow(grow, start);
        }
    }
}
