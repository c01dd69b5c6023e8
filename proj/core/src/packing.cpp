#include <beslab/configuration.hpp>
#include <beslab/packing.hpp>

#include <algorithm>
#include <cmath>
#include <set>

namespace beslab
{
    void RandomParams::validate() const
    {
        if (r < 4)
            throw std::invalid_argument("the random construction needs r >= 4");
        if (m < r)
            throw std::invalid_argument("the random construction needs m >= r");
        if (alpha <= 0 || alpha >= 1)
            throw std::invalid_argument("alpha must lie in (0,1)");
        if (mu <= 0 || mu >= 1)
            throw std::invalid_argument("mu must lie in (0,1)");
        if (girth_cap < 2)
            throw std::invalid_argument("girth cap must be at least 2");
    }

    namespace
    {
        auto splitmix64(std::uint64_t x) -> std::uint64_t
        {
            x += 0x9e3779b97f4a7c15ULL;
            x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
            x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
            return x ^ (x >> 31);
        }

        auto fnv1a(const std::string & s) -> std::uint64_t
        {
            std::uint64_t h = 0xcbf29ce484222325ULL;
            for (unsigned char c : s) {
                h ^= c;
                h *= 0x100000001b3ULL;
            }
            return h;
        }
    }

    StageRng::StageRng(std::uint64_t seed, const std::string & stage) :
        _gen(splitmix64(seed ^ splitmix64(fnv1a(stage))))
    {
    }

    auto StageRng::uniform() -> double
    {
        return static_cast<double>(_gen() >> 11) * 0x1.0p-53;
    }

    auto greedy_clique_packing(const Hypergraph & graph, int arity, int girth_cap) -> CliquePacking
    {
        if (graph.uniformity() != 2)
            throw std::invalid_argument("clique packing needs a 2-graph");
        if (arity < 2)
            throw std::invalid_argument("clique packing needs cliques of order at least 2");

        CliquePacking result;
        result.graph_edges = graph.size();
        int n = graph.vertex_count();
        if (arity == 2) {
            result.cliques = graph;
            result.covered_edges = graph.size();
            return result;
        }

        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (EdgeIndex i = 0; i < graph.size(); ++i) {
            auto e = graph.edge(i);
            adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
        }

        std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
        std::vector<std::vector<Vertex>> accepted;
        Hypergraph packed = Hypergraph::empty(arity, n);

        auto try_accept = [&] (const std::vector<Vertex> & clique) {
            for (std::size_t i = 0; i < clique.size(); ++i)
                for (std::size_t j = i + 1; j < clique.size(); ++j)
                    if (used[clique[i]][clique[j]])
                        return;
            for (int l = 2; l <= girth_cap; ++l) {
                if (static_cast<std::size_t>(l - 1) > packed.size())
                    break;
                auto hit = find_configuration_with_base(packed, l - 1, (arity - 2) * l + 2, clique);
                if (hit)
                    return;
            }
            for (std::size_t i = 0; i < clique.size(); ++i)
                for (std::size_t j = i + 1; j < clique.size(); ++j)
                    used[clique[i]][clique[j]] = used[clique[j]][clique[i]] = true;
            accepted.push_back(clique);
            packed = Hypergraph::build(arity, n, accepted);
        };

        std::vector<Vertex> current;
        auto extend = [&] (auto & self, Vertex from) -> void {
            if (static_cast<int>(current.size()) == arity) {
                try_accept(current);
                return;
            }
            for (Vertex v = from; v < n; ++v) {
                if (! std::all_of(current.begin(), current.end(), [&] (Vertex u) { return adj[u][v]; }))
                    continue;
                current.push_back(v);
                self(self, v + 1);
                current.pop_back();
            }
        };
        extend(extend, 0);

        result.cliques = packed;
        result.covered_edges = accepted.size() * arity * (arity - 1) / 2;
        return result;
    }

    auto random_construction_queries(int r) -> std::vector<ConfigQuery>
    {
        return {{2, 2 * r - 3}, {3, 3 * r - 5}, {3, 3 * r - 4}, {4, 4 * r - 7}, {5, 5 * r - 8}, {6, 6 * r - 11}, {7, 7 * r - 12}};
    }

    auto random_packing_construction(const RandomParams & p) -> RandomConstruction
    {
        p.validate();
        RandomConstruction out;
        auto & stats = out.stats;
        int r = p.r, m = p.m, a = r - 2;

        // G1 and its mirror G2 = G1 + m.
        stats.beta_threshold = std::pow(to_double(p.alpha), 0.75);
        {
            StageRng rng(p.seed, "G1");
            std::vector<std::vector<Vertex>> edges;
            for (Vertex u = 0; u < m; ++u)
                for (Vertex v = u + 1; v < m; ++v)
                    if (rng.accept(stats.beta_threshold))
                        edges.push_back({u, v});
            out.g1 = Hypergraph::build(2, m, edges);
        }
        stats.g1_edges = out.g1.size();

        auto packing = greedy_clique_packing(out.g1, a, p.girth_cap);
        stats.packing_size = packing.cliques.size();
        stats.coverage = stats.g1_edges == 0 ? Rational(0)
            : Rational(static_cast<long long>(packing.covered_edges), static_cast<long long>(stats.g1_edges));

        auto k1 = packing.cliques.with_vertex_count(2 * m);
        std::vector<std::vector<Vertex>> mirrored;
        for (auto e : k1.edges()) {
            for (auto & v : e)
                v += m;
            mirrored.push_back(e);
        }
        auto k2 = Hypergraph::build(a, 2 * m, mirrored);

        // Bipartite G3 between A1 and A2.
        std::vector<std::vector<bool>> g3(m, std::vector<bool>(m, false));
        {
            StageRng rng(p.seed, "G3");
            double threshold = to_double(p.alpha);
            std::vector<std::vector<Vertex>> edges;
            for (Vertex u = 0; u < m; ++u)
                for (Vertex v = 0; v < m; ++v)
                    if (rng.accept(threshold)) {
                        g3[u][v] = true;
                        edges.push_back({u, m + v});
                    }
            out.g3 = Hypergraph::build(2, 2 * m, edges);
        }
        stats.g3_edges = out.g3.size();

        PackingPair h{k1, k2, {}};
        for (EdgeIndex i = 0; i < k1.size(); ++i)
            for (EdgeIndex j = 0; j < k2.size(); ++j) {
                bool all = true;
                for (auto u : k1.edge(i))
                    for (auto v : k2.edge(j))
                        all = all && g3[u][v - m];
                if (all)
                    h.h_edges.emplace_back(i, j);
            }
        stats.h_edges = h.h_edges.size();

        std::vector<EdgeSet> conflicts;
        for (const auto & fam : ConflictFamily::all()) {
            auto found = enumerate_conflicts(h, fam);
            stats.conflicts.emplace_back(fam.name(), found.size());
            conflicts.insert(conflicts.end(), found.begin(), found.end());
        }

        Rational alpha_power = 1;
        for (int i = 0; i < a * a; ++i)
            alpha_power *= p.alpha;
        stats.d = alpha_power * static_cast<long long>(k1.size());
        stats.empty_packing = k1.size() == 0 || h.h_edges.empty();

        std::vector<bool> chosen(h.h_edges.size(), false);
        if (! stats.empty_packing) {
            Rational prob = p.mu / stats.d;
            stats.selection_threshold = prob >= 1 ? 1.0 : to_double(prob);
            stats.expected_selected = (prob >= 1 ? Rational(1) : prob) * static_cast<long long>(h.h_edges.size());
            StageRng rng(p.seed, "select");
            for (std::size_t i = 0; i < h.h_edges.size(); ++i)
                chosen[i] = rng.accept(stats.selection_threshold);
        }
        stats.selected = std::count(chosen.begin(), chosen.end(), true);

        std::vector<int> load1(k1.size(), 0), load2(k2.size(), 0);
        for (std::size_t i = 0; i < h.h_edges.size(); ++i)
            if (chosen[i]) {
                ++load1[h.h_edges[i].first];
                ++load2[h.h_edges[i].second];
            }
        std::vector<bool> keep = chosen;
        for (std::size_t i = 0; i < h.h_edges.size(); ++i)
            if (chosen[i] && (load1[h.h_edges[i].first] > 1 || load2[h.h_edges[i].second] > 1)) {
                keep[i] = false;
                ++stats.dropped_overlap;
            }
        for (const auto & c : conflicts)
            if (std::all_of(c.begin(), c.end(), [&] (std::size_t i) { return chosen[i]; }))
                for (auto i : c)
                    if (keep[i]) {
                        keep[i] = false;
                        ++stats.dropped_conflict;
                    }

        for (std::size_t i = 0; i < h.h_edges.size(); ++i)
            if (keep[i])
                stats.matching.push_back(h.h_edges[i]);
        stats.matching_size = stats.matching.size();

        std::set<EdgeIndex> seen1, seen2;
        for (auto [i, j] : stats.matching)
            stats.is_matching = seen1.insert(i).second && seen2.insert(j).second && stats.is_matching;

        std::vector<std::vector<Vertex>> f_edges;
        int n = 2 * m;
        for (auto [i, j] : stats.matching) {
            Vertex x = n++, y = n++;
            for (auto side : {k1.edge(i), k2.edge(j)}) {
                std::vector<Vertex> e(side.begin(), side.end());
                e.push_back(x);
                e.push_back(y);
                f_edges.push_back(e);
            }
        }
        auto f = Hypergraph::build(r, n, f_edges);

        auto & report = out.report;
        report.graph = f;
        report.k = p.k;
        report.freeness = freeness_facts(f, random_construction_queries(r));
        auto p1 = shadow(f);
        auto p3 = claimed_pairs_up_to(f, 3);
        report.shadow_size = p1.size();
        report.p_le_3_size = p3.size();
        auto ratio = ratio_of(f, p.k / 2);
        report.p_le_half_k_size = ratio.pairs.size();
        report.ratio = ratio.ratio;

        for (auto pair : p3) {
            if (p1.contains(pair))
                continue;
            bool ok = pair.u < m && pair.v >= m && pair.v < 2 * m && g3[pair.u][pair.v - m];
            if (! ok)
                stats.containment_failures.push_back(pair);
        }
        stats.p_le_3_in_g3 = stats.containment_failures.empty();

        out.packing = std::move(h);
        return out;
    }
}
