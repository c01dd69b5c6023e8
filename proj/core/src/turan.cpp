#include <beslab/constructions.hpp>
#include <beslab/structure.hpp>
#include <beslab/text_format.hpp>
#include <beslab/turan.hpp>
#include <beslab/weights.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace beslab
{
    TooLarge::TooLarge(const std::string & what, TuranResult lower_bound) :
        std::runtime_error(what),
        _lower_bound(std::move(lower_bound))
    {
    }

    auto turan_cap(int r) -> int
    {
        switch (r) {
            case 1: return 16;
            case 2: return 10;
            case 3: return 9;
            default: return 8;
        }
    }

    namespace
    {
        using Mask = std::uint32_t;

        auto binomial(int n, int k) -> BigInt
        {
            if (k < 0 || k > n)
                return 0;
            BigInt result = 1;
            for (int i = 1; i <= k; ++i)
                result = result * (n - k + i) / i;
            return result;
        }

        // All r-subsets of [0,n) in colex order.
        auto colex_edges(int r, int n) -> std::vector<Mask>
        {
            std::vector<Mask> result;
            if (r > n)
                return result;
            for (Mask m = 0; m < (Mask{1} << n); ++m)
                if (std::popcount(m) == r)
                    result.push_back(m);
            return result;
        }

        auto vertices_of(Mask m) -> std::vector<Vertex>
        {
            std::vector<Vertex> result;
            for (Vertex v = 0; m; ++v, m >>= 1)
                if (m & 1)
                    result.push_back(v);
            return result;
        }

        auto to_hypergraph(int r, int n, const std::vector<Mask> & edges) -> Hypergraph
        {
            std::vector<std::vector<Vertex>> raw;
            for (auto e : edges)
                raw.push_back(vertices_of(e));
            return Hypergraph::build(r, n, raw);
        }

        class Search
        {
        private:
            int _r, _n;
            std::vector<ConfigQuery> _queries;
            std::vector<Mask> _edges;
            std::vector<Mask> _chosen;
            std::vector<Mask> _best;
            std::size_t _upper;
            std::uint64_t _nodes = 0;
            bool _done = false;

            auto within(std::size_t start, int need, Mask used, int budget) const -> bool
            {
                if (need == 0)
                    return true;
                for (std::size_t j = start; j + need <= _chosen.size(); ++j) {
                    Mask u = used | _chosen[j];
                    if (std::popcount(u) <= budget && within(j + 1, need - 1, u, budget))
                        return true;
                }
                return false;
            }

            // Whether adding e to the chosen edges keeps every query avoided.
            auto addable(Mask e) const -> bool
            {
                for (const auto & q : _queries) {
                    if (q.max_vertices < _r || static_cast<std::size_t>(q.edge_count - 1) > _chosen.size())
                        continue;
                    if (within(0, q.edge_count - 1, e, q.max_vertices))
                        return false;
                }
                return true;
            }

            void recurse(const std::vector<Mask> & candidates)
            {
                ++_nodes;
                if (_chosen.size() > _best.size()) {
                    _best = _chosen;
                    if (_best.size() >= _upper) {
                        _done = true;
                        return;
                    }
                }
                for (std::size_t i = 0; i < candidates.size() && ! _done; ++i) {
                    if (_chosen.size() + (candidates.size() - i) <= _best.size())
                        return;
                    _chosen.push_back(candidates[i]);
                    std::vector<Mask> next;
                    for (std::size_t j = i + 1; j < candidates.size(); ++j)
                        if (addable(candidates[j]))
                            next.push_back(candidates[j]);
                    recurse(next);
                    _chosen.pop_back();
                }
            }

        public:
            Search(int r, int n, std::vector<ConfigQuery> queries) :
                _r(r),
                _n(n),
                _queries(std::move(queries)),
                _edges(colex_edges(r, n)),
                _upper(averaging_bound(r, n, _queries))
            {
            }

            auto greedy() -> std::vector<Mask>
            {
                _chosen.clear();
                for (auto e : _edges)
                    if (addable(e))
                        _chosen.push_back(e);
                auto result = _chosen;
                _chosen.clear();
                return result;
            }

            auto run() -> std::vector<Mask>
            {
                if (_edges.empty() || _upper == 0 || ! addable(_edges.front()))
                    return {};
                // Any nonempty answer relabels to one containing {0,...,r-1}, the first colex edge.
                _chosen.push_back(_edges.front());
                std::vector<Mask> candidates;
                for (std::size_t j = 1; j < _edges.size(); ++j)
                    if (addable(_edges[j]))
                        candidates.push_back(_edges[j]);
                recurse(candidates);
                _chosen.clear();
                return _best;
            }

            auto nodes() const -> std::uint64_t { return _nodes; }
        };
    }

    auto averaging_bound(int r, int n, const std::vector<ConfigQuery> & queries) -> std::size_t
    {
        BigInt best = binomial(n, r);
        for (const auto & q : queries) {
            int s = std::min(q.max_vertices, n);
            if (s < r)
                continue;
            BigInt bound = (q.edge_count - 1) * binomial(n, s) / binomial(n - r, s - r);
            best = std::min(best, bound);
        }
        return best.convert_to<std::size_t>();
    }

    auto exact_turan_queries(int r, int n, const std::vector<ConfigQuery> & queries, TuranOptions options) -> TuranResult
    {
        if (r < 1 || n < r)
            throw std::invalid_argument("exact Turan search needs 1 <= r <= n");
        if (n > 31)
            throw std::invalid_argument("exact Turan search supports at most 31 vertices");

        auto start = std::chrono::steady_clock::now();
        Search search(r, n, queries);
        TuranResult result;
        if (n > turan_cap(r) && ! options.ignore_cap) {
            auto edges = search.greedy();
            result.value = edges.size();
            result.witness = to_hypergraph(r, n, edges);
            result.elapsed = std::chrono::steady_clock::now() - start;
            throw TooLarge("n = " + std::to_string(n) + " is above the cap " + std::to_string(turan_cap(r))
                    + " for r = " + std::to_string(r), result);
        }

        auto edges = search.run();
        result.value = edges.size();
        std::sort(edges.begin(), edges.end());
        result.witness = to_hypergraph(r, n, edges);
        result.nodes_explored = search.nodes();
        result.elapsed = std::chrono::steady_clock::now() - start;

        for (const auto & q : queries)
            if (find_configuration(result.witness, q))
                throw std::logic_error("Turan witness contains a forbidden configuration");
        return result;
    }

    auto exact_turan(int r, int n, int s, int k, TuranOptions options) -> TuranResult
    {
        if (k < 1)
            throw std::invalid_argument("exact Turan search needs k >= 1");
        return exact_turan_queries(r, n, {{k, s}}, options);
    }

    auto exact_turan_family(int r, int n, int k, TuranOptions options) -> TuranResult
    {
        if (k < 2)
            throw std::invalid_argument("the family needs k >= 2");
        return exact_turan_queries(r, n, family_queries(r, k), options);
    }

    TuranCache::TuranCache(std::filesystem::path path) :
        _path(std::move(path))
    {
        std::ifstream in(_path);
        if (! in)
            return;

        std::string line;
        std::optional<std::pair<Key, TuranResult>> pending;
        std::string body;
        auto flush = [&] {
            if (pending) {
                pending->second.witness = parse_hypergraph(body);
                _records.push_back(std::move(*pending));
            }
            pending.reset();
            body.clear();
        };
        while (std::getline(in, line)) {
            if (line.starts_with("@")) {
                flush();
                std::istringstream fields(line.substr(1));
                Key key;
                TuranResult result;
                if (! (fields >> key.kind >> key.r >> key.n >> key.s >> key.k >> result.value >> result.nodes_explored))
                    throw ParseError("bad cache record '" + line + "'");
                pending.emplace(key, result);
            }
            else
                body += line + "\n";
        }
        flush();
    }

    auto TuranCache::lookup(const Key & key) const -> std::optional<TuranResult>
    {
        for (const auto & [k, v] : _records)
            if (k == key)
                return v;
        return std::nullopt;
    }

    void TuranCache::store(const Key & key, const TuranResult & result)
    {
        if (lookup(key))
            return;
        std::ofstream out(_path, std::ios::app);
        if (! out)
            throw std::runtime_error("cannot append to " + _path.string());
        out << "@ " << key.kind << ' ' << key.r << ' ' << key.n << ' ' << key.s << ' ' << key.k << ' '
            << result.value << ' ' << result.nodes_explored << '\n'
            << to_text(result.witness);
        _records.emplace_back(key, result);
    }

    namespace
    {
        auto induced_prefix(const Hypergraph & g, int n) -> Hypergraph
        {
            std::vector<std::vector<Vertex>> kept;
            for (auto e : g.edges())
                if (std::all_of(e.begin(), e.end(), [&] (Vertex v) { return v < n; }))
                    kept.push_back(e);
            return Hypergraph::build(g.uniformity(), n, kept);
        }

        auto sweep_constructions(int r, int k) -> std::vector<std::pair<std::string, Hypergraph>>
        {
            std::vector<std::pair<std::string, Hypergraph>> result;
            result.emplace_back("single-edge", single_edge(r));
            if (k >= 3)
                result.emplace_back("diamond", diamond(r));
            if (r == 3 && (k == 5 || k == 7))
                result.emplace_back("diamond-star", diamond_star(8));
            if (r == 3 && k == 6)
                result.emplace_back("f63", f63());
            return result;
        }
    }

    auto consistency_sweep(int r, int k, int n_max) -> SweepReport
    {
        SweepReport report{r, k, n_max, {}, {}};
        int s = (r - 2) * k + 2;
        std::optional<WeightRule> rule;
        try {
            rule = WeightRule::for_problem(r, k);
        }
        catch (const UnknownLimit &) {
        }

        auto fail = [&] (int n, const std::string & what) {
            report.failures.push_back("n=" + std::to_string(n) + ": " + what);
        };

        for (int n = r; n <= n_max; ++n) {
            SweepRow row;
            row.n = n;
            auto plain = exact_turan(r, n, s, k);
            auto family = exact_turan_family(r, n, k);
            row.plain = plain.value;
            row.family = family.value;
            if (row.family > row.plain)
                fail(n, "family value " + std::to_string(row.family) + " exceeds plain value " + std::to_string(row.plain));

            for (const auto & [name, g] : sweep_constructions(r, k)) {
                auto piece = induced_prefix(g, std::min(n, g.vertex_count())).with_vertex_count(n);
                row.constructions.emplace_back(name, piece.size());
                if (! is_family_free(piece, k))
                    fail(n, name + " restricted to " + std::to_string(n) + " vertices is not free");
                else if (piece.size() > row.family)
                    fail(n, name + " gives " + std::to_string(piece.size()) + " edges, above the exact value");
            }

            if (rule) {
                auto cert = certify(family.witness, *rule);
                row.certify_bound = cert.edge_bound;
                row.certified = cert.certified;
                if (! cert.certified)
                    fail(n, "certify rejected the extremal witness");
                if (cert.edge_bound < static_cast<long long>(row.family))
                    fail(n, "certify bound " + to_string(cert.edge_bound) + " is below the exact value");
            }
            report.rows.push_back(std::move(row));
        }
        return report;
    }
}
