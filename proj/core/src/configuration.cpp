#include <beslab/configuration.hpp>
#include <beslab/parallel.hpp>

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

namespace beslab
{
    namespace
    {
        // Backtracking over ascending index sequences. Candidate lists only ever shrink: an edge
        // needing more fresh vertices than the remaining budget can never come back, because the
        // budget falls by at least as much as its fresh count does.
        class Search
        {
        private:
            const Hypergraph & _g;
            int _max_vertices;
            const ConfigVisitor & _visit;
            std::vector<int> _count;
            int _used = 0;
            std::vector<EdgeIndex> _chosen;
            std::vector<std::vector<EdgeIndex>> _levels;

            auto fresh(EdgeIndex e) const -> int
            {
                int c = 0;
                for (auto v : _g.edge(e))
                    c += (_count[v] == 0);
                return c;
            }

            void add(EdgeIndex e)
            {
                for (auto v : _g.edge(e))
                    if (_count[v]++ == 0)
                        ++_used;
                _chosen.push_back(e);
            }

            void remove(EdgeIndex e)
            {
                for (auto v : _g.edge(e))
                    if (--_count[v] == 0)
                        --_used;
                _chosen.pop_back();
            }

            void filter(const std::vector<EdgeIndex> & from, std::size_t start, std::vector<EdgeIndex> & into) const
            {
                into.clear();
                int budget = _max_vertices - _used;
                for (std::size_t i = start; i < from.size(); ++i)
                    if (fresh(from[i]) <= budget)
                        into.push_back(from[i]);
            }

            auto recurse(std::size_t depth, int need) -> bool
            {
                const auto & cands = _levels[depth];
                for (std::size_t pos = 0; pos + need <= cands.size(); ++pos) {
                    EdgeIndex e = cands[pos];
                    add(e);
                    bool stop = false;
                    if (need == 1)
                        stop = _visit(_chosen, _used);
                    else {
                        filter(cands, pos + 1, _levels[depth + 1]);
                        if (_levels[depth + 1].size() >= static_cast<std::size_t>(need - 1))
                            stop = recurse(depth + 1, need - 1);
                    }
                    remove(e);
                    if (stop)
                        return true;
                }
                return false;
            }

        public:
            Search(const Hypergraph & g, int max_vertices, const ConfigVisitor & visit, std::span<const Vertex> base) :
                _g(g),
                _max_vertices(max_vertices),
                _visit(visit)
            {
                int size = std::max(g.vertex_count(), 1);
                for (auto v : base)
                    size = std::max(size, v + 1);
                _count.assign(size, 0);
                for (auto v : base)
                    if (_count[v]++ == 0)
                        ++_used;
            }

            // Top-level candidates: pool (or everything) filtered against the base.
            auto roots(const EdgeSet * pool) -> std::vector<EdgeIndex>
            {
                std::vector<EdgeIndex> all;
                if (pool)
                    all = *pool;
                else {
                    all.resize(_g.size());
                    for (EdgeIndex i = 0; i < _g.size(); ++i)
                        all[i] = i;
                }
                std::vector<EdgeIndex> result;
                filter(all, 0, result);
                return result;
            }

            auto run(std::vector<EdgeIndex> roots, int count) -> bool
            {
                if (count <= 0)
                    return _used <= _max_vertices && _visit(_chosen, _used);
                if (_used > _max_vertices)
                    return false;
                _levels.assign(count + 1, {});
                _levels[0] = std::move(roots);
                if (_levels[0].size() < static_cast<std::size_t>(count))
                    return false;
                return recurse(0, count);
            }

            // Only configurations whose smallest index is roots[pos].
            auto run_branch(const std::vector<EdgeIndex> & roots, std::size_t pos, int count) -> bool
            {
                _levels.assign(count + 1, {});
                _levels[0].assign(roots.begin() + pos, roots.begin() + pos + 1);
                std::vector<EdgeIndex> rest(roots.begin() + pos + 1, roots.end());
                EdgeIndex e = roots[pos];
                add(e);
                bool stop = false;
                if (count == 1)
                    stop = _visit(_chosen, _used);
                else {
                    _levels[1].clear();
                    filter(rest, 0, _levels[1]);
                    if (_levels[1].size() >= static_cast<std::size_t>(count - 1))
                        stop = recurse(1, count - 1);
                }
                remove(e);
                return stop;
            }
        };
    }

    auto for_each_configuration(const Hypergraph & g, int count, int max_vertices, const ConfigVisitor & visit,
        std::span<const Vertex> base, const EdgeSet * pool) -> bool
    {
        Search search(g, max_vertices, visit, base);
        return search.run(search.roots(pool), count);
    }

    namespace
    {
        auto find_parallel(const Hypergraph & g, int count, int max_vertices, std::span<const Vertex> base,
            const EdgeSet * pool, unsigned workers) -> std::optional<EdgeSet>
        {
            ConfigVisitor noop = [] (std::span<const EdgeIndex>, int) { return true; };
            std::vector<EdgeIndex> roots = Search(g, max_vertices, noop, base).roots(pool);

            constexpr auto none = std::numeric_limits<std::size_t>::max();
            std::atomic<std::size_t> next{0}, best{none};
            std::mutex lock;
            EdgeSet best_witness;

            auto work = [&] () {
                EdgeSet found;
                ConfigVisitor take = [&] (std::span<const EdgeIndex> edges, int) {
                    found.assign(edges.begin(), edges.end());
                    return true;
                };
                while (true) {
                    std::size_t pos = next.fetch_add(1);
                    if (pos >= roots.size() || pos > best.load())
                        return;
                    Search search(g, max_vertices, take, base);
                    if (search.run_branch(roots, pos, count)) {
                        std::lock_guard guard(lock);
                        if (pos < best.load()) {
                            best.store(pos);
                            best_witness = found;
                        }
                    }
                }
            };

            std::vector<std::thread> threads;
            for (unsigned i = 0; i < workers; ++i)
                threads.emplace_back(work);
            for (auto & t : threads)
                t.join();

            if (best.load() == none)
                return std::nullopt;
            return best_witness;
        }
    }

    auto find_configuration_with_base(const Hypergraph & g, int count, int max_vertices,
        std::span<const Vertex> base, const EdgeSet * pool) -> std::optional<EdgeSet>
    {
        unsigned workers = worker_limit();
        if (workers > 1 && count >= 3 && g.size() >= 32)
            return find_parallel(g, count, max_vertices, base, pool, workers);

        std::optional<EdgeSet> result;
        for_each_configuration(g, count, max_vertices, [&] (std::span<const EdgeIndex> edges, int) {
                result.emplace(edges.begin(), edges.end());
                return true;
            }, base, pool);
        return result;
    }

    auto find_configuration(const Hypergraph & g, ConfigQuery q) -> std::optional<EdgeSet>
    {
        return find_configuration_with_base(g, q.edge_count, q.max_vertices, {});
    }
}
