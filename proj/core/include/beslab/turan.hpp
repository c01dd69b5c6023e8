#pragma once

#include <beslab/configuration.hpp>
#include <beslab/hypergraph.hpp>
#include <beslab/rational.hpp>

#include <chrono>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace beslab
{
    struct TuranResult
    {
        std::size_t value = 0;
        Hypergraph witness;
        std::uint64_t nodes_explored = 0;
        std::chrono::nanoseconds elapsed{0};
    };

    // The instance is above the search cap; carries a greedy lower bound.
    class TooLarge : public std::runtime_error
    {
    private:
        TuranResult _lower_bound;

    public:
        TooLarge(const std::string & what, TuranResult lower_bound);

        auto lower_bound() const -> const TuranResult & { return _lower_bound; }
    };

    struct TuranOptions
    {
        // Search above the default vertex cap anyway.
        bool ignore_cap = false;
    };

    // Largest n searched without ignore_cap: 9 for r = 3, 8 for r = 4.
    auto turan_cap(int r) -> int;

    // Largest n-vertex r-graph with no k edges spanning at most s vertices.
    auto exact_turan(int r, int n, int s, int k, TuranOptions options = {}) -> TuranResult;

    // Largest n-vertex G^(r)_k-free r-graph.
    auto exact_turan_family(int r, int n, int k, TuranOptions options = {}) -> TuranResult;

    // Largest n-vertex r-graph avoiding every query; the engine behind both searches above.
    auto exact_turan_queries(int r, int n, const std::vector<ConfigQuery> & queries, TuranOptions options = {}) -> TuranResult;

    // Counting bound: each query (l, s) allows at most l-1 edges inside any s-set.
    auto averaging_bound(int r, int n, const std::vector<ConfigQuery> & queries) -> std::size_t;

    // Append-only result table. Records are "@ kind r n s k value nodes" followed by the witness.
    class TuranCache
    {
    public:
        struct Key
        {
            std::string kind;
            int r, n, s, k;

            auto operator==(const Key &) const -> bool = default;
        };

    private:
        std::filesystem::path _path;
        std::vector<std::pair<Key, TuranResult>> _records;

    public:
        explicit TuranCache(std::filesystem::path path);

        auto lookup(const Key & key) const -> std::optional<TuranResult>;

        void store(const Key & key, const TuranResult & result);

        auto size() const -> std::size_t { return _records.size(); }
    };

    struct SweepRow
    {
        int n = 0;
        std::size_t plain = 0;
        std::size_t family = 0;
        std::vector<std::pair<std::string, std::size_t>> constructions;
        Rational certify_bound;
        bool certified = false;
    };

    struct SweepReport
    {
        int r = 0, k = 0, n_max = 0;
        std::vector<SweepRow> rows;
        std::vector<std::string> failures;

        auto passed() const -> bool { return failures.empty(); }
    };

    // For n in [r, n_max]: family value <= plain value at s = (r-2)k+2, every applicable construction
    // restricted to [0,n) is free with at most the family value, and certify's bound on the family
    // witness is at least the family value.
    auto consistency_sweep(int r, int k, int n_max) -> SweepReport;
}
