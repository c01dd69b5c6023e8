#pragma once

#include <beslab/merging.hpp>
#include <beslab/rational.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace beslab
{
    enum class WeightCase
    {
        K5R3,
        K5High,
        K7,
        K6High,
        K63
    };

    auto to_string(WeightCase c) -> std::string;
    auto parse_weight_case(const std::string & name) -> WeightCase;

    struct WeightRule
    {
        WeightCase which = WeightCase::K5R3;
        int r = 3;
        int k = 5;

        // Validates (case, r); k follows from the case.
        static auto make(WeightCase which, int r) -> WeightRule;

        // The rule covering (r, k). Throws UnknownLimit if there is none.
        static auto for_problem(int r, int k) -> WeightRule;

        auto operator==(const WeightRule &) const -> bool = default;
    };

    class WrongStage : public std::logic_error
    {
    public:
        using std::logic_error::logic_error;
    };

    class UnknownLimit : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // f and h on subsets of [5]; sets are given as sorted or unsorted member lists.
    auto f_value(const std::vector<int> & a) -> Rational;
    auto h_value(const std::vector<int> & a) -> Rational;

    // The merge rules that produce the partition a weight rule works on.
    auto stage_rules(const WeightRule & rule) -> std::vector<MergeRule>;
    auto stage_partition(const Hypergraph & g, const WeightRule & rule) -> Partition;

    // The lexicographically smallest pair that the cluster 1̄2-claims and that the rest of the
    // ambient graph neither 1-claims nor 2-claims.
    auto deficit_pair(const Partition & p, std::size_t cluster) -> std::optional<Pair>;

    // Every pair receiving positive weight from the cluster.
    auto weight_map(const Partition & p, std::size_t cluster, const WeightRule & rule) -> std::map<Pair, Rational>;

    auto pair_weight(const Partition & p, std::size_t cluster, Pair pair, const WeightRule & rule) -> Rational;
    auto cluster_weight(const Partition & p, std::size_t cluster, const WeightRule & rule) -> Rational;
    auto lambda(const Partition & p, std::size_t cluster, const WeightRule & rule) -> Rational;

    auto bound_coefficient(const WeightRule & rule) -> Rational;

    struct ClusterWeight
    {
        EdgeIndex id = 0;
        std::size_t edges = 0;
        std::vector<int> composition;
        Rational weight;
        Rational lambda;
    };

    struct WeightReport
    {
        WeightRule rule;
        int vertex_count = 0;
        std::size_t edge_count = 0;
        std::vector<ClusterWeight> per_cluster;
        std::map<Pair, Rational> per_pair;
        Rational bound_coefficient;
        Rational edge_bound;
        bool certified = false;
        std::vector<std::string> failures;
    };

    // Re-checks freeness (throws NotFree), builds the staged partition and checks every λ >= 0 and
    // every per-pair total <= 1.
    auto certify(const Hypergraph & g, const WeightRule & rule) -> WeightReport;

    // lim n^-2 f^(r)(n; rk-2k+2, k) where known. Throws UnknownLimit otherwise.
    auto limit_table(int r, int k) -> Rational;
}
