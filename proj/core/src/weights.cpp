#include <beslab/structure.hpp>
#include <beslab/weights.hpp>

#include <algorithm>

namespace beslab
{
    auto to_string(WeightCase c) -> std::string
    {
        switch (c) {
            case WeightCase::K5R3: return "K5R3";
            case WeightCase::K5High: return "K5High";
            case WeightCase::K7: return "K7";
            case WeightCase::K6High: return "K6High";
            case WeightCase::K63: return "K63";
        }
        return "?";
    }

    auto parse_weight_case(const std::string & name) -> WeightCase
    {
        for (auto c : {WeightCase::K5R3, WeightCase::K5High, WeightCase::K7, WeightCase::K6High, WeightCase::K63})
            if (to_string(c) == name)
                return c;
        throw std::invalid_argument("unknown weight rule '" + name + "'");
    }

    auto WeightRule::make(WeightCase which, int r) -> WeightRule
    {
        switch (which) {
            case WeightCase::K5R3:
                if (r != 3)
                    throw std::invalid_argument("K5R3 needs r = 3");
                return {which, r, 5};
            case WeightCase::K5High:
                if (r < 4)
                    throw std::invalid_argument("K5High needs r >= 4");
                return {which, r, 5};
            case WeightCase::K7:
                if (r < 3)
                    throw std::invalid_argument("K7 needs r >= 3");
                return {which, r, 7};
            case WeightCase::K6High:
                if (r < 4)
                    throw std::invalid_argument("K6High needs r >= 4");
                return {which, r, 6};
            case WeightCase::K63:
                if (r != 3)
                    throw std::invalid_argument("K63 needs r = 3");
                return {which, r, 6};
        }
        throw std::invalid_argument("bad weight case");
    }

    auto WeightRule::for_problem(int r, int k) -> WeightRule
    {
        if (k == 5 && r == 3)
            return make(WeightCase::K5R3, r);
        if (k == 5 && r >= 4)
            return make(WeightCase::K5High, r);
        if (k == 7 && r >= 3)
            return make(WeightCase::K7, r);
        if (k == 6 && r == 3)
            return make(WeightCase::K63, r);
        if (k == 6 && r >= 4)
            return make(WeightCase::K6High, r);
        throw UnknownLimit("no weighting for r=" + std::to_string(r) + ", k=" + std::to_string(k));
    }

    auto f_value(const std::vector<int> & a) -> Rational
    {
        auto set = a;
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        using V = std::vector<int>;
        if (set == V{1} || set == V{1, 4} || set == V{1, 5})
            return Rational(55, 61);
        if (set == V{1, 2} || set == V{1, 3} || set == V{2, 3, 4} || set == V{3, 4})
            return Rational(1);
        if (set == V{2})
            return Rational(25, 61);
        if (set == V{2, 3})
            return Rational(36, 61);
        if (set == V{2, 4})
            return Rational(1, 2);
        if (set == V{3})
            return Rational(6, 61);
        if (set == V{3, 5})
            return Rational(11, 61);
        return Rational(0);
    }

    auto h_value(const std::vector<int> & a) -> Rational
    {
        std::vector<int> set;
        for (auto i : a)
            if (i >= 1 && i <= 5)
                set.push_back(i);
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());

        Rational best = 0;
        for (unsigned mask = 0; mask < (1u << set.size()); ++mask) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < set.size(); ++i)
                if ((mask >> i) & 1u)
                    sub.push_back(set[i]);
            best = std::max(best, f_value(sub));
        }
        return best;
    }

    auto stage_rules(const WeightRule & rule) -> std::vector<MergeRule>
    {
        auto s11 = MergeRule::sets({1}, {1});
        switch (rule.which) {
            case WeightCase::K5R3: return {s11};
            case WeightCase::K5High:
            case WeightCase::K7: return {s11, MergeRule::two_plus()};
            case WeightCase::K6High: return {s11, MergeRule::sets({1}, {2})};
            case WeightCase::K63: return {s11, MergeRule::sets({1}, {2}), MergeRule::three_plus()};
        }
        return {};
    }

    auto stage_partition(const Hypergraph & g, const WeightRule & rule) -> Partition
    {
        switch (rule.which) {
            case WeightCase::K5R3: return m11(g);
            case WeightCase::K5High:
            case WeightCase::K7: return m2plus(g);
            case WeightCase::K6High: return m12(g);
            case WeightCase::K63: return m3plus(g);
        }
        throw std::logic_error("bad weight case");
    }

    namespace
    {
        void check_stage(const Partition & p, std::size_t cluster, const WeightRule & rule)
        {
            if (p.rule_stack != stage_rules(rule))
                throw WrongStage("partition stage does not match weight rule " + to_string(rule.which));
            if (cluster >= p.clusters.size())
                throw std::out_of_range("cluster index out of range");
            if (p.ambient.uniformity() != rule.r)
                throw std::invalid_argument("weight rule uniformity does not match the hypergraph");
        }
    }

    auto deficit_pair(const Partition & p, std::size_t cluster) -> std::optional<Pair>
    {
        const auto & c = p.clusters.at(cluster);
        auto rest = p.ambient.complement_edges(c.edges);
        for (auto pair : one_bar_two(c.part))
            if (! claims(rest, pair, 1) && ! claims(rest, pair, 2))
                return pair;
        return std::nullopt;
    }

    auto weight_map(const Partition & p, std::size_t cluster, const WeightRule & rule) -> std::map<Pair, Rational>
    {
        check_stage(p, cluster, rule);
        const auto & c = p.clusters[cluster];
        const auto & f = c.part;
        std::map<Pair, Rational> result;
        auto put_all = [&] (const PairSet & pairs, const Rational & w) {
            for (auto pair : pairs)
                result.emplace(pair, w);
        };

        switch (rule.which) {
            case WeightCase::K5R3: {
                put_all(shadow(f), 1);
                auto shape = classify_tree(f);
                if (shape.kind != TreeKind::NotTree && (shape.edges == 3 || shape.edges == 4))
                    if (auto extra = deficit_pair(p, cluster))
                        result.emplace(*extra, 1);
                break;
            }
            case WeightCase::K5High:
                put_all(shadow(f), 1);
                put_all(one_bar_two_plus(f), 1);
                break;
            case WeightCase::K7:
                put_all(shadow(f), 1);
                put_all(one_bar_two_plus(f), Rational(1, 2));
                break;
            case WeightCase::K6High: {
                put_all(shadow(f), 1);
                bool exceptional = composition(c) == std::vector<int>{2, 1, 1, 1};
                put_all(one_bar_two(f), exceptional ? Rational(1) : Rational(1, 2));
                break;
            }
            case WeightCase::K63:
                for (auto pair : pairs_of(f.support())) {
                    auto w = h_value(claim_set(f, pair, 5).members());
                    if (w > 0)
                        result.emplace(pair, w);
                }
                break;
        }
        return result;
    }

    auto pair_weight(const Partition & p, std::size_t cluster, Pair pair, const WeightRule & rule) -> Rational
    {
        auto weights = weight_map(p, cluster, rule);
        auto it = weights.find(pair);
        return it == weights.end() ? Rational(0) : it->second;
    }

    auto cluster_weight(const Partition & p, std::size_t cluster, const WeightRule & rule) -> Rational
    {
        Rational total = 0;
        for (const auto & [pair, w] : weight_map(p, cluster, rule))
            total += w;
        return total;
    }

    namespace
    {
        auto lambda_of(const WeightRule & rule, const Rational & w, std::size_t edges) -> Rational
        {
            Rational e(static_cast<long long>(edges));
            int r = rule.r;
            switch (rule.which) {
                case WeightCase::K5R3: return 2 * w - 5 * e;
                case WeightCase::K5High:
                case WeightCase::K7: return 2 * w - (r * r - r - 1) * e;
                case WeightCase::K6High: return 2 * w - r * (r - 1) * e;
                case WeightCase::K63: return w - Rational(165, 61) * e;
            }
            return 0;
        }
    }

    auto lambda(const Partition & p, std::size_t cluster, const WeightRule & rule) -> Rational
    {
        return lambda_of(rule, cluster_weight(p, cluster, rule), p.clusters[cluster].edges.size());
    }

    auto bound_coefficient(const WeightRule & rule) -> Rational
    {
        int r = rule.r;
        switch (rule.which) {
            case WeightCase::K5R3: return Rational(2, 5);
            case WeightCase::K5High:
            case WeightCase::K7: return Rational(2, r * r - r - 1);
            case WeightCase::K6High: return Rational(2, r * (r - 1));
            case WeightCase::K63: return Rational(61, 165);
        }
        return 0;
    }

    auto certify(const Hypergraph & g, const WeightRule & rule) -> WeightReport
    {
        if (g.uniformity() != rule.r)
            throw std::invalid_argument("weight rule uniformity does not match the hypergraph");
        if (auto free = is_family_free(g, rule.k); ! free)
            throw NotFree(*free.witness);

        WeightReport report;
        report.rule = rule;
        report.vertex_count = g.vertex_count();
        report.edge_count = g.size();
        report.bound_coefficient = bound_coefficient(rule);
        report.edge_bound = report.bound_coefficient * choose2(g.vertex_count());

        auto partition = stage_partition(g, rule);
        for (std::size_t i = 0; i < partition.clusters.size(); ++i) {
            const auto & c = partition.clusters[i];
            Rational w = 0;
            for (const auto & [pair, value] : weight_map(partition, i, rule)) {
                w += value;
                report.per_pair[pair] += value;
            }
            auto l = lambda_of(rule, w, c.edges.size());
            if (l < 0)
                report.failures.push_back("cluster " + std::to_string(c.id()) + " has lambda " + to_string(l));
            report.per_cluster.push_back(ClusterWeight{c.id(), c.edges.size(), composition(c), w, l});
        }
        for (const auto & [pair, total] : report.per_pair)
            if (total > 1)
                report.failures.push_back("pair " + to_string(pair) + " receives " + to_string(total));
        if (Rational(static_cast<long long>(g.size())) > report.edge_bound)
            report.failures.push_back("edge count exceeds the bound");
        report.certified = report.failures.empty();
        return report;
    }

    auto limit_table(int r, int k) -> Rational
    {
        if (r >= 3 && (k == 5 || k == 7))
            return Rational(1, r * r - r - 1);
        if (r == 3 && k == 6)
            return Rational(61, 330);
        if (r >= 4 && k == 6)
            return Rational(1, r * r - r);
        if (r >= 2 && k == 2)
            return Rational(1, r * (r - 1));
        if (r == 3 && k == 3)
            return Rational(1, 5);
        if (r == 3 && k == 4)
            return Rational(7, 36);
        throw UnknownLimit("no known limit for r=" + std::to_string(r) + ", k=" + std::to_string(k));
    }
}
