#include <beslab/merging.hpp>
#include <beslab/structure.hpp>

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace beslab
{
    auto MergeRule::sets(std::vector<int> a, std::vector<int> b) -> MergeRule
    {
        auto normalise = [] (std::vector<int> & v) {
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            if (v.empty() || v.front() < 1 || v.back() > ClaimSet::max_cap)
                throw std::invalid_argument("merge rule sets must be nonempty sets of positive integers");
        };
        normalise(a);
        normalise(b);
        return {Kind::Sets, std::move(a), std::move(b)};
    }

    auto MergeRule::two_plus() -> MergeRule
    {
        return {Kind::TwoPlus, {}, {}};
    }

    auto MergeRule::three_plus() -> MergeRule
    {
        return {Kind::ThreePlus, {}, {}};
    }

    auto MergeRule::cap() const -> int
    {
        switch (kind) {
            case Kind::Sets: return std::max(a.back(), b.back());
            case Kind::TwoPlus: return 2;
            case Kind::ThreePlus: return 4;
        }
        return 0;
    }

    auto to_string(const MergeRule & rule) -> std::string
    {
        auto set = [] (const std::vector<int> & v) {
            std::string s = "{";
            for (auto i : v)
                s += (s.size() > 1 ? "," : "") + std::to_string(i);
            return s + "}";
        };
        switch (rule.kind) {
            case MergeRule::Kind::Sets: return set(rule.a) + "|" + set(rule.b);
            case MergeRule::Kind::TwoPlus: return "2+";
            case MergeRule::Kind::ThreePlus: return "3+";
        }
        return "?";
    }

    auto Partition::cluster_of(EdgeIndex e) const -> std::size_t
    {
        for (std::size_t i = 0; i < clusters.size(); ++i)
            if (std::binary_search(clusters[i].edges.begin(), clusters[i].edges.end(), e))
                return i;
        throw std::out_of_range("edge not in partition");
    }

    auto Partition::parts() const -> std::vector<EdgeSet>
    {
        std::vector<EdgeSet> result;
        for (const auto & c : clusters)
            result.push_back(c.edges);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto trivial_partition(const Hypergraph & g) -> Partition
    {
        Partition result{g, {}, {}};
        for (EdgeIndex i = 0; i < g.size(); ++i)
            result.clusters.push_back(Cluster{{i}, g.subgraph({i}), {}});
        return result;
    }

    auto two_plus_claims(const Hypergraph & f, Pair p) -> bool
    {
        for (EdgeIndex a = 0; a < f.size(); ++a)
            for (EdgeIndex b = a + 1; b < f.size(); ++b)
                for (EdgeIndex c = b + 1; c < f.size(); ++c) {
                    auto t = f.subgraph({a, b, c});
                    if (classify_tree(t).kind != TreeKind::NotTree && claims(t, p, 2))
                        return true;
                }
        return false;
    }

    auto two_plus_claimed_pairs(const Hypergraph & f) -> PairSet
    {
        PairSet result;
        int r = f.uniformity();
        for (EdgeIndex a = 0; a < f.size(); ++a)
            for (EdgeIndex b = a + 1; b < f.size(); ++b) {
                auto d = f.subgraph({a, b});
                auto vd = d.support();
                if (static_cast<int>(vd.size()) != 2 * r - 2)
                    continue;
                for (EdgeIndex c = 0; c < f.size(); ++c) {
                    if (c == a || c == b)
                        continue;
                    if (classify_tree(f.subgraph({a, b, c})).kind == TreeKind::NotTree)
                        continue;
                    for (auto p : pairs_of(vd))
                        result.insert(p);
                    break;
                }
            }
        return result;
    }

    auto one_bar_two_plus(const Hypergraph & f) -> PairSet
    {
        auto p1 = shadow(f);
        PairSet result;
        for (auto p : two_plus_claimed_pairs(f))
            if (! p1.contains(p))
                result.insert(p);
        return result;
    }

    namespace
    {
        auto contains_all(const ClaimSet & c, const std::vector<int> & needed) -> bool
        {
            return std::all_of(needed.begin(), needed.end(), [&] (int i) { return c.contains(i); });
        }

        // A part with lazily computed claim data.
        class PartView
        {
        private:
            Hypergraph _graph;
            int _cap;
            std::vector<Pair> _shadow;
            std::map<Pair, ClaimSet> _claims;
            std::optional<PairSet> _two_plus;

        public:
            PartView(Hypergraph graph, int cap) :
                _graph(std::move(graph)),
                _cap(cap)
            {
                auto s = shadow(_graph);
                _shadow.assign(s.begin(), s.end());
            }

            auto graph() const -> const Hypergraph & { return _graph; }
            auto shadow_pairs() const -> const std::vector<Pair> & { return _shadow; }

            auto claim(Pair p) -> const ClaimSet &
            {
                auto it = _claims.find(p);
                if (it == _claims.end())
                    it = _claims.emplace(p, claim_set(_graph, p, _cap)).first;
                return it->second;
            }

            auto two_plus(Pair p) -> bool
            {
                if (! _two_plus)
                    _two_plus = two_plus_claimed_pairs(_graph);
                return _two_plus->contains(p);
            }
        };

        auto directional(PartView & first, PartView & second, const MergeRule & rule, const std::vector<Vertex> & universe)
            -> std::optional<Pair>
        {
            switch (rule.kind) {
                case MergeRule::Kind::Sets: {
                    bool a_has_one = rule.a.front() == 1, b_has_one = rule.b.front() == 1;
                    std::vector<Pair> candidates;
                    if (a_has_one)
                        candidates = first.shadow_pairs();
                    else if (b_has_one)
                        candidates = second.shadow_pairs();
                    else
                        candidates = pairs_of(universe);
                    for (auto p : candidates)
                        if (contains_all(first.claim(p), rule.a) && contains_all(second.claim(p), rule.b))
                            return p;
                    return std::nullopt;
                }
                case MergeRule::Kind::TwoPlus:
                    for (auto p : first.shadow_pairs())
                        if (second.two_plus(p))
                            return p;
                    return std::nullopt;
                case MergeRule::Kind::ThreePlus:
                    for (auto p : first.shadow_pairs()) {
                        const auto & h = second.claim(p);
                        if (! h.contains(3))
                            continue;
                        if (h.contains(4) || first.claim(p).contains(2))
                            return p;
                    }
                    return std::nullopt;
            }
            return std::nullopt;
        }

        struct Working
        {
            EdgeSet edges;
            std::vector<MergeEvent> trace;
            std::size_t serial;
            PartView view;

            auto id() const -> EdgeIndex { return edges.front(); }
        };

        struct Option
        {
            std::size_t a, b;
            Pair via;
        };
    }

    auto merge_pair(const Hypergraph & first, const Hypergraph & second, const MergeRule & rule,
        const std::vector<Vertex> & universe) -> std::optional<Pair>
    {
        PartView f(first, rule.cap()), h(second, rule.cap());
        if (! universe.empty())
            return directional(f, h, rule, universe);
        auto both = first.support();
        auto more = second.support();
        both.insert(both.end(), more.begin(), more.end());
        std::sort(both.begin(), both.end());
        both.erase(std::unique(both.begin(), both.end()), both.end());
        return directional(f, h, rule, both);
    }

    auto mergeable(const Hypergraph & f, const Hypergraph & h, const MergeRule & rule,
        const std::vector<Vertex> & universe) -> bool
    {
        return merge_pair(f, h, rule, universe) || merge_pair(h, f, rule, universe);
    }

    auto merge(const Hypergraph & g, const Partition & start, const MergeRule & rule,
        std::optional<std::uint64_t> shuffle_seed) -> Partition
    {
        std::size_t stage = start.rule_stack.size();
        auto universe = g.support();
        std::vector<Working> parts;
        std::size_t serial = 0;
        for (const auto & c : start.clusters)
            parts.push_back(Working{c.edges, c.trace, serial++, PartView(c.part, rule.cap())});
        std::sort(parts.begin(), parts.end(), [] (const Working & x, const Working & y) { return x.id() < y.id(); });

        std::set<std::pair<std::size_t, std::size_t>> apart;
        std::optional<std::mt19937_64> rng;
        if (shuffle_seed)
            rng.emplace(*shuffle_seed);

        auto check = [&] (std::size_t i, std::size_t j) -> std::optional<Option> {
            auto key = std::minmax(parts[i].serial, parts[j].serial);
            if (apart.contains(key))
                return std::nullopt;
            auto forward = directional(parts[i].view, parts[j].view, rule, universe);
            auto backward = directional(parts[j].view, parts[i].view, rule, universe);
            if (! forward && ! backward) {
                apart.insert(key);
                return std::nullopt;
            }
            if (forward && (! backward || *forward <= *backward))
                return Option{i, j, *forward};
            return Option{j, i, *backward};
        };

        while (true) {
            std::optional<Option> chosen;
            if (! rng) {
                for (std::size_t i = 0; i < parts.size() && ! chosen; ++i)
                    for (std::size_t j = i + 1; j < parts.size() && ! chosen; ++j)
                        chosen = check(i, j);
            }
            else {
                std::vector<Option> options;
                for (std::size_t i = 0; i < parts.size(); ++i)
                    for (std::size_t j = i + 1; j < parts.size(); ++j)
                        if (auto o = check(i, j))
                            options.push_back(*o);
                if (! options.empty())
                    chosen = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(*rng)];
            }
            if (! chosen)
                break;

            auto & a = parts[chosen->a];
            auto & b = parts[chosen->b];
            EdgeSet edges;
            std::merge(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(), std::back_inserter(edges));
            std::vector<MergeEvent> trace = a.trace;
            trace.insert(trace.end(), b.trace.begin(), b.trace.end());
            trace.push_back(MergeEvent{stage, a.id(), b.id(), chosen->via});

            Working merged{edges, std::move(trace), serial++, PartView(g.subgraph(edges), rule.cap())};
            auto hi = std::max(chosen->a, chosen->b), lo = std::min(chosen->a, chosen->b);
            parts.erase(parts.begin() + hi);
            parts.erase(parts.begin() + lo);
            auto pos = std::lower_bound(parts.begin(), parts.end(), merged.id(),
                [] (const Working & w, EdgeIndex id) { return w.id() < id; });
            parts.insert(pos, std::move(merged));
        }

        Partition result{g, {}, start.rule_stack};
        result.rule_stack.push_back(rule);
        for (auto & w : parts)
            result.clusters.push_back(Cluster{w.edges, w.view.graph(), std::move(w.trace)});
        return result;
    }

    auto m11(const Hypergraph & g) -> Partition
    {
        return merge(g, trivial_partition(g), MergeRule::sets({1}, {1}));
    }

    auto m12(const Hypergraph & g) -> Partition
    {
        return merge(g, m11(g), MergeRule::sets({1}, {2}));
    }

    auto m2plus(const Hypergraph & g) -> Partition
    {
        return merge(g, m11(g), MergeRule::two_plus());
    }

    auto m3plus(const Hypergraph & g) -> Partition
    {
        return merge(g, m12(g), MergeRule::three_plus());
    }

    auto replay(const std::vector<EdgeSet> & base_parts, const std::vector<MergeEvent> & trace, EdgeIndex id) -> EdgeSet
    {
        std::map<EdgeIndex, EdgeSet> live;
        for (const auto & p : base_parts) {
            if (p.empty())
                throw std::logic_error("empty base part");
            auto sorted = p;
            std::sort(sorted.begin(), sorted.end());
            live[sorted.front()] = sorted;
        }
        for (const auto & e : trace) {
            auto a = live.find(e.a_side);
            auto b = live.find(e.b_side);
            if (a == live.end() || b == live.end() || a == b)
                throw std::logic_error("trace refers to a part that does not exist");
            EdgeSet joined;
            std::merge(a->second.begin(), a->second.end(), b->second.begin(), b->second.end(), std::back_inserter(joined));
            live.erase(e.a_side);
            live.erase(e.b_side);
            live[joined.front()] = joined;
        }
        auto it = live.find(id);
        if (it == live.end())
            throw std::logic_error("trace does not produce the requested part");
        return it->second;
    }

    auto composition(const Cluster & c) -> std::vector<int>
    {
        std::vector<int> sizes;
        for (const auto & comp : pair_components(c.part))
            sizes.push_back(static_cast<int>(comp.size()));
        std::sort(sizes.begin(), sizes.end(), std::greater<>());
        return sizes;
    }

    auto trimming_order(const Partition & base, const EdgeSet & f0, const EdgeSet & f, const MergeRule & rule)
        -> std::vector<EdgeSet>
    {
        auto sorted_f = f;
        std::sort(sorted_f.begin(), sorted_f.end());
        auto in_f = [&] (EdgeIndex e) { return std::binary_search(sorted_f.begin(), sorted_f.end(), e); };
        std::set<EdgeIndex> current_set(f0.begin(), f0.end());

        std::vector<EdgeSet> remaining;
        for (const auto & c : base.clusters) {
            bool inside = std::all_of(c.edges.begin(), c.edges.end(), in_f);
            bool any_inside = std::any_of(c.edges.begin(), c.edges.end(), in_f);
            if (any_inside && ! inside)
                throw std::invalid_argument("F is not a union of base parts");
            if (! inside)
                continue;
            bool in_f0 = std::all_of(c.edges.begin(), c.edges.end(), [&] (EdgeIndex e) { return current_set.contains(e); });
            bool touches_f0 = std::any_of(c.edges.begin(), c.edges.end(), [&] (EdgeIndex e) { return current_set.contains(e); });
            if (touches_f0 && ! in_f0)
                throw std::invalid_argument("F0 is not a union of base parts");
            if (! in_f0)
                remaining.push_back(c.edges);
        }
        for (auto e : f0)
            if (! in_f(e))
                throw std::invalid_argument("F0 is not contained in F");
        std::sort(remaining.begin(), remaining.end());

        const auto & g = base.ambient;
        auto universe = g.support();
        std::vector<EdgeSet> order;
        while (! remaining.empty()) {
            EdgeSet current(current_set.begin(), current_set.end());
            auto current_graph = g.subgraph(current);
            auto next = std::find_if(remaining.begin(), remaining.end(), [&] (const EdgeSet & p) {
                return mergeable(current_graph, g.subgraph(p), rule, universe);
            });
            if (next == remaining.end())
                throw NoOrder("no base part can be attached to the current partial cluster");
            current_set.insert(next->begin(), next->end());
            order.push_back(*next);
            remaining.erase(next);
        }
        return order;
    }
}
