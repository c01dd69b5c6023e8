#include <beslab/claims.hpp>
#include <beslab/configuration.hpp>

#include <algorithm>
#include <stdexcept>

namespace beslab
{
    ClaimSet::ClaimSet(int cap, std::uint32_t bits) :
        _cap(cap),
        _bits(bits | 1u)
    {
        if (cap < 0 || cap > max_cap)
            throw std::invalid_argument("claim cap out of range");
        if (cap < max_cap)
            _bits &= (std::uint32_t{1} << (cap + 1)) - 1;
    }

    auto ClaimSet::members() const -> std::vector<int>
    {
        std::vector<int> result;
        for (int i = 0; i <= _cap; ++i)
            if (contains(i))
                result.push_back(i);
        return result;
    }

    auto to_string(const ClaimSet & c) -> std::string
    {
        std::string result = "{";
        for (auto i : c.members())
            result += (result.size() > 1 ? "," : "") + std::to_string(i);
        return result + "}";
    }

    auto claims(const Hypergraph & f, Pair p, int i) -> bool
    {
        if (i <= 0)
            return i == 0;
        if (static_cast<std::size_t>(i) > f.size())
            return false;
        Vertex base[2] = {p.u, p.v};
        int bound = (f.uniformity() - 2) * i + 2;
        return find_configuration_with_base(f, i, bound, base).has_value();
    }

    auto claim_set(const Hypergraph & f, Pair p, int cap) -> ClaimSet
    {
        if (cap < 0 || cap > ClaimSet::max_cap)
            throw std::invalid_argument("claim cap out of range");
        std::uint32_t bits = 1;
        for (int i = 1; i <= cap; ++i)
            if (claims(f, p, i))
                bits |= std::uint32_t{1} << i;
        return {cap, bits};
    }

    auto shadow(const Hypergraph & f) -> PairSet
    {
        PairSet result;
        for (EdgeIndex i = 0; i < f.size(); ++i) {
            auto e = f.edge(i);
            for (std::size_t a = 0; a < e.size(); ++a)
                for (std::size_t b = a + 1; b < e.size(); ++b)
                    result.insert(Pair{e[a], e[b]});
        }
        return result;
    }

    auto claimed_pairs(const Hypergraph & f, int i) -> PairSet
    {
        if (i < 1)
            throw std::invalid_argument("claimed_pairs needs i >= 1");
        if (i == 1)
            return shadow(f);
        PairSet result;
        for (auto p : pairs_of(f.support()))
            if (claims(f, p, i))
                result.insert(p);
        return result;
    }

    auto one_bar_two(const Hypergraph & f) -> PairSet
    {
        auto p1 = shadow(f);
        PairSet result;
        for (auto p : claimed_pairs(f, 2))
            if (! p1.contains(p))
                result.insert(p);
        return result;
    }

    auto claimed_pairs_up_to(const Hypergraph & f, int t) -> PairSet
    {
        auto result = shadow(f);
        if (t <= 1)
            return t == 1 ? result : PairSet{};
        for (auto p : pairs_of(f.support())) {
            if (result.contains(p))
                continue;
            for (int i = 2; i <= t; ++i)
                if (claims(f, p, i)) {
                    result.insert(p);
                    break;
                }
        }
        return result;
    }

    auto sum_set(const std::vector<ClaimSet> & parts, int cap) -> ClaimSet
    {
        std::uint32_t acc = 1;
        std::uint32_t mask = cap >= ClaimSet::max_cap ? ~std::uint32_t{0} : (std::uint32_t{1} << (cap + 1)) - 1;
        for (const auto & c : parts) {
            std::uint32_t next = 0;
            for (int i = 0; i <= c.cap(); ++i)
                if (c.contains(i))
                    next |= (acc << i);
            acc = next & mask;
        }
        return {cap, acc};
    }
}
