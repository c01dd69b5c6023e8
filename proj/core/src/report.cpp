#include <beslab/report.hpp>
#include <beslab/text_format.hpp>

namespace beslab
{
    namespace
    {
        auto edge_list(const EdgeSet & edges) -> nlohmann::json
        {
            auto result = nlohmann::json::array();
            for (auto e : edges)
                result.push_back(e);
            return result;
        }

        auto query_json(const ConfigQuery & q) -> nlohmann::json
        {
            return {{"edges", q.edge_count}, {"max_vertices", q.max_vertices}};
        }
    }

    auto to_json(const Hypergraph & g) -> nlohmann::json
    {
        return {
            {"r", g.uniformity()},
            {"n", g.vertex_count()},
            {"m", g.size()},
            {"edges", g.edges()},
            {"text", to_text(g)}};
    }

    auto to_json(const Violation & v) -> nlohmann::json
    {
        return {{"query", query_json(v.query)}, {"edges", edge_list(v.edges)}};
    }

    auto to_json(const Partition & p) -> nlohmann::json
    {
        nlohmann::json j;
        auto rules = nlohmann::json::array();
        for (const auto & r : p.rule_stack)
            rules.push_back(to_string(r));
        j["rules"] = rules;
        auto clusters = nlohmann::json::array();
        for (const auto & c : p.clusters) {
            auto trace = nlohmann::json::array();
            for (const auto & ev : c.trace)
                trace.push_back({{"stage", ev.stage}, {"a", ev.a_side}, {"b", ev.b_side}, {"via", to_string(ev.via)}});
            clusters.push_back({
                {"id", c.id()},
                {"edges", edge_list(c.edges)},
                {"composition", composition(c)},
                {"tree", to_string(classify_tree(c.part))},
                {"trace", trace}});
        }
        j["clusters"] = clusters;
        return j;
    }

    auto to_json(const WeightReport & w) -> nlohmann::json
    {
        nlohmann::json j;
        j["rule"] = to_string(w.rule.which);
        j["r"] = w.rule.r;
        j["k"] = w.rule.k;
        j["n"] = w.vertex_count;
        j["m"] = w.edge_count;
        auto clusters = nlohmann::json::array();
        for (const auto & c : w.per_cluster)
            clusters.push_back({
                {"id", c.id},
                {"edges", c.edges},
                {"composition", c.composition},
                {"weight", to_string(c.weight)},
                {"lambda", to_string(c.lambda)}});
        j["clusters"] = clusters;
        auto pairs = nlohmann::json::object();
        for (const auto & [p, total] : w.per_pair)
            pairs[to_string(p)] = to_string(total);
        j["pair_totals"] = pairs;
        j["bound_coefficient"] = to_string(w.bound_coefficient);
        j["edge_bound"] = to_string(w.edge_bound);
        j["certified"] = w.certified;
        j["failures"] = w.failures;
        return j;
    }

    auto to_json(const ConstructionReport & c) -> nlohmann::json
    {
        nlohmann::json j;
        j["graph"] = to_json(c.graph);
        j["k"] = c.k;
        auto facts = nlohmann::json::array();
        for (const auto & f : c.freeness) {
            nlohmann::json fact{{"query", query_json(f.query)}, {"free", f.free}};
            if (f.witness)
                fact["witness"] = edge_list(*f.witness);
            facts.push_back(fact);
        }
        j["freeness"] = facts;
        j["free"] = c.all_free();
        j["shadow_size"] = c.shadow_size;
        j["p_le_3_size"] = c.p_le_3_size;
        j["p_le_half_k_size"] = c.p_le_half_k_size;
        j["ratio"] = to_string(c.ratio);
        return j;
    }

    auto to_json(const RandomConstruction & c) -> nlohmann::json
    {
        const auto & s = c.stats;
        nlohmann::json stats;
        stats["beta_threshold"] = s.beta_threshold;
        stats["g1_edges"] = s.g1_edges;
        stats["g3_edges"] = s.g3_edges;
        stats["packing_size"] = s.packing_size;
        stats["coverage"] = to_string(s.coverage);
        stats["h_edges"] = s.h_edges;
        stats["d"] = to_string(s.d);
        stats["selection_threshold"] = s.selection_threshold;
        stats["expected_selected"] = to_string(s.expected_selected);
        stats["selected"] = s.selected;
        stats["dropped_overlap"] = s.dropped_overlap;
        stats["dropped_conflict"] = s.dropped_conflict;
        stats["matching_size"] = s.matching_size;
        auto conflicts = nlohmann::json::object();
        for (const auto & [name, count] : s.conflicts)
            conflicts[name] = count;
        stats["conflicts"] = conflicts;
        stats["is_matching"] = s.is_matching;
        stats["p_le_3_in_g3"] = s.p_le_3_in_g3;
        auto failures = nlohmann::json::array();
        for (auto p : s.containment_failures)
            failures.push_back(to_string(p));
        stats["containment_failures"] = failures;
        stats["empty_packing"] = s.empty_packing;

        nlohmann::json j;
        j["construction"] = to_json(c.report);
        j["stats"] = stats;
        return j;
    }

    auto to_json(const TuranResult & t) -> nlohmann::json
    {
        return {{"value", t.value}, {"witness", to_json(t.witness)}, {"nodes_explored", t.nodes_explored}};
    }

    auto to_json(const SweepReport & s) -> nlohmann::json
    {
        nlohmann::json j;
        j["r"] = s.r;
        j["k"] = s.k;
        j["n_max"] = s.n_max;
        auto rows = nlohmann::json::array();
        for (const auto & row : s.rows) {
            auto cons = nlohmann::json::object();
            for (const auto & [name, size] : row.constructions)
                cons[name] = size;
            rows.push_back({
                {"n", row.n},
                {"plain", row.plain},
                {"family", row.family},
                {"constructions", cons},
                {"certify_bound", to_string(row.certify_bound)},
                {"certified", row.certified}});
        }
        j["rows"] = rows;
        j["failures"] = s.failures;
        j["passed"] = s.passed();
        return j;
    }
}
