#include "cli.hpp"

#include <beslab/constructions.hpp>
#include <beslab/merging.hpp>
#include <beslab/packing.hpp>
#include <beslab/parallel.hpp>
#include <beslab/report.hpp>
#include <beslab/text_format.hpp>
#include <beslab/turan.hpp>
#include <beslab/weights.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <optional>
#include <thread>

namespace beslab::cli
{
    namespace
    {
        class UsageError : public std::invalid_argument
        {
        public:
            using std::invalid_argument::invalid_argument;
        };

        struct Context
        {
            std::ostream & out;
            std::ostream & err;
            std::istream & in;
            bool json = false;
            std::string input = "-";
        };

        auto load(Context & ctx) -> Hypergraph
        {
            if (ctx.input == "-")
                return read_hypergraph(ctx.in);
            std::ifstream file(ctx.input);
            if (! file)
                throw UsageError("cannot open " + ctx.input);
            return read_hypergraph(file);
        }

        auto parse_fraction(const std::string & text, const std::string & flag) -> Rational
        {
            try {
                return parse_rational(text);
            }
            catch (const std::exception &) {
                throw UsageError(flag + ": '" + text + "' is not a fraction");
            }
        }

        void print_block(std::ostream & out, const std::string & title, const Hypergraph & g)
        {
            out << title << ":\n" << to_text(g);
        }

        void print_violation(Context & ctx, const Hypergraph & g, const Violation & v)
        {
            if (ctx.json) {
                auto j = to_json(v);
                j["free"] = false;
                j["witness"] = to_json(g.subgraph(v.edges));
                ctx.out << j.dump(2) << '\n';
                return;
            }
            ctx.out << "not free: " << v.query.edge_count << " edges on at most " << v.query.max_vertices << " vertices\n";
            print_block(ctx.out, "witness", g.subgraph(v.edges));
        }

        void apply_threads()
        {
            unsigned limit = std::max(1u, std::thread::hardware_concurrency());
            if (auto env = std::getenv("BESLAB_THREADS")) {
                try {
                    auto cap = std::stoul(env);
                    if (cap > 0)
                        limit = std::min<unsigned>(limit, static_cast<unsigned>(cap));
                }
                catch (const std::exception &) {
                    throw UsageError(std::string("BESLAB_THREADS: '") + env + "' is not a number");
                }
            }
            set_worker_limit(limit);
        }

        struct ConstructArgs
        {
            std::string kind;
            int t = 1;
            std::optional<int> r;
            std::optional<std::uint64_t> seed;
            int m = 24;
            std::string alpha = "3/10", mu = "1/8";
            int girth_cap = 8;
            int k = 7;
        };

        auto do_construct(Context & ctx, const ConstructArgs & a) -> int
        {
            if (a.kind == "random") {
                if (! a.seed)
                    throw UsageError("construct random needs --seed");
                RandomParams p;
                p.r = a.r.value_or(4);
                p.m = a.m;
                p.alpha = parse_fraction(a.alpha, "--alpha");
                p.mu = parse_fraction(a.mu, "--mu");
                p.girth_cap = a.girth_cap;
                p.seed = *a.seed;
                p.k = a.k;
                try {
                    p.validate();
                }
                catch (const std::invalid_argument & e) {
                    throw UsageError(e.what());
                }
                auto rc = random_packing_construction(p);
                if (ctx.json) {
                    ctx.out << to_json(rc).dump(2) << '\n';
                    return 0;
                }
                const auto & s = rc.stats;
                ctx.out << "# seed " << p.seed << " r " << p.r << " m " << p.m << " alpha " << to_string(p.alpha)
                        << " mu " << to_string(p.mu) << '\n'
                        << "# G1 edges " << s.g1_edges << ", packing " << s.packing_size << " cliques, coverage "
                        << to_string(s.coverage) << '\n'
                        << "# G3 edges " << s.g3_edges << ", H edges " << s.h_edges << ", d " << to_string(s.d) << '\n'
                        << "# selected " << s.selected << ", dropped " << s.dropped_overlap << " overlap + "
                        << s.dropped_conflict << " conflict, matching " << s.matching_size << '\n'
                        << "# free " << (rc.report.all_free() ? "yes" : "no") << ", ratio " << to_string(rc.report.ratio)
                        << ", P<=3 inside G3 " << (s.p_le_3_in_g3 ? "yes" : "no") << '\n';
                if (s.empty_packing)
                    ctx.out << "# empty packing\n";
                ctx.out << to_text(rc.report.graph);
                return 0;
            }

            Hypergraph g;
            if (a.kind == "diamond-star") {
                if (a.t < 1)
                    throw UsageError("--t must be at least 1");
                g = diamond_star(a.t);
            }
            else if (a.kind == "f63")
                g = f63();
            else {
                int r = a.r.value_or(3);
                if (r < 2)
                    throw UsageError("--r must be at least 2");
                g = a.kind == "diamond" ? diamond(r) : single_edge(r);
            }
            if (ctx.json)
                ctx.out << to_json(g).dump(2) << '\n';
            else
                ctx.out << to_text(g);
            return 0;
        }

        auto do_verify(Context & ctx, int k) -> int
        {
            auto g = load(ctx);
            auto report = describe_construction(g, k);
            bool ok = report.all_free();
            if (ctx.json) {
                auto j = to_json(report);
                j["certified"] = ok;
                ctx.out << j.dump(2) << '\n';
                return ok ? 0 : 1;
            }
            ctx.out << "graph: r=" << g.uniformity() << " n=" << g.vertex_count() << " m=" << g.size() << '\n'
                    << "k: " << k << '\n';
            for (const auto & f : report.freeness) {
                ctx.out << "(" << f.query.max_vertices << "," << f.query.edge_count << ")-free: " << (f.free ? "yes" : "no") << '\n';
                if (f.witness)
                    print_block(ctx.out, "witness", g.subgraph(*f.witness));
            }
            ctx.out << "|P1|: " << report.shadow_size << '\n'
                    << "|P<=3|: " << report.p_le_3_size << '\n';
            if (k / 2 != 3)
                ctx.out << "|P<=" << k / 2 << "|: " << report.p_le_half_k_size << '\n';
            ctx.out << "ratio: " << to_string(report.ratio) << '\n'
                    << (ok ? "certified" : "not certified") << '\n';
            return ok ? 0 : 1;
        }

        auto do_ratio(Context & ctx, int k) -> int
        {
            auto g = load(ctx);
            try {
                auto r = lower_bound_ratio(g, k);
                if (ctx.json)
                    ctx.out << nlohmann::json{{"k", k}, {"ratio", to_string(r.ratio)}, {"pairs", r.pairs.size()}}.dump(2) << '\n';
                else
                    ctx.out << "ratio: " << to_string(r.ratio) << "\n|P<=" << k / 2 << "|: " << r.pairs.size() << '\n';
                return 0;
            }
            catch (const NotFree & e) {
                print_violation(ctx, g, e.witness());
                return 1;
            }
        }

        auto rule_chain(const std::string & name) -> std::vector<MergeRule>
        {
            auto s11 = MergeRule::sets({1}, {1});
            auto s12 = MergeRule::sets({1}, {2});
            if (name == "m11")
                return {s11};
            if (name == "m12")
                return {s11, s12};
            if (name == "m2plus")
                return {s11, MergeRule::two_plus()};
            if (name == "m3plus")
                return {s11, s12, MergeRule::three_plus()};
            throw UsageError("unknown merge rule '" + name + "'");
        }

        auto do_partition(Context & ctx, const std::string & rule_name, const std::string & case_name,
            std::optional<std::uint64_t> seed) -> int
        {
            std::vector<MergeRule> chain;
            auto g = load(ctx);
            if (! case_name.empty()) {
                WeightCase which;
                try {
                    which = parse_weight_case(case_name);
                    chain = stage_rules(WeightRule::make(which, g.uniformity()));
                }
                catch (const std::invalid_argument & e) {
                    throw UsageError(e.what());
                }
            }
            else
                chain = rule_chain(rule_name);

            auto p = trivial_partition(g);
            for (std::size_t i = 0; i < chain.size(); ++i) {
                std::optional<std::uint64_t> stage_seed;
                if (seed)
                    stage_seed = *seed + i;
                p = merge(g, p, chain[i], stage_seed);
            }

            if (ctx.json) {
                ctx.out << to_json(p).dump(2) << '\n';
                return 0;
            }
            ctx.out << "rules:";
            for (const auto & r : p.rule_stack)
                ctx.out << ' ' << to_string(r);
            ctx.out << "\nclusters: " << p.clusters.size() << '\n';
            for (const auto & c : p.clusters) {
                ctx.out << "cluster " << c.id() << ":";
                for (auto e : c.edges)
                    ctx.out << ' ' << e;
                ctx.out << "  (" << to_string(classify_tree(c.part)) << ")\n";
            }
            return 0;
        }

        auto do_certify(Context & ctx, const std::string & case_name, std::optional<int> k) -> int
        {
            auto g = load(ctx);
            WeightRule rule;
            try {
                if (! case_name.empty())
                    rule = WeightRule::make(parse_weight_case(case_name), g.uniformity());
                else if (k)
                    rule = WeightRule::for_problem(g.uniformity(), *k);
                else
                    throw UsageError("certify needs --case or --k");
            }
            catch (const UsageError &) {
                throw;
            }
            catch (const std::invalid_argument & e) {
                throw UsageError(e.what());
            }

            try {
                auto w = certify(g, rule);
                if (ctx.json)
                    ctx.out << to_json(w).dump(2) << '\n';
                else {
                    ctx.out << "rule: " << to_string(rule.which) << " (r=" << rule.r << ", k=" << rule.k << ")\n"
                            << "clusters: " << w.per_cluster.size() << '\n';
                    for (const auto & c : w.per_cluster)
                        ctx.out << "cluster " << c.id << ": " << c.edges << " edges, weight " << to_string(c.weight)
                                << ", lambda " << to_string(c.lambda) << '\n';
                    ctx.out << "edge bound: " << to_string(w.bound_coefficient) << " * C(" << w.vertex_count << ",2) = "
                            << to_string(w.edge_bound) << '\n';
                    for (const auto & f : w.failures)
                        ctx.out << "failure: " << f << '\n';
                    ctx.out << (w.certified ? "certified" : "not certified") << '\n';
                }
                return w.certified ? 0 : 1;
            }
            catch (const NotFree & e) {
                print_violation(ctx, g, e.witness());
                return 1;
            }
        }

        struct TuranArgs
        {
            int r = 3, n = 0, k = 0;
            std::optional<int> s;
            bool family = false;
            bool ignore_cap = false;
            std::string cache;
        };

        auto do_turan(Context & ctx, const TuranArgs & a) -> int
        {
            if (! a.family && ! a.s)
                throw UsageError("turan needs --s, or --family");
            if (a.r < 1 || a.n < a.r)
                throw UsageError("turan needs 1 <= r <= n");
            if (a.k < (a.family ? 2 : 1))
                throw UsageError("--k is too small");
            if (a.n > 31)
                throw UsageError("turan supports at most 31 vertices");
            if (a.ignore_cap && a.n > turan_cap(a.r))
                ctx.err << "warning: n = " << a.n << " is above the default cap " << turan_cap(a.r)
                        << "; the search may take a very long time\n";

            TuranCache::Key key{a.family ? "family" : "plain", a.r, a.n, a.family ? 0 : *a.s, a.k};
            std::optional<TuranCache> cache;
            if (! a.cache.empty())
                cache.emplace(a.cache);

            auto emit = [&] (const TuranResult & t, bool lower_bound_only) {
                if (ctx.json) {
                    auto j = to_json(t);
                    j["exact"] = ! lower_bound_only;
                    ctx.out << j.dump(2) << '\n';
                    return;
                }
                ctx.out << (lower_bound_only ? "lower bound: " : "value: ") << t.value << '\n';
                if (! lower_bound_only)
                    ctx.out << "nodes: " << t.nodes_explored << '\n';
                print_block(ctx.out, "witness", t.witness);
            };

            std::optional<TuranResult> result;
            if (cache)
                result = cache->lookup(key);
            if (! result) {
                TuranOptions options{a.ignore_cap};
                try {
                    result = a.family ? exact_turan_family(a.r, a.n, a.k, options) : exact_turan(a.r, a.n, *a.s, a.k, options);
                }
                catch (const TooLarge & e) {
                    ctx.err << e.what() << '\n';
                    emit(e.lower_bound(), true);
                    return 1;
                }
                if (cache)
                    cache->store(key, *result);
            }
            emit(*result, false);
            return 0;
        }

        auto do_gr_limits(Context & ctx) -> int
        {
            std::vector<std::pair<int, Rational>> limits;
            for (int p : {12, 14, 16})
                limits.emplace_back(p, gr_limit(p));
            auto linear = gr_linear_bounds();
            if (ctx.json) {
                auto j = nlohmann::json::object();
                for (const auto & [p, v] : limits)
                    j["limits"][std::to_string(p)] = to_string(v);
                for (const auto & [p, v] : linear)
                    j["linear"][std::to_string(p)] = to_string(v);
                ctx.out << j.dump(2) << '\n';
                return 0;
            }
            for (const auto & [p, v] : limits)
                ctx.out << p << " -> " << to_string(v) << '\n';
            for (const auto & [p, v] : linear)
                ctx.out << "linear " << p << " -> " << to_string(v) << '\n';
            return 0;
        }

        auto do_sweep(Context & ctx, int r, int k, int n_max) -> int
        {
            if (r < 2 || k < 2 || n_max < r)
                throw UsageError("sweep needs r >= 2, k >= 2 and n-max >= r");
            if (n_max > turan_cap(r))
                throw UsageError("--n-max is above the search cap " + std::to_string(turan_cap(r)));
            auto report = consistency_sweep(r, k, n_max);
            if (ctx.json) {
                ctx.out << to_json(report).dump(2) << '\n';
                return report.passed() ? 0 : 1;
            }
            for (const auto & row : report.rows) {
                ctx.out << "n=" << row.n << " plain=" << row.plain << " family=" << row.family;
                for (const auto & [name, size] : row.constructions)
                    ctx.out << ' ' << name << '=' << size;
                ctx.out << " bound=" << to_string(row.certify_bound) << '\n';
            }
            for (const auto & f : report.failures)
                ctx.out << "failure: " << f << '\n';
            ctx.out << (report.passed() ? "passed" : "failed") << '\n';
            return report.passed() ? 0 : 1;
        }
    }

    auto run(int argc, const char * const * argv, std::ostream & out, std::ostream & err, std::istream & in) -> int
    {
        Context ctx{out, err, in};
        CLI::App app{"Sparse hypergraph configurations: claims, merging, weight certificates and constructions", "beslab"};
        app.set_config("--config", "", "Read options from a TOML or INI file; command line flags win");
        app.add_flag("--json", ctx.json, "Structured output");
        app.require_subcommand(1);

        auto add_input = [&] (CLI::App * sub) {
            sub->add_option("--input,-i", ctx.input, "Hypergraph file, '-' for standard input")->capture_default_str();
        };

        ConstructArgs construct_args;
        auto construct = app.add_subcommand("construct", "Print a construction");
        construct->add_option("kind", construct_args.kind, "diamond-star, f63, single-edge, diamond or random")
            ->required()
            ->check(CLI::IsMember({"diamond-star", "f63", "single-edge", "diamond", "random"}));
        construct->add_option("--t", construct_args.t, "Number of diamonds in the star");
        construct->add_option("--r", construct_args.r, "Uniformity");
        construct->add_option("--seed", construct_args.seed, "Seed for the random construction");
        construct->add_option("--m", construct_args.m, "Side length of the random construction")->capture_default_str();
        construct->add_option("--alpha", construct_args.alpha, "Edge density of G3")->capture_default_str();
        construct->add_option("--mu", construct_args.mu, "Selection constant")->capture_default_str();
        construct->add_option("--girth-cap", construct_args.girth_cap, "Girth bound for the clique packing")->capture_default_str();
        construct->add_option("--k", construct_args.k, "k used for the reported ratio")->capture_default_str();

        int verify_k = 0;
        auto verify = app.add_subcommand("verify-construction", "Check freeness and report the ratio");
        verify->add_option("--k", verify_k, "Family parameter")->required()->check(CLI::Range(2, 30));
        add_input(verify);

        int ratio_k = 0;
        auto ratio = app.add_subcommand("ratio", "|F| / 2|P<=k/2(F)| of a free hypergraph");
        ratio->add_option("--k", ratio_k, "Family parameter")->required()->check(CLI::Range(2, 30));
        add_input(ratio);

        std::string partition_rule = "m11", partition_case;
        std::optional<std::uint64_t> partition_seed;
        auto partition = app.add_subcommand("partition", "Run a merging schedule");
        partition->add_option("--rule", partition_rule, "m11, m12, m2plus or m3plus")
            ->check(CLI::IsMember({"m11", "m12", "m2plus", "m3plus"}))
            ->capture_default_str();
        partition->add_option("--case", partition_case, "Use the stages of a weight rule instead");
        partition->add_option("--seed", partition_seed, "Merge in a random order drawn from this seed");
        add_input(partition);

        std::string certify_case;
        std::optional<int> certify_k;
        auto certify_cmd = app.add_subcommand("certify", "Check a weighting certificate");
        certify_cmd->add_option("--case", certify_case, "K5R3, K5High, K7, K6High or K63");
        certify_cmd->add_option("--k", certify_k, "Pick the rule for this k and the input's uniformity");
        add_input(certify_cmd);

        TuranArgs turan_args;
        auto turan = app.add_subcommand("turan", "Exact Turan number by branch and bound");
        turan->add_option("--r", turan_args.r, "Uniformity")->capture_default_str();
        turan->add_option("--n", turan_args.n, "Vertices")->required();
        turan->add_option("--s", turan_args.s, "Vertex bound of the forbidden configurations");
        turan->add_option("--k", turan_args.k, "Edge count of the forbidden configurations")->required();
        turan->add_flag("--family", turan_args.family, "Forbid the whole family instead of one (s,k) class");
        turan->add_flag("--ignore-cap", turan_args.ignore_cap, "Search above the default vertex cap");
        turan->add_option("--cache", turan_args.cache, "Append-only result table");

        auto gr = app.add_subcommand("gr-limits", "Print the generalized Ramsey limits");

        int sweep_r = 3, sweep_k = 5, sweep_n = 7;
        auto sweep = app.add_subcommand("sweep", "Cross-check exact values, constructions and certificates");
        sweep->add_option("--r", sweep_r, "Uniformity")->capture_default_str();
        sweep->add_option("--k", sweep_k, "Family parameter")->capture_default_str();
        sweep->add_option("--n-max", sweep_n, "Largest n")->capture_default_str();

        try {
            app.parse(argc, argv);
        }
        catch (const CLI::ParseError & e) {
            auto code = app.exit(e, out, err);
            return code == 0 ? 0 : 2;
        }

        try {
            apply_threads();
            if (construct->parsed())
                return do_construct(ctx, construct_args);
            if (verify->parsed())
                return do_verify(ctx, verify_k);
            if (ratio->parsed())
                return do_ratio(ctx, ratio_k);
            if (partition->parsed())
                return do_partition(ctx, partition_rule, partition_case, partition_seed);
            if (certify_cmd->parsed())
                return do_certify(ctx, certify_case, certify_k);
            if (turan->parsed())
                return do_turan(ctx, turan_args);
            if (gr->parsed())
                return do_gr_limits(ctx);
            if (sweep->parsed())
                return do_sweep(ctx, sweep_r, sweep_k, sweep_n);
        }
        catch (const UsageError & e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }
        catch (const ParseError & e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }
        catch (const BuildError & e) {
            err << "error: " << e.what() << '\n';
            return 2;
        }
        catch (const NotFree & e) {
            err << "error: " << e.what() << '\n';
            return 1;
        }
        return 2;
    }
}
