#include <maltsev/maltsev.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace maltsev;

using json = nlohmann::ordered_json;
using std::cerr;
using std::cout;
using std::string;
using std::vector;

namespace
{
    enum ExitCode
    {
        positive = 0,
        negative = 1,
        usage = 2,
        maybe = 3,
        internal = 4
    };

    auto read_text(const string & path) -> string
    {
        if (path == "-")
            return string(std::istreambuf_iterator<char>(std::cin), {});

        std::ifstream file(path, std::ios::binary);
        if (! file)
            throw ArgumentError("cannot open '" + path + "'");
        return string(std::istreambuf_iterator<char>(file), {});
    }

    auto read_graph(const string & path) -> Digraph
    {
        return parse_digraph(read_text(path));
    }

    auto witness_json(const RectangularityWitness & w) -> json
    {
        return json::array({w.x, w.y, w.x2, w.y2});
    }

    auto witness_text(const RectangularityWitness & w) -> string
    {
        return std::to_string(w.x) + " " + std::to_string(w.y) + " " + std::to_string(w.x2) + " " + std::to_string(w.y2);
    }

    struct Options
    {
        string graph, instance, table, side = "plus", kind = "majority", mode = "labeled";
        vector<int> sizes;
        bool json = false, oracle = false;
        unsigned workers = 1;
        std::optional<std::uint64_t> seed;
        int vars = 6, pins = 2;
        double edge_prob = 0.5;
    };

    auto run_rect(const Options & o) -> int
    {
        auto verdict = is_rectangular(read_graph(o.graph));
        if (o.json) {
            json out{{"rectangular", verdict.rectangular}};
            if (verdict.witness)
                out["witness"] = witness_json(*verdict.witness);
            cout << out.dump() << "\n";
        }
        else if (verdict)
            cout << "rectangular\n";
        else
            cout << "non-rectangular: " << witness_text(*verdict.witness) << "\n";
        return verdict ? positive : negative;
    }

    auto run_factor(const Options & o) -> int
    {
        auto g = read_graph(o.graph);
        auto side = o.side == "plus" ? Side::plus : Side::minus;
        if (auto verdict = is_rectangular(g); ! verdict) {
            if (o.json)
                cout << json{{"rectangular", false}, {"witness", witness_json(*verdict.witness)}}.dump() << "\n";
            else
                cout << "non-rectangular: " << witness_text(*verdict.witness) << "\n";
            return negative;
        }

        auto f = factor(g, side);
        if (o.json)
            cout << json{
                {"side", to_string(side)},
                {"quotient", json::parse(digraph_to_json(f.quotient))},
                {"classes", f.partition.blocks}}
                        .dump()
                 << "\n";
        else
            cout << serialize_factor(f);
        return positive;
    }

    auto run_decide(const Options & o) -> int
    {
        auto certificate = decide_maltsev(read_graph(o.graph));
        cout << certificate_to_json(certificate) << "\n";
        return certificate ? positive : negative;
    }

    auto run_synth(const Options & o) -> int
    {
        auto g = read_graph(o.graph);
        try {
            cout << ternary_op_to_json(synth(g, parse_identity_kind(o.kind))) << "\n";
            return positive;
        }
        catch (const NotMaltsev & e) {
            cout << certificate_to_json(e.certificate()) << "\n";
            return negative;
        }
    }

    auto run_verify(const Options & o) -> int
    {
        auto g = read_graph(o.graph);
        auto op = parse_ternary_op_json(read_text(o.table.empty() ? "-" : o.table));
        auto kind = parse_identity_kind(o.kind);
        if (op.size() != g.size())
            throw ArgumentError("table is on " + std::to_string(op.size()) + " elements but the digraph has " + std::to_string(g.size()) + " vertices");

        auto identities = verify_identities(op, kind);
        auto polymorphism = verify_polymorphism(g, op);
        bool ok = identities && polymorphism;

        if (o.json) {
            json out{{"ok", ok}, {"identities", identities.holds}, {"polymorphism", polymorphism.compatible}};
            if (identities.violation)
                out["identity_violation"] = {identities.violation->first, identities.violation->second};
            if (polymorphism.violation) {
                json edges = json::array();
                for (auto & e : *polymorphism.violation)
                    edges.push_back({e.from, e.to});
                out["polymorphism_violation"] = edges;
            }
            cout << out.dump() << "\n";
        }
        else if (ok)
            cout << "ok\n";
        else if (! identities)
            cout << "fail: " << to_string(kind) << " identities break at " << identities.violation->first << " " << identities.violation->second << "\n";
        else {
            cout << "fail: not a polymorphism at edges";
            for (auto & e : *polymorphism.violation)
                cout << " " << e.from << "->" << e.to;
            cout << "\n";
        }
        return ok ? positive : negative;
    }

    auto run_oracle(const Options & o) -> int
    {
        auto g = read_graph(o.graph);
        auto op = find_polymorphism_bruteforce(g, parse_identity_kind(o.kind));
        if (op)
            cout << ternary_op_to_json(*op) << "\n";
        else
            cout << (o.json ? R"({"found":false})" : "none") << "\n";
        return op ? positive : negative;
    }

    auto run_census(const Options & o) -> int
    {
        vector<EnumerationMode> modes;
        if (o.mode == "both")
            modes = {EnumerationMode::labeled, EnumerationMode::up_to_iso};
        else
            modes = {parse_enumeration_mode(o.mode)};

        vector<CensusRow> rows;
        for (auto n : o.sizes)
            for (auto mode : modes)
                rows.push_back(count_maltsev(n, mode, o.workers));

        if (o.json) {
            json out = json::array();
            for (auto & r : rows)
                out.push_back({{"n", r.n}, {"mode", to_string(r.mode)}, {"total", r.total}, {"rectangular", r.rectangular}, {"maltsev", r.maltsev}, {"majority", r.majority}});
            cout << out.dump() << "\n";
        }
        else {
            cout << census_csv_header() << "\n";
            for (auto & r : rows)
                cout << to_csv(r) << "\n";
        }
        return positive;
    }

    auto run_csp(const Options & o) -> int
    {
        auto g = read_graph(o.graph);
        CspInstance instance;
        if (! o.instance.empty())
            instance = parse_instance_json(read_text(o.instance));
        else if (o.seed)
            instance = random_instance(g, o.vars, o.edge_prob, o.pins, *o.seed);
        else
            throw ArgumentError("csp needs --instance or --seed");

        std::optional<TernaryOp> majority;
        if (! o.table.empty())
            majority = parse_ternary_op_json(read_text(o.table));

        auto result = solve_csp_consistency(instance, g, majority);
        if (! result.warning.empty())
            cerr << "warning: " << result.warning << "\n";

        int code = result.verdict == CspVerdict::yes ? positive : result.verdict == CspVerdict::no ? negative : maybe;

        json out{{"verdict", to_string(result.verdict)}, {"complete", result.complete}};
        if (o.seed && o.instance.empty())
            out["instance"] = json::parse(instance_to_json(instance));

        string oracle_line;
        if (o.oracle) {
            auto map = find_homomorphism_bruteforce(instance.h, g, instance.pins);
            bool agree = result.verdict == CspVerdict::maybe || (result.verdict == CspVerdict::yes) == map.has_value();
            out["oracle"] = map ? "yes" : "no";
            out["agree"] = agree;
            if (map)
                out["homomorphism"] = json::parse(homomorphism_to_json(*map));
            oracle_line = string("oracle: ") + (map ? "yes" : "no") + (agree ? " (agree)" : " (disagree)");

            if (! agree) {
                cerr << "internal error: consistency verdict contradicts exhaustive search\n";
                code = internal;
            }
        }

        if (o.json)
            cout << out.dump() << "\n";
        else {
            cout << to_string(result.verdict) << "\n";
            if (o.oracle)
                cout << oracle_line << "\n";
        }
        return code;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{"Maltsev and majority polymorphisms of finite digraphs"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_flag("--json", o.json, "Emit JSON on stdout");

    auto graph_arg = [&](CLI::App * sub) {
        sub->add_option("graph", o.graph, "Digraph file ('-' for stdin)")->required();
    };
    auto kind_opt = [&](CLI::App * sub) {
        sub->add_option("--kind", o.kind, "majority or maltsev")->check(CLI::IsMember({"majority", "maltsev"}));
    };

    auto rect = app.add_subcommand("rect", "Test rectangularity, printing a witness on failure");
    graph_arg(rect);

    auto factor_cmd = app.add_subcommand("factor", "Quotient by R+ or R- with its class map");
    graph_arg(factor_cmd);
    factor_cmd->add_option("--side", o.side, "plus or minus")->check(CLI::IsMember({"plus", "minus"}));

    auto decide = app.add_subcommand("decide", "Decide the Maltsev property and print the certificate");
    graph_arg(decide);

    auto synth_cmd = app.add_subcommand("synth", "Build a polymorphism table by lifting through the factor chain");
    graph_arg(synth_cmd);
    kind_opt(synth_cmd);

    auto verify = app.add_subcommand("verify", "Check a table (stdin or --table) against a digraph");
    graph_arg(verify);
    kind_opt(verify);
    verify->add_option("--table", o.table, "Table JSON file");

    auto oracle = app.add_subcommand("oracle", "Brute-force search for a polymorphism table");
    graph_arg(oracle);
    kind_opt(oracle);

    auto census = app.add_subcommand("census", "Count rectangular and Maltsev digraphs");
    census->add_option("--n", o.sizes, "Vertex counts (0..5)")->required()->check(CLI::Range(0, max_census_size));
    census->add_option("--mode", o.mode, "labeled, up_to_iso or both")->check(CLI::IsMember({"labeled", "up_to_iso", "both"}));
    census->add_option("--workers", o.workers, "Worker threads (0 = all cores)");

    auto csp = app.add_subcommand("csp", "Decide extendability of a pinned map by path consistency");
    csp->add_option("--graph", o.graph, "Target digraph file")->required();
    csp->add_option("--instance", o.instance, "Instance JSON file");
    csp->add_option("--table", o.table, "Majority table JSON for a non-Maltsev target");
    csp->add_flag("--oracle", o.oracle, "Cross-check against exhaustive search");
    csp->add_option("--seed", o.seed, "Generate a random instance from this seed");
    csp->add_option("--vars", o.vars, "Random instance: variable count")->check(CLI::Range(0, 64));
    csp->add_option("--edge-prob", o.edge_prob, "Random instance: edge probability")->check(CLI::Range(0.0, 1.0));
    csp->add_option("--pins", o.pins, "Random instance: pinned variables")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        cerr << "error: " << e.what() << "\n\n" << app.help();
        return usage;
    }

    try {
        if (*rect)
            return run_rect(o);
        if (*factor_cmd)
            return run_factor(o);
        if (*decide)
            return run_decide(o);
        if (*synth_cmd)
            return run_synth(o);
        if (*verify)
            return run_verify(o);
        if (*oracle)
            return run_oracle(o);
        if (*census)
            return run_census(o);
        if (*csp)
            return run_csp(o);
    }
    catch (const InvariantViolation & e) {
        cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
    catch (const ParseError & e) {
        cerr << "error: " << e.what() << "\n";
        return usage;
    }
    catch (const ArgumentError & e) {
        cerr << "error: " << e.what() << "\n";
        return usage;
    }
    catch (const PreconditionError & e) {
        cerr << "error: " << e.what() << "\n";
        return negative;
    }
    return usage;
}
