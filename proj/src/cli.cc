#include <qreliab/bipartite.hh>
#include <qreliab/cli.hh>
#include <qreliab/cq.hh>
#include <qreliab/errors.hh>
#include <qreliab/exact_eval.hh>
#include <qreliab/gadgets.hh>
#include <qreliab/reduction_pqe.hh>
#include <qreliab/reduction_ur.hh>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace qreliab {

namespace
{
    struct UsageError : std::runtime_error
    {
        using std::runtime_error::runtime_error;
    };

    std::string read_file(const std::string & path)
    {
        std::ifstream in(path);
        if (! in)
            throw Error("cannot read " + path);
        std::ostringstream text;
        text << in.rdbuf();
        return text.str();
    }

    std::size_t cap_from_env(std::size_t fallback)
    {
        const char * value = std::getenv("QRELIAB_BRUTE_CAP");
        if (value == nullptr || *value == '\0')
            return fallback;
        char * end = nullptr;
        unsigned long cap = std::strtoul(value, &end, 10);
        if (*end != '\0' || cap == 0 || cap > max_enumeration_width)
            throw UsageError("QRELIAB_BRUTE_CAP must be an integer in [1, " + std::to_string(max_enumeration_width) + "]");
        return cap;
    }

    struct Rst
    {
        int r, s, t;
    };

    Rst parse_rst(const std::string & text)
    {
        Rst rst{};
        char comma1 = 0, comma2 = 0;
        std::istringstream in(text);
        if (! (in >> rst.r >> comma1 >> rst.s >> comma2 >> rst.t) || comma1 != ',' || comma2 != ',' || ! in.eof()
                || rst.r < 1 || rst.s < 1 || rst.t < 1)
            throw UsageError("--rst expects three positive integers r,s,t; got '" + text + "'");
        return rst;
    }

    Rational parse_probability_flag(const std::string & flag, const std::string & text)
    {
        try {
            return parse_rational(text);
        }
        catch (const ParseError &) {
            throw UsageError(flag + " expects p/q; got '" + text + "'");
        }
    }

    /// A probability file is per-fact when its first entry names a fact.
    ProbAssignment read_probs(const std::string & path)
    {
        auto text = read_file(path);
        auto mode = ProbAssignment::Mode::per_relation;
        std::istringstream lines(text);
        for (std::string line; std::getline(lines, line);) {
            auto start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos || line[start] == '#')
                continue;
            if (line.find('(') != std::string::npos)
                mode = ProbAssignment::Mode::per_fact;
            break;
        }
        return parse_prob_map(text, mode);
    }

    bool use_safe(const std::string & method, const Query & query)
    {
        if (method == "safe")
            return true;
        if (method == "brute")
            return false;
        return classify_hierarchical(query).hierarchical;
    }

    void print_counts(std::ostream & out, const GadgetCounts & g)
    {
        out << "lambda_R=" << g.lambda_r << "\n"
            << "lambda_bar_R=" << g.lambda_bar_r << "\n"
            << "lambda_T=" << g.lambda_t << "\n"
            << "lambda_bar_T=" << g.lambda_bar_t << "\n"
            << "gamma=" << g.gamma << "\n"
            << "delta_R=" << g.delta_r << "\n"
            << "delta_T=" << g.delta_t << "\n"
            << "delta_bot=" << g.delta_bot << "\n"
            << "kappa=" << g.kappa << "\n";
    }
}

int run_cli(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Exact uniform reliability and probabilistic evaluation of conjunctive queries", "qreliab"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every subcommand");

    std::string query_text, facts_path, graph_path, method = "auto", probs_path, uniform, rst_text, oracle,
            emit_dir, r_text, t_text;
    int max_rst = 0;
    bool check_brute = false, details = false;

    auto * classify = app.add_subcommand("classify", "Hierarchical test; prints a witness pair and (r,s,t) otherwise");
    classify->add_option("query", query_text, "Conjunctive query")->required();

    auto * ur = app.add_subcommand("ur", "Number of subinstances satisfying the query");
    ur->add_option("query", query_text, "Conjunctive query")->required();
    ur->add_option("facts", facts_path, "Fact file")->required()->check(CLI::ExistingFile);
    ur->add_option("--method", method, "auto picks safe for hierarchical queries")
        ->check(CLI::IsMember({"auto", "brute", "safe"}));

    auto * pqe = app.add_subcommand("pqe", "Probability that the query holds");
    pqe->add_option("query", query_text, "Conjunctive query")->required();
    pqe->add_option("facts", facts_path, "Fact file")->required()->check(CLI::ExistingFile);
    auto * probs_opt = pqe->add_option("--probs", probs_path, "Per-relation or per-fact probabilities")
                           ->check(CLI::ExistingFile);
    auto * uniform_opt = pqe->add_option("--uniform", uniform, "Same probability p/q for every fact");
    probs_opt->excludes(uniform_opt);
    pqe->add_option("--method", method, "auto picks safe for hierarchical queries")
        ->check(CLI::IsMember({"auto", "brute", "safe"}));

    auto * gadgets = app.add_subcommand("gadgets", "Gadget violating-world counts");
    gadgets->add_option("--rst", rst_text, "r,s,t")->required();
    gadgets->add_flag("--check-brute", check_brute, "Also enumerate the gadget worlds and compare");

    auto * lemmas = app.add_subcommand("lemmas", "Parity and determinant identities for r,s,t in [1,n]");
    lemmas->add_option("--max-rst", max_rst, "n")->required()->check(CLI::PositiveNumber);

    auto * isets = app.add_subcommand("isets", "Number of independent-set pairs of a bipartite graph");
    isets->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);

    auto * reduce_ur = app.add_subcommand("reduce-ur", "Count independent-set pairs through uniform reliability");
    reduce_ur->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
    reduce_ur->add_option("--rst", rst_text, "r,s,t")->required();
    reduce_ur->add_option("--oracle", oracle, "analytic or brute")
        ->default_str("analytic")
        ->check(CLI::IsMember({"analytic", "brute"}));
    reduce_ur->add_option("--emit-instances", emit_dir, "Write each D_p to <dir>/D_<p>.facts");
    reduce_ur->add_flag("--details", details, "Also print parameters and recovered cells");

    auto * reduce_pqe = app.add_subcommand("reduce-pqe", "Count independent-set pairs through PQE with certain S-facts");
    reduce_pqe->add_option("graph", graph_path, "Graph file")->required()->check(CLI::ExistingFile);
    reduce_pqe->add_option("--r", r_text, "Probability of R-facts, p/q")->required();
    reduce_pqe->add_option("--t", t_text, "Probability of T-facts, p/q")->required();
    reduce_pqe->add_option("--oracle", oracle, "brute or formula")
        ->default_str("brute")
        ->check(CLI::IsMember({"brute", "formula"}));
    reduce_pqe->add_flag("--details", details, "Also print the probability matrix and the recovered counts");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e, out, err);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        const auto brute_cap = cap_from_env(default_brute_cap);
        const auto bipartite_cap = cap_from_env(default_bipartite_cap);

        if (classify->parsed()) {
            auto query = parse_query(query_text);
            auto report = classify_hierarchical(query);
            if (report.hierarchical)
                out << "hierarchical\n";
            else {
                auto pair = noncomparable_pair_and_rst(query);
                out << "non-hierarchical witness=(" << pair.x << "," << pair.y << ") rst=(" << pair.r << "," << pair.s
                    << "," << pair.t << ")\n";
            }
        }
        else if (ur->parsed()) {
            auto query = parse_query(query_text);
            auto instance = parse_instance(read_file(facts_path));
            check_compatible(query, instance);
            out << (use_safe(method, query) ? ur_safe(query, instance) : ur_brute(query, instance, brute_cap)) << "\n";
        }
        else if (pqe->parsed()) {
            if (probs_path.empty() && uniform.empty())
                throw UsageError("pqe needs --probs <file> or --uniform p/q");
            auto query = parse_query(query_text);
            auto instance = parse_instance(read_file(facts_path));
            check_compatible(query, instance);
            auto pi = probs_path.empty() ? ProbAssignment::uniform(parse_probability_flag("--uniform", uniform))
                                         : read_probs(probs_path);
            if (pi.mode() == ProbAssignment::Mode::per_relation && ! probs_path.empty())
                for (auto & fact : instance)
                    pi.probability(fact);
            auto p = use_safe(method, query) ? pqe_safe(query, instance, pi) : pqe_brute(query, instance, pi, brute_cap);
            out << format_rational(p) << "\n";
        }
        else if (gadgets->parsed()) {
            auto rst = parse_rst(rst_text);
            auto closed = closed_counts(rst.r, rst.s, rst.t);
            print_counts(out, closed);
            if (check_brute) {
                bool agree = brute_counts(rst.r, rst.s, rst.t, brute_cap) == closed;
                out << "brute=" << (agree ? "agree" : "disagree") << "\n";
                if (! agree)
                    return 1;
            }
        }
        else if (lemmas->parsed()) {
            auto report = verify_lemmas(max_rst, max_rst, max_rst, std::min<std::size_t>(brute_cap, 15));
            for (auto & c : report.checks) {
                out << "rst=(" << c.r << "," << c.s << "," << c.t << ") " << (c.passed() ? "pass" : "FAIL");
                if (c.brute_agrees)
                    out << " brute=" << (*c.brute_agrees ? "agree" : "disagree");
                out << "\n";
            }
            out << "all=" << (report.all_passed() ? "pass" : "FAIL") << "\n";
            if (! report.all_passed())
                return 1;
        }
        else if (isets->parsed()) {
            out << independent_pair_count(parse_graph(read_file(graph_path)), bipartite_cap) << "\n";
        }
        else if (reduce_ur->parsed()) {
            auto rst = parse_rst(rst_text);
            auto graph = parse_graph(read_file(graph_path));
            ReductionOptions options;
            options.oracle = oracle == "brute" ? UrOracle::brute : UrOracle::analytic;
            options.brute_cap = brute_cap;
            options.bipartite_cap = bipartite_cap;
            if (! emit_dir.empty())
                options.emit_instances = emit_dir;
            auto run = run_reduction(graph, rst.r, rst.s, rst.t, options);
            if (details) {
                auto & p = run.params;
                out << "M1=" << p.m1 << "\nM2=" << p.m2 << "\nM3=" << p.m3 << "\nM=" << p.equations << "\n";
                out << "unknowns=" << profile_cells(p.left_size, p.right_size, p.m).size() << "\n";
                for (auto & [key, y] : run.y_values)
                    out << "Y(" << key.i << "," << key.j << "," << key.c << "," << key.d << "," << key.dp << ")=" << y
                        << "\n";
            }
            out << "P=" << run.p_result << "\n";
        }
        else if (reduce_pqe->parsed()) {
            auto r = parse_probability_flag("--r", r_text);
            auto t = parse_probability_flag("--t", t_text);
            auto graph = parse_graph(read_file(graph_path));
            auto run = run_reduction_pqe(graph, r, t, oracle == "formula" ? PiOracle::formula : PiOracle::brute,
                    oracle == "formula" ? bipartite_cap : brute_cap);
            if (details) {
                for (std::size_t c = 0; c < run.pi.size(); ++c)
                    for (std::size_t d = 0; d < run.pi[c].size(); ++d)
                        out << "Pi(" << c << "," << d << ")=" << format_rational(run.pi[c][d]) << "\n";
                for (std::size_t i = 0; i < run.x.size(); ++i)
                    for (std::size_t j = 0; j < run.x[i].size(); ++j)
                        out << "X(" << i << "," << j << ")=" << run.x[i][j] << "\n";
            }
            out << "P=" << run.p_result << "\n";
        }
    }
    catch (const UsageError & e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace qreliab
