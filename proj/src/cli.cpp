#include "arbor/cli.hpp"

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "arbor/counting.hpp"
#include "arbor/errors.hpp"
#include "arbor/expression.hpp"
#include "arbor/factorization.hpp"
#include "arbor/grove.hpp"
#include "arbor/text.hpp"
#include "arbor/tree.hpp"
#include "arbor/verify.hpp"

namespace arbor {
namespace {

Style to_style(const std::string& name) {
    if (name == "shorthand") return Style::shorthand;
    if (name == "ascii") return Style::ascii;
    return Style::canonical;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream file(path);
    if (!file) throw ResourceError("cannot open output file: " + path);
    file << text;
}

const std::vector<std::string> kStyles = {"canonical", "shorthand", "ascii"};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"arithmetic on planar binary trees and groves"};
    app.name("arbor");
    app.require_subcommand(1);

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression of trees and groves");
    std::string eval_expr;
    std::string eval_style = "canonical";
    eval_cmd->add_option("expression", eval_expr, "expression, e.g. \"L2 * R2\" or \"@1 + @1\"")
        ->required();
    eval_cmd->add_option("--style", eval_style, "output style")->check(CLI::IsMember(kStyles));

    auto* enum_cmd = app.add_subcommand("enumerate", "list the trees of one degree in order");
    int enum_degree = 0;
    std::string enum_style = "canonical";
    enum_cmd->add_option("degree", enum_degree, "degree (number of internal vertices)")
        ->required();
    enum_cmd->add_option("--style", enum_style, "output style")->check(CLI::IsMember(kStyles));

    auto* table_cmd = app.add_subcommand("table", "print tree and grove counts per degree");
    int table_max = 8;
    table_cmd->add_option("--max-degree", table_max, "largest degree to list (default 8)");

    auto* factor_cmd = app.add_subcommand("factor", "factor a grove into prime groves");
    std::string factor_input;
    std::string factor_style = "shorthand";
    std::uint64_t factor_bound = 0;
    factor_cmd->add_option("input", factor_input, "a tree or grove, e.g. \"((. (. .)) (. .))\"")
        ->required();
    factor_cmd->add_option("--style", factor_style, "output style")
        ->check(CLI::IsMember(kStyles));
    factor_cmd->add_option("--bound-count", factor_bound,
                           "search node budget (default 200000)");

    auto* primes_cmd = app.add_subcommand("primes", "list the prime trees up to a degree");
    int primes_max = 6;
    std::string primes_style = "shorthand";
    primes_cmd->add_option("--max-degree", primes_max, "largest degree to list (default 6)");
    primes_cmd->add_option("--style", primes_style, "output style")
        ->check(CLI::IsMember(kStyles));

    auto* verify_cmd = app.add_subcommand("verify", "run the pinned verification checks");
    std::vector<std::string> verify_names;
    std::string verify_out;
    verify_cmd->add_option("checks", verify_names, "check names (default: all)");
    verify_cmd->add_option("--out", verify_out, "also write the report to this file");

    auto* exp_cmd = app.add_subcommand("experiment", "run a randomized sweep and report");
    std::string exp_kind;
    int exp_max_degree = -1;
    int exp_samples = -1;
    std::uint64_t exp_seed = 1;
    std::uint64_t exp_bound = 0;
    std::string exp_out;
    exp_cmd->add_option("kind", exp_kind, "factorization | addition")
        ->required()
        ->check(CLI::IsMember({"factorization", "addition"}));
    exp_cmd->add_option("--max-degree", exp_max_degree, "largest degree to sweep");
    exp_cmd->add_option("--samples", exp_samples, "samples per non-exhaustive degree");
    exp_cmd->add_option("--seed", exp_seed, "random seed (default 1)");
    exp_cmd->add_option("--bound-count", exp_bound, "search node budget (default 200000)");
    exp_cmd->add_option("--out", exp_out, "also write the report to this file");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*eval_cmd) {
            const Grove result = evaluate(parse_expression(eval_expr));
            out << format_grove(result, to_style(eval_style)) << '\n';
            return 0;
        }
        if (*enum_cmd) {
            const Style style = to_style(enum_style);
            const auto trees = enumerate_trees(enum_degree);
            for (std::size_t i = 0; i < trees.size(); ++i) {
                if (i > 0 && style == Style::ascii) out << '\n';
                out << format_tree(trees[i], style) << '\n';
            }
            return 0;
        }
        if (*table_cmd) {
            out << render_count_table(table_max);
            return 0;
        }
        if (*factor_cmd) {
            const Grove g = parse_grove(factor_input);
            SearchLimits limits;
            if (factor_bound > 0) limits.node_budget = factor_bound;
            const FactorReport report = factor_grove(g, limits);
            const Style style = to_style(factor_style);
            switch (report.primality) {
                case Primality::unit:
                    out << "unit\n";
                    break;
                case Primality::prime:
                    out << "prime\n";
                    break;
                case Primality::unknown:
                    out << "unknown\n";
                    break;
                case Primality::composite:
                    for (const auto& sequence : report.factorizations) {
                        for (std::size_t i = 0; i < sequence.size(); ++i) {
                            if (i) out << " * ";
                            out << format_grove(sequence[i], style);
                        }
                        out << '\n';
                    }
                    break;
            }
            return report.complete ? 0 : 3;
        }
        if (*primes_cmd) {
            const Style style = to_style(primes_style);
            for (int n = 2; n <= primes_max; ++n)
                for (Tree t : enumerate_trees(n))
                    if (factor_grove(tree_grove(t)).primality == Primality::prime)
                        out << format_tree(t, style) << '\n';
            return 0;
        }
        if (*verify_cmd) {
            const std::vector<std::string> selected =
                verify_names.empty() ? check_names() : verify_names;
            std::ostringstream report;
            bool all_passed = true;
            for (const std::string& name : selected) {
                const CheckResult r = run_check(name);
                all_passed = all_passed && r.passed;
                report << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << std::fixed
                       << std::setprecision(2) << r.seconds << "s of " << std::setprecision(0)
                       << r.budget_seconds << "s budget)";
                if (!r.detail.empty()) report << ": " << r.detail;
                report << '\n';
            }
            report << (all_passed ? "all " : "FAILURES among ") << selected.size()
                   << " checks\n";
            out << report.str();
            if (!verify_out.empty()) write_file(verify_out, report.str());
            return all_passed ? 0 : 4;
        }
        if (*exp_cmd) {
            if (exp_kind == "factorization") {
                UfdOptions options;
                if (exp_max_degree >= 0) options.max_degree = exp_max_degree;
                if (exp_samples >= 0) options.samples_per_degree = exp_samples;
                options.seed = exp_seed;
                if (exp_bound > 0) options.limits.node_budget = exp_bound;
                const UfdReport report = ufd_experiment(options);
                out << report.text;
                if (!exp_out.empty()) write_file(exp_out, report.text);
                bool clean = report.totals_ok;
                for (const auto& d : report.degrees) clean = clean && d.nonunique == 0;
                return clean ? 0 : 4;
            }
            AdditiveOptions options;
            if (exp_max_degree >= 0) options.max_degree = exp_max_degree;
            if (exp_samples >= 0) options.samples_per_degree = exp_samples;
            options.seed = exp_seed;
            if (exp_bound > 0) options.limits.node_budget = exp_bound;
            const AdditiveReport report = additive_experiment(options);
            out << report.text;
            if (!exp_out.empty()) write_file(exp_out, report.text);
            bool clean = true;
            for (const auto& d : report.degrees) {
                clean = clean && d.decomposable == 0;
                if (d.degree >= 2) clean = clean && d.total_decomposes;
            }
            return clean ? 0 : 4;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    return 0;
}

}  // namespace arbor
