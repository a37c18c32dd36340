#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"

#include "arbor/cli.hpp"
#include "arbor/counting.hpp"

using namespace arbor;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("eval subcommand") {
    const Run r = run({"eval", "L2 * R2"});
    CHECK(r.code == 0);
    CHECK(r.out == "((. (. .)) (. .))\n");

    const Run s = run({"eval", "@1 + @1", "--style", "shorthand"});
    CHECK(s.code == 0);
    CHECK(s.out == "@2\n");

    const Run bad = run({"eval", "(("});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("error:") != std::string::npos);
}

TEST_CASE("enumerate subcommand") {
    const Run r = run({"enumerate", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "((. .) .)\n(. (. .))\n");

    // Past the configured degree cap: resource exit code.
    CHECK(run({"enumerate", "13"}).code == 3);
    CHECK(run({"enumerate", "--", "-1"}).code == 2);
}

TEST_CASE("table subcommand") {
    const Run r = run({"table", "--max-degree", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == render_count_table(3));
}

TEST_CASE("factor subcommand") {
    const Run composite = run({"factor", "((. (. .)) (. .))"});
    CHECK(composite.code == 0);
    CHECK(composite.out == "L2 * R2\n");

    const Run total = run({"factor", "@4"});
    CHECK(total.code == 0);
    CHECK(total.out == "@2 * @2\n");

    CHECK(run({"factor", "L4"}).out == "prime\n");
    CHECK(run({"factor", "(. .)"}).out == "unit\n");
    CHECK(run({"factor", "."}).code == 2);

    // A starved search budget reports the result as unsettled.
    const Run starved = run({"factor", "@4", "--bound-count", "1"});
    CHECK(starved.code == 3);
    CHECK(starved.out == "unknown\n");
}

TEST_CASE("primes subcommand") {
    const Run r = run({"primes", "--max-degree", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 6) == "L2\nR2\n");
    // 2 + 5 + 12 primes at degrees 2..4, one per line.
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 19);
    CHECK(r.out.find("((. (. .)) (. .))") == std::string::npos);
}

TEST_CASE("verify subcommand") {
    const Run r = run({"verify", "table"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS table (") != std::string::npos);
    CHECK(r.out.find("all 1 checks\n") != std::string::npos);
    CHECK(run({"verify", "no-such-check"}).code == 2);
}

TEST_CASE("experiment subcommand") {
    const Run r = run({"experiment", "addition", "--max-degree", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sum-decomposition sweep") != std::string::npos);
    CHECK(r.out.find("degree 2: exhaustive, checked=2, decomposable=0") != std::string::npos);

    const auto path =
        std::filesystem::temp_directory_path() / "arbor_cli_experiment_report.txt";
    const Run w = run({"experiment", "factorization", "--max-degree", "2", "--out", path.string()});
    CHECK(w.code == 0);
    std::ifstream file(path);
    std::stringstream content;
    content << file.rdbuf();
    CHECK(content.str() == w.out);
    std::filesystem::remove(path);
}

TEST_CASE("argument errors and help") {
    CHECK(run({}).code == 1);
    CHECK(run({"no-such-command"}).code == 1);
    CHECK(run({"eval"}).code == 1);
    CHECK(run({"enumerate", "2", "--style", "fancy"}).code == 1);

    const Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("Usage") != std::string::npos);
}
