// End-to-end tests for the rbjordan command-line tool. Each case spawns the
// real binary (path injected as RBJ_CLI_PATH at compile time), captures its
// streams and exit code through the shell, and checks the documented
// contract: exit 0 success, 1 domain failure, 2 usage/parse failure.

#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rbjordan/constructions.hpp"
#include "rbjordan/operator_io.hpp"
#include "rbjordan/rbop.hpp"

using namespace rbjordan;
using nlohmann::json;

namespace {

struct CliRun {
    int code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("rbjordan_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

/// Runs `env_prefix RBJ_CLI_PATH args` through the shell with `stdin_text`
/// on standard input, capturing both streams.
CliRun run_cli(const std::string& args, const std::string& stdin_text = "",
               const std::string& env_prefix = "") {
    static int counter = 0;
    const auto base = scratch_dir() / ("run" + std::to_string(counter++));
    const auto in_path = base.string() + ".in";
    const auto out_path = base.string() + ".out";
    const auto err_path = base.string() + ".err";
    std::ofstream(in_path) << stdin_text;

    std::string cmd;
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += std::string(RBJ_CLI_PATH) + " " + args;
    cmd += " < " + in_path + " > " + out_path + " 2> " + err_path;
    const int raw = std::system(cmd.c_str());

    CliRun run;
    run.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    run.out = slurp(out_path);
    run.err = slurp(err_path);
    return run;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

/// The operator file body with '#' comment lines removed.
std::string strip_comments(const std::string& text) {
    std::istringstream in(text);
    std::ostringstream out;
    std::string line;
    while (std::getline(in, line))
        if (line.empty() || line[0] != '#') out << line << "\n";
    return out.str();
}

} // namespace

TEST_CASE("verify accepts a constructed operator piped through stdin") {
    const CliRun made = run_cli("construct cyclic Zp:7 -1,-1,-1 --k 1,2,3 --x0 1");
    REQUIRE(made.code == 0);
    const CliRun checked = run_cli("verify -", made.out);
    CHECK(checked.code == 0);
    CHECK(contains(checked.out, "verdict: rb-operator"));
    CHECK(contains(checked.out, "nilpotency index: 3"));
    CHECK(contains(checked.out, "failing pairs: none"));
}

TEST_CASE("verify reads operator files from disk") {
    const auto path = (scratch_dir() / "reference.op").string();
    std::ofstream(path) << write_operator(reference_operator());
    const CliRun checked = run_cli("verify " + path);
    CHECK(checked.code == 0);
    CHECK(contains(checked.out, "nilpotency index: 3"));
}

TEST_CASE("verify fails on the identity matrix and reports the pairs") {
    const CliRun r = run_cli("verify -", "field Zp:3\nform 1,1\n1,0,0\n0,1,0\n0,0,1\n");
    CHECK(r.code == 1);
    CHECK(contains(r.out, "verdict: not an rb-operator"));
    CHECK(contains(r.out, "(0, 0): residual"));
    CHECK(contains(r.out, "nilpotency index: none"));
}

TEST_CASE("verify exits with a parse failure on malformed input") {
    const CliRun r = run_cli("verify -", "field Zp:3\nnot a form line\n");
    CHECK(r.code == 2);
    CHECK(contains(r.err, "error:"));

    const CliRun missing = run_cli("verify /no/such/file.op");
    CHECK(missing.code == 2);
}

TEST_CASE("construct cyclic reproduces the pinned reference operator") {
    const CliRun r = run_cli("construct cyclic Zp:7 -1,-1,-1 --k 1,2,3 --x0 1");
    REQUIRE(r.code == 0);
    CHECK(parse_operator(r.out) == reference_operator());
}

TEST_CASE("construct emits operator files that round-trip exactly") {
    const std::vector<std::string> invocations = {
        "construct cyclic Zp:7 -1,-1,-1 --k 1,2,3 --x0 1",
        "construct j3 Zp:5 1,1 --auto",
        "construct j3 Q 1,1 --abc 1,1,0 --kl 0,1",
        "construct split Zp:3 1,1,1,1,1 --auto",
        "construct sqrt-split Zp:5 1,1,1",
    };
    for (const std::string& invocation : invocations) {
        CAPTURE(invocation);
        const CliRun r = run_cli(invocation);
        REQUIRE(r.code == 0);
        const std::string body = strip_comments(r.out);
        CHECK(write_operator(parse_operator(body)) == body);
    }
}

TEST_CASE("construct j3 over Q finds a nonzero square-zero operator") {
    const CliRun r = run_cli("construct j3 Q 1,1 --auto");
    REQUIRE(r.code == 0);
    const LinOperator R = parse_operator(r.out);
    CHECK_FALSE(R.M.is_zero());
    CHECK(check_rb(R).is_rb);
    CHECK(nilpotency_index(R) == 2U);
}

TEST_CASE("construct sqrt-split reports which root is missing") {
    const CliRun r = run_cli("construct sqrt-split Zp:7 1,1,1");
    CHECK(r.code == 1);
    CHECK(contains(r.err, "sqrt(-1)"));
}

TEST_CASE("construct auto fails as a domain error when no parameters exist") {
    // Over Q the form (1,1) is anisotropic, so the cyclic ingredients are
    // undecidable-or-absent; the tool must say so rather than emit nothing.
    const CliRun r = run_cli("construct cyclic Q 1,1,1 --auto");
    CHECK(r.code == 1);
    CHECK(contains(r.err, "no parameters found"));
}

TEST_CASE("construct rejects parameters that do not belong to the family") {
    CHECK(run_cli("construct j3 Zp:5 1,1 --x0 3").code == 2);
    CHECK(run_cli("construct cyclic Zp:7 -1,-1,-1 --auto --k 1,2,3 --x0 1").code == 2);
    CHECK(run_cli("construct sqrt-split Zp:5 1,1,1 --auto").code == 2);
    CHECK(run_cli("construct j3 Zp:5 1,1").code == 2); // neither --auto nor params
}

TEST_CASE("construct surfaces violated family constraints as domain errors") {
    // (1,1,1) is not isotropic for j3 over Q via these parameters.
    const CliRun r = run_cli("construct j3 Q 1,1 --abc 1,1,1 --kl 0,1");
    CHECK(r.code == 1);
    CHECK(contains(r.err, "error:"));
}

TEST_CASE("index certify both cross-checks table against brute force") {
    const CliRun r = run_cli("index Zp:5 1,2,3 --certify both");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "table value: 3"));
    CHECK(contains(r.out, "brute value: 3"));
    CHECK(contains(r.out, "agreement: yes"));
    CHECK(contains(r.out, "value: 3"));
}

TEST_CASE("index over the reals uses the signature rules") {
    const CliRun r = run_cli("index R -1,-1,-1,-1");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "value: 1"));
    CHECK(contains(r.out, "method: table"));
}

TEST_CASE("index over Q is refused with the reason") {
    const CliRun r = run_cli("index Q 1,-3,1");
    CHECK(r.code == 1);
    CHECK(contains(r.err, "x^2 - 3y^2 = -1"));
}

TEST_CASE("index json output mirrors the text run") {
    const CliRun text = run_cli("index Zp:3 1,1");
    const CliRun js = run_cli("index Zp:3 1,1 --json");
    REQUIRE(text.code == 0);
    REQUIRE(js.code == 0);
    const json out = json::parse(js.out);
    CHECK(out.at("value") == 2);
    CHECK(out.at("method") == "table");
    CHECK(out.at("fully_certified") == true);
    CHECK(out.at("witness").is_array());
    CHECK(contains(text.out, "value: 2"));
    CHECK(contains(text.out, "method: table"));
}

TEST_CASE("index writes the witness to a requested file") {
    const auto path = (scratch_dir() / "witness.op").string();
    const CliRun r = run_cli("index Zp:5 1,2,3 --witness " + path);
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "witness: written to " + path));
    const CliRun checked = run_cli("verify " + path);
    CHECK(checked.code == 0);
    CHECK(contains(checked.out, "nilpotency index: 3"));
}

TEST_CASE("search prints the census and requested operator files") {
    const CliRun r = run_cli("search Zp:3 1,1 --ops 3");
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "total operators: 9"));
    CHECK(contains(r.out, "  index 1: 1"));
    CHECK(contains(r.out, "  index 2: 8"));
    CHECK(contains(r.out, "max index: 2"));
    CHECK(contains(r.out, "operators: showing 3 of 9"));
}

TEST_CASE("search output is identical across partition widths") {
    const CliRun one = run_cli("search Zp:3 1,1,2 --width 1");
    const CliRun four = run_cli("search Zp:3 1,1,2 --width 4");
    REQUIRE(one.code == 0);
    REQUIRE(four.code == 0);
    CHECK(one.out == four.out);
}

TEST_CASE("search json carries the same census as the text run") {
    const CliRun js = run_cli("search Zp:3 1,1 --json");
    REQUIRE(js.code == 0);
    const json out = json::parse(js.out);
    CHECK(out.at("census").at("1") == 1);
    CHECK(out.at("census").at("2") == 8);
    CHECK(out.at("max_index") == 2);
    CHECK(out.at("witness").is_array());
}

TEST_CASE("census emits labeled CSV rows") {
    const CliRun r = run_cli("census Zp:5 1,1");
    REQUIRE(r.code == 0);
    std::istringstream lines(r.out);
    std::string header;
    std::getline(lines, header);
    CHECK(header == "p,form,index,count,certified");
    CHECK(contains(r.out, "5,\"1,1\",1,1,pruned"));
    CHECK(contains(r.out, "5,\"1,1\",2,24,pruned"));

    const CliRun naive = run_cli("census Zp:5 1,1 --mode naive");
    CHECK(contains(naive.out, "5,\"1,1\",2,24,naive"));
}

TEST_CASE("search budget environment variable is honored") {
    const CliRun starved = run_cli("census Zp:5 1,1", "", "RB_SEARCH_BUDGET=5");
    CHECK(starved.code == 1);
    CHECK(contains(starved.err, "non-certifying"));

    const CliRun roomy = run_cli("census Zp:5 1,1", "", "RB_SEARCH_BUDGET=100000");
    CHECK(roomy.code == 0);

    const CliRun junk = run_cli("census Zp:5 1,1", "", "RB_SEARCH_BUDGET=frog");
    CHECK(junk.code == 2);
    CHECK(contains(junk.err, "RB_SEARCH_BUDGET"));
}

TEST_CASE("solve-form answers the documented examples") {
    const CliRun iso = run_cli("solve-form isotropic Zp:5 1,1,1");
    CHECK(iso.code == 0);
    CHECK(contains(iso.out, "(0,1,2)"));

    const CliRun rep = run_cli("solve-form represent Zp:5 1,1,2");
    CHECK(rep.code == 0);
    CHECK(contains(rep.out, "(1,1)"));

    const CliRun absent = run_cli("solve-form isotropic Zp:3 1,1");
    CHECK(absent.code == 0);
    CHECK(contains(absent.out, "absent"));
}

TEST_CASE("solve-form distinguishes absent from undecided over Q") {
    const CliRun absent = run_cli("solve-form isotropic Q 1,1");
    CHECK(absent.code == 0);
    CHECK(contains(absent.out, "absent"));

    const CliRun undecided = run_cli("solve-form isotropic Q 1,1,1");
    CHECK(undecided.code == 1);
    CHECK(contains(undecided.out, "undecided"));
}

TEST_CASE("solve-form json mirrors the text answer") {
    const CliRun js = run_cli("solve-form isotropic Zp:5 1,1,1 --json");
    REQUIRE(js.code == 0);
    const json out = json::parse(js.out);
    CHECK(out.at("status") == "found");
    CHECK(out.at("point") == json::array({"0", "1", "2"}));
}

TEST_CASE("usage failures exit with code 2") {
    CHECK(run_cli("").code == 2);                            // no subcommand
    CHECK(run_cli("frobnicate").code == 2);                  // unknown subcommand
    CHECK(run_cli("index Zp:5").code == 2);                  // missing form
    CHECK(run_cli("index Zp:5 1,1 --certify maybe").code == 2);
    CHECK(run_cli("construct frobnicate Zp:3 1,1").code == 2);
    CHECK(run_cli("solve-form represent Zp:5 1,1").code == 2); // needs three coefficients
    CHECK(run_cli("--help").code == 0);
    CHECK(run_cli("index --help").code == 0);
}
