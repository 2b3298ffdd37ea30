#include <doctest.h>

#include "programs.hh"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string &args, bool stderr_only = false) {
    RunResult result;
    std::string command = std::string(MICROGRINGO_BIN) + " " + args +
                          (stderr_only ? " 2>&1 >/dev/null" : " 2>&1");
    FILE *pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    while (fgets(buffer, sizeof(buffer), pipe) != nullptr) { result.output += buffer; }
    int status = pclose(pipe);
    result.exit_code = WEXITSTATUS(status);
    return result;
}

std::string write_temp(const char *name, const std::string &content) {
    std::string path = std::string("/tmp/microgringo_cli_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

} // namespace

TEST_CASE("cli grounds the company program") {
    std::string input = write_temp("company.lp", mg::test::company_program);
    auto result = run("--facts-only " + input);
    CHECK(result.exit_code == 0);
    CHECK(result.output == "company(c1).\ncompany(c2).\ncompany(c3).\ncompany(c4).\n"
                           "owns(c1,c2,60).\nowns(c1,c3,20).\nowns(c2,c3,35).\n"
                           "owns(c3,c4,51).\ncontrols(c1,c2).\ncontrols(c3,c4).\n"
                           "controls(c1,c3).\ncontrols(c1,c4).\n");
}

TEST_CASE("cli exit codes") {
    std::string good = write_temp("good.lp", "p(a).\n");
    CHECK(run(good).exit_code == 0);

    auto missing = run("/tmp/microgringo_cli_no_such_file.lp");
    CHECK(missing.exit_code == 1);
    CHECK(missing.output.find("no_such_file") != std::string::npos);

    std::string bad = write_temp("bad.lp", "p(a\n");
    auto syntax = run(bad);
    CHECK(syntax.exit_code == 1);
    CHECK(syntax.output.find("bad.lp") != std::string::npos);

    std::string unsafe = write_temp("unsafe.lp", "h(X) :- not q(X).\n");
    CHECK(run(unsafe).exit_code == 1);

    std::string runaway = write_temp("runaway.lp", "p(a). p(f(X)) :- p(X).\n");
    CHECK(run("--limit 50 " + runaway).exit_code == 2);
}

TEST_CASE("cli reads the limit from the environment") {
    std::string runaway = write_temp("runaway.lp", "p(a). p(f(X)) :- p(X).\n");
    CHECK(run("--limit 10 " + runaway).exit_code == 2);
    std::string command = "MICROGRINGO_LIMIT=10 " MICROGRINGO_BIN " " + runaway;
    FILE *pipe = popen((command + " >/dev/null 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 2);
}

TEST_CASE("cli stats and trace go to standard error") {
    std::string input = write_temp("ham.lp", mg::test::hamiltonian_program);
    auto with_stats = run("--stats " + input, true);
    CHECK(with_stats.exit_code == 0);
    CHECK(with_stats.output.find("components") != std::string::npos);

    auto with_trace = run("--trace " + input, true);
    CHECK(with_trace.output.find("% component 1") != std::string::npos);
    CHECK(with_trace.output.find("% iteration 1") != std::string::npos);
}

TEST_CASE("cli concatenates multiple input files") {
    std::string facts = write_temp("facts.lp", "q(a). q(b).\n");
    std::string rules = write_temp("rules.lp", "p(X) :- q(X).\n");
    auto result = run(facts + " " + rules);
    CHECK(result.exit_code == 0);
    CHECK(result.output == "q(a).\nq(b).\np(a).\np(b).\n");
}

TEST_CASE("cli reports inconsistent programs on stderr but exits 0") {
    std::string input = write_temp("inconsistent.lp", "p. :- p.\n");
    auto result = run(input, true);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("no stable model") != std::string::npos);
}
