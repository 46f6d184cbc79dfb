// End-to-end checks of the command line tool. The binary path arrives as
// argv[1] from ctest.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <sys/wait.h>

namespace {

std::string g_cli_path;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    const std::string cmd = env_prefix + g_cli_path + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

TEST_CASE("enumerate count reproduces the reference value") {
    const auto r = run_cli("enumerate --distinct --norm 14 --filter i=1,j=1 --emit count");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "10\n");
}

TEST_CASE("enumerate list emits canonical text forms") {
    const auto r = run_cli("enumerate --max-part 3 --norm 10 --filter alt=2 --emit list");
    CHECK(r.exit_code == 0);
    int lines = 0;
    for (char c : r.out)
        lines += c == '\n';
    CHECK(lines == 9);
    CHECK(contains(r.out, "(3,3,3,1)\n"));
    CHECK(contains(r.out, "(2,2,2,2,2)\n"));

    const auto empty = run_cli("enumerate --max-part 1 --norm 0 --emit list");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out == "()\n");
}

TEST_CASE("enumerate gf uses the canonical polynomial form") {
    const auto r = run_cli("enumerate --distinct --max-part 2 --emit gf --weight qtz");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 + q*t + q^2 + q^3*z\n");
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("enumerate --max-part 3 --emit count").exit_code == 2); // infinite
    CHECK(run_cli("enumerate --norm 4 --filter bogus=1").exit_code == 2);
    CHECK(run_cli("enumerate --norm 4 --filter i=x").exit_code == 2);
    CHECK(run_cli("verify --id NOPE").exit_code == 2);
    CHECK(run_cli("verify --id T2_1").exit_code == 2); // missing params
    CHECK(run_cli("table nosuch").exit_code == 2);
    CHECK(run_cli("suite --name nosuch").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("verify passes and fails with the documented exit codes") {
    CHECK(run_cli("verify --id T3_1 --param bound=5 --param k=-1").exit_code == 0);
    const auto rational = run_cli(
        "verify --id T6_4 --param N=2 --param nu=1 --mode rational --points 20 --seed 182");
    CHECK(rational.exit_code == 0);
    // QPLAB_SEED is the fallback when --seed is absent
    const auto env_seeded = run_cli("verify --id E6_TRANSFORM --param N=1 --param nu=0",
                                    "QPLAB_SEED=99 ");
    CHECK(env_seeded.exit_code == 0);
    CHECK(contains(env_seeded.out, "seed=99"));
    // injected failure flips a sign inside one closed form
    const auto broken =
        run_cli("verify --id T2_1 --param bound=3 --param i=1 --param j=0",
                "QPLAB_TEST_MUTATE=1 ");
    CHECK(broken.exit_code == 1);
    CHECK(contains(broken.out, "first discrepancy"));
}

TEST_CASE("json output is structured") {
    const auto r = run_cli("--output json verify --id T1_1 --param n=14 --param i=1 --param j=1");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "\"id\": \"T1_1\""));
    CHECK(contains(r.out, "\"status\": \"pass\""));
    CHECK(contains(r.out, "\"lhs\": \"10\""));

    const auto e = run_cli("--output json enumerate --distinct --norm 14 --filter i=1,j=1");
    CHECK(e.exit_code == 0);
    CHECK(contains(e.out, "\"count\": 10"));
    CHECK(contains(e.out, "\"(13,1)\""));
}

TEST_CASE("suite runs and writes a report") {
    const std::string report = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                               "/qplab_smoke_report.json";
    const auto r = run_cli("suite --name smoke --jobs 2 --report " + report);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "pass"));
    FILE* f = fopen(report.c_str(), "r");
    REQUIRE(f != nullptr);
    std::string content;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), f)) > 0)
        content.append(buf.data(), n);
    fclose(f);
    std::remove(report.c_str());
    CHECK(contains(content, "\"summary\""));
    CHECK(contains(content, "\"fail\": 0"));
    CHECK(contains(content, "\"error\": 0"));

    // injected failure surfaces as exit code 1
    const auto broken = run_cli("suite --name smoke", "QPLAB_TEST_MUTATE=1 ");
    CHECK(broken.exit_code == 1);
}

TEST_CASE("same flags give identical bytes") {
    const std::string args = "verify --id E6_TRANSFORM --param N=2 --param nu=0 --mode rational";
    const auto a = run_cli(args);
    const auto b = run_cli(args);
    CHECK(a.out == b.out);
}

TEST_CASE("table reproductions") {
    const auto t2 = run_cli("table table2");
    CHECK(t2.exit_code == 0);
    CHECK(contains(t2.out, "p(1,1,14) = 10"));
    CHECK(contains(t2.out, "p'(1,1,14) = 10"));
    CHECK(contains(t2.out, "(13,1)"));
    CHECK(!contains(t2.out, "MISMATCH"));

    const auto t6 = run_cli("table table6");
    CHECK(t6.exit_code == 0);
    CHECK(contains(t6.out, "A_3(10,2) = 9"));
    CHECK(contains(t6.out, "B_3(10,2) = 9"));

    const auto t7 = run_cli("table table7");
    CHECK(t7.exit_code == 0);
    CHECK(contains(t7.out, "A_{5,3}(10,2) = 4"));
    CHECK(contains(t7.out, "B_{3,5}(10,2) = 4"));

    const auto t8 = run_cli("table table8");
    CHECK(t8.exit_code == 0);
    CHECK(contains(t8.out, "P~_7(0,1,2,q) = q^9 + q^11 + q^13 + q^15"));
    CHECK(!contains(t8.out, "MISMATCH"));

    const auto t8j = run_cli("--output json table table8");
    CHECK(t8j.exit_code == 0);
    CHECK(contains(t8j.out, "\"matches_reference\": true"));
}

TEST_CASE("list shows the registry") {
    const auto r = run_cli("list");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "T6_4"));
    CHECK(contains(r.out, "rational"));
    CHECK(contains(r.out, "T2_1"));
    CHECK(contains(r.out, "bound,i,j"));
}

int run_doctest(int argc, char** argv) {
    doctest::Context ctx;
    ctx.applyCommandLine(argc > 1 ? 1 : argc, argv);
    return ctx.run();
}

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: qplab_cli_tests <path-to-qplab-binary>\n";
        return 2;
    }
    g_cli_path = argv[1];
    return run_doctest(argc, argv);
}
