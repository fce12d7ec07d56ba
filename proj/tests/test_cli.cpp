#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

// Drives the installed binary end to end: exit codes, golden output lines,
// and byte-stability of the structured report.

namespace {

struct RunResult {
    int exit_code;
    std::string out;
    std::string err;
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& args) {
    static int counter = 0;
    const auto dir = std::filesystem::temp_directory_path();
    const auto out_path = dir / ("chowcalc_out_" + std::to_string(++counter) + ".txt");
    const auto err_path = dir / ("chowcalc_err_" + std::to_string(counter) + ".txt");
    const std::string command = std::string(CHOWCALC_CLI_PATH) + " " + args + " > " +
                                out_path.string() + " 2> " + err_path.string();
    const int status = std::system(command.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return r;
}

std::string last_line(const std::string& text) {
    auto end = text.find_last_not_of('\n');
    if (end == std::string::npos)
        return "";
    auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1,
                       end - (start == std::string::npos ? 0 : start + 1) + 1);
}

} // namespace

TEST_CASE("replay passes and prints the verdict line") {
    RunResult r = run_cli("replay");
    CHECK(r.exit_code == 0);
    CHECK(last_line(r.out) == "final degree: -15  s-coefficients: 0  OVERALL: PASS");
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("21  final-sum"));
}

TEST_CASE("replay with substitutions") {
    for (const std::string s : {"-1/2", "0", "1", "7", "-3/5"}) {
        RunResult r = run_cli("replay --subst s=" + s);
        INFO("s = " << s);
        CHECK(r.exit_code == 0);
        CHECK(last_line(r.out) == "final degree: -15  s-coefficients: 0  OVERALL: PASS");
        CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("substitution: s = " + s));
    }
}

TEST_CASE("replay --json is byte-stable and matches the golden report") {
    const auto dir = std::filesystem::temp_directory_path();
    const auto a = dir / "chowcalc_replay_a.json";
    const auto b = dir / "chowcalc_replay_b.json";
    CHECK(run_cli("replay --json " + a.string()).exit_code == 0);
    CHECK(run_cli("replay --json " + b.string()).exit_code == 0);
    const std::string one = slurp(a), two = slurp(b);
    CHECK(!one.empty());
    CHECK(one == two);

    const std::string golden =
        slurp(std::filesystem::path(CHOWCALC_SOURCE_DIR) / "tests/golden/replay_symbolic.json");
    CHECK(one == golden);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("ring eval") {
    RunResult r = run_cli("ring eval --ring EtimesZ --expr "
                          "\"(2*Delta+2*h-v)*(2*Delta+2*h-v)\" --integrate");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "0\n");

    RunResult cls = run_cli("ring eval --ring PV --expr \"z*z\"");
    CHECK(cls.exit_code == 0);
    CHECK(cls.out == "(1 + 2*s)*zvbar\n");

    // Ring documents load from files too.
    RunResult file = run_cli("ring eval --ring " + std::string(CHOWCALC_SOURCE_DIR) +
                             "/data/rings/pv.json --expr \"z*vbar\" --integrate");
    CHECK(file.exit_code == 0);
    CHECK(file.out == "1\n");
}

TEST_CASE("mulmap") {
    RunResult r = run_cli("mulmap --split -1,5");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "dims 8x12 rank 7 corank 1\n");

    RunResult j = run_cli("mulmap --split -1,5 --json");
    CHECK(j.exit_code == 0);
    CHECK(j.out == "{\"dims\":[8,12],\"rank\":7,\"corank\":1}\n");

    RunResult balanced = run_cli("mulmap --split 2,2");
    CHECK(balanced.out == "dims 8x12 rank 8 corank 0\n");

    RunResult twisted = run_cli("mulmap --split 0,0 --twist 1");
    CHECK(twisted.out == "dims 4x4 rank 4 corank 0\n");
}

TEST_CASE("porteous") {
    RunResult r = run_cli("porteous --ring Qt6 --ca \"1\" --cb \"1 + t\" -a 4 -b 4 -k 3");
    CHECK(r.exit_code == 0);
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("expected codim: 1"));
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("class: t"));
}

TEST_CASE("rings list names the built-ins") {
    RunResult r = run_cli("rings list");
    CHECK(r.exit_code == 0);
    for (const std::string name : {"EtimesZ", "PV", "Z", "E", "Qt6"})
        CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring(name));
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run_cli("bogus-subcommand").exit_code == 2);
    CHECK(run_cli("mulmap").exit_code == 2);
    CHECK(run_cli("ring eval --ring EtimesZ").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("computational failures exit with code 1 and a structured message") {
    RunResult unknown = run_cli("ring eval --ring EtimesZ --expr \"h + w\"");
    CHECK(unknown.exit_code == 1);
    CHECK_THAT(unknown.err, Catch::Matchers::ContainsSubstring("unknown symbol 'w'"));
    CHECK_THAT(unknown.err, Catch::Matchers::ContainsSubstring("offset 4"));

    RunResult bad_ring = run_cli("ring eval --ring NoSuchRing --expr \"1\"");
    CHECK(bad_ring.exit_code == 1);
    CHECK_THAT(bad_ring.err, Catch::Matchers::ContainsSubstring("error:"));

    RunResult bad_subst = run_cli("replay --subst q=3");
    CHECK(bad_subst.exit_code == 1);
    CHECK_THAT(bad_subst.err, Catch::Matchers::ContainsSubstring("single parameter 's'"));

    RunResult bad_split = run_cli("mulmap --split -2,5");
    CHECK(bad_split.exit_code == 1);
    CHECK_THAT(bad_split.err, Catch::Matchers::ContainsSubstring("below -1"));
}
