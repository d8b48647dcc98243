#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#ifndef GRUNSKY_CLI_PATH
#define GRUNSKY_CLI_PATH "grunsky"
#endif

namespace {

int run_shell(const std::string& cmd, std::string* out) {
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string captured;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) captured.append(buf, n);
    const int status = pclose(pipe);
    if (out) *out = captured;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

int run_cli(const std::string& args, std::string* out) {
    return run_shell(std::string(GRUNSKY_CLI_PATH) + " " + args, out);
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli series json emits the Koebe omega table") {
    std::string out;
    CHECK(run_cli("series --fn koebe --order 10 --format json", &out) == 0);
    CHECK(contains(out, "\"omega\":{"));
    CHECK(contains(out, "\"1,1\":\"1\""));
    CHECK(contains(out, "\"3,3\":\"1/3\""));
    CHECK(contains(out, "\"univalence_verified\":true"));
}

TEST_CASE("cli series identity gives an all-zero table") {
    std::string out;
    CHECK(run_cli("series --fn identity --order 5 --format csv", &out) == 0);
    CHECK(contains(out, "1,1,0"));
    CHECK(contains(out, "3,5,0"));
    CHECK(!contains(out, ",1/"));
}

TEST_CASE("cli series custom Koebe prefix matches koebe at the same order") {
    std::string koebe, custom;
    CHECK(run_cli("series --fn koebe --order 5 --format json", &koebe) == 0);
    CHECK(run_cli("series --fn custom --coeffs 0,1,2,3,4,5 --order 5 --format json 2>/dev/null", &custom) == 0);
    const auto tail = [](const std::string& s) { return s.substr(s.find("\"f\":")); };
    CHECK(tail(koebe) == tail(custom));
}

TEST_CASE("cli verify catalogue") {
    std::string out;
    CHECK(run_cli("verify --fn all --order 10", &out) == 0);
    CHECK(contains(out, "15 identities checked"));
    CHECK(contains(out, "all residuals zero"));
    CHECK(contains(out, "all exact"));

    CHECK(run_cli("verify --fn identity", &out) == 0);
    CHECK(run_cli("verify --fn koebe --format json", &out) == 0);
    CHECK(contains(out, "\"all_zero\":true"));
}

TEST_CASE("cli verify custom warns about univalence but residuals stay zero") {
    std::string out;
    CHECK(run_cli("verify --fn custom --coeffs 0,1,9,0,0,0 2>&1", &out) == 0);
    CHECK(contains(out, "univalence"));
    CHECK(contains(out, "all residuals zero"));
}

TEST_CASE("cli bound newton values") {
    std::string out;
    CHECK(run_cli("bound --target gamma3 --method newton", &out) == 0);
    CHECK(contains(out, "value: 0.556617813"));
    CHECK(contains(out, "edge: interior"));

    CHECK(run_cli("bound --target h31 --method newton", &out) == 0);
    CHECK(contains(out, "b1: 0.977237979"));
    CHECK(contains(out, "b2: 0.853333333"));
    CHECK(contains(out, "value: 1.83057131"));
    CHECK(contains(out, "theorem 1.83056"));
    CHECK(contains(out, "introduction 2.321434"));
}

TEST_CASE("cli bound all emits the summary table") {
    std::string out;
    CHECK(run_cli("bound --target all --method newton", &out) == 0);
    CHECK(contains(out, "gamma3 0.556617813"));
    CHECK(contains(out, "diff43 1.7518531"));
    CHECK(contains(out, "zalcman23 2.10064113"));
    CHECK(contains(out, "h22 1.36143562"));
    CHECK(contains(out, "h31 1.83057131"));
}

TEST_CASE("cli bound certified emits an enclosure") {
    std::string out;
    CHECK(run_cli("bound --target h22 --method certified --eps 1e-6 --format json", &out) == 0);
    CHECK(contains(out, "\"enclosure\":[1.3614356"));
}

TEST_CASE("cli bound json output is byte-stable across runs") {
    std::string a, b;
    CHECK(run_cli("bound --target gamma3 --method newton --format json", &a) == 0);
    CHECK(run_cli("bound --target gamma3 --method newton --format json", &b) == 0);
    CHECK(a == b);
    CHECK(run_cli("bound --target zalcman23 --method certified --eps 1e-5 --format json", &a) == 0);
    CHECK(run_cli("bound --target zalcman23 --method certified --eps 1e-5 --format json", &b) == 0);
    CHECK(a == b);
}

TEST_CASE("cli grid output") {
    std::string out;
    CHECK(run_cli("grid --target phi2 --nx 2 --ny 2", &out) == 0);
    CHECK(contains(out, "x,y,value\n"));
    CHECK(contains(out, "0,0,0.447213595"));

    CHECK(run_cli("grid --target f4 --nx 2 --ny 2", &out) == 0);
    CHECK(contains(out, "1,0,1"));

    // 3x3 grid of f1 has exactly 6 in-region rows
    CHECK(run_cli("grid --target f1 --nx 3 --ny 3", &out) == 0);
    int rows = -1;  // skip header
    for (char c : out)
        if (c == '\n') ++rows;
    CHECK(rows == 6);
}

TEST_CASE("cli usage errors exit 2") {
    std::string out;
    CHECK(run_cli("series --fn smirnov 2>/dev/null", &out) == 2);
    CHECK(run_cli("series --order 4 2>/dev/null", &out) == 2);
    CHECK(run_cli("series --order 65 2>/dev/null", &out) == 2);
    CHECK(run_cli("series --fn custom --coeffs 1,1 2>/dev/null", &out) == 2);
    CHECK(run_cli("series --fn custom --coeffs 0,1,x 2>/dev/null", &out) == 2);
    CHECK(run_cli("bound --target nothing 2>/dev/null", &out) == 2);
    CHECK(run_cli("bound --eps 0 2>/dev/null", &out) == 2);
    CHECK(run_cli("bound --eps -1 2>/dev/null", &out) == 2);
    CHECK(run_cli("grid --nx 1 2>/dev/null", &out) == 2);
    CHECK(run_cli("grid --target f1 --output / 2>/dev/null", &out) == 2);
    CHECK(run_cli("frobnicate 2>/dev/null", &out) == 2);
    CHECK(run_cli("2>/dev/null", &out) == 2);
}

TEST_CASE("cli box cap from environment") {
    std::string out;
    // default cap is ample even for a tight enclosure
    CHECK(run_cli("bound --target gamma3 --method certified --eps 1e-9 2>/dev/null", &out) == 0);
    // a tiny cap forces budget exhaustion -> computation failure, exit 1
    CHECK(run_shell("GRUNSKY_BOX_CAP=8 " + std::string(GRUNSKY_CLI_PATH) +
                        " bound --target gamma3 --method certified --eps 1e-10 2>/dev/null",
                    &out) == 1);
    CHECK(run_shell("GRUNSKY_BOX_CAP=zebra " + std::string(GRUNSKY_CLI_PATH) +
                        " bound --target gamma3 --method certified 2>/dev/null",
                    &out) == 2);
}

TEST_CASE("cli help exits clean") {
    std::string out;
    CHECK(run_cli("--help", &out) == 0);
    CHECK(contains(out, "series"));
    CHECK(contains(out, "bound"));
}
