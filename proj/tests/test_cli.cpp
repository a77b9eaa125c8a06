#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(FFMOBIUS_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int count_lines(const std::string& s, char start_excluded) {
    int n = 0;
    std::istringstream ss(s);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty() && line[0] != start_excluded) ++n;
    return n;
}

} // namespace

TEST_CASE("scan produces the full theta table and a PASS verdict") {
    auto r = run("scan --q 2 --n 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# verdict: PASS") != std::string::npos);
    // 16 data rows plus one header line
    CHECK(count_lines(r.out, '#') == 17);
}

TEST_CASE("scan below the theorem range is marked, still reports the max") {
    auto r = run("scan --q 2 --n 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# verdict: OUT_OF_RANGE") != std::string::npos);
    CHECK(r.out.find("# max_abs: 2") != std::string::npos);
}

TEST_CASE("scan json format") {
    auto r = run("scan --q 3 --n 3 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"schema_version\"") != std::string::npos);
    CHECK(r.out.find("\"verdict\": \"PASS\"") != std::string::npos);
    CHECK(r.out.find("\"max_abs\"") != std::string::npos);
    CHECK(r.out.find("\"argmax\"") != std::string::npos);
    CHECK(r.out.find("\"bound\"") != std::string::npos);
}

TEST_CASE("usage errors exit 1") {
    CHECK(run("scan").exit_code == 1);                             // missing --n
    CHECK(run("approx --q 2 --theta zzz --n 4").exit_code == 1);   // bad token
    CHECK(run("nonsense").exit_code == 1);
    CHECK(run("scan --q 6 --n 3").exit_code == 1);                 // not a prime power
}

TEST_CASE("resource guard exits 2, sampling lifts it") {
    CHECK(run("scan --q 3 --n 9").exit_code == 2);
    auto r = run("scan --q 3 --n 9 --sample 10 --seed 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# sampled: true") != std::string::npos);
}

TEST_CASE("approx and sum single-object reports") {
    auto r = run("approx --q 2 --theta 1 --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("a = 1") != std::string::npos);
    CHECK(r.out.find("g = 0,1") != std::string::npos);

    r = run("sum --q 2 --theta 0 --n 4");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("delta = ") != std::string::npos);

    r = run("sum --q 3 --theta 1,2,0,1 --n 4 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"agree\": true") != std::string::npos);
}

TEST_CASE("lfunc report") {
    auto r = run("lfunc --q 2 --s 0 --g 1,1,1 --char 1 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"kind\": \"polynomial\"") != std::string::npos);
    CHECK(r.out.find("\"weil_verdict\": \"PASS\"") != std::string::npos);
    CHECK(r.out.find("\"inverse_roots\"") != std::string::npos);

    r = run("lfunc --q 2 --s 1 --g 0,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"kind\": \"trivial\"") != std::string::npos);
}

TEST_CASE("verify subcommand") {
    auto r = run("verify --q 2 --suite lemma2 --n 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] lemma2") != std::string::npos);

    r = run("verify --q 3 --suite lemma2 --n 6");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] lemma2") != std::string::npos);

    r = run("verify --q 2 --suite weil --s 1 --g 0,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] weil") != std::string::npos);

    r = run("verify --q 2 --suite lemma4 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"pass\": true") != std::string::npos);

    r = run("verify --q 2 --suite bogus");
    CHECK(r.exit_code == 1);
}

TEST_CASE("bounds suite emits literal CSV rows") {
    auto r = run("verify --q 2 --suite bounds --format csv --n 10");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("name,params,lhs,rhs,verdict") != std::string::npos);
    CHECK(r.out.find("robbins_lower") != std::string::npos);
    CHECK(r.out.find("chain_standalone") != std::string::npos);
    CHECK(r.out.find("final_inequality") != std::string::npos);
    // informational rows may fail without failing the run
    CHECK(r.out.find("info-fail") != std::string::npos);
    CHECK(r.out.find(",FAIL") == std::string::npos);
}

TEST_CASE("scan json at q=3 n=5") {
    auto r = run("scan --q 3 --n 5 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"verdict\": \"PASS\"") != std::string::npos);
    CHECK(r.out.find("\"theta_space\": 729") != std::string::npos);
}

TEST_CASE("determinism: identical config gives byte-identical reports") {
    std::string p1 = "/tmp/ffmobius_det_a.csv";
    std::string p2 = "/tmp/ffmobius_det_b.csv";
    CHECK(run("scan --q 2 --n 5 --jobs 2 --out " + p1).exit_code == 0);
    CHECK(run("scan --q 2 --n 5 --jobs 2 --out " + p2).exit_code == 0);
    std::string a = slurp(p1), b = slurp(p2);
    CHECK(!a.empty());
    CHECK(a == b);
    std::remove(p1.c_str());
    std::remove(p2.c_str());

    // json route as well
    CHECK(run("scan --q 2 --n 4 --format json --out " + p1).exit_code == 0);
    CHECK(run("scan --q 2 --n 4 --format json --out " + p2).exit_code == 0);
    CHECK(slurp(p1) == slurp(p2));
    std::remove(p1.c_str());
    std::remove(p2.c_str());
}

TEST_CASE("config echo appears in the report header") {
    auto r = run("scan --q 2 --n 3 --seed 9 --tol 1e-8");
    CHECK(r.out.find("# cfg.seed: 9") != std::string::npos);
    CHECK(r.out.find("# cfg.tol: 1e-08") != std::string::npos);
    CHECK(r.out.find("# cfg.version: ") != std::string::npos);
    CHECK(r.out.find("# field: 2^1/0,1") != std::string::npos);
}
