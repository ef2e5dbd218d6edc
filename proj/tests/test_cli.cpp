#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace fs = std::filesystem;

namespace {

std::string g_bin;
fs::path g_work;

struct RunResult {
    bool exited = false; // terminated normally (no signal)
    int code = -1;
    std::string out; // stdout + stderr
};

RunResult run(const std::string& args) {
    RunResult r;
    std::string cmd = g_bin + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    int status = pclose(pipe);
    r.exited = WIFEXITED(status);
    if (r.exited) r.code = WEXITSTATUS(status);
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

void spit(const fs::path& p, const std::string& bytes) {
    std::ofstream out(p, std::ios::binary);
    REQUIRE(out);
    out << bytes;
}

std::string random_bytes(std::size_t len, unsigned seed) {
    std::string s(len, '\0');
    std::uint64_t state = seed;
    for (auto& ch : s) {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        ch = static_cast<char>(state >> 56);
    }
    return s;
}

} // namespace

TEST_CASE("keygen is reproducible under a seed and rejects composite moduli") {
    auto k1 = (g_work / "a.key").string();
    auto k2 = (g_work / "b.key").string();
    CHECK(run("keygen --p 29 --n 3 --seed 7 --out " + k1).code == 0);
    CHECK(run("keygen --p 29 --n 3 --seed 7 --out " + k2).code == 0);
    CHECK(slurp(k1) == slurp(k2));
    CHECK(slurp(k1).substr(0, 15) == "DYNAHILL-KEY/1\n");

    auto bad = run("keygen --p 4 --n 3 --seed 7 --out " + (g_work / "c.key").string());
    CHECK(bad.code != 0);
    CHECK(bad.out.find("not prime") != std::string::npos);
    CHECK(bad.out.find("error:") != std::string::npos);
}

TEST_CASE("encrypt/decrypt round trips files byte for byte") {
    auto key = (g_work / "rt.key").string();
    REQUIRE(run("keygen --p 257 --n 4 --seed 11 --out " + key).code == 0);

    for (std::size_t len : {std::size_t(0), std::size_t(1), std::size_t(4096)}) {
        auto plain = g_work / ("plain_" + std::to_string(len));
        auto ct = g_work / ("ct_" + std::to_string(len));
        auto round = g_work / ("round_" + std::to_string(len));
        spit(plain, random_bytes(len, 42));
        CAPTURE(len);
        CHECK(run("encrypt --key " + key + " --in " + plain.string() + " --out " +
                  ct.string())
                  .code == 0);
        CHECK(run("decrypt --key " + key + " --in " + ct.string() + " --out " +
                  round.string())
                  .code == 0);
        CHECK(slurp(round) == slurp(plain));
    }
}

TEST_CASE("decrypting with the wrong key yields garbage or a clean error") {
    auto k1 = (g_work / "w1.key").string();
    auto k2 = (g_work / "w2.key").string();
    REQUIRE(run("keygen --p 257 --n 3 --seed 1 --out " + k1).code == 0);
    REQUIRE(run("keygen --p 257 --n 3 --seed 2 --out " + k2).code == 0);

    auto plain = g_work / "w_plain";
    auto ct = g_work / "w_ct";
    auto round = g_work / "w_round";
    spit(plain, random_bytes(64, 99));
    REQUIRE(run("encrypt --key " + k1 + " --in " + plain.string() + " --out " +
                ct.string())
                .code == 0);

    auto wrong = run("decrypt --key " + k2 + " --in " + ct.string() + " --out " +
                     round.string());
    CHECK(wrong.exited); // never a crash
    if (wrong.code == 0) {
        CHECK(slurp(round) != slurp(plain));
    } else {
        CHECK(wrong.out.find("error:") != std::string::npos);
    }
}

TEST_CASE("decrypt rejects containers that do not match the key") {
    auto k1 = (g_work / "m1.key").string();
    auto k2 = (g_work / "m2.key").string();
    REQUIRE(run("keygen --p 29 --n 3 --seed 1 --out " + k1).code == 0);
    REQUIRE(run("keygen --p 31 --n 3 --seed 1 --out " + k2).code == 0);
    auto plain = g_work / "m_plain";
    auto ct = g_work / "m_ct";
    spit(plain, "mismatch test");
    REQUIRE(run("encrypt --key " + k1 + " --in " + plain.string() + " --out " +
                ct.string())
                .code == 0);
    auto r = run("decrypt --key " + k2 + " --in " + ct.string() + " --out " +
                 (g_work / "m_round").string());
    CHECK(r.code == 1);
    CHECK(r.out.find("do not match") != std::string::npos);
}

TEST_CASE("verify-example prints the pass line") {
    auto r = run("verify-example");
    CHECK(r.code == 0);
    CHECK(r.out == "PASS: 6 blocks, 24 checkpoints\n");
}

TEST_CASE("keyspace output") {
    auto small = run("keyspace --p 2 --n 2");
    CHECK(small.code == 0);
    CHECK(small.out.find("= 6\n") != std::string::npos);
    CHECK(small.out.find("= 144\n") != std::string::npos);

    auto big = run("keyspace --p 29 --n 128");
    CHECK(big.code == 0);
    auto line = big.out.find("log2(L) = ");
    REQUIRE(line != std::string::npos);
    auto paren = big.out.find("(", line + 10);
    REQUIRE(paren != std::string::npos);
    long bits = std::strtol(big.out.c_str() + paren + 1, nullptr, 10);
    CHECK(bits > 877);
}

TEST_CASE("order reports the bounded search result") {
    auto key = (g_work / "ord.key").string();
    REQUIRE(run("keygen --p 29 --n 3 --seed 7 --out " + key).code == 0);
    auto r = run("order --key " + key + " --cap 30000");
    CHECK(r.code == 0);
    CHECK(r.out.find("order(M) = ") != std::string::npos);
    auto capped = run("order --key " + key + " --cap 2");
    CHECK(capped.code == 0);
    CHECK(capped.out.find("exceeds cap 2") != std::string::npos);
}

TEST_CASE("attack-demo enumerates where feasible and guards where not") {
    auto small = run("attack-demo --p 3 --n 2 --trials 50 --seed 3");
    CHECK(small.code == 0);
    CHECK(small.out.find("recovered the key in 50/50 trials") != std::string::npos);
    CHECK(small.out.find("2 equations, 4 unknowns") != std::string::npos);
    CHECK(small.out.find("(matches)") != std::string::npos);

    auto big = run("attack-demo --p 29 --n 3 --trials 100 --seed 3");
    CHECK(big.code == 0);
    CHECK(big.out.find("recovered the key in 100/100 trials") != std::string::npos);
    CHECK(big.out.find("enumeration skipped") != std::string::npos);
}

TEST_CASE("bench validates the counters and totals") {
    auto r = run("bench --p 29 --n 3 --blocks 6 --seed 9");
    CHECK(r.code == 0);
    CHECK(r.out.find("encryption muls=234") != std::string::npos);
    CHECK(r.out.find("MISMATCH against the formula") == std::string::npos);
    CHECK(r.out.find("known discrepancy") != std::string::npos);

    auto js = run("bench --p 29 --n 3 --blocks 2 --seed 9 --json");
    CHECK(js.code == 0);
    CHECK(js.out.find("\"matches_formula\": true") != std::string::npos);
}

TEST_CASE("usage errors exit nonzero without a stack trace") {
    auto r = run("encrypt --key nope.key");
    CHECK(r.exited);
    CHECK(r.code != 0);

    auto missing = run("decrypt --key nope.key --in nope.ct --out x");
    CHECK(missing.code == 1);
    CHECK(missing.out.find("error:") != std::string::npos);
}

int main(int argc, char** argv) {
    doctest::Context ctx;
    std::vector<char*> forwarded;
    for (int i = 0; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg.rfind("--bin=", 0) == 0) {
            g_bin = arg.substr(6);
        } else {
            forwarded.push_back(argv[i]);
        }
    }
    if (g_bin.empty()) {
        std::fprintf(stderr, "usage: test_cli --bin=<path to the dynahill binary>\n");
        return 2;
    }
    g_work = fs::temp_directory_path() /
             ("dynahill_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(g_work);
    ctx.applyCommandLine(static_cast<int>(forwarded.size()), forwarded.data());
    int rc = ctx.run();
    fs::remove_all(g_work);
    return rc;
}
