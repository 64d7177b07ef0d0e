#include <gtest/gtest.h>

#include <sstream>

#include "lucas/cli.hpp"

namespace lucas::cli {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;

    Json json() const { return Json::parse(out); }
};

Run invoke(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(CliEvalTest, Examples) {
    auto a = invoke({"eval", "-p", "1", "-q", "-1", "-n", "12"});
    EXPECT_EQ(a.code, kOk);
    EXPECT_EQ(a.json()["u"], "144");

    auto b = invoke({"eval", "-p", "3", "-q", "2", "-n", "5", "--v"});
    EXPECT_EQ(b.json()["u"], "31");
    EXPECT_EQ(b.json()["v"], "33");

    EXPECT_EQ(invoke({"eval", "-p", "1", "-q", "-1", "-n", "0"}).json()["u"], "0");
    EXPECT_EQ(invoke({"eval", "-p", "1", "-q", "-1", "-n", "10", "--mod", "7"}).json()["u"], "6");
}

TEST(CliEvalTest, UsageErrors) {
    auto bad = invoke({"eval", "-p", "2", "-q", "4", "-n", "3"});
    EXPECT_EQ(bad.code, kUsage);
    EXPECT_TRUE(bad.out.empty());
    EXPECT_EQ(Json::parse(bad.err)["error"], "CoprimalityViolation");

    EXPECT_EQ(invoke({"eval", "-p", "1", "-q", "-1", "-n", "-3"}).code, kUsage);
    EXPECT_EQ(invoke({"eval", "-p", "1", "-q", "-1"}).code, kUsage);
    EXPECT_EQ(invoke({"eval", "-p", "1", "-q", "-1", "-n", "5", "--mod", "1"}).code, kUsage);
    EXPECT_EQ(invoke({}).code, kUsage);
    EXPECT_EQ(invoke({"frobnicate"}).code, kUsage);
}

TEST(CliCongruenceTest, Examples) {
    auto m = invoke({"congruence", "--family", "mersenne22", "-n", "6", "-k", "4"});
    EXPECT_EQ(m.code, kOk);
    const auto j = m.json();
    EXPECT_TRUE(j["holds"]);
    EXPECT_EQ(j["lhs"]["value"], "42");
    EXPECT_EQ(j["lhs"]["modulus"], "63");
    EXPECT_EQ(j["rhs"], j["lhs"]);

    auto l = invoke({"congruence", "--family", "lemma1", "-p", "1", "-q", "-1", "-k", "4", "-n", "3"});
    EXPECT_EQ(l.code, kOk);
    EXPECT_EQ(l.json()["rhs"]["value"], "0");
    EXPECT_EQ(l.json()["rhs"]["modulus"], "3");

    auto t = invoke({"congruence", "--family", "main", "-p", "1", "-q", "-1", "-k", "1", "-n", "5"});
    EXPECT_EQ(t.code, kOk);
    EXPECT_EQ(t.json()["case_tag"], "ODD_N");
    EXPECT_EQ(t.json()["rhs"]["value"], "0");

    auto s = invoke({"congruence", "--family", "shift", "-p", "5", "-q", "-3", "-k", "6", "-n", "4", "-r", "3"});
    EXPECT_EQ(s.code, kOk);
    EXPECT_EQ(s.json()["inputs"]["r"], 3);
}

TEST(CliCongruenceTest, TrivialModulusAndErrors) {
    auto t = invoke({"congruence", "--family", "lemma1", "-p", "1", "-q", "1", "-k", "3", "-n", "4"});
    EXPECT_EQ(t.code, kOk);
    EXPECT_TRUE(t.json()["lhs"].contains("trivial_modulus"));

    EXPECT_EQ(invoke({"congruence", "--family", "lemma9", "-p", "1", "-q", "-1", "-k", "3", "-n", "4"}).code, kUsage);
    EXPECT_EQ(invoke({"congruence", "--family", "shift", "-p", "1", "-q", "-1", "-k", "3", "-n", "4"}).code, kUsage);
    EXPECT_EQ(invoke({"congruence", "--family", "main", "-p", "1", "-q", "-1", "-k", "0", "-n", "4"}).code, kUsage);
}

TEST(CliPrimetestTest, Examples) {
    auto m = invoke({"primetest", "--method", "mersenne-sum", "-n", "12"});
    EXPECT_EQ(m.code, kOk);
    const auto j = m.json();
    EXPECT_EQ(j["sum_residue"]["value"], "3354");
    EXPECT_EQ(j["sum_residue"]["modulus"], "4095");
    EXPECT_FALSE(j["criterion_says_prime"]);
    EXPECT_TRUE(j["agree"]);
    EXPECT_TRUE(j.contains("elapsed_ns"));

    auto f = invoke({"primetest", "--method", "fib-sum", "-n", "9"});
    EXPECT_EQ(f.code, kUsage);
    EXPECT_TRUE(f.out.empty());
    EXPECT_EQ(Json::parse(f.err)["error"], "Unsupported");

    auto d = invoke({"--no-timing", "primetest", "--method", "divisor-sum", "-n", "5"});
    EXPECT_EQ(d.code, kOk);
    EXPECT_EQ(d.json()["total"], "4");
    EXPECT_TRUE(d.json()["is_integer"]);
    EXPECT_TRUE(d.json()["oracle_says_prime"]);

    auto fd = invoke({"primetest", "--method", "fib-sum-direct", "-n", "21"});
    EXPECT_EQ(fd.code, kOk);
    EXPECT_EQ(fd.json()["sum_residue"]["value"], "10104");

    EXPECT_TRUE(invoke({"primetest", "--method", "oracle", "-n", "18446744073709551557"}).json()["oracle_says_prime"]);
    EXPECT_EQ(invoke({"primetest", "--method", "lucas-lehmer", "-n", "7"}).code, kUsage);
}

TEST(CliExploreTest, ReportsExcludedComposites) {
    auto e = invoke({"explore", "-n", "25"});
    EXPECT_EQ(e.code, kOk);
    EXPECT_EQ(e.json()["direct_residue"]["value"], "0");
    EXPECT_EQ(e.json()["fast_residue"]["value"], "0");
    EXPECT_FALSE(e.json()["oracle_says_prime"]);
}

TEST(CliScanTest, Examples) {
    auto m = invoke({"scan", "--method", "mersenne-sum", "--from", "2", "--to", "200", "--workers", "2"});
    EXPECT_EQ(m.code, kOk);
    EXPECT_TRUE(m.json()["mismatches"].empty());
    EXPECT_EQ(m.json()["checked"], 199);

    auto r = invoke({"scan", "--method", "remark", "--from", "3", "--to", "99"});
    EXPECT_EQ(r.code, kOk);
    EXPECT_EQ(r.json()["checked"], 25);

    auto g = invoke({"scan", "--method", "congruence-grid", "--from", "1", "--to", "10", "--workers", "2"});
    EXPECT_EQ(g.code, kOk);
    EXPECT_TRUE(g.json()["mismatches"].empty());

    EXPECT_EQ(invoke({"scan", "--method", "remark", "--from", "9", "--to", "3"}).code, kUsage);
    EXPECT_EQ(invoke({"scan", "--method", "nope", "--from", "1", "--to", "3"}).code, kUsage);
}

TEST(CliOutputTest, NoTimingIsByteIdentical) {
    const std::vector<std::string> args{"--no-timing", "scan", "--method", "fib-sum", "--from", "5", "--to", "101", "--workers", "3"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out.find("wall_time"), std::string::npos);
    ASSERT_FALSE(a.out.empty());
    EXPECT_EQ(a.out.back(), '\n');
    EXPECT_EQ(a.out.find('\n'), a.out.size() - 1);
    EXPECT_TRUE(a.err.empty());

    const std::vector<std::string> single{"--no-timing", "primetest", "--method", "mersenne-sum", "-n", "31"};
    EXPECT_EQ(invoke(single).out, invoke(single).out);
}

TEST(CliOutputTest, PrettyIsNotJson) {
    auto p = invoke({"--pretty", "eval", "-p", "1", "-q", "-1", "-n", "12"});
    EXPECT_EQ(p.code, kOk);
    EXPECT_NE(p.out.find("144"), std::string::npos);
    EXPECT_NE(p.out.front(), '{');
}

}  // namespace
}  // namespace lucas::cli
