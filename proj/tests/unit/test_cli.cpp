#include "doctest.h"

#include "binsum/cli.hpp"
#include "binsum/parse.hpp"
#include "binsum/report.hpp"
#include "support.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace binsum;
using binsum::testing::q;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
    const std::string path = "binsum_test_" + name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("3/10") == q(3, 10));
    CHECK(parse_rational("6/20") == q(3, 10));
    CHECK(parse_rational("2.57") == q(257, 100));
    CHECK(parse_rational("-0.5") == q(-1, 2));
    CHECK(parse_rational("1e-4") == q(1, 10000));
    CHECK(parse_rational("2.5E+2") == q(250));
    CHECK(parse_rational(".125") == q(1, 8));
    CHECK(parse_rational(" 7 ") == q(7));
    for (const char* bad : {"", "1/0", "abc", "1.2.3", "1/", "e5", "--1", "0x10"}) {
        CHECK_THROWS_AS(parse_rational(bad), DomainError);
    }
}

TEST_CASE("ranges") {
    const Range r = parse_range("2..100");
    CHECK(r.lo == 2);
    CHECK(r.hi == 100);
    CHECK(r.str() == "2..100");
    CHECK(parse_range("7").lo == 7);
    CHECK(parse_range("7").str() == "7");
    CHECK_THROWS_AS(parse_range("5..2"), DomainError);
    CHECK_THROWS_AS(parse_range("a..b"), DomainError);
    CHECK_THROWS_AS(parse_range("-1..3"), DomainError);
}

TEST_CASE("set files") {
    std::istringstream ok("# corner\n00\n\n01\r\n  10  \n");
    const auto a = parse_set(ok);
    CHECK(a.size() == 3);
    CHECK(a.hex() == "7");
    std::istringstream ragged("00\n1\n");
    CHECK_THROWS_AS(parse_set(ragged), DomainError);
    std::istringstream repeated("01\n01\n");
    CHECK_THROWS_AS(parse_set(repeated), DomainError);
    std::istringstream empty("# nothing\n\n");
    CHECK_THROWS_AS(parse_set(empty), DomainError);
    std::istringstream letters("0a\n");
    CHECK_THROWS_AS(parse_set(letters), DomainError);
    CHECK_THROWS_AS(read_set_file("/nonexistent/set.txt"), DomainError);
}

TEST_CASE("exit codes follow the verdict multiset") {
    VerdictCounts c;
    CHECK(exit_code(c) == 0);
    c.add(Verdict::ExactEquality);
    c.add(Verdict::CertainTrue);
    CHECK(exit_code(c) == 0);
    c.add(Verdict::Undecided);
    CHECK(exit_code(c) == 2);
    c.add(Verdict::CertainFalse);
    CHECK(exit_code(c) == 1);
}

TEST_CASE("report serializations") {
    Report rep("demo", {{"k", "2"}, {"flag", ""}}, 5);
    VerificationReport v;
    v.case_id = "a, \"quoted\"";
    v.verdict = Verdict::CertainTrue;
    v.margin = Interval::from_rational(q(1, 3), 128);
    v.precision = 128;
    rep.add(v, {{"extra", "x"}});
    rep.add(exact_equality("b", 128));
    rep.note("note", "value");
    CHECK(rep.invocation() == "binsum demo --k 2 --flag");

    std::ostringstream text;
    rep.write(text, ReportFormat::Text);
    CHECK(text.str().find("margin=3.3333e-01") != std::string::npos);
    CHECK(text.str().find("result: PASS (exit 0)") != std::string::npos);

    std::ostringstream csv;
    rep.write(csv, ReportFormat::Csv);
    CHECK(csv.str().rfind("case,verdict,margin_log2,precision,extra\n", 0) == 0);
    CHECK(csv.str().find("\"a, \"\"quoted\"\"\",CertainTrue,3.3333e-01,128,x") != std::string::npos);
    CHECK(csv.str().find("b,ExactEquality,0,128,") != std::string::npos);

    std::ostringstream js;
    rep.write(js, ReportFormat::Json);
    const auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["records"].size() == 2);
    CHECK(doc["records"][0]["margin_log2"] == "3.3333e-01");
    CHECK(doc["summary"]["certain_true"] == 1);
    CHECK(doc["summary"]["note"] == "value");
    CHECK(doc["exit_code"] == 0);
    CHECK_FALSE(doc.contains("wall_time_s"));
    CHECK_THROWS_AS(parse_format("xml"), DomainError);
}

TEST_CASE("command line usage errors exit 3") {
    CHECK(cli({}).code == kExitUsage);
    CHECK(cli({"ineq", "main", "--k", "2", "--bogus"}).code == kExitUsage);
    CHECK(cli({"ineq", "main"}).code == kExitUsage);
    CHECK(cli({"ineq", "main", "--k", "5..2"}).code == kExitUsage);
    CHECK(cli({"ineq", "main", "--k", "2", "--grid", "1"}).code == kExitUsage);
    CHECK(cli({"ineq", "main", "--k", "0"}).code == kExitUsage);
    CHECK(cli({"ineq", "lemmas", "--k", "1..3"}).code == kExitUsage);
    CHECK(cli({"pk", "--k", "2", "--prec", "8192"}).code == kExitUsage);
    CHECK(cli({"pk", "--k", "2", "--format", "xml"}).code == kExitUsage);
    CHECK(cli({"walk", "simulate", "--k", "2"}).code == kExitUsage);
    CHECK(cli({"walk", "simulate", "--k", "2", "--q", "3/2"}).code == kExitUsage);
    CHECK(cli({"walk", "simulate", "--k", "2", "--p-right", "2/3"}).code == kExitUsage);
    CHECK(cli({"walk", "simulate", "--k", "2", "--q", "1/2", "--p-right", "1/4"}).code == kExitUsage);
    CHECK(cli({"energy", "verify", "--k", "2", "--set", "/nonexistent"}).code == kExitUsage);
    CHECK(cli({"energy", "verify", "--k", "2", "--mask", "7"}).code == kExitUsage);
    CHECK(cli({"energy", "exhaustive", "--d", "5", "--k", "2"}).code == kExitUsage);
    CHECK(cli({"energy", "compute", "--k", "3", "--mask", "ffff", "--d", "4", "--cell-budget", "10"}).code ==
          kExitUsage);
    const Run bad = cli({"energy", "verify", "--k", "2", "--set", temp_file("bad.txt", "00\n011\n")});
    CHECK(bad.code == kExitUsage);
    CHECK(bad.err.find("dimension") != std::string::npos);
    CHECK(cli({"--help"}).code == 0);
}

TEST_CASE("worked command examples") {
    const Run main = cli({"ineq", "main", "--k", "2..4", "--grid", "11"});
    CHECK(main.code == 0);
    CHECK(main.out.find("exact_equality=9") != std::string::npos);

    const std::string set = temp_file("three.txt", "# corner of the square\n00\n01\n10\n");
    const Run e = cli({"energy", "verify", "--k", "2", "--set", set, "--format", "json"});
    CHECK(e.code == 0);
    const auto doc = nlohmann::json::parse(e.out);
    CHECK(doc["records"][0]["energy"] == "15");
    CHECK(doc["records"][0]["bound_lo"] == "1.711356748e+01");

    const Run sharp = cli({"walk", "verify", "--k", "5", "--p", "2.57"});
    CHECK(sharp.code == 1);
    CHECK(sharp.out.find("counterexample: k=5 q=1/2 p=257/100") != std::string::npos);

    CHECK(cli({"walk", "verify", "--k", "1..6", "--q-grid", "21"}).code == 0);
    CHECK(cli({"pk", "--k", "1..20"}).code == 0);
    CHECK(cli({"ineq", "lemmas", "--k", "9..11", "--grid", "5"}).code == 0);
    CHECK(cli({"ineq", "legendre", "--k", "1..3", "--samples", "4"}).code == 0);
    CHECK(cli({"ode", "residual", "--k", "1..8", "--samples", "10"}).code == 0);
    CHECK(cli({"energy", "exhaustive", "--d", "2", "--k", "2..3"}).code == 0);
    CHECK(cli({"energy", "random", "--d", "6", "--k", "2", "--samples", "5"}).code == 0);
    CHECK(cli({"energy", "compute", "--k", "2", "--mask", "0x3", "--d", "1"}).out.find("energy=6") !=
          std::string::npos);
    CHECK(cli({"walk", "simulate", "--q", "1/2", "--k", "2", "--trials", "20000"}).code == 0);
    CHECK(cli({"means", "verify", "--k", "1..4", "--grid", "9", "--prior-bounds"}).code == 0);
    CHECK(cli({"means", "verify", "--k", "3", "--grid", "9", "--direction", "lower"}).code == 0);
    CHECK(cli({"means", "expand", "--k", "1..5"}).code == 0);
    // Global flags are accepted after the subcommand too.
    CHECK(cli({"pk", "--k", "3", "--prec", "512", "--digits", "30"}).out.find("--prec 512") != std::string::npos);
}

TEST_CASE("reports are byte-identical across worker counts") {
    const std::vector<std::vector<std::string>> commands = {
        {"ineq", "main", "--k", "2..6", "--grid", "17", "--format", "json"},
        {"energy", "random", "--d", "5", "--k", "2..3", "--samples", "20", "--seed", "7", "--format", "csv"},
        {"walk", "simulate", "--q", "3/10", "--k", "5", "--trials", "300000", "--seed", "11"},
        {"ode", "residual", "--k", "2..9", "--samples", "12", "--seed", "5"},
    };
    for (const auto& base : commands) {
        auto one = base;
        one.insert(one.end(), {"--jobs", "1"});
        auto four = base;
        four.insert(four.end(), {"--jobs", "4"});
        const Run a = cli(one);
        const Run b = cli(four);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(a.out == cli(base).out);
    }
}

TEST_CASE("reports can be written to a file") {
    const std::string path = "binsum_test_report.csv";
    const Run r = cli({"pk", "--k", "2..3", "--format", "csv", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "case,verdict,margin_log2,precision,central_binomial,p_k_lo,p_k_hi");
    std::remove(path.c_str());
    const Run timed = cli({"pk", "--k", "2", "--timing"});
    CHECK(timed.out.find("wall_time_s:") != std::string::npos);
}
