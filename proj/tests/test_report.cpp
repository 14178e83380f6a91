#include <doctest.h>

#include <clocale>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cleanup/report.hpp"
#include "cleanup/verify.hpp"
#include "cli.hpp"

using namespace cleanup;

namespace {

struct Run
{
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "search-cleanup");
    std::vector<char const*> argv;
    for (auto const& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int const code = cleanup::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(std::string const& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::vector<std::string> split(std::string const& line)
{
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ','))
        out.push_back(cell);
    if (!line.empty() && line.back() == ',')
        out.emplace_back();
    return out;
}

}  // namespace

TEST_CASE("number formatting")
{
    CHECK(format_real(7.223866587835) == "7.22386658784");
    CHECK(format_real(0.0) == "0");
    CHECK(format_real(11.0061788557) == "11.0061788557");
    CHECK(format_real(1e-20) == "1e-20");
    CHECK(format_real(2.0) == "2");
}

TEST_CASE("table output")
{
    Run const r = run({"table", "--n-max", "10"});
    CHECK(r.code == 0);
    auto const ls = lines(r.out);
    REQUIRE(ls.size() == 11);
    CHECK(ls[0] == "n,m_opt,m_opt_approx");
    CHECK(ls[1] == "1,1,1");
    CHECK(ls[10] == "10,8,8");
    CHECK(r.out.find('\r') == std::string::npos);

    Run const one = run({"table", "--n-max", "1"});
    CHECK(lines(one.out) == std::vector<std::string>{"n,m_opt,m_opt_approx", "1,1,1"});

    Run const m3 = run({"table", "--n-max", "4", "--model", "m3"});
    CHECK(lines(m3.out).back() == "4,4,");

    auto const rows = compute_table(20, Model::m4());
    CHECK(rows[18].m_opt == 11);
    CHECK(*rows[18].m_opt_approx == 10);
}

TEST_CASE("curve output")
{
    Run const r = run({"curve", "--n", "20"});
    CHECK(r.code == 0);
    auto const ls = lines(r.out);
    REQUIRE(ls.size() == 21);
    CHECK(ls[0] == "m,f_exact,f_list,f_pile,f_cleanup,f_approx");
    auto const first = split(ls[1]);
    REQUIRE(first.size() == 6);
    CHECK(first[0] == "1");
    CHECK(first[1] == "7.22386658784");
    CHECK(first[3] == "0");
    CHECK(first[5] == "7.22386658784");
    CHECK(split(ls[11])[5] == "6.36759683884");

    Run const approx = run({"curve", "--n", "100", "--approx"});
    auto const row50 = split(lines(approx.out)[50]);
    REQUIRE(row50.size() == 6);
    CHECK(row50[0] == "50");
    CHECK(row50[1].empty());
    CHECK(row50[5] == "13.2270512038");

    Run const m2 = run({"curve", "--n", "6", "--model", "m2"});
    CHECK(m2.code == 0);
    CHECK(split(lines(m2.out)[3])[5].empty());

    Run const bad = run({"curve", "--n", "6", "--model", "m2", "--approx"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("m4") != std::string::npos);
}

TEST_CASE("output does not follow the global locale")
{
    char const* previous = std::setlocale(LC_NUMERIC, nullptr);
    std::string const saved = previous ? previous : "C";
    bool const switched = std::setlocale(LC_NUMERIC, "de_DE.UTF-8") != nullptr;
    CHECK(format_real(0.5) == "0.5");
    std::setlocale(LC_NUMERIC, saved.c_str());
    if (!switched)
        MESSAGE("de_DE locale unavailable; checked under the default locale only");
}

TEST_CASE("optimal command")
{
    CHECK(run({"optimal", "--n", "35"}).out.find("m_opt=13") != std::string::npos);
    Run const a = run({"optimal", "--n", "100", "--approx"});
    CHECK(a.out.find("m_opt=17") != std::string::npos);
    CHECK(a.out.find("value=11.0061788557") != std::string::npos);
    CHECK(run({"optimal", "--n", "1", "--model", "m3"}).out.find("m_opt=1 ") != std::string::npos);
    CHECK(run({"optimal", "--n", "5", "--approx", "--exact"}).code == 2);
    CHECK(run({"optimal", "--n", "5", "--model", "m1", "--approx"}).code == 2);
}

TEST_CASE("simulate command")
{
    Run const r = run({"simulate", "--n", "20", "--m", "1", "--trials", "100", "--seed", "1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("mean=7.22386658784\n") != std::string::npos);
    CHECK(r.out.find("std_err=0\n") != std::string::npos);
    CHECK(r.out.find("ci95_low=7.22386658784\n") != std::string::npos);

    Run const s = run({"simulate", "--n", "20", "--m", "5", "--dist", "skewed:r=10,eps=0.001", "--trials", "100000",
                       "--seed", "7"});
    CHECK(s.code == 0);
    CHECK(s.out.find("ci95_high=") != std::string::npos);

    CHECK(run({"simulate", "--n", "20", "--m", "5", "--dist", "lognormal"}).code == 2);
    CHECK(run({"simulate", "--n", "20", "--m", "21"}).code == 2);
    CHECK(run({"simulate", "--n", "20", "--m", "5", "--trials", "10"}).code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(run({}).code == 2);
    CHECK(run({"table"}).code == 2);
    CHECK(run({"table", "--n-max", "3", "--bogus"}).code == 2);
    CHECK(run({"table", "--n-max", "3", "--model", "m9"}).code == 2);
    CHECK(run({"curve", "--n", "0"}).code == 2);
    CHECK(run({"verify", "--level", "medium"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("out flag writes a file")
{
    std::string const path = "test_report_table.csv";
    Run const r = run({"table", "--n-max", "3", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    CHECK(buf.str() == "n,m_opt,m_opt_approx\n1,1,1\n2,2,2\n3,3,3\n");
    std::remove(path.c_str());
}

TEST_CASE("numeric failures map to their own exit code")
{
    CHECK(run({"curve", "--n", "5", "--tol", "-1"}).code == 2);
}

TEST_CASE("occupancy grid helper")
{
    OccupancyGridReport const g = check_occupancy_grid(12, 1e-9);
    CHECK(g.cells == 78);
    CHECK(g.failures.empty());
    CHECK(g.max_rel_gap < 1e-9);
    CHECK(g.max_total_prob_gap < 1e-9);
}

TEST_CASE("verify report formatting")
{
    VerifyReport report;
    report.checks.push_back({"alpha", true, false, "fine", 0.5});
    report.checks.push_back({"beta", false, true, "missed", 0.0});
    CHECK(report.ok());
    std::ostringstream os;
    write_verify_report(os, report);
    CHECK(os.str().find("PASS       alpha | fine") != std::string::npos);
    CHECK(os.str().find("PROBE-MISS beta | missed") != std::string::npos);
    CHECK(os.str().find("OK") != std::string::npos);
    report.checks.push_back({"gamma", false, false, "", 0.0});
    CHECK_FALSE(report.ok());
}
