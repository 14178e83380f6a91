#include <doctest.h>

#include <cmath>
#include <string>
#include <map>
#include <numbers>

#include "cleanup/errors.hpp"
#include "cleanup/occupancy.hpp"
#include "oracles.hpp"

using namespace cleanup;

namespace {

double rel(double a, double b)
{
    return std::abs(a - b) / std::max(std::abs(a), std::abs(b));
}

long ipow(long base, long e)
{
    long r = 1;
    while (e-- > 0)
        r *= base;
    return r;
}

}  // namespace

TEST_CASE("stirling numbers of the second kind")
{
    CHECK(stirling2(3, 2) == 3);
    CHECK(stirling2(4, 2) == 7);
    CHECK(stirling2(0, 0) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(2, 5) == 0);
    for (unsigned l = 1; l <= 30; ++l)
    {
        CHECK(stirling2(l, 1) == 1);
        CHECK(stirling2(l, l) == 1);
    }
    // {l, 2} = 2^(l-1) - 1 and {l, l-1} = C(l, 2).
    for (unsigned l = 2; l <= 60; ++l)
    {
        CHECK(stirling2(l, 2) == (BigInt(1) << (l - 1)) - 1);
        CHECK(stirling2(l, l - 1) == BigInt(l) * (l - 1) / 2);
    }
    // Exact beyond 64 bits.
    std::string const big = stirling2(100, 50).str();
    CHECK(big.size() == 102);
    CHECK(big.substr(0, 20) == "43098323700936634042");
}

TEST_CASE("path counts agree with enumeration")
{
    CHECK(path_count(2, 2, 3) == 2);
    CHECK(path_count(3, 2, 3) == 6);
    CHECK(path_count(7, 1, 1) == 7);
    CHECK_THROWS_AS(path_count(3, 2, 1), DomainError);

    for (long n = 1; n <= 4; ++n)
    {
        for (long m = 1; m <= n; ++m)
        {
            std::map<long, long> counts;
            oracle::enumerate_paths(n, m, 9, [&](std::vector<int> const& p) { ++counts[static_cast<long>(p.size())]; });
            for (long l = m; l <= 9; ++l)
                CHECK(path_count(n, m, l) == counts[l]);
        }
    }
}

TEST_CASE("tail counts of tau_j match j^k times shorter path counts")
{
    for (long n = 2; n <= 4; ++n)
    {
        for (long m = 2; m <= n; ++m)
        {
            // at_least[(l, j, k)] counts paths of length l with tau_j >= k.
            std::map<std::tuple<long, long, long>, long> at_least;
            oracle::enumerate_paths(n, m, 9, [&](std::vector<int> const& p) {
                auto const t = oracle::taus(p, m);
                long const l = static_cast<long>(p.size());
                for (long j = 1; j < m; ++j)
                    for (long k = 0; k <= t[static_cast<std::size_t>(j)]; ++k)
                        ++at_least[{l, j, k}];
            });
            for (long l = m; l <= 9; ++l)
                for (long j = 1; j < m; ++j)
                    for (long k = 0; l - k >= m; ++k)
                        CHECK(at_least[{l, j, k}] == ipow(j, k) * path_count(n, m, l - k));
        }
    }
}

TEST_CASE("probability identity for the stopping time")
{
    CHECK(stirling_prob_identity_check(2, 2, 60) < 1e-12);
    CHECK(stirling_prob_identity_check(10, 5, 500) < 1e-12);
    CHECK(stirling_prob_identity_check(6, 1, 1) == 0.0);
}

TEST_CASE("mean and variance of the stopping time")
{
    CHECK(expected_len(9, 1) == 1.0);
    CHECK(expected_len(2, 2) == doctest::Approx(3.0).epsilon(1e-15));
    CHECK(expected_len(20, 20) == doctest::Approx(71.95479).epsilon(1e-7));
    CHECK(var_len(9, 1) == 0.0);
    CHECK(var_len(2, 2) == doctest::Approx(2.0).epsilon(1e-15));
    double v = 0.0;
    for (long j = 0; j < 10; ++j)
        v += 20.0 * j / ((20.0 - j) * (20.0 - j));
    CHECK(var_len(20, 10) == doctest::Approx(v).epsilon(1e-14));
    CHECK_THROWS_AS(expected_len(3, 4), DomainError);
    for (long n = 1; n <= 6; ++n)
        for (long m = 1; m <= n; ++m)
            CHECK(expected_len(n, m) == doctest::Approx(oracle::subset_chain(n, m, 4).expected_len).epsilon(1e-12));
}

TEST_CASE("reciprocal stopping time at small cells")
{
    double const e22 = 2.0 * std::numbers::ln2 - 1.0;
    CHECK(std::abs(recip_len_series(2, 2).value - e22) < 1e-12);
    CHECK(std::abs(recip_len_quadrature(2, 2).value - e22) < 1e-12);
    CHECK(std::abs(first_passage_dp(2, 2).recip_len - e22) < 1e-12);
    CHECK(std::abs(recip_len_m2(2) - e22) < 1e-12);
    for (long n : {1L, 5L, 40L})
    {
        CHECK(recip_len_closed_form(std::max(n, 2L), 1).value == 1.0);
        CHECK(recip_len_series(n, 1).value == 1.0);
        CHECK(first_passage_dp(n, 1).recip_len == 1.0);
        CHECK(recip_len_quadrature(n, 1).value == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(recip_len_closed_form(5, 5), DomainError);
}

TEST_CASE("two-object closed form for E_2[1/l]")
{
    for (long n = 2; n <= 200; n += 3)
    {
        double const direct = static_cast<double>(n * (n - 1)) *
                              (std::log(1.0 / (1.0 - 1.0 / static_cast<double>(n))) - 1.0 / static_cast<double>(n));
        double const tol = n < 50 ? 1e-12 : 1e-9;  // the direct form cancels for large n
        CHECK(rel(recip_len_m2(n), direct) < tol);
        CHECK(rel(recip_len_series(n, 2).value, recip_len_m2(n)) < 1e-12);
    }
}

TEST_CASE("reciprocal stopping time against the subset chain")
{
    for (long n = 1; n <= 7; ++n)
    {
        for (long m = 1; m <= n; ++m)
        {
            auto const ref = oracle::subset_chain(n, m, 4);
            CHECK(rel(recip_len(n, m).value, ref.recip_len) < 1e-12);
            CHECK(rel(first_passage_dp(n, m).recip_len, ref.recip_len) < 1e-12);
            for (long j = 1; j < m; ++j)
            {
                double const want = ref.tau_recip[static_cast<std::size_t>(j - 1)];
                CHECK(rel(tau_recip_len(n, m, j).value, want) < 1e-11);
                CHECK(rel(*first_passage_dp(n, m, j).tau_recip, want) < 1e-11);
            }
        }
    }
}

TEST_CASE("closed form survives cancellation with enough bits")
{
    PrecisionConfig wide;
    wide.working_precision = 512;
    for (long n : {20L, 40L, 60L})
        for (long m = 2; m < n; m += 5)
            CHECK(rel(recip_len_closed_form(n, m, wide).value, recip_len_series(n, m).value) < 1e-10);
    CHECK(rel(recip_len_closed_form(20, 10).value, recip_len_series(20, 10).value) < 1e-10);
    CHECK(rel(recip_len_quadrature(20, 10).value, recip_len_closed_form(20, 10).value) < 1e-10);
    CHECK(rel(recip_len_quadrature(100, 17).value, recip_len_series(100, 17).value) < 1e-10);
    CHECK(rel(recip_len_series(20, 20).value, first_passage_dp(20, 20).recip_len) < 1e-10);

    PrecisionConfig narrow;
    narrow.working_precision = 64;
    CHECK_THROWS_AS(recip_len_closed_form(60, 40, narrow), PrecisionLossError);
}

TEST_CASE("one-pass row of reciprocal moments")
{
    for (long n : {1L, 2L, 9L, 33L})
    {
        auto const row = recip_len_row(n);
        REQUIRE(row.size() == static_cast<std::size_t>(n));
        for (long m = 1; m <= n; ++m)
            CHECK(rel(row[static_cast<std::size_t>(m - 1)], recip_len_series(n, m).value) < 1e-10);
    }
}

TEST_CASE("repeat counters")
{
    CHECK(tau_given_len(5, 3, 1, 3) == 0.0);
    CHECK(tau_given_len(2, 2, 1, 3) == doctest::Approx(1.0));
    CHECK(tau_given_len(3, 2, 1, 4) == doctest::Approx(2.0));
    CHECK_THROWS_AS(tau_given_len(5, 3, 3, 4), DomainError);

    double const t221 = 3.0 - 4.0 * std::numbers::ln2;
    CHECK(std::abs(tau_recip_len(2, 2, 1).value - t221) < 1e-12);
    CHECK(std::abs(tau_recip_len_integral(2, 2, 1).value - t221) < 1e-12);
    CHECK(2.0 * (2.0 * std::numbers::ln2 - 1.0) + t221 == doctest::Approx(1.0).epsilon(1e-15));

    CHECK(tau_mean(2, 1) == 1.0);
    CHECK(tau_mean(20, 10) == 1.0);
    CHECK(tau_mean(20, 1) == doctest::Approx(1.0 / 19.0));
    CHECK_THROWS_AS(tau_mean(5, 5), DomainError);

    // Series against integral form.
    for (long n : {6L, 20L, 45L})
        for (long m = 2; m <= n; m += 3)
            for (long j = 1; j < m; j += 2)
                CHECK(rel(tau_recip_len(n, m, j).value, tau_recip_len_integral(n, m, j).value) < 1e-9);
    CHECK(rel(tau_recip_len(20, 10, 5).value, *first_passage_dp(20, 10, 5).tau_recip) < 1e-9);
    CHECK(tau_recip_len(20, 10, 9).value < 9.0 / 11.0 * recip_len(20, 10).value);
}

TEST_CASE("conditional tau against enumeration")
{
    for (long n = 2; n <= 4; ++n)
    {
        for (long m = 2; m <= n; ++m)
        {
            std::map<std::pair<long, long>, double> sum;
            std::map<long, long> count;
            oracle::enumerate_paths(n, m, 8, [&](std::vector<int> const& p) {
                auto const t = oracle::taus(p, m);
                long const l = static_cast<long>(p.size());
                ++count[l];
                for (long j = 1; j < m; ++j)
                    sum[{l, j}] += static_cast<double>(t[static_cast<std::size_t>(j)]);
            });
            for (long l = m; l <= 8; ++l)
                for (long j = 1; j < m; ++j)
                    CHECK(tau_given_len(n, m, j, l) ==
                          doctest::Approx(sum[{l, j}] / static_cast<double>(count[l])).epsilon(1e-12));
        }
    }
}

TEST_CASE("moments satisfy the occupancy invariants")
{
    for (auto [n, m] : {std::pair{20L, 10L}, {5L, 5L}, {35L, 13L}, {12L, 2L}})
    {
        auto const mom = moments(n, m);
        double total = static_cast<double>(m) * mom.recip_len.value;
        for (auto const& t : mom.tau_recip)
            total += t.value;
        CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
        double const nd = static_cast<double>(n), md = static_cast<double>(m);
        double const lowest = m == n ? 0.0 : 1.0 / (nd * (std::log(nd) - std::log(nd - md)));
        CHECK(lowest <= 1.0 / mom.expected_len.value);
        CHECK(1.0 / mom.expected_len.value < mom.recip_len.value);
        CHECK(mom.recip_len.value < 1.0 / md);
        for (long j = 1; j < m; ++j)
            CHECK(mom.tau_recip[static_cast<std::size_t>(j - 1)].value < tau_mean(n, j) * mom.recip_len.value);
        CHECK(mom.recip_len.est_error < 1e-9);
    }
}

TEST_CASE("truncation limits surface as convergence errors")
{
    PrecisionConfig tight;
    tight.max_terms = 20;
    CHECK_THROWS_AS(recip_len_series(50, 50, tight), ConvergenceError);
    CHECK_THROWS_AS(first_passage_dp(50, 50, std::nullopt, 20), ConvergenceError);
    try
    {
        recip_len_series(50, 50, tight);
    }
    catch (ConvergenceError const& e)
    {
        CHECK(e.partial_value() > 0.0);
        CHECK(e.achieved_error() > 1e-10);
    }

    PrecisionConfig bad;
    bad.tol = 0.0;
    CHECK_THROWS_AS(bad.validate(), DomainError);
    bad.tol = 1e-10;
    bad.max_terms = 3;
    CHECK_THROWS_AS(bad.validate(), DomainError);
}
