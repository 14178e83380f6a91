#include <doctest.h>

#include <cmath>

#include "cleanup/cost_model.hpp"
#include "cleanup/errors.hpp"
#include "cleanup/model.hpp"
#include "oracles.hpp"

using namespace cleanup;

TEST_CASE("primitive costs at exact points")
{
    CHECK(binary_success_cost(1) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(binary_success_cost(7) == doctest::Approx(17.0 / 7.0).epsilon(1e-15));
    CHECK(binary_success_cost(20) == doctest::Approx(3.61193329392).epsilon(1e-11));
    CHECK(binary_fail_cost(1) == 1.0);
    CHECK(binary_fail_cost(7) == 3.0);
    CHECK(binary_fail_cost(15) == 4.0);
    CHECK(sequential_cost(1) == 1.0);
    CHECK(sequential_cost(3) == 2.0);
    CHECK(sequential_cost(19) == 10.0);
}

TEST_CASE("primitive costs reject an empty structure")
{
    CHECK_THROWS_AS(binary_success_cost(0), DomainError);
    CHECK_THROWS_AS(binary_fail_cost(0), DomainError);
    CHECK_THROWS_AS(sequential_cost(0), DomainError);
    CHECK_THROWS_AS(binary_success_cost(-3), DomainError);
}

TEST_CASE("primitive costs are increasing and ordered")
{
    double pb = 0.0, pf = 0.0, ps = 0.0;
    for (long j = 1; j <= 1'000'000; j = j < 1000 ? j + 1 : j + 997)
    {
        double const b = binary_success_cost(j), f = binary_fail_cost(j), s = sequential_cost(j);
        CHECK(b > pb);
        CHECK(f > pf);
        CHECK(s > ps);
        CHECK(f >= b);
        CHECK(b > 0.0);
        CHECK(s >= 1.0);
        pb = b;
        pf = f;
        ps = s;
    }
}

TEST_CASE("successive power-of-two gaps in b stay below 2")
{
    for (int r = 0; r <= 40; ++r)
    {
        long const lo = (1L << r) - 1;
        long const hi = (1L << (r + 1)) - 1;
        double const lower = lo == 0 ? 0.0 : binary_success_cost(lo);
        CHECK(binary_success_cost(hi) - lower < 2.0);
    }
}

TEST_CASE("list and pile search costs per model")
{
    double const b20 = binary_success_cost(20);
    CHECK(list_search_cost(Model::m4(), 20, 5) == doctest::Approx(b20));
    CHECK(list_search_cost(Model::m1(), 20, 5) == doctest::Approx(binary_success_cost(15)));
    CHECK(list_search_cost(Model::m1(), 20, 5) == doctest::Approx(3.2666).epsilon(1e-4));
    CHECK(list_search_cost(Model::m3(), 9, 0) == doctest::Approx(binary_success_cost(9)));
    CHECK_THROWS_AS(list_search_cost(Model::m4(), 20, 20), DomainError);

    CHECK(pile_search_cost(Model::m4(), 20, 1) == 1.0);
    CHECK(pile_search_cost(Model::m2(), 20, 1) == doctest::Approx(5.392317).epsilon(1e-6));
    CHECK(pile_search_cost(Model::m1(), 20, 1) == doctest::Approx(5.321928).epsilon(1e-6));
    CHECK(pile_search_cost(Model::m3(), 20, 7) == 4.0);
    CHECK_THROWS_AS(pile_search_cost(Model::m4(), 20, 0), DomainError);

    for (int model = 1; model <= 4; ++model)
    {
        Model const mdl = all_models[static_cast<std::size_t>(model - 1)];
        for (long n = 1; n <= 12; ++n)
        {
            for (long j = 0; j < n; ++j)
                CHECK(list_search_cost(mdl, n, j) == doctest::Approx(oracle::list_cost(model, n, j)).epsilon(1e-14));
            for (long j = 1; j <= n; ++j)
                CHECK(pile_search_cost(mdl, n, j) == doctest::Approx(oracle::pile_cost(model, n, j)).epsilon(1e-14));
        }
    }
}

TEST_CASE("cleanup and round-trip costs")
{
    CHECK(cleanup_cost(Model::m4(), 20, 3) == doctest::Approx(3.0 * binary_success_cost(20)));
    CHECK(cleanup_cost(Model::m4(), 20, 3) == doctest::Approx(10.8358).epsilon(1e-5));
    CHECK(cleanup_cost(Model::m3(), 20, 1) == doctest::Approx(4.321928).epsilon(1e-6));
    CHECK(cleanup_cost(Model::m2(), 9, 1) == doctest::Approx(binary_success_cost(9)));
    // The last object goes back into an empty list.
    CHECK(cleanup_cost(Model::m1(), 3, 3) == doctest::Approx(binary_fail_cost(2) + binary_fail_cost(1)));
    CHECK_THROWS_AS(cleanup_cost(Model::m4(), 5, 6), DomainError);

    CHECK(star_cost(Model::m4(), 20, 7) == doctest::Approx(2.0 * binary_success_cost(20)).epsilon(1e-12));
    double const expected = (binary_success_cost(5) + binary_success_cost(4) + binary_fail_cost(4) + binary_fail_cost(3)) / 2.0;
    CHECK(star_cost(Model::m1(), 5, 2) == doctest::Approx(expected).epsilon(1e-14));
    CHECK(star_cost(Model::m3(), 11, 1) == doctest::Approx(binary_success_cost(11) + binary_fail_cost(10)).epsilon(1e-14));

    for (Model model : {Model::m2(), Model::m4()})
        for (long n = 1; n <= 300; ++n)
            for (long m = 1; m <= n; m += 7)
                CHECK(star_cost(model, n, m) == doctest::Approx(2.0 * binary_success_cost(n)).epsilon(1e-12));
}

TEST_CASE("model names round-trip")
{
    for (Model model : all_models)
        CHECK(Model::parse(model.name()) == model);
    CHECK(Model::m1().name() == "m1");
    CHECK_FALSE(Model::m2().has_memory());
    CHECK(Model::m2().numbered());
    CHECK_THROWS_AS(Model::parse("m5"), DomainError);
    CHECK_THROWS_AS(Model::parse(""), DomainError);
}
