#include "cleanup/cost_model.hpp"

#include <cmath>
#include <string>

#include "cleanup/errors.hpp"

namespace cleanup {
namespace {

void require_positive(long j, char const* what)
{
    if (j < 1)
        throw DomainError(std::string(what) + ": object count must be >= 1, got " + std::to_string(j));
}

long double log2_succ(long j)
{
    return std::log2(static_cast<long double>(j) + 1.0L);
}

}  // namespace

double binary_success_cost(long j)
{
    require_positive(j, "binary_success_cost");
    long double const jl = static_cast<long double>(j);
    return static_cast<double>((1.0L + 1.0L / jl) * log2_succ(j) - 1.0L);
}

double binary_fail_cost(long j)
{
    require_positive(j, "binary_fail_cost");
    return static_cast<double>(log2_succ(j));
}

double sequential_cost(long j)
{
    require_positive(j, "sequential_cost");
    return (static_cast<double>(j) + 1.0) / 2.0;
}

double list_search_cost(Model model, long n, long pile_size)
{
    if (n < 1 || pile_size < 0 || pile_size >= n)
        throw DomainError("list_search_cost: need 0 <= pile_size < n, got pile_size=" +
                          std::to_string(pile_size) + " n=" + std::to_string(n));
    return model.numbered() ? binary_success_cost(n) : binary_success_cost(n - pile_size);
}

double pile_search_cost(Model model, long n, long pile_size)
{
    if (pile_size < 1 || pile_size > n)
        throw DomainError("pile_search_cost: need 1 <= pile_size <= n, got pile_size=" +
                          std::to_string(pile_size) + " n=" + std::to_string(n));
    double const sequential = sequential_cost(pile_size);
    if (model.has_memory())
        return sequential;
    // A failed search on an empty list still costs log2(1) = 0.
    long const list_keys = model.numbered() ? n : n - pile_size;
    double const failed = list_keys == 0 ? 0.0 : binary_fail_cost(list_keys);
    return failed + sequential;
}

double cleanup_cost(Model model, long n, long m)
{
    if (m < 1 || m > n)
        throw DomainError("cleanup_cost: need 1 <= m <= n, got m=" + std::to_string(m) +
                          " n=" + std::to_string(n));
    if (model.numbered())
        return static_cast<double>(m) * binary_success_cost(n);
    double total = 0.0;
    for (long j = 1; j <= m; ++j)
    {
        if (n - j > 0)
            total += binary_fail_cost(n - j);
    }
    return total;
}

double star_cost(Model model, long n, long m)
{
    if (m < 1 || m > n)
        throw DomainError("star_cost: need 1 <= m <= n, got m=" + std::to_string(m) +
                          " n=" + std::to_string(n));
    if (model.numbered())
        return 2.0 * binary_success_cost(n);
    double total = cleanup_cost(model, n, m);
    for (long j = 0; j < m; ++j)
        total += list_search_cost(model, n, j);
    return total / static_cast<double>(m);
}

}  // namespace cleanup
