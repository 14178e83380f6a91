#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cleanup/distribution.hpp"
#include "cleanup/model.hpp"

namespace cleanup {

/// One simulated path, from an empty pile until the pile first holds m objects.
struct PathRecord
{
    long len = 0;
    double search_list_cost = 0.0;
    double search_pile_cost = 0.0;
    double cleanup_cost = 0.0;
    /// tau[j - 1]: draws that hit the pile while it held j objects, j = 1..m-1.
    std::vector<long> tau;
    /// t_mark[j - 1]: draw at which the pile reached j objects, j = 1..m.
    std::vector<long> t_mark;

    double total_cost() const { return search_list_cost + search_pile_cost + cleanup_cost; }
    /// Total cost per search along this path.
    double cost_per_search() const { return total_cost() / static_cast<double>(len); }
};

using Rng = std::mt19937_64;

/// Simulates one path under `dist`, charging averaged search costs and a
/// list-first search order.
PathRecord simulate_path(long n, long m, Distribution const& dist, Model model, Rng& rng);

enum class Quantity { f, recip_len, tau_recip, expected_len };

struct EstimateReport
{
    double mean = 0.0;
    double std_err = 0.0;
    long trials = 0;
    std::uint64_t seed = 0;
    Quantity quantity = Quantity::f;
    /// Only meaningful for tau_recip.
    long j = 0;

    double ci_low(double z = 1.959963984540054) const { return mean - z * std_err; }
    double ci_high(double z = 1.959963984540054) const { return mean + z * std_err; }
};

/// Sample mean of total cost per search. Trials are cut into fixed blocks
/// with their own generator streams, so the result does not depend on
/// `workers` (0 picks the hardware concurrency).
EstimateReport estimate_f(long n, long m, Model model, Distribution const& dist, long trials, std::uint64_t seed,
                          unsigned workers = 0);

struct OccupancyEstimate
{
    EstimateReport recip_len;
    EstimateReport expected_len;
    /// tau_recip[j - 1] estimates E[tau_j / len], j = 1..m-1.
    std::vector<EstimateReport> tau_recip;
};

OccupancyEstimate estimate_occupancy(long n, long m, Distribution const& dist, long trials, std::uint64_t seed,
                                     unsigned workers = 0);

struct EmpiricalOptimum
{
    long m_opt = 1;
    /// Another m lies within one standard error of the minimum.
    bool tie = false;
    std::vector<EstimateReport> curve;
};

/// Argmin over m = 1..n of estimate_f, smallest m on exact ties.
EmpiricalOptimum empirical_m_opt(long n, Model model, Distribution const& dist, long trials_per_m,
                                 std::uint64_t seed, unsigned workers = 0);

struct TailCounts
{
    long trials = 0;
    /// at_least[k]: paths with tau_j >= k, k = 0..k_max.
    std::vector<long> at_least;
};

/// Tail counts of tau_j over `trials` simulated paths.
TailCounts tau_tail_counts(long n, long m, long j, Distribution const& dist, long k_max, long trials,
                           std::uint64_t seed);

}  // namespace cleanup
