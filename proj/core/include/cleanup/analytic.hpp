#pragma once

#include <string>
#include <vector>

#include "cleanup/model.hpp"
#include "cleanup/occupancy.hpp"

namespace cleanup {

/// Expected per-search cost F(m; n) split into list searches, pile searches
/// and cleanup.
struct CostBreakdown
{
    long n = 0;
    long m = 0;
    Model model;
    double f_list = 0.0;
    double f_pile = 0.0;
    double f_cleanup = 0.0;
    double f_total = 0.0;
    double est_error = 0.0;

    /// Search part only (list plus pile).
    double f_search() const { return f_list + f_pile; }
};

struct OptimumReport
{
    long n = 0;
    Model model;
    long m_opt = 0;
    double f_at_opt = 0.0;
    std::vector<CostBreakdown> curve;  ///< m = 1..n
    bool tie_broken = false;           ///< another m attains the same minimum
};

double f_list(long n, long m, Model model, PrecisionConfig const& cfg = {});
double f_cleanup(long n, long m, Model model, PrecisionConfig const& cfg = {});
double f_pile(long n, long m, Model model, PrecisionConfig const& cfg = {});

/// Full breakdown for one cell.
CostBreakdown f_total(long n, long m, Model model, PrecisionConfig const& cfg = {});

/// Breakdown assembled from already computed moments.
CostBreakdown breakdown_from_moments(Model model, OccupancyMoments const& mom);

/// F(m) = m E[1/l] s*(m) + sum_j E[tau_j/l] s_P(j), the same quantity
/// regrouped by the cost of one list round trip.
double f_total_regrouped(Model model, OccupancyMoments const& mom);

/// F(1; n) and F(2; n) from their closed forms (m must be 1 or 2, n >= 2).
double f_small_closed_form(long n, long m, Model model);

/// Smallest minimiser of F(m; n) over every m in [1, n]. `workers` = 0
/// means one per hardware thread.
OptimumReport m_opt(long n, Model model, PrecisionConfig const& cfg = {}, unsigned workers = 0);

struct FirstStepWitness
{
    long n = 0;
    Model model;
    double f1 = 0.0;
    double f2 = 0.0;
    bool holds = false;  ///< F(2) < F(1)
};

/// Checks that cleaning up after every search is never optimal.
FirstStepWitness verify_first_step(long n, Model model, PrecisionConfig const& cfg = {});

struct F1ComparisonWitness
{
    long n = 0;
    Model model;
    std::vector<long> checked;  ///< every m in the guaranteed range
    std::vector<long> failures;
    bool holds = false;
};

/// F(m) < F(1) for 1 < m < 4 b(n) (numbered) or 1 < m < 4 b(n - m)
/// (unnumbered).
F1ComparisonWitness verify_f1_comparison(long n, Model model, PrecisionConfig const& cfg = {});

struct UpperBoundWitness
{
    long n = 0;
    long m_opt = 0;
    double bound = 0.0;  ///< 4 b(n)
    bool holds = false;
};

/// m_opt(n) < 4 b(n) <= 4 log2(n + 1) for the complete-memory numbered model.
UpperBoundWitness verify_upper_bound(long n, PrecisionConfig const& cfg = {});

struct ProbeResult
{
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Numerical probes of conjectured or empirically observed behaviour. Never
/// throws on a failed probe; the result records it.
std::vector<ProbeResult> probe_conjectures(long n_max, PrecisionConfig const& cfg = {});

}  // namespace cleanup
