#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cleanup/occupancy.hpp"

namespace cleanup {

enum class VerifyLevel { quick, full };

struct CheckResult
{
    std::string name;
    bool passed = false;
    /// Probes are reported but never fail a run.
    bool probe = false;
    std::string detail;
    double seconds = 0.0;
};

struct VerifyReport
{
    VerifyLevel level = VerifyLevel::quick;
    std::vector<CheckResult> checks;

    /// True when every non-probe check passed.
    bool ok() const;
};

/// Runs the self-contained verification suite. Progress lines go to
/// `progress` when it is not null.
VerifyReport run_verify(VerifyLevel level, std::ostream* progress = nullptr, unsigned workers = 0);

/// Human-readable summary, one line per check plus a totals line.
void write_verify_report(std::ostream& out, VerifyReport const& report);

struct OccupancyGridReport
{
    long n_max = 0;
    long cells = 0;
    /// Largest pairwise relative gap between the E[1/l] routes.
    double max_rel_gap = 0.0;
    /// Largest |m E[1/l] + sum_j E[tau_j/l] - 1|.
    double max_total_prob_gap = 0.0;
    std::vector<std::string> failures;
};

/// For every 1 <= m <= n <= n_max: closed form (m < n), series, quadrature
/// and dynamic program agree within `rel_tol`; the total-probability
/// identity holds within `rel_tol`; the Jensen chain, covariance and
/// Chebyshev bounds hold.
OccupancyGridReport check_occupancy_grid(long n_max, double rel_tol, PrecisionConfig const& cfg = {},
                                         unsigned workers = 0);

}  // namespace cleanup
