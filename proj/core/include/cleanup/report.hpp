#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cleanup/distribution.hpp"
#include "cleanup/model.hpp"
#include "cleanup/montecarlo.hpp"
#include "cleanup/occupancy.hpp"

namespace cleanup {

/// Shortest round-trip form at 12 significant digits, '.' separator,
/// independent of the global locale.
std::string format_real(double value);

struct TableRow
{
    long n = 0;
    long m_opt = 0;
    std::optional<long> m_opt_approx;  ///< m4 only
};

std::vector<TableRow> compute_table(long n_max, Model model, PrecisionConfig const& cfg = {}, unsigned workers = 0);

/// Header `n,m_opt,m_opt_approx`.
void write_table_csv(std::ostream& out, std::span<TableRow const> rows);

struct CurveRow
{
    long m = 0;
    std::optional<double> f_exact;
    std::optional<double> f_list;
    std::optional<double> f_pile;
    std::optional<double> f_cleanup;
    std::optional<double> f_approx;
};

/// Rows for m = 1..n. Asking for the approximate cost under a model other
/// than m4 throws DomainError.
std::vector<CurveRow> compute_curve(long n, Model model, bool include_exact, bool include_approx,
                                    PrecisionConfig const& cfg = {}, unsigned workers = 0);

/// Header `m,f_exact,f_list,f_pile,f_cleanup,f_approx`; missing parts are
/// left blank.
void write_curve_csv(std::ostream& out, std::span<CurveRow const> rows);

struct OptimalResult
{
    long n = 0;
    Model model;
    bool approx = false;
    long m_opt = 0;
    double value = 0.0;
    bool tie = false;
};

OptimalResult compute_optimal(long n, Model model, bool approx, PrecisionConfig const& cfg = {},
                              unsigned workers = 0);

/// One line of key=value pairs.
void write_optimal(std::ostream& out, OptimalResult const& result);

/// key=value lines: inputs, mean, std_err and the 95% interval.
void write_simulation(std::ostream& out, long n, long m, Model model, Distribution const& dist,
                      EstimateReport const& report);

}  // namespace cleanup
