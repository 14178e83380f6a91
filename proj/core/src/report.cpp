#include "cleanup/report.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

#include "cleanup/analytic.hpp"
#include "cleanup/approx.hpp"
#include "cleanup/errors.hpp"
#include "parallel.hpp"

namespace cleanup {
namespace {

void write_cell(std::ostream& out, std::optional<double> value)
{
    if (value)
        out << format_real(*value);
}

}  // namespace

std::string format_real(double value)
{
    char buf[64];
    auto const [end, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 12);
    if (ec != std::errc())
        return "nan";
    return std::string(buf, end);
}

std::vector<TableRow> compute_table(long n_max, Model model, PrecisionConfig const& cfg, unsigned workers)
{
    if (n_max < 1)
        throw DomainError("table needs n_max >= 1");
    std::vector<TableRow> rows(static_cast<std::size_t>(n_max));
    // One n per task; each m_opt call runs serially inside.
    detail::parallel_for(rows.size(), workers, [&](std::size_t i) {
        long const n = static_cast<long>(i) + 1;
        TableRow& row = rows[i];
        row.n = n;
        row.m_opt = m_opt(n, model, cfg, 1).m_opt;
        if (model == Model::m4())
            row.m_opt_approx = m_opt_approx(n).m_opt_approx;
    });
    return rows;
}

void write_table_csv(std::ostream& out, std::span<TableRow const> rows)
{
    out << "n,m_opt,m_opt_approx\n";
    for (auto const& row : rows)
    {
        out << row.n << ',' << row.m_opt << ',';
        if (row.m_opt_approx)
            out << *row.m_opt_approx;
        out << '\n';
    }
}

std::vector<CurveRow> compute_curve(long n, Model model, bool include_exact, bool include_approx,
                                    PrecisionConfig const& cfg, unsigned workers)
{
    if (n < 1)
        throw DomainError("curve needs n >= 1");
    if (include_approx && model != Model::m4())
        throw DomainError("the approximate cost is defined for model m4 only");

    std::vector<CurveRow> rows(static_cast<std::size_t>(n));
    std::vector<double> approx;
    if (include_approx)
        approx = m_opt_approx(n).values;
    detail::parallel_for(rows.size(), include_exact ? workers : 1u, [&](std::size_t i) {
        long const m = static_cast<long>(i) + 1;
        CurveRow& row = rows[i];
        row.m = m;
        if (include_exact)
        {
            CostBreakdown const b = f_total(n, m, model, cfg);
            row.f_exact = b.f_total;
            row.f_list = b.f_list;
            row.f_pile = b.f_pile;
            row.f_cleanup = b.f_cleanup;
        }
        if (include_approx)
            row.f_approx = approx[i];
    });
    return rows;
}

void write_curve_csv(std::ostream& out, std::span<CurveRow const> rows)
{
    out << "m,f_exact,f_list,f_pile,f_cleanup,f_approx\n";
    for (auto const& row : rows)
    {
        out << row.m << ',';
        write_cell(out, row.f_exact);
        out << ',';
        write_cell(out, row.f_list);
        out << ',';
        write_cell(out, row.f_pile);
        out << ',';
        write_cell(out, row.f_cleanup);
        out << ',';
        write_cell(out, row.f_approx);
        out << '\n';
    }
}

OptimalResult compute_optimal(long n, Model model, bool approx, PrecisionConfig const& cfg, unsigned workers)
{
    if (n < 1)
        throw DomainError("optimal needs n >= 1");
    OptimalResult result;
    result.n = n;
    result.model = model;
    result.approx = approx;
    if (approx)
    {
        if (model != Model::m4())
            throw DomainError("the approximate cost is defined for model m4 only");
        ApproxCurve const curve = m_opt_approx(n);
        result.m_opt = curve.m_opt_approx;
        result.value = curve.values[static_cast<std::size_t>(curve.m_opt_approx - 1)];
    }
    else
    {
        OptimumReport const report = m_opt(n, model, cfg, workers);
        result.m_opt = report.m_opt;
        result.value = report.f_at_opt;
        result.tie = report.tie_broken;
    }
    return result;
}

void write_optimal(std::ostream& out, OptimalResult const& result)
{
    out << "n=" << result.n << " model=" << result.model.name() << " method=" << (result.approx ? "approx" : "exact")
        << " m_opt=" << result.m_opt << " value=" << format_real(result.value);
    if (result.tie)
        out << " tie=1";
    out << '\n';
}

void write_simulation(std::ostream& out, long n, long m, Model model, Distribution const& dist,
                      EstimateReport const& report)
{
    out << "n=" << n << '\n'
        << "m=" << m << '\n'
        << "model=" << model.name() << '\n'
        << "dist=" << dist.describe() << '\n'
        << "trials=" << report.trials << '\n'
        << "seed=" << report.seed << '\n'
        << "mean=" << format_real(report.mean) << '\n'
        << "std_err=" << format_real(report.std_err) << '\n'
        << "ci95_low=" << format_real(report.ci_low()) << '\n'
        << "ci95_high=" << format_real(report.ci_high()) << '\n';
}

}  // namespace cleanup
