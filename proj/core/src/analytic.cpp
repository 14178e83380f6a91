#include "cleanup/analytic.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>

#include "cleanup/cost_model.hpp"
#include "cleanup/errors.hpp"
#include "compensated_sum.hpp"
#include "parallel.hpp"

namespace cleanup {
namespace {

void require_nm(long n, long m, char const* what)
{
    if (n < 1 || m < 1 || m > n)
        throw DomainError(std::string(what) + ": need 1 <= m <= n, got n=" + std::to_string(n) +
                          " m=" + std::to_string(m));
}

// Sum of list-search costs over one cycle, pile sizes 0..m-1.
double list_cycle_cost(Model model, long n, long m)
{
    detail::CompensatedSum sum;
    for (long j = 0; j < m; ++j)
        sum += list_search_cost(model, n, j);
    return sum.value();
}

// b_f with the empty list costing nothing.
double fail_cost_or_zero(long j)
{
    return j == 0 ? 0.0 : binary_fail_cost(j);
}

bool close(double a, double b, double rel)
{
    return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

CostBreakdown breakdown_from_moments(Model model, OccupancyMoments const& mom)
{
    long const n = mom.n;
    long const m = mom.m;
    double const recip = mom.recip_len.value;
    double const list_cost = list_cycle_cost(model, n, m);
    double const cleanup = cleanup_cost(model, n, m);

    CostBreakdown out;
    out.n = n;
    out.m = m;
    out.model = model;
    out.f_list = recip * list_cost;
    out.f_cleanup = recip * cleanup;

    detail::CompensatedSum pile;
    double error = mom.recip_len.est_error * (list_cost + cleanup);
    for (long j = 1; j < m; ++j)
    {
        auto const& tau = mom.tau_recip[static_cast<std::size_t>(j - 1)];
        double const cost = pile_search_cost(model, n, j);
        pile += tau.value * cost;
        error += tau.est_error * cost;
    }
    out.f_pile = pile.value();
    out.f_total = out.f_list + out.f_pile + out.f_cleanup;
    out.est_error = error;
    return out;
}

double f_total_regrouped(Model model, OccupancyMoments const& mom)
{
    long const n = mom.n;
    long const m = mom.m;
    detail::CompensatedSum total;
    total += static_cast<double>(m) * mom.recip_len.value * star_cost(model, n, m);
    for (long j = 1; j < m; ++j)
        total += mom.tau_recip[static_cast<std::size_t>(j - 1)].value * pile_search_cost(model, n, j);
    return total.value();
}

double f_list(long n, long m, Model model, PrecisionConfig const& cfg)
{
    require_nm(n, m, "f_list");
    return recip_len(n, m, cfg).value * list_cycle_cost(model, n, m);
}

double f_cleanup(long n, long m, Model model, PrecisionConfig const& cfg)
{
    require_nm(n, m, "f_cleanup");
    return recip_len(n, m, cfg).value * cleanup_cost(model, n, m);
}

double f_pile(long n, long m, Model model, PrecisionConfig const& cfg)
{
    require_nm(n, m, "f_pile");
    detail::CompensatedSum pile;
    for (long j = 1; j < m; ++j)
        pile += tau_recip_len(n, m, j, cfg).value * pile_search_cost(model, n, j);
    return pile.value();
}

CostBreakdown f_total(long n, long m, Model model, PrecisionConfig const& cfg)
{
    require_nm(n, m, "f_total");
    return breakdown_from_moments(model, moments(n, m, cfg));
}

double f_small_closed_form(long n, long m, Model model)
{
    if (n < 2)
        throw DomainError("f_small_closed_form: need n >= 2");
    if (m != 1 && m != 2)
        throw DomainError("f_small_closed_form: only m = 1 and m = 2 have closed forms");

    double const b_n = binary_success_cost(n);
    if (m == 1)
        return model.numbered() ? 2.0 * b_n : b_n + binary_fail_cost(n - 1);

    double const e2 = recip_len_m2(n);
    double const b_prev = binary_success_cost(n - 1);
    double const bf_prev = binary_fail_cost(n - 1);
    double const bf_prev2 = fail_cost_or_zero(n - 2);
    double const bf_n = binary_fail_cost(n);

    if (model == Model::m1())
        return bf_prev + 1.0 + e2 * (b_n + b_prev - bf_prev + bf_prev2 - 2.0);
    if (model == Model::m2())
        return bf_n + 1.0 + e2 * (4.0 * b_n - 2.0 * bf_n - 2.0);
    if (model == Model::m3())
        return 1.0 + e2 * (b_n + b_prev + bf_prev + bf_prev2 - 2.0);
    return 1.0 + e2 * (4.0 * b_n - 2.0);
}

OptimumReport m_opt(long n, Model model, PrecisionConfig const& cfg, unsigned workers)
{
    if (n < 1)
        throw DomainError("m_opt: need n >= 1");
    cfg.validate();

    OptimumReport report;
    report.n = n;
    report.model = model;
    report.curve.resize(static_cast<std::size_t>(n));
    detail::parallel_for(static_cast<std::size_t>(n), workers, [&](std::size_t idx) {
        long const m = static_cast<long>(idx) + 1;
        report.curve[idx] = breakdown_from_moments(model, moments(n, m, cfg));
    });

    std::size_t best = 0;
    for (std::size_t idx = 1; idx < report.curve.size(); ++idx)
    {
        if (report.curve[idx].f_total < report.curve[best].f_total)
            best = idx;
    }
    report.m_opt = static_cast<long>(best) + 1;
    report.f_at_opt = report.curve[best].f_total;
    for (std::size_t idx = 0; idx < report.curve.size(); ++idx)
    {
        if (idx != best && close(report.curve[idx].f_total, report.f_at_opt, 1e-12))
            report.tie_broken = true;
    }
    return report;
}

FirstStepWitness verify_first_step(long n, Model model, PrecisionConfig const& cfg)
{
    if (n < 2)
        throw DomainError("verify_first_step: need n >= 2");
    FirstStepWitness witness;
    witness.n = n;
    witness.model = model;
    witness.f1 = f_total(n, 1, model, cfg).f_total;
    witness.f2 = f_total(n, 2, model, cfg).f_total;
    witness.holds = witness.f2 < witness.f1;
    return witness;
}

F1ComparisonWitness verify_f1_comparison(long n, Model model, PrecisionConfig const& cfg)
{
    if (n < 2)
        throw DomainError("verify_f1_comparison: need n >= 2");
    F1ComparisonWitness witness;
    witness.n = n;
    witness.model = model;
    double const f1 = f_total(n, 1, model, cfg).f_total;
    for (long m = 2; m <= n; ++m)
    {
        bool in_range = false;
        if (model.numbered())
            in_range = static_cast<double>(m) < 4.0 * binary_success_cost(n);
        else
            in_range = m < n && static_cast<double>(m) < 4.0 * binary_success_cost(n - m);
        if (!in_range)
            continue;
        witness.checked.push_back(m);
        if (!(f_total(n, m, model, cfg).f_total < f1))
            witness.failures.push_back(m);
    }
    witness.holds = witness.failures.empty();
    return witness;
}

UpperBoundWitness verify_upper_bound(long n, PrecisionConfig const& cfg)
{
    UpperBoundWitness witness;
    witness.n = n;
    witness.m_opt = m_opt(n, Model::m4(), cfg).m_opt;
    witness.bound = 4.0 * binary_success_cost(n);
    witness.holds = static_cast<double>(witness.m_opt) < witness.bound &&
                    witness.bound <= 4.0 * std::log2(static_cast<double>(n) + 1.0);
    return witness;
}

std::vector<ProbeResult> probe_conjectures(long n_max, PrecisionConfig const& cfg)
{
    if (n_max < 1)
        throw DomainError("probe_conjectures: need n_max >= 1");

    std::vector<ProbeResult> probes;
    auto add = [&](std::string name, bool passed, std::string detail) {
        probes.push_back({std::move(name), passed, std::move(detail)});
    };

    // Optimal cleanup points per model and the full curves.
    std::vector<std::array<OptimumReport, 4>> optima;
    for (long n = 1; n <= n_max; ++n)
    {
        std::array<OptimumReport, 4> row;
        for (std::size_t k = 0; k < all_models.size(); ++k)
            row[k] = m_opt(n, all_models[k], cfg);
        optima.push_back(std::move(row));
    }
    auto opt = [&](long n, std::size_t model_index) -> OptimumReport const& {
        return optima[static_cast<std::size_t>(n - 1)][model_index];
    };

    // The ordering chain m1 <= m2 <= m4 <= m3, one link at a time.
    for (auto [lo, hi] : {std::pair<std::size_t, std::size_t>{0, 1}, {1, 3}, {3, 2}})
    {
        std::ostringstream bad;
        for (long n = 1; n <= n_max; ++n)
        {
            if (opt(n, lo).m_opt > opt(n, hi).m_opt)
                bad << " n=" << n << ":(" << opt(n, lo).m_opt << "," << opt(n, hi).m_opt << ")";
        }
        add("model ordering m_opt(" + std::string(all_models[lo].name()) + ") <= m_opt(" +
                std::string(all_models[hi].name()) + ")",
            bad.str().empty(), bad.str().empty() ? "n <= " + std::to_string(n_max) : "violations" + bad.str());
    }

    auto never_cleanup = [&](std::size_t model_index, long n) {
        // F(n; n) against the average pile search (n + 1) / 2 with no cleanup at all.
        return opt(n, model_index).curve.back().f_total >= sequential_cost(n);
    };
    long const small = std::min<long>(n_max, 8);
    {
        std::ostringstream bad;
        for (long n = 1; n <= small; ++n)
        {
            bool const expected = n <= 6;
            if (never_cleanup(3, n) != expected)
                bad << " n=" << n;
        }
        add("m4: never clean up exactly for n <= 6 (n <= 8 checked)", bad.str().empty(),
            bad.str().empty() ? "" : "mismatch at" + bad.str());
    }
    {
        std::ostringstream bad;
        for (long n = 1; n <= small; ++n)
        {
            bool const expected = n <= 2;
            if (never_cleanup(2, n) != expected)
                bad << " n=" << n;
        }
        add("m3: never clean up exactly for n <= 2 (n <= 8 checked)", bad.str().empty(),
            bad.str().empty() ? "" : "mismatch at" + bad.str());
    }
    for (std::size_t model_index : {std::size_t{2}, std::size_t{3}})
    {
        std::ostringstream bad;
        for (long n = 1; n <= small; ++n)
        {
            if (opt(n, model_index).m_opt != n)
                bad << " n=" << n << "->" << opt(n, model_index).m_opt;
        }
        add(std::string(all_models[model_index].name()) + ": m_opt(n) = n for n <= 8", bad.str().empty(),
            bad.str());
    }

    // Occupancy monotonicity probes.
    {
        std::ostringstream cheby, stronger, decreasing, faster, ratio, tau_shift;
        for (long n = 2; n <= n_max; ++n)
        {
            std::vector<OccupancyMoments> row;
            for (long m = 1; m <= n; ++m)
                row.push_back(moments(n, m, cfg));
            for (long m = 2; m <= n; ++m)
            {
                auto const& cur = row[static_cast<std::size_t>(m - 1)];
                auto const& prev = row[static_cast<std::size_t>(m - 2)];
                double const inv_prev_len = 1.0 / prev.expected_len.value;
                if (!(cur.recip_len.value < inv_prev_len))
                    cheby << " (" << n << "," << m << ")";
                if (!(cur.recip_len.value <= static_cast<double>(m - 1) / static_cast<double>(m) * inv_prev_len))
                    stronger << " (" << n << "," << m << ")";
            }
            for (long m = 1; m < n; ++m)
            {
                auto const& cur = row[static_cast<std::size_t>(m - 1)];
                auto const& next = row[static_cast<std::size_t>(m)];
                double const md = static_cast<double>(m);
                double const lhs = md * cur.recip_len.value - (md + 1.0) * next.recip_len.value;
                if (!(lhs > 0.0))
                    decreasing << " (" << n << "," << m << ")";
                double const rhs = md / cur.expected_len.value - (md + 1.0) / next.expected_len.value;
                if (!(lhs <= rhs))
                    faster << " (" << n << "," << m << ")";
                if (!(next.expected_len.value / cur.expected_len.value >=
                      cur.recip_len.value / next.recip_len.value))
                    ratio << " (" << n << "," << m << ")";
                if (n >= 4)
                {
                    for (long j = 1; j < m; ++j)
                    {
                        double const a = cur.tau_recip[static_cast<std::size_t>(j - 1)].value;
                        double const b = next.tau_recip[static_cast<std::size_t>(j)].value;
                        if (!(a <= b))
                            tau_shift << " (" << n << "," << m << ",j=" << j << ")";
                    }
                }
            }
        }
        auto report = [&](std::string name, std::ostringstream const& bad) {
            add(std::move(name), bad.str().empty(), bad.str().empty() ? "" : "fails at" + bad.str());
        };
        report("E_m[1/l] < 1/E_{m-1}[l] for all 1 < m <= n", cheby);
        report("E_m[1/l] <= ((m-1)/m) / E_{m-1}[l]", stronger);
        report("m E_m[1/l] strictly decreasing in m", decreasing);
        report("m/E_m[l] decreases faster than m E_m[1/l]", faster);
        report("E_{m+1}[l]/E_m[l] >= E_m[1/l]/E_{m+1}[1/l]", ratio);
        report("E_m[tau_j/l] <= E_{m+1}[tau_{j+1}/l] (n >= 4)", tau_shift);
    }

    // Component monotonicity of F.
    {
        std::ostringstream list_bad, cleanup_bad, pile_bad;
        for (long n = 2; n <= n_max; ++n)
        {
            for (std::size_t k = 0; k < all_models.size(); ++k)
            {
                auto const& curve = opt(n, k).curve;
                for (std::size_t idx = 0; idx + 1 < curve.size(); ++idx)
                {
                    if (!(curve[idx + 1].f_list < curve[idx].f_list))
                        list_bad << " (" << all_models[k].name() << "," << n << "," << idx + 1 << ")";
                    if (!(curve[idx + 1].f_cleanup < curve[idx].f_cleanup))
                        cleanup_bad << " (" << all_models[k].name() << "," << n << "," << idx + 1 << ")";
                    if (!(curve[idx + 1].f_pile > curve[idx].f_pile))
                        pile_bad << " (" << all_models[k].name() << "," << n << "," << idx + 1 << ")";
                }
            }
        }
        add("F_list decreasing in m", list_bad.str().empty(), list_bad.str());
        add("F_cleanup decreasing in m", cleanup_bad.str().empty(), cleanup_bad.str());
        add("F_pile increasing in m", pile_bad.str().empty(), pile_bad.str());
    }
    return probes;
}

}  // namespace cleanup
