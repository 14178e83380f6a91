#include "cleanup/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>

#include "cleanup/analytic.hpp"
#include "cleanup/approx.hpp"
#include "cleanup/cost_model.hpp"
#include "cleanup/errors.hpp"
#include "cleanup/montecarlo.hpp"
#include "cleanup/reference_data.hpp"
#include "cleanup/report.hpp"
#include "parallel.hpp"

namespace cleanup {
namespace {

struct Outcome
{
    bool passed = false;
    std::string detail;
};

double rel_gap(double a, double b)
{
    double const scale = std::max(std::abs(a), std::abs(b));
    return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

std::string sci(double x)
{
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

class Runner
{
public:
    Runner(VerifyReport& report, std::ostream* progress) : report_(report), progress_(progress) {}

    void check(std::string name, std::function<Outcome()> const& body) { run(std::move(name), false, body); }
    void probe(std::string name, std::function<Outcome()> const& body) { run(std::move(name), true, body); }

private:
    void run(std::string name, bool is_probe, std::function<Outcome()> const& body)
    {
        if (progress_)
            *progress_ << "running: " << name << '\n' << std::flush;
        auto const start = std::chrono::steady_clock::now();
        CheckResult result;
        result.name = std::move(name);
        result.probe = is_probe;
        try
        {
            Outcome const outcome = body();
            result.passed = outcome.passed;
            result.detail = outcome.detail;
        }
        catch (std::exception const& e)
        {
            result.passed = false;
            result.detail = std::string("exception: ") + e.what();
        }
        result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report_.checks.push_back(std::move(result));
    }

    VerifyReport& report_;
    std::ostream* progress_;
};

Outcome within_sigma(double estimate, double std_err, double exact, double k = 4.0)
{
    double const gap = std::abs(estimate - exact);
    bool const ok = gap <= k * std_err || (std_err == 0.0 && gap == 0.0);
    return {ok, "estimate " + format_real(estimate) + " exact " + format_real(exact) + " gap/se " +
                    (std_err > 0.0 ? format_real(gap / std_err) : std::string("n/a"))};
}

Outcome merge(std::vector<Outcome> const& parts)
{
    Outcome out{true, ""};
    for (auto const& p : parts)
    {
        out.passed = out.passed && p.passed;
        if (!p.detail.empty())
            out.detail += (out.detail.empty() ? "" : "; ") + p.detail;
    }
    return out;
}

}  // namespace

bool VerifyReport::ok() const
{
    return std::all_of(checks.begin(), checks.end(), [](CheckResult const& c) { return c.probe || c.passed; });
}

OccupancyGridReport check_occupancy_grid(long n_max, double rel_tol, PrecisionConfig const& cfg, unsigned workers)
{
    if (n_max < 1)
        throw DomainError("check_occupancy_grid: need n_max >= 1");

    struct Cell
    {
        long n, m;
    };
    std::vector<Cell> cells;
    for (long n = 1; n <= n_max; ++n)
        for (long m = 1; m <= n; ++m)
            cells.push_back({n, m});

    OccupancyGridReport report;
    report.n_max = n_max;
    report.cells = static_cast<long>(cells.size());
    std::mutex guard;

    detail::parallel_for(cells.size(), workers, [&](std::size_t idx) {
        long const n = cells[idx].n;
        long const m = cells[idx].m;
        std::vector<std::string> bad;
        auto where = [&](std::string const& what) {
            return "(" + std::to_string(n) + "," + std::to_string(m) + ") " + what;
        };

        std::vector<std::pair<char const*, double>> routes;
        if (m < n)
            routes.emplace_back("closed_form", recip_len_closed_form(n, m, cfg).value);
        routes.emplace_back("series", recip_len_series(n, m, cfg).value);
        routes.emplace_back("quadrature", recip_len_quadrature(n, m, cfg).value);
        routes.emplace_back("dp", first_passage_dp(n, m, std::nullopt, 0, cfg).recip_len);
        double gap = 0.0;
        for (std::size_t a = 0; a < routes.size(); ++a)
        {
            for (std::size_t b = a + 1; b < routes.size(); ++b)
            {
                double const g = rel_gap(routes[a].second, routes[b].second);
                gap = std::max(gap, g);
                if (!(g <= rel_tol))
                    bad.push_back(where(std::string(routes[a].first) + " vs " + routes[b].first + " " + sci(g)));
            }
        }

        OccupancyMoments const mom = moments(n, m, cfg);
        double const recip = mom.recip_len.value;
        double total = static_cast<double>(m) * recip;
        for (auto const& t : mom.tau_recip)
            total += t.value;
        double const total_gap = std::abs(total - 1.0);
        if (!(total_gap <= rel_tol))
            bad.push_back(where("total probability off by " + sci(total_gap)));

        // Jensen chain.
        double const nd = static_cast<double>(n);
        double const md = static_cast<double>(m);
        double const inv_len = 1.0 / mom.expected_len.value;
        double const lowest = m == n ? 0.0 : 1.0 / (nd * (std::log(nd) - std::log(nd - md)));
        if (m == 1)
        {
            if (recip != 1.0)
                bad.push_back(where("E[1/l] != 1 at m = 1"));
        }
        else
        {
            bool const strict = m < n;
            bool const chain = strict ? (lowest < inv_len && inv_len < recip && recip < 1.0 / md)
                                      : (lowest <= inv_len && inv_len < recip && recip < 1.0 / md);
            if (!chain)
                bad.push_back(where("Jensen chain"));
        }

        // Covariance bound.
        for (long j = 1; j < m; ++j)
        {
            double const lhs = mom.tau_recip[static_cast<std::size_t>(j - 1)].value;
            if (!(lhs < tau_mean(n, j) * recip))
                bad.push_back(where("covariance bound at j=" + std::to_string(j)));
        }

        // Chebyshev forms.
        if (m > 1)
        {
            double const prev_len = expected_len(n, m - 1);
            if (md * md < 2.0 * nd && !(recip < 1.0 / prev_len))
                bad.push_back(where("E_m[1/l] < 1/E_{m-1}[l]"));
            double const slack = (md - 1.0) * (nd - md) / (2.0 * nd * nd);
            if (!(recip <= 1.0 / prev_len + slack))
                bad.push_back(where("second Chebyshev form"));
        }

        std::lock_guard lock(guard);
        report.max_rel_gap = std::max(report.max_rel_gap, gap);
        report.max_total_prob_gap = std::max(report.max_total_prob_gap, total_gap);
        report.failures.insert(report.failures.end(), bad.begin(), bad.end());
    });
    std::sort(report.failures.begin(), report.failures.end());
    return report;
}

VerifyReport run_verify(VerifyLevel level, std::ostream* progress, unsigned workers)
{
    bool const full = level == VerifyLevel::full;
    VerifyReport report;
    report.level = level;
    Runner run(report, progress);

    PrecisionConfig cfg;
    PrecisionConfig wide = cfg;
    wide.working_precision = 512;
    long const mc_trials = full ? 10'000'000 : 1'000'000;
    std::uint64_t const seed = 20240601;
    Distribution const uniform20 = Distribution::uniform(20);

    run.check("cost primitives", [] {
        std::vector<Outcome> parts;
        bool star = true;
        for (long n = 1; n <= 1000; ++n)
            for (Model model : {Model::m2(), Model::m4()})
                star = star && std::abs(star_cost(model, n, std::max(1L, n / 2)) - 2.0 * binary_success_cost(n)) <
                                   1e-12;
        parts.push_back({star, star ? "" : "numbered star cost differs from 2 b(n)"});
        double worst = 0.0;
        for (int r = 1; r <= 40; ++r)
        {
            long const lo = (1L << r) - 1;
            long const hi = (1L << (r + 1)) - 1;
            worst = std::max(worst, binary_success_cost(hi) - binary_success_cost(lo));
        }
        parts.push_back({worst < 2.0, "max b(2^(r+1)-1) - b(2^r-1) = " + format_real(worst)});
        return merge(parts);
    });

    run.check("stirling numbers and path counts", [] {
        bool ok = stirling2(3, 2) == 3 && stirling2(4, 2) == 7 && path_count(3, 2, 3) == 6 &&
                  path_count(2, 2, 3) == 2 && path_count(7, 1, 1) == 7;
        double const resid = stirling_prob_identity_check(10, 5, 500);
        ok = ok && resid < 1e-12;
        return Outcome{ok, "identity residual (10,5,500) " + sci(resid)};
    });

    run.check("exact small values", [&] {
        double const a = recip_len_series(2, 2, cfg).value - (2.0 * std::numbers::ln2 - 1.0);
        double const b = tau_recip_len(2, 2, 1, cfg).value - (3.0 - 4.0 * std::numbers::ln2);
        bool const ok = std::abs(a) < 1e-12 && std::abs(b) < 1e-12;
        return Outcome{ok, "E_2[1/l](2) err " + sci(a) + ", E[tau_1/l](2,2) err " + sci(b)};
    });

    long const grid_n = full ? 60 : 35;
    run.check("occupancy cross-method grid n <= " + std::to_string(grid_n), [&] {
        OccupancyGridReport const grid = check_occupancy_grid(grid_n, 1e-9, wide, workers);
        std::string detail = std::to_string(grid.cells) + " cells, max method gap " + sci(grid.max_rel_gap) +
                             ", max total-probability gap " + sci(grid.max_total_prob_gap);
        if (!grid.failures.empty())
            detail += ", first failure " + grid.failures.front() + " (" + std::to_string(grid.failures.size()) +
                      " total)";
        return Outcome{grid.failures.empty(), detail};
    });

    run.check("Chebyshev bounds n <= 200", [&] {
        long bad = 0;
        std::string first;
        for (long n = 2; n <= 200; ++n)
        {
            std::vector<double> const row = recip_len_row(n, cfg);
            double const nd = static_cast<double>(n);
            for (long m = 2; m <= n; ++m)
            {
                double const md = static_cast<double>(m);
                double const e = row[static_cast<std::size_t>(m - 1)];
                double const prev = expected_len(n, m - 1);
                bool ok = e <= 1.0 / prev + (md - 1.0) * (nd - md) / (2.0 * nd * nd);
                if (md * md < 2.0 * nd)
                    ok = ok && e < 1.0 / prev;
                if (!ok && bad++ == 0)
                    first = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
            }
        }
        return Outcome{bad == 0, bad == 0 ? "" : std::to_string(bad) + " violations, first " + first};
    });

    run.check("E_m[1/l] increases in n towards 1/m, m <= 8", [&] {
        std::vector<long> ns;
        for (long n = 1; n <= 200; ++n)
            ns.push_back(n);
        for (long n = 250; n <= 5000; n += 250)
            ns.push_back(n);
        std::string bad;
        for (long m = 2; m <= 8; ++m)
        {
            double prev = 0.0;
            for (long n : ns)
            {
                if (n < m)
                    continue;
                double const e = recip_len(n, m, cfg).value;
                if (!(e > prev && e < 1.0 / static_cast<double>(m)))
                    bad += " (" + std::to_string(n) + "," + std::to_string(m) + ")";
                prev = e;
            }
        }
        return Outcome{bad.empty(), bad.empty() ? "" : "fails at" + bad};
    });

    run.check("optimal cleanup sizes for m4, n <= 35, against the published table", [&] {
        std::vector<TableRow> const rows = compute_table(35, Model::m4(), cfg, workers);
        std::string mismatches;
        long count = 0;
        bool only_twenty = true;
        for (auto const& row : rows)
        {
            long const expected = reference::table_m_opt[static_cast<std::size_t>(row.n - 1)];
            if (row.m_opt != expected)
            {
                ++count;
                only_twenty = only_twenty && row.n == 20;
                mismatches += " n=" + std::to_string(row.n) + ":" + std::to_string(row.m_opt) + "!=" +
                              std::to_string(expected);
            }
        }
        return Outcome{count <= 1 && only_twenty,
                       std::to_string(35 - count) + "/35 match" + (mismatches.empty() ? "" : "," + mismatches)};
    });

    run.check("approximate cost at n = 20 against published curve (1e-9)", [] {
        ApproxCurve const curve = m_opt_approx(20);
        double worst = 0.0;
        for (std::size_t i = 0; i < 20; ++i)
            worst = std::max(worst, std::abs(curve.values[i] - reference::curve20_approx[i]));
        return Outcome{worst <= 1e-9, "max deviation " + sci(worst)};
    });

    run.check("approximate cost at n = 100 against published curve (1e-9)", [] {
        ApproxCurve const curve = m_opt_approx(100);
        double worst = 0.0;
        for (std::size_t i = 0; i < 100; ++i)
            worst = std::max(worst, std::abs(curve.values[i] - reference::curve100_approx[i]));
        double const at_min = curve.values[static_cast<std::size_t>(curve.m_opt_approx - 1)];
        bool const ok = worst <= 1e-9 && curve.m_opt_approx == reference::curve100_argmin &&
                        std::abs(at_min - reference::curve100_min) <= 1e-9;
        return Outcome{ok, "max deviation " + sci(worst) + ", argmin " + std::to_string(curve.m_opt_approx) +
                               " value " + format_real(at_min)};
    });

    run.check("approximate optimum bracket, n in [5, 2000]", [] {
        BracketReport const r = verify_bracket(2000);
        std::string detail = std::to_string(r.checked) + " checked, " + std::to_string(r.violations.size()) +
                             " violations";
        if (!r.violations.empty())
            detail += ", first n=" + std::to_string(r.violations.front());
        return Outcome{r.violations.empty(), detail};
    });

    run.check("m_opt(n) < 4 b(n) for m4, n <= 40", [&] {
        std::string bad;
        for (long n = 1; n <= 40; ++n)
        {
            UpperBoundWitness const w = verify_upper_bound(n, cfg);
            if (!w.holds)
                bad += " n=" + std::to_string(n);
        }
        return Outcome{bad.empty(), bad.empty() ? "" : "fails at" + bad};
    });

    run.check("F(2) < F(1) for every model, n in [2, 50]", [&] {
        std::string bad;
        for (Model model : all_models)
            for (long n = 2; n <= 50; ++n)
                if (!verify_first_step(n, model, cfg).holds)
                    bad += " " + std::string(model.name()) + ":" + std::to_string(n);
        return Outcome{bad.empty(), bad.empty() ? "" : "fails at" + bad};
    });

    run.check("F(m) < F(1) inside the guaranteed range, models m1 m3 m4, n in [2, 30]", [&] {
        std::string bad;
        for (Model model : {Model::m1(), Model::m3(), Model::m4()})
            for (long n = 2; n <= 30; ++n)
                if (!verify_f1_comparison(n, model, cfg).holds)
                    bad += " " + std::string(model.name()) + ":" + std::to_string(n);
        return Outcome{bad.empty(), bad.empty() ? "" : "fails at" + bad};
    });

    run.check("F(m) < F(1) whenever s_P(m-1) < s*(m), every model, n in [2, 30]", [&] {
        std::string bad;
        long checked = 0;
        for (Model model : all_models)
        {
            for (long n = 2; n <= 30; ++n)
            {
                double const f1 = f_total(n, 1, model, cfg).f_total;
                for (long m = 2; m <= n; ++m)
                {
                    if (!(pile_search_cost(model, n, m - 1) < star_cost(model, n, m)))
                        continue;
                    ++checked;
                    if (!(f_total(n, m, model, cfg).f_total < f1))
                        bad += " " + std::string(model.name()) + ":(" + std::to_string(n) + "," + std::to_string(m) + ")";
                }
            }
        }
        return Outcome{bad.empty(), std::to_string(checked) + " cells" + (bad.empty() ? "" : ", fails at" + bad)};
    });

    run.check("approximate list cost never exceeds the exact one, n <= " + std::to_string(grid_n), [&] {
        std::string bad;
        for (long n = 1; n <= grid_n; ++n)
            for (long m = 1; m <= n; ++m)
                if (!(f_tilde_list(n, m) <= f_list(n, m, Model::m4(), cfg) * (1.0 + 1e-12)))
                    bad += " (" + std::to_string(n) + "," + std::to_string(m) + ")";
        return Outcome{bad.empty(), bad.empty() ? "" : "fails at" + bad};
    });

    run.check("simulated paths satisfy their bookkeeping invariants", [] {
        Rng rng(7);
        long bad = 0;
        for (long n : {2L, 5L, 20L})
        {
            Distribution const dist = Distribution::uniform(n);
            for (long m = 1; m <= n; ++m)
            {
                for (int t = 0; t < 500; ++t)
                {
                    PathRecord const p = simulate_path(n, m, dist, Model::m4(), rng);
                    long tau_sum = 0;
                    for (long v : p.tau)
                        tau_sum += v;
                    bool ok = tau_sum == p.len - m && p.t_mark.size() == static_cast<std::size_t>(m) &&
                              p.t_mark.front() == 1 && p.t_mark.back() == p.len;
                    for (std::size_t k = 1; k < p.t_mark.size(); ++k)
                        ok = ok && p.t_mark[k] > p.t_mark[k - 1];
                    bad += ok ? 0 : 1;
                }
            }
        }
        return Outcome{bad == 0, std::to_string(bad) + " bad paths"};
    });

    run.check("Monte Carlo matches exact values", [&] {
        std::vector<Outcome> parts;
        EstimateReport const one = estimate_f(20, 1, Model::m4(), uniform20, 100, seed, workers);
        double const f1 = f_total(20, 1, Model::m4(), cfg).f_total;
        parts.push_back({one.mean == f1 && one.std_err == 0.0, "F(1;20) " + format_real(one.mean)});
        EstimateReport const ten = estimate_f(20, 10, Model::m4(), uniform20, mc_trials, seed, workers);
        Outcome o = within_sigma(ten.mean, ten.std_err, f_total(20, 10, Model::m4(), cfg).f_total);
        o.detail = "F(10;20) " + o.detail;
        parts.push_back(o);
        OccupancyEstimate const occ = estimate_occupancy(2, 2, Distribution::uniform(2), mc_trials, seed, workers);
        o = within_sigma(occ.expected_len.mean, occ.expected_len.std_err, 3.0);
        o.detail = "E[l](2,2) " + o.detail;
        parts.push_back(o);
        o = within_sigma(occ.recip_len.mean, occ.recip_len.std_err, 2.0 * std::numbers::ln2 - 1.0);
        o.detail = "E[1/l](2,2) " + o.detail;
        parts.push_back(o);
        return merge(parts);
    });

    run.check("Monte Carlo tail law of tau_j", [&] {
        std::vector<Outcome> parts;
        long const trials = full ? 1'000'000 : 200'000;
        for (long j : {1L, 5L})
        {
            TailCounts const tc = tau_tail_counts(10, 6, j, Distribution::uniform(10), 6, trials, seed);
            double worst = 0.0;
            bool ok = true;
            for (std::size_t k = 0; k < tc.at_least.size(); ++k)
            {
                double const p = std::pow(static_cast<double>(j) / 10.0, static_cast<double>(k));
                double const phat = static_cast<double>(tc.at_least[k]) / static_cast<double>(trials);
                double const se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
                double const z = se > 0.0 ? std::abs(phat - p) / se : (phat == p ? 0.0 : 1e9);
                worst = std::max(worst, z);
                ok = ok && z <= 4.0;
            }
            parts.push_back({ok, "j=" + std::to_string(j) + " max z " + format_real(worst)});
        }
        return merge(parts);
    });

    run.check("Monte Carlo reproducible across worker counts", [&] {
        EstimateReport const a = estimate_f(20, 10, Model::m4(), uniform20, 200'000, seed, 1);
        EstimateReport const b = estimate_f(20, 10, Model::m4(), uniform20, 200'000, seed, 4);
        EstimateReport const c = estimate_f(20, 10, Model::m4(), uniform20, 200'000, seed, 8);
        bool const ok = a.mean == b.mean && a.mean == c.mean && a.std_err == b.std_err && a.std_err == c.std_err;
        return Outcome{ok, "mean " + format_real(a.mean)};
    });

    if (full)
    {
        run.check("Monte Carlo grid against exact moments (10^7 trials)", [&] {
            std::vector<Outcome> parts;
            for (long n : {5L, 10L, 20L, 35L})
            {
                for (long m : {2L, (n + 1) / 2, n})
                {
                    Distribution const dist = Distribution::uniform(n);
                    std::string const tag = "(" + std::to_string(n) + "," + std::to_string(m) + ") ";
                    EstimateReport const f = estimate_f(n, m, Model::m4(), dist, mc_trials, seed, workers);
                    Outcome o = within_sigma(f.mean, f.std_err, f_total(n, m, Model::m4(), cfg).f_total);
                    parts.push_back({o.passed, o.passed ? "" : tag + "F " + o.detail});
                    OccupancyEstimate const occ = estimate_occupancy(n, m, dist, mc_trials, seed, workers);
                    OccupancyMoments const mom = moments(n, m, cfg);
                    o = within_sigma(occ.recip_len.mean, occ.recip_len.std_err, mom.recip_len.value);
                    parts.push_back({o.passed, o.passed ? "" : tag + "E[1/l] " + o.detail});
                    o = within_sigma(occ.expected_len.mean, occ.expected_len.std_err, mom.expected_len.value);
                    parts.push_back({o.passed, o.passed ? "" : tag + "E[l] " + o.detail});
                    for (long j : {1L, m - 1})
                    {
                        if (j < 1)
                            continue;
                        auto const& est = occ.tau_recip[static_cast<std::size_t>(j - 1)];
                        o = within_sigma(est.mean, est.std_err, mom.tau_recip[static_cast<std::size_t>(j - 1)].value);
                        parts.push_back({o.passed, o.passed ? "" : tag + "E[tau_" + std::to_string(j) + "/l] " + o.detail});
                    }
                }
            }
            return merge(parts);
        });
    }

    // Probes: conjectures, disagreements with published data and non-uniform behaviour.

    run.probe("published approximate optimum row, n <= 35", [] {
        std::string mismatches;
        long count = 0;
        for (long n = 1; n <= 35; ++n)
        {
            long const got = m_opt_approx(n).m_opt_approx;
            long const expected = reference::table_m_opt_approx[static_cast<std::size_t>(n - 1)];
            if (got != expected)
            {
                ++count;
                mismatches += " n=" + std::to_string(n) + ":" + std::to_string(got) + "!=" + std::to_string(expected);
            }
        }
        return Outcome{count == 0, std::to_string(35 - count) + "/35 match" + (mismatches.empty() ? "" : "," + mismatches)};
    });

    run.probe("F(m) < F(1) for 1 < m < 4 b(n) under m2", [&] {
        std::string bad;
        for (long n = 2; n <= 30; ++n)
        {
            F1ComparisonWitness const w = verify_f1_comparison(n, Model::m2(), cfg);
            if (!w.holds)
                bad += " n=" + std::to_string(n) + "(m=" + std::to_string(w.failures.front()) + ")";
        }
        return Outcome{bad.empty(), bad.empty() ? "" : "fails at" + bad};
    });

    run.probe("published exact curve at n = 20 (1e-6)", [&] {
        double worst = 0.0;
        std::string off;
        for (long m = 1; m <= 20; ++m)
        {
            double const d = std::abs(f_total(20, m, Model::m4(), cfg).f_total -
                                      reference::curve20_exact[static_cast<std::size_t>(m - 1)]);
            worst = std::max(worst, d);
            if (d > 1e-6)
                off += " m=" + std::to_string(m) + ":" + sci(d);
        }
        return Outcome{off.empty(), "max deviation " + sci(worst) + (off.empty() ? "" : ", off at" + off)};
    });

    run.probe("Monte Carlo separates F(10;20) from F(11;20)", [&] {
        EstimateReport const a = estimate_f(20, 10, Model::m4(), uniform20, mc_trials, seed, workers);
        EstimateReport const b = estimate_f(20, 11, Model::m4(), uniform20, mc_trials, seed, workers);
        double const se = std::hypot(a.std_err, b.std_err);
        double const z = (a.mean - b.mean) / se;
        return Outcome{z >= 4.0, "F(10)-F(11) = " + format_real(a.mean - b.mean) + ", z " + format_real(z) +
                                     " (m_opt(20) = 11 when positive)"};
    });

    for (auto const& p : probe_conjectures(full ? 20 : 12, cfg))
        run.probe(p.name, [p] { return Outcome{p.passed, p.detail}; });

    run.probe("unnumbered cleanup cost never exceeds list cost, n <= 30", [&] {
        long cells = 0;
        long bad = 0;
        long first_n = 0;
        for (long n = 1; n <= 30; ++n)
            for (long m = 1; m <= n; ++m)
            {
                ++cells;
                CostBreakdown const c = f_total(n, m, Model::m1(), cfg);
                if (c.f_cleanup > c.f_list)
                {
                    ++bad;
                    if (first_n == 0)
                        first_n = n;
                }
            }
        return Outcome{bad == 0, bad == 0 ? "" : std::to_string(bad) + "/" + std::to_string(cells) +
                                                     " cells fail, first at n=" + std::to_string(first_n)};
    });

    run.probe("exact pile cost never exceeds the approximate one, n <= " + std::to_string(grid_n), [&] {
        std::string bad;
        for (long n = 1; n <= grid_n; ++n)
            for (long m = 1; m <= n; ++m)
                if (!(f_pile(n, m, Model::m4(), cfg) <= f_tilde_pile(n, m) * (1.0 + 1e-12)))
                    bad += " (" + std::to_string(n) + "," + std::to_string(m) + ")";
        return Outcome{bad.empty(), bad.empty() ? "" : "fails at" + bad};
    });

    run.probe("m_opt >= approximate optimum, n <= 35", [&] {
        std::string bad;
        for (long n = 1; n <= 35; ++n)
        {
            long const exact = m_opt(n, Model::m4(), cfg, workers).m_opt;
            long const approx = m_opt_approx(n).m_opt_approx;
            if (exact < approx)
                bad += " n=" + std::to_string(n);
        }
        return Outcome{bad.empty(), bad.empty() ? "" : "fails at" + bad};
    });

    run.probe("m_opt(n) / 3 b(n) drifts towards 1", [&] {
        std::string detail;
        double last = 0.0;
        for (long n : {10L, 20L, 35L, full ? 60L : 50L})
        {
            double const ratio = static_cast<double>(m_opt(n, Model::m4(), cfg, workers).m_opt) /
                                 (3.0 * binary_success_cost(n));
            detail += " n=" + std::to_string(n) + ":" + format_real(ratio);
            last = ratio;
        }
        return Outcome{std::abs(last - 1.0) < 0.25, "ratios" + detail};
    });

    run.probe("approximate optimum mostly in the right half of the bracket", [] {
        BracketReport const r = verify_bracket(2000);
        return Outcome{2 * r.right_half > r.checked,
                       std::to_string(r.right_half) + "/" + std::to_string(r.checked) + " in right half"};
    });

    run.probe("skewed distribution drives m_opt towards 2", [&] {
        long const trials = full ? 20'000 : 2'000;
        std::string detail;
        long last = 0;
        double threshold = 0.0;
        for (double eps : {0.5, 0.1, 0.01, 0.001})
        {
            EmpiricalOptimum const opt =
                empirical_m_opt(20, Model::m4(), Distribution::skewed(20, 1, eps), trials, seed, workers);
            detail += " eps=" + format_real(eps) + ":" + std::to_string(opt.m_opt) + (opt.tie ? "(tie)" : "");
            if (opt.m_opt == 2 && threshold == 0.0)
                threshold = eps;
            last = opt.m_opt;
        }
        if (threshold > 0.0)
            detail += ", m_opt = 2 first at eps=" + format_real(threshold);
        return Outcome{last == 2, "m_opt by eps" + detail};
    });

    run.probe("zipf(1) m_opt does not exceed the uniform m_opt", [&] {
        long const trials = full ? 1'000'000 : 100'000;
        EmpiricalOptimum const z = empirical_m_opt(20, Model::m4(), Distribution::zipf(20, 1.0), trials, seed, workers);
        long const u = m_opt(20, Model::m4(), cfg, workers).m_opt;
        return Outcome{z.m_opt <= u, "zipf " + std::to_string(z.m_opt) + (z.tie ? " (tie)" : "") + ", uniform " +
                                         std::to_string(u)};
    });

    run.probe("skewed costs exceed uniform costs at (20, 10)", [&] {
        long const trials = full ? 1'000'000 : 100'000;
        EstimateReport const s =
            estimate_f(20, 10, Model::m4(), Distribution::skewed(20, 1, 0.01), trials, seed, workers);
        double const u = f_total(20, 10, Model::m4(), cfg).f_total;
        return Outcome{s.mean > u, "skewed " + format_real(s.mean) + " vs uniform " + format_real(u)};
    });

    return report;
}

void write_verify_report(std::ostream& out, VerifyReport const& report)
{
    long hard = 0, hard_failed = 0, probes = 0, probes_failed = 0;
    for (auto const& c : report.checks)
    {
        char const* tag = c.probe ? (c.passed ? "PROBE-OK  " : "PROBE-MISS") : (c.passed ? "PASS      " : "FAIL      ");
        out << tag << ' ' << c.name;
        if (!c.detail.empty())
            out << " | " << c.detail;
        out << " [" << format_real(std::round(c.seconds * 100.0) / 100.0) << "s]\n";
        if (c.probe)
        {
            ++probes;
            probes_failed += c.passed ? 0 : 1;
        }
        else
        {
            ++hard;
            hard_failed += c.passed ? 0 : 1;
        }
    }
    out << "checks: " << hard - hard_failed << "/" << hard << " passed; probes: " << probes - probes_failed << "/"
        << probes << " held; level " << (report.level == VerifyLevel::full ? "full" : "quick") << "; "
        << (report.ok() ? "OK" : "FAILED") << '\n';
}

}  // namespace cleanup
