#include "cli.hpp"

#include <fstream>
#include <limits>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "cleanup/distribution.hpp"
#include "cleanup/errors.hpp"
#include "cleanup/model.hpp"
#include "cleanup/montecarlo.hpp"
#include "cleanup/report.hpp"
#include "cleanup/verify.hpp"

namespace cleanup::cli {
namespace {

struct Options
{
    long n = 0;
    long n_max = 0;
    long m = 0;
    std::string model = "m4";
    std::string dist = "uniform";
    long trials = 1'000'000;
    std::uint64_t seed = 42;
    double tol = 1e-10;
    std::string out_path;
    bool approx = false;
    bool exact = false;
    std::string level = "quick";
    unsigned workers = 0;
};

void add_common(CLI::App& cmd, Options& opt)
{
    cmd.add_option("--out", opt.out_path, "Write results to this file instead of standard output");
    cmd.add_option("--workers", opt.workers, "Worker threads (0 = one per hardware thread)");
}

void add_model(CLI::App& cmd, Options& opt)
{
    cmd.add_option("--model", opt.model, "Search model")
        ->check(CLI::IsMember({"m1", "m2", "m3", "m4"}))
        ->capture_default_str();
}

void add_tol(CLI::App& cmd, Options& opt)
{
    cmd.add_option("--tol", opt.tol, "Relative truncation tolerance")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
}

PrecisionConfig precision(Options const& opt)
{
    PrecisionConfig cfg;
    cfg.tol = opt.tol;
    cfg.validate();
    return cfg;
}

// Runs `body` against either `out` or the --out file.
template <class Body>
void with_output(Options const& opt, std::ostream& out, Body&& body)
{
    if (opt.out_path.empty())
    {
        body(out);
        return;
    }
    std::ofstream file(opt.out_path, std::ios::binary);
    if (!file)
        throw DomainError("cannot open output file '" + opt.out_path + "'");
    body(file);
    if (!file)
        throw std::runtime_error("failed writing '" + opt.out_path + "'");
}

}  // namespace

int run_cli(int argc, char const* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Expected search-plus-cleanup costs and optimal cleanup sizes", "search-cleanup"};
    app.require_subcommand(1, 1);
    Options opt;

    auto* table = app.add_subcommand("table", "Optimal cleanup sizes for n = 1..n-max (CSV)");
    table->add_option("--n-max", opt.n_max, "Largest n")->required()->check(CLI::PositiveNumber);
    add_model(*table, opt);
    add_tol(*table, opt);
    add_common(*table, opt);

    auto* curve = app.add_subcommand("curve", "Cost as a function of the cleanup size (CSV)");
    curve->add_option("--n", opt.n, "Number of objects")->required()->check(CLI::PositiveNumber);
    add_model(*curve, opt);
    curve->add_flag("--exact", opt.exact, "Include the exact cost and its parts");
    curve->add_flag("--approx", opt.approx, "Include the approximate cost (m4 only)");
    add_tol(*curve, opt);
    add_common(*curve, opt);

    auto* optimal = app.add_subcommand("optimal", "Optimal cleanup size and its cost");
    optimal->add_option("--n", opt.n, "Number of objects")->required()->check(CLI::PositiveNumber);
    add_model(*optimal, opt);
    auto* approx_flag = optimal->add_flag("--approx", opt.approx, "Minimise the approximate cost (m4 only)");
    optimal->add_flag("--exact", opt.exact, "Minimise the exact cost (default)")->excludes(approx_flag);
    add_tol(*optimal, opt);
    add_common(*optimal, opt);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the cost");
    simulate->add_option("--n", opt.n, "Number of objects")->required()->check(CLI::PositiveNumber);
    simulate->add_option("--m", opt.m, "Cleanup size")->required()->check(CLI::PositiveNumber);
    add_model(*simulate, opt);
    simulate->add_option("--dist", opt.dist, "uniform | zipf:s=<x> | skewed:r=<i>,eps=<x> | custom:<path>")
        ->capture_default_str();
    simulate->add_option("--trials", opt.trials, "Number of simulated paths (>= 100)")
        ->check(CLI::Range(100L, std::numeric_limits<long>::max()))
        ->capture_default_str();
    simulate->add_option("--seed", opt.seed, "Generator seed")->capture_default_str();
    add_common(*simulate, opt);

    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    verify->add_option("--level", opt.level, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}))
        ->capture_default_str();
    add_common(*verify, opt);

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::CallForHelp const&)
    {
        out << app.help();
        return exit_ok;
    }
    catch (CLI::CallForAllHelp const&)
    {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    }
    catch (CLI::ParseError const& e)
    {
        err << "error: " << e.what() << "\nrun with --help for usage\n";
        return exit_usage;
    }

    try
    {
        Model const model = Model::parse(opt.model);
        if (table->parsed())
        {
            auto const rows = compute_table(opt.n_max, model, precision(opt), opt.workers);
            with_output(opt, out, [&](std::ostream& os) { write_table_csv(os, rows); });
        }
        else if (curve->parsed())
        {
            bool include_exact = opt.exact;
            bool include_approx = opt.approx;
            if (!include_exact && !include_approx)
            {
                include_exact = true;
                include_approx = model == Model::m4();
            }
            auto const rows = compute_curve(opt.n, model, include_exact, include_approx, precision(opt), opt.workers);
            with_output(opt, out, [&](std::ostream& os) { write_curve_csv(os, rows); });
        }
        else if (optimal->parsed())
        {
            auto const result = compute_optimal(opt.n, model, opt.approx, precision(opt), opt.workers);
            with_output(opt, out, [&](std::ostream& os) { write_optimal(os, result); });
        }
        else if (simulate->parsed())
        {
            if (opt.m > opt.n)
                throw DomainError("--m must not exceed --n");
            Distribution const dist = Distribution::parse(opt.dist, opt.n);
            auto const report = estimate_f(opt.n, opt.m, model, dist, opt.trials, opt.seed, opt.workers);
            with_output(opt, out, [&](std::ostream& os) { write_simulation(os, opt.n, opt.m, model, dist, report); });
        }
        else if (verify->parsed())
        {
            VerifyLevel const level = opt.level == "full" ? VerifyLevel::full : VerifyLevel::quick;
            VerifyReport const report = run_verify(level, &err, opt.workers);
            with_output(opt, out, [&](std::ostream& os) { write_verify_report(os, report); });
            return report.ok() ? exit_ok : exit_verify_failed;
        }
        return exit_ok;
    }
    catch (DomainError const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (ConvergenceError const& e)
    {
        err << "error: " << e.what() << " (partial value " << format_real(e.partial_value()) << ", achieved error "
            << format_real(e.achieved_error()) << ")\n";
        return exit_no_convergence;
    }
    catch (PrecisionLossError const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_no_convergence;
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << '\n';
        return exit_no_convergence;
    }
}

}  // namespace cleanup::cli
