#include "cleanup/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cleanup/cost_model.hpp"
#include "cleanup/errors.hpp"
#include "parallel.hpp"

namespace cleanup {
namespace {

constexpr long kBlockSize = 4096;
constexpr long kMinTrials = 100;

// Stream tags keep the estimators from sharing generator states.
enum class Stream : std::uint32_t { f = 1, occupancy = 2, tail = 3 };

void check_sizes(long n, long m, Distribution const& dist)
{
    if (m < 1 || m > n)
        throw DomainError("simulation needs 1 <= m <= n");
    if (dist.size() != n)
        throw DomainError("distribution size " + std::to_string(dist.size()) + " does not match n=" +
                          std::to_string(n));
}

void check_trials(long trials)
{
    if (trials < kMinTrials)
        throw DomainError("Monte Carlo estimates need at least 100 trials");
}

Rng block_rng(std::uint64_t seed, Stream stream, long m, long j, long block)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(m),
                      static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(block),
                      static_cast<std::uint32_t>(static_cast<std::uint64_t>(block) >> 32)};
    return Rng(seq);
}

// Welford accumulator with Chan's pairwise merge.
struct Moments
{
    long count = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        ++count;
        double const delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }

    void merge(Moments const& other)
    {
        if (other.count == 0)
            return;
        if (count == 0)
        {
            *this = other;
            return;
        }
        double const total = static_cast<double>(count + other.count);
        double const delta = other.mean - mean;
        mean += delta * static_cast<double>(other.count) / total;
        m2 += other.m2 + delta * delta * static_cast<double>(count) * static_cast<double>(other.count) / total;
        count += other.count;
    }

    EstimateReport report(std::uint64_t seed, Quantity quantity, long j = 0) const
    {
        EstimateReport r;
        r.mean = mean;
        r.trials = count;
        r.seed = seed;
        r.quantity = quantity;
        r.j = j;
        if (count > 1)
        {
            double const var = std::max(0.0, m2 / static_cast<double>(count - 1));
            r.std_err = std::sqrt(var / static_cast<double>(count));
        }
        return r;
    }
};

struct CostTables
{
    std::vector<double> list;  // list[k]: pile holds k objects
    std::vector<double> pile;  // pile[k]: pile holds k objects, k >= 1
    double cleanup = 0.0;

    CostTables(long n, long m, Model model) : list(static_cast<std::size_t>(m)), pile(static_cast<std::size_t>(m))
    {
        for (long k = 0; k < m; ++k)
            list[static_cast<std::size_t>(k)] = list_search_cost(model, n, k);
        for (long k = 1; k < m; ++k)
            pile[static_cast<std::size_t>(k)] = pile_search_cost(model, n, k);
        cleanup = cleanup_cost(model, n, m);
    }
};

// Reusable per-block state so the hot loop does not allocate.
class Walker
{
public:
    Walker(long n, long m) : m_(m), in_pile_(static_cast<std::size_t>(n), 0), members_(static_cast<std::size_t>(m)),
                             tau_(static_cast<std::size_t>(std::max(m - 1, 1L)))
    {}

    // Runs one path; fills tau_ and returns the stopping time. `on_new`
    // receives (pile size before insertion, draw index).
    template <class OnNew>
    long run(Distribution const& dist, Rng& rng, OnNew&& on_new)
    {
        std::fill(tau_.begin(), tau_.end(), 0L);
        long size = 0;
        long draws = 0;
        while (size < m_)
        {
            std::size_t const x = dist.sample(rng);
            ++draws;
            if (in_pile_[x])
            {
                ++tau_[static_cast<std::size_t>(size - 1)];
            }
            else
            {
                on_new(size, draws);
                in_pile_[x] = 1;
                members_[static_cast<std::size_t>(size)] = x;
                ++size;
            }
        }
        for (long k = 0; k < size; ++k)
            in_pile_[members_[static_cast<std::size_t>(k)]] = 0;
        return draws;
    }

    std::vector<long> const& tau() const { return tau_; }

private:
    long m_;
    std::vector<char> in_pile_;
    std::vector<std::size_t> members_;
    std::vector<long> tau_;
};

long block_count(long trials)
{
    return (trials + kBlockSize - 1) / kBlockSize;
}

long block_trials(long trials, long block)
{
    return std::min(kBlockSize, trials - block * kBlockSize);
}

}  // namespace

PathRecord simulate_path(long n, long m, Distribution const& dist, Model model, Rng& rng)
{
    check_sizes(n, m, dist);
    CostTables const costs(n, m, model);
    Walker walker(n, m);

    PathRecord rec;
    rec.t_mark.reserve(static_cast<std::size_t>(m));
    rec.len = walker.run(dist, rng, [&](long size, long draw) {
        rec.search_list_cost += costs.list[static_cast<std::size_t>(size)];
        rec.t_mark.push_back(draw);
    });
    rec.tau.assign(walker.tau().begin(), walker.tau().begin() + (m - 1));
    for (long k = 1; k < m; ++k)
        rec.search_pile_cost += static_cast<double>(rec.tau[static_cast<std::size_t>(k - 1)]) *
                                costs.pile[static_cast<std::size_t>(k)];
    rec.cleanup_cost = costs.cleanup;
    return rec;
}

EstimateReport estimate_f(long n, long m, Model model, Distribution const& dist, long trials, std::uint64_t seed,
                          unsigned workers)
{
    check_sizes(n, m, dist);
    check_trials(trials);
    CostTables const costs(n, m, model);

    // Sum of list costs along any path is fixed: one insertion per size.
    double list_total = 0.0;
    for (double c : costs.list)
        list_total += c;
    double const fixed = list_total + costs.cleanup;

    long const blocks = block_count(trials);
    std::vector<Moments> partial(static_cast<std::size_t>(blocks));
    detail::parallel_for(static_cast<std::size_t>(blocks), workers, [&](std::size_t b) {
        Rng rng = block_rng(seed, Stream::f, m, 0, static_cast<long>(b));
        Walker walker(n, m);
        Moments acc;
        long const count = block_trials(trials, static_cast<long>(b));
        for (long t = 0; t < count; ++t)
        {
            long const len = walker.run(dist, rng, [](long, long) {});
            double pile = 0.0;
            for (long k = 1; k < m; ++k)
                pile += static_cast<double>(walker.tau()[static_cast<std::size_t>(k - 1)]) *
                        costs.pile[static_cast<std::size_t>(k)];
            acc.add((fixed + pile) / static_cast<double>(len));
        }
        partial[b] = acc;
    });

    Moments total;
    for (auto const& p : partial)
        total.merge(p);
    return total.report(seed, Quantity::f);
}

OccupancyEstimate estimate_occupancy(long n, long m, Distribution const& dist, long trials, std::uint64_t seed,
                                     unsigned workers)
{
    check_sizes(n, m, dist);
    check_trials(trials);

    struct Acc
    {
        Moments recip;
        Moments len;
        std::vector<Moments> tau;
    };
    long const blocks = block_count(trials);
    std::vector<Acc> partial(static_cast<std::size_t>(blocks));
    detail::parallel_for(static_cast<std::size_t>(blocks), workers, [&](std::size_t b) {
        Rng rng = block_rng(seed, Stream::occupancy, m, 0, static_cast<long>(b));
        Walker walker(n, m);
        Acc acc;
        acc.tau.resize(static_cast<std::size_t>(m - 1));
        long const count = block_trials(trials, static_cast<long>(b));
        for (long t = 0; t < count; ++t)
        {
            long const len = walker.run(dist, rng, [](long, long) {});
            double const inv = 1.0 / static_cast<double>(len);
            acc.recip.add(inv);
            acc.len.add(static_cast<double>(len));
            for (long j = 1; j < m; ++j)
                acc.tau[static_cast<std::size_t>(j - 1)].add(
                    static_cast<double>(walker.tau()[static_cast<std::size_t>(j - 1)]) * inv);
        }
        partial[b] = std::move(acc);
    });

    Acc total;
    total.tau.resize(static_cast<std::size_t>(m - 1));
    for (auto const& p : partial)
    {
        total.recip.merge(p.recip);
        total.len.merge(p.len);
        for (std::size_t j = 0; j < total.tau.size(); ++j)
            total.tau[j].merge(p.tau[j]);
    }

    OccupancyEstimate out;
    out.recip_len = total.recip.report(seed, Quantity::recip_len);
    out.expected_len = total.len.report(seed, Quantity::expected_len);
    for (long j = 1; j < m; ++j)
        out.tau_recip.push_back(total.tau[static_cast<std::size_t>(j - 1)].report(seed, Quantity::tau_recip, j));
    return out;
}

EmpiricalOptimum empirical_m_opt(long n, Model model, Distribution const& dist, long trials_per_m,
                                 std::uint64_t seed, unsigned workers)
{
    if (n < 2)
        throw DomainError("empirical_m_opt needs n >= 2");
    EmpiricalOptimum out;
    out.curve.reserve(static_cast<std::size_t>(n));
    for (long m = 1; m <= n; ++m)
        out.curve.push_back(estimate_f(n, m, model, dist, trials_per_m, seed, workers));

    std::size_t best = 0;
    for (std::size_t i = 1; i < out.curve.size(); ++i)
    {
        if (out.curve[i].mean < out.curve[best].mean)
            best = i;
    }
    out.m_opt = static_cast<long>(best) + 1;
    for (std::size_t i = 0; i < out.curve.size(); ++i)
    {
        if (i == best)
            continue;
        double const gap = out.curve[i].mean - out.curve[best].mean;
        double const se = std::max(out.curve[i].std_err, out.curve[best].std_err);
        if (gap <= se)
            out.tie = true;
    }
    return out;
}

TailCounts tau_tail_counts(long n, long m, long j, Distribution const& dist, long k_max, long trials,
                           std::uint64_t seed)
{
    check_sizes(n, m, dist);
    check_trials(trials);
    if (j < 1 || j >= m)
        throw DomainError("tau_tail_counts needs 1 <= j < m");
    if (k_max < 0)
        throw DomainError("tau_tail_counts needs k_max >= 0");

    TailCounts out;
    out.trials = trials;
    out.at_least.assign(static_cast<std::size_t>(k_max + 1), 0);
    Walker walker(n, m);
    long const blocks = block_count(trials);
    for (long b = 0; b < blocks; ++b)
    {
        Rng rng = block_rng(seed, Stream::tail, m, j, b);
        long const count = block_trials(trials, b);
        for (long t = 0; t < count; ++t)
        {
            walker.run(dist, rng, [](long, long) {});
            long const tau = std::min(walker.tau()[static_cast<std::size_t>(j - 1)], k_max);
            for (long k = 0; k <= tau; ++k)
                ++out.at_least[static_cast<std::size_t>(k)];
        }
    }
    return out;
}

}  // namespace cleanup
