#pragma once

// Independent reference computations for the tests. Nothing here calls into
// the library: costs, path counts and moments are rebuilt from first
// principles so the two sides can disagree.

#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace oracle {

inline double b(long j) { return (1.0 + 1.0 / static_cast<double>(j)) * std::log2(static_cast<double>(j) + 1.0) - 1.0; }
inline double bf(long j) { return j == 0 ? 0.0 : std::log2(static_cast<double>(j) + 1.0); }
inline double s(long j) { return (static_cast<double>(j) + 1.0) / 2.0; }

// Model index 1..4 as in m1..m4.
inline bool numbered(int model) { return model == 2 || model == 4; }
inline bool memoryless(int model) { return model == 1 || model == 2; }

inline double list_cost(int model, long n, long pile) { return numbered(model) ? b(n) : b(n - pile); }

inline double pile_cost(int model, long n, long pile)
{
    double extra = 0.0;
    if (model == 1)
        extra = bf(n - pile);
    else if (model == 2)
        extra = bf(n);
    return extra + s(pile);
}

inline double cleanup(int model, long n, long m)
{
    if (numbered(model))
        return static_cast<double>(m) * b(n);
    double total = 0.0;
    for (long j = 1; j <= m; ++j)
        total += bf(n - j);
    return total;
}

/// Calls visit(path) for every sequence over {0..n-1} of length <= l_max
/// that first reaches m distinct symbols at its last entry.
inline void enumerate_paths(long n, long m, long l_max, std::function<void(std::vector<int> const&)> const& visit)
{
    std::vector<int> path;
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    std::function<void(long)> go = [&](long distinct) {
        if (static_cast<long>(path.size()) >= l_max)
            return;
        for (int x = 0; x < n; ++x)
        {
            bool const fresh = seen[static_cast<std::size_t>(x)] == 0;
            path.push_back(x);
            ++seen[static_cast<std::size_t>(x)];
            if (fresh && distinct + 1 == m)
                visit(path);
            else
                go(distinct + (fresh ? 1 : 0));
            --seen[static_cast<std::size_t>(x)];
            path.pop_back();
        }
    };
    go(0);
}

/// tau_j of a stopped path: repeat draws made while the pile held j objects.
inline std::vector<long> taus(std::vector<int> const& path, long m)
{
    std::vector<long> out(static_cast<std::size_t>(m), 0);
    std::vector<int> in(64, 0);
    long size = 0;
    for (int x : path)
    {
        if (in[static_cast<std::size_t>(x)])
            ++out[static_cast<std::size_t>(size)];
        else
        {
            in[static_cast<std::size_t>(x)] = 1;
            ++size;
        }
    }
    return out;  // index j, j = 1..m-1 meaningful
}

struct ChainResult
{
    double recip_len = 0.0;
    std::vector<double> tau_recip;  // index j - 1
    double f_total = 0.0;
    double expected_len = 0.0;
};

/// Exact forward recursion over the actual pile contents (bitmask), one
/// branch per drawn object. Runs until the unabsorbed mass is below 1e-16.
inline ChainResult subset_chain(long n, long m, int model)
{
    std::size_t const states = std::size_t{1} << n;
    std::vector<double> mass(states, 0.0), cost(states, 0.0);
    std::vector<std::vector<double>> tau(static_cast<std::size_t>(m), std::vector<double>(states, 0.0));
    mass[0] = 1.0;
    ChainResult out;
    out.tau_recip.assign(static_cast<std::size_t>(std::max(m - 1, 0L)), 0.0);
    double const p = 1.0 / static_cast<double>(n);
    double const clean = cleanup(model, n, m);
    for (long t = 1; t < 100000; ++t)
    {
        std::vector<double> mass2(states, 0.0), cost2(states, 0.0);
        std::vector<std::vector<double>> tau2(static_cast<std::size_t>(m), std::vector<double>(states, 0.0));
        double live = 0.0;
        for (std::size_t set = 0; set < states; ++set)
        {
            if (mass[set] == 0.0)
                continue;
            long const size = __builtin_popcountll(set);
            for (long x = 0; x < n; ++x)
            {
                std::size_t const bit = std::size_t{1} << x;
                if (set & bit)
                {
                    mass2[set] += mass[set] * p;
                    cost2[set] += (cost[set] + mass[set] * pile_cost(model, n, size)) * p;
                    for (long j = 1; j < m; ++j)
                        tau2[static_cast<std::size_t>(j)][set] +=
                            (tau[static_cast<std::size_t>(j)][set] + (j == size ? mass[set] : 0.0)) * p;
                }
                else
                {
                    double const c = cost[set] + mass[set] * list_cost(model, n, size);
                    if (size + 1 == m)
                    {
                        double const w = p / static_cast<double>(t);
                        out.recip_len += mass[set] * w;
                        out.expected_len += mass[set] * p * static_cast<double>(t);
                        out.f_total += (c + mass[set] * clean) * w;
                        for (long j = 1; j < m; ++j)
                            out.tau_recip[static_cast<std::size_t>(j - 1)] += tau[static_cast<std::size_t>(j)][set] * w;
                    }
                    else
                    {
                        mass2[set | bit] += mass[set] * p;
                        cost2[set | bit] += c * p;
                        for (long j = 1; j < m; ++j)
                            tau2[static_cast<std::size_t>(j)][set | bit] += tau[static_cast<std::size_t>(j)][set] * p;
                    }
                }
            }
        }
        mass.swap(mass2);
        cost.swap(cost2);
        tau.swap(tau2);
        for (double v : mass)
            live += v;
        if (live < 1e-16)
            break;
    }
    return out;
}

}  // namespace oracle
