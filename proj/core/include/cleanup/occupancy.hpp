#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace cleanup {

using BigInt = boost::multiprecision::cpp_int;

/// Accuracy knobs shared by the series, quadrature and closed-form routes.
struct PrecisionConfig
{
    double tol = 1e-10;                   ///< relative truncation tolerance
    std::size_t max_terms = 1'000'000;    ///< cap on series terms / DP steps
    double quad_rel_err = 1e-12;          ///< adaptive quadrature target
    unsigned working_precision = 256;     ///< mantissa bits for the closed form

    /// Throws DomainError unless tol > 0 and max_terms >= 10.
    void validate() const;
};

enum class Method { direct, closed_form, series, quadrature, dp };

std::string_view method_name(Method method);

/// A computed value together with the route that produced it and an error
/// estimate (truncation bound or cross-method disagreement).
struct Estimate
{
    double value = 0.0;
    Method method = Method::direct;
    double est_error = 0.0;
};

/// Moments of the stopping time l (number of draws until the pile first
/// holds m distinct objects out of n) and of the repeat counters tau_j.
struct OccupancyMoments
{
    long n = 0;
    long m = 0;
    Estimate expected_len;            ///< E[l]
    Estimate var_len;                 ///< Var(l)
    Estimate recip_len;               ///< E[1/l]
    std::vector<Estimate> tau_recip;  ///< E[tau_j / l] at index j - 1, j = 1..m-1
};

// Exact combinatorics.

/// Stirling number of the second kind {l over m}; zero outside the triangle.
BigInt stirling2(unsigned l, unsigned m);

/// Number of paths of length l that stop with pile size m:
/// m! C(n, m) {l-1 over m-1}.
BigInt path_count(long n, long m, long l);

/// Relative residual |sum_{l=m}^{l_max} {l-1 over m-1} / n^l - (n-m)!/n!|
/// divided by (n-m)!/n!, evaluated in exact rational arithmetic.
double stirling_prob_identity_check(long n, long m, long l_max);

// Stopping-time moments.

/// E[l] = n (H_n - H_{n-m}).
double expected_len(long n, long m);

/// Var(l) = sum_{j<m} j n / (n - j)^2.
double var_len(long n, long m);

/// E[1/l] from the finite alternating formula, evaluated with
/// cfg.working_precision bits. Valid for 1 <= m <= n - 1. Throws
/// PrecisionLossError when the cancellation estimate exceeds cfg.tol.
Estimate recip_len_closed_form(long n, long m, PrecisionConfig const& cfg = {});

/// E[1/l] for m = 2 in terms of a single logarithm. Valid for n >= 2.
double recip_len_m2(long n);

/// E[1/l] as the truncated series sum_l P(l = L) / L.
Estimate recip_len_series(long n, long m, PrecisionConfig const& cfg = {});

/// E[1/l] from its integral representation, by adaptive Gauss-Kronrod.
Estimate recip_len_quadrature(long n, long m, PrecisionConfig const& cfg = {});

/// E[1/l] by the preferred route for (n, m), cross-checked against a second
/// method. est_error covers their disagreement.
Estimate recip_len(long n, long m, PrecisionConfig const& cfg = {});

// Repeat counters.

/// E[tau_j | l] for paths of length l.
double tau_given_len(long n, long m, long j, long l);

/// E[tau_j / l] by the double series over (k, l).
Estimate tau_recip_len(long n, long m, long j, PrecisionConfig const& cfg = {});

/// E[tau_j / l] by quadrature of the single-integral form.
Estimate tau_recip_len_integral(long n, long m, long j, PrecisionConfig const& cfg = {});

/// E[tau_j] = j / (n - j), independent of m.
double tau_mean(long n, long j);

struct DpResult
{
    double recip_len = 0.0;
    std::optional<double> tau_recip;
    double residual_mass = 0.0;  ///< probability not yet absorbed at the last step
    std::size_t steps = 0;
};

/// Forward first-passage dynamic program over the number of distinct objects
/// drawn. Runs until the unabsorbed mass falls below 1e-13 or `l_cap` draws
/// (0 means cfg.max_terms). Throws ConvergenceError when the residual mass is
/// still above cfg.tol.
DpResult first_passage_dp(long n, long m, std::optional<long> j_mark = std::nullopt,
                          std::size_t l_cap = 0, PrecisionConfig const& cfg = {});

/// E_m[1/l] for every m = 1..n from one pass of the unabsorbed occupancy
/// chain. Entry m - 1 holds E_m[1/l].
std::vector<double> recip_len_row(long n, PrecisionConfig const& cfg = {});

/// All moments for (n, m), each from its preferred route and cross-checked
/// against a second one. The disagreement is recorded as est_error.
OccupancyMoments moments(long n, long m, PrecisionConfig const& cfg = {});

}  // namespace cleanup
