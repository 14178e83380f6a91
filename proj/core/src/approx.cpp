#include "cleanup/approx.hpp"

#include <cmath>
#include <string>

#include "cleanup/cost_model.hpp"
#include "cleanup/errors.hpp"
#include "compensated_sum.hpp"

namespace cleanup {
namespace {

void require_m4(Model model, char const* what)
{
    if (model != Model::m4())
        throw DomainError(std::string(what) + ": the approximate cost is defined for model m4 only, got " +
                          std::string(model.name()));
}

void require_nm(long n, long m, char const* what)
{
    if (n < 1 || m < 1 || m > n)
        throw DomainError(std::string(what) + ": need 1 <= m <= n, got n=" + std::to_string(n) +
                          " m=" + std::to_string(m));
}

// Running sums shared by the single-point and the full-curve evaluations, so
// both produce bit-identical values.
struct TildeSums
{
    double expected_len = 0.0;  // sum_{j<m} n/(n-j)
    double pile = 0.0;          // sum_{0<j<m} ((j+1)/2) j/(n-j)

    void extend(long n, long j)
    {
        double const gap = static_cast<double>(n - j);
        expected_len += static_cast<double>(n) / gap;
        if (j > 0)
            pile += sequential_cost(j) * static_cast<double>(j) / gap;
    }
};

}  // namespace

double f_tilde_list(long n, long m, Model model)
{
    require_m4(model, "f_tilde_list");
    require_nm(n, m, "f_tilde_list");
    TildeSums sums;
    for (long j = 0; j < m; ++j)
        sums.extend(n, j);
    return static_cast<double>(m) * binary_success_cost(n) / sums.expected_len;
}

double f_tilde_pile(long n, long m, Model model)
{
    require_m4(model, "f_tilde_pile");
    require_nm(n, m, "f_tilde_pile");
    TildeSums sums;
    for (long j = 0; j < m; ++j)
        sums.extend(n, j);
    return sums.pile / sums.expected_len;
}

double f_tilde(long n, long m, Model model)
{
    require_m4(model, "f_tilde");
    require_nm(n, m, "f_tilde");
    TildeSums sums;
    for (long j = 0; j < m; ++j)
        sums.extend(n, j);
    return (2.0 * static_cast<double>(m) * binary_success_cost(n) + sums.pile) / sums.expected_len;
}

ApproxCurve m_opt_approx(long n, Model model)
{
    require_m4(model, "m_opt_approx");
    if (n < 1)
        throw DomainError("m_opt_approx: need n >= 1");

    ApproxCurve curve;
    curve.n = n;
    double const b_n = binary_success_cost(n);
    curve.bracket_low = 3.0 * b_n - 1.5;
    curve.bracket_high = 3.0 * b_n + 0.5;
    curve.values.reserve(static_cast<std::size_t>(n));

    TildeSums sums;
    for (long m = 1; m <= n; ++m)
    {
        sums.extend(n, m - 1);
        curve.values.push_back((2.0 * static_cast<double>(m) * b_n + sums.pile) / sums.expected_len);
    }
    std::size_t best = 0;
    for (std::size_t idx = 1; idx < curve.values.size(); ++idx)
    {
        if (curve.values[idx] < curve.values[best])
            best = idx;
    }
    curve.m_opt_approx = static_cast<long>(best) + 1;
    return curve;
}

double delta_sign_criterion(long n, long m)
{
    if (m < 1 || m >= n)
        throw DomainError("delta_sign_criterion: need 1 <= m < n");
    double const four_b = 4.0 * binary_success_cost(n);
    detail::CompensatedSum sum;
    for (long j = 0; j < m; ++j)
    {
        double const weight = static_cast<double>(m - j) / static_cast<double>(n - j);
        sum += weight * (four_b - static_cast<double>(m + j + 1));
    }
    return sum.value();
}

double sum_lemma_sign(long a, long b, long c)
{
    if (a <= 1)
        throw DomainError("sum_lemma_sign: need a > 1");
    if (c < a || c < b)
        throw DomainError("sum_lemma_sign: need c >= max(a, b)");
    detail::CompensatedSum sum;
    // The j = a term has a zero numerator.
    for (long j = 0; j < a; ++j)
    {
        sum += static_cast<double>(a - j) * static_cast<double>(b - j) / static_cast<double>(c - j);
    }
    return sum.value();
}

BracketReport verify_bracket(long n_max)
{
    if (n_max < 5)
        throw DomainError("verify_bracket: need n_max >= 5");
    BracketReport report;
    report.n_max = n_max;
    for (long n = 5; n <= n_max; ++n)
    {
        ApproxCurve const curve = m_opt_approx(n);
        auto const low = static_cast<long>(std::ceil(curve.bracket_low));
        long const found = curve.m_opt_approx;
        ++report.checked;
        if (found == low)
        {
            ++report.lower_branch;
            if (report.first_lower_witness == 0)
                report.first_lower_witness = n;
        }
        else if (found == low + 1)
        {
            ++report.upper_branch;
            if (report.first_upper_witness == 0)
                report.first_upper_witness = n;
        }
        else
        {
            report.violations.push_back(n);
        }
        if (static_cast<double>(found) > curve.bracket_low + 1.0)
            ++report.right_half;
    }
    return report;
}

}  // namespace cleanup
