#include "cleanup/occupancy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "cleanup/errors.hpp"
#include "compensated_sum.hpp"
#include "mpfr_value.hpp"

namespace cleanup {
namespace {

using boost::multiprecision::cpp_rational;

// Extra terms summed after the ratio test first succeeds.
constexpr std::size_t kSafetyTerms = 50;
// The first-passage DP stops once this much probability is left unabsorbed.
constexpr double kDpMassFloor = 1e-13;
constexpr unsigned kQuadratureDepth = 20;

std::string cell(long n, long m)
{
    return "(n=" + std::to_string(n) + ", m=" + std::to_string(m) + ")";
}

void require_nm(long n, long m, char const* what)
{
    if (n < 1 || m < 1 || m > n)
        throw DomainError(std::string(what) + ": need 1 <= m <= n, got " + cell(n, m));
}

void require_j(long m, long j, char const* what)
{
    if (j < 1 || j > m - 1)
        throw DomainError(std::string(what) + ": need 1 <= j <= m-1, got j=" + std::to_string(j) +
                          " m=" + std::to_string(m));
}

// Stirling numbers {t, k} for t = 0..rows-1 and k = 0..cols-1.
std::vector<std::vector<BigInt>> stirling_table(unsigned rows, unsigned cols)
{
    std::vector<std::vector<BigInt>> table(rows, std::vector<BigInt>(cols, 0));
    if (rows == 0 || cols == 0)
        return table;
    table[0][0] = 1;
    for (unsigned t = 1; t < rows; ++t)
    {
        for (unsigned k = 1; k < cols && k <= t; ++k)
            table[t][k] = BigInt(k) * table[t - 1][k] + table[t - 1][k - 1];
    }
    return table;
}

BigInt falling_factorial(long n, long m)
{
    BigInt result = 1;
    for (long i = 0; i < m; ++i)
        result *= n - i;
    return result;
}

// Generates P(l = L) for L = m, m+1, ... from the Stirling row
// {t, i} scaled by (n)_i / n^t, which is the probability of having seen
// exactly i distinct objects after t draws. Only columns i < m are kept.
class StoppingLaw
{
public:
    StoppingLaw(long n, long m) : n_(n), m_(m), row_(static_cast<std::size_t>(m), 0.0)
    {
        // After t = m - 1 draws only the all-distinct paths remain in column m - 1.
        row_[0] = m == 1 ? 1.0 : 0.0;
        if (m > 1)
        {
            row_[1] = 1.0;  // t = 1
            for (long t = 2; t <= m - 1; ++t)
                advance_row(t);
        }
        draws_ = m - 1;
    }

    long next_len() const { return draws_ + 1; }

    // P(l = draws + 1), then advances the row by one draw.
    double next()
    {
        double const prob = row_[static_cast<std::size_t>(m_ - 1)] *
                            static_cast<double>(n_ - m_ + 1) / static_cast<double>(n_);
        ++draws_;
        if (m_ == 1)
            row_[0] = 0.0;
        else
            advance_row(draws_);
        return prob;
    }

private:
    void advance_row(long /*t*/)
    {
        double const nd = static_cast<double>(n_);
        for (long i = m_ - 1; i >= 1; --i)
        {
            auto const k = static_cast<std::size_t>(i);
            double const stay = row_[k] * static_cast<double>(i) / nd;
            double const arrive = row_[k - 1] * static_cast<double>(n_ - i + 1) / nd;
            row_[k] = stay + arrive;
        }
        row_[0] = 0.0;
    }

    long n_;
    long m_;
    std::vector<double> row_;
    long draws_ = 0;
};

// Ratio-test truncation for a positive series whose terms eventually decay
// geometrically with ratio at least `asymptotic_ratio`.
class RatioTest
{
public:
    RatioTest(double tol, double asymptotic_ratio) : tol_(tol), asymptotic_ratio_(asymptotic_ratio) {}

    // Returns true once the series may stop after this term.
    bool feed(double term, double partial)
    {
        bool const have_previous = previous_ > 0.0;
        double const observed = have_previous ? term / previous_ : 1.0;
        previous_ = term;
        if (met_)
            return ++extra_ >= kSafetyTerms;
        if (!have_previous || observed >= 1.0 || term <= 0.0)
            return false;
        double const ratio = std::max(observed, asymptotic_ratio_);
        double const bound = term / (1.0 - ratio);
        if (bound < tol_ * partial)
        {
            met_ = true;
            tail_bound_ = bound;
        }
        return false;
    }

    double tail_bound() const { return tail_bound_; }

private:
    double tol_;
    double asymptotic_ratio_;
    double previous_ = 0.0;
    bool met_ = false;
    std::size_t extra_ = 0;
    double tail_bound_ = 0.0;
};

// Sum_{k>=1} r^k / (L + k), truncated once the geometric tail is below tol.
double shifted_log_tail(double r, long len, double tol, std::size_t max_terms)
{
    detail::CompensatedSum sum;
    double power = 1.0;
    for (std::size_t k = 1; k <= max_terms; ++k)
    {
        power *= r;
        double const term = power / static_cast<double>(len + static_cast<long>(k));
        sum += term;
        if (term / (1.0 - r) < tol * sum.value())
            return sum.value();
    }
    throw ConvergenceError("tau series: k-sum did not converge", sum.value(), power / (1.0 - r));
}

struct TauSeriesResult
{
    std::vector<double> values;
    std::vector<double> tail_bounds;
};

// E[tau_j / l] for each requested j via
//   sum_{k>=1} (j/n)^k sum_{L>=m} P(l = L) / (L + k)
// reordered as sum_L P(L) g_j(L) with g_j(L) = sum_{k>=1} (j/n)^k / (L + k).
// g_j is filled backward from a truncation point L_top using
// g(L - 1) = r / L + r g(L), which contracts errors by r per step.
TauSeriesResult tau_series(long n, long m, std::span<long const> js, PrecisionConfig const& cfg)
{
    TauSeriesResult result;
    result.values.assign(js.size(), 0.0);
    result.tail_bounds.assign(js.size(), 0.0);
    if (js.empty())
        return result;

    double const asymptotic = static_cast<double>(m - 1) / static_cast<double>(n);
    std::size_t top = static_cast<std::size_t>(std::max<long>(m + 64, 8 * m));

    std::vector<double> law;
    StoppingLaw generator(n, m);
    std::vector<bool> done(js.size(), false);
    std::size_t remaining = js.size();

    while (remaining > 0)
    {
        if (top > cfg.max_terms)
            throw ConvergenceError("tau series: max_terms exhausted " + cell(n, m), 0.0,
                                   std::numeric_limits<double>::infinity());
        while (law.size() < top)
            law.push_back(generator.next());

        for (std::size_t idx = 0; idx < js.size(); ++idx)
        {
            if (done[idx])
                continue;
            double const r = static_cast<double>(js[idx]) / static_cast<double>(n);
            long const last_len = m + static_cast<long>(law.size()) - 1;

            std::vector<double> g(law.size());
            g.back() = shifted_log_tail(r, last_len, cfg.tol * 1e-3, cfg.max_terms);
            for (std::size_t pos = law.size() - 1; pos > 0; --pos)
            {
                long const len = m + static_cast<long>(pos);
                g[pos - 1] = r / static_cast<double>(len) + r * g[pos];
            }

            detail::CompensatedSum sum;
            RatioTest test(cfg.tol, asymptotic);
            bool converged = false;
            for (std::size_t pos = 0; pos < law.size(); ++pos)
            {
                double const term = law[pos] * g[pos];
                sum += term;
                if (test.feed(term, sum.value()))
                {
                    converged = true;
                    break;
                }
            }
            if (converged)
            {
                result.values[idx] = sum.value();
                result.tail_bounds[idx] = test.tail_bound();
                done[idx] = true;
                --remaining;
            }
        }
        top *= 2;
    }
    return result;
}

}  // namespace

void PrecisionConfig::validate() const
{
    if (!(tol > 0.0))
        throw DomainError("PrecisionConfig: tol must be > 0");
    if (max_terms < 10)
        throw DomainError("PrecisionConfig: max_terms must be >= 10");
    if (!(quad_rel_err > 0.0))
        throw DomainError("PrecisionConfig: quad_rel_err must be > 0");
    if (working_precision < 53)
        throw DomainError("PrecisionConfig: working_precision must be >= 53 bits");
}

std::string_view method_name(Method method)
{
    switch (method)
    {
    case Method::direct: return "direct";
    case Method::closed_form: return "closed_form";
    case Method::series: return "series";
    case Method::quadrature: return "quadrature";
    case Method::dp: return "dp";
    }
    return "unknown";
}

BigInt stirling2(unsigned l, unsigned m)
{
    if (m > l)
        return 0;
    if (m == 0)
        return l == 0 ? 1 : 0;
    // Rolling row over k = 0..m.
    std::vector<BigInt> row(m + 1, 0);
    row[0] = 1;
    for (unsigned t = 1; t <= l; ++t)
    {
        for (unsigned k = std::min(t, m); k >= 1; --k)
            row[k] = BigInt(k) * row[k] + row[k - 1];
        row[0] = 0;
    }
    return row[m];
}

BigInt path_count(long n, long m, long l)
{
    require_nm(n, m, "path_count");
    if (l < m)
        throw DomainError("path_count: need l >= m, got l=" + std::to_string(l) + " m=" + std::to_string(m));
    return falling_factorial(n, m) * stirling2(static_cast<unsigned>(l - 1), static_cast<unsigned>(m - 1));
}

double stirling_prob_identity_check(long n, long m, long l_max)
{
    require_nm(n, m, "stirling_prob_identity_check");
    if (l_max < m)
        return 1.0;  // empty sum
    auto const table = stirling_table(static_cast<unsigned>(l_max), static_cast<unsigned>(m));
    // Common denominator n^l_max.
    BigInt numerator = 0;
    BigInt power = 1;  // n^(l_max - L), built from L = l_max downward
    for (long len = l_max; len >= m; --len)
    {
        numerator += table[static_cast<std::size_t>(len - 1)][static_cast<std::size_t>(m - 1)] * power;
        power *= n;
    }
    BigInt denominator = 1;
    for (long i = 0; i < l_max; ++i)
        denominator *= n;
    // relative residual = |1 - numerator (n)_m / n^l_max|
    cpp_rational const residual = cpp_rational(denominator - numerator * falling_factorial(n, m), denominator);
    return std::abs(residual.convert_to<double>());
}

double expected_len(long n, long m)
{
    require_nm(n, m, "expected_len");
    detail::CompensatedSum sum;
    for (long j = 0; j < m; ++j)
        sum += static_cast<double>(n) / static_cast<double>(n - j);
    return sum.value();
}

double var_len(long n, long m)
{
    require_nm(n, m, "var_len");
    detail::CompensatedSum sum;
    for (long j = 1; j < m; ++j)
    {
        double const gap = static_cast<double>(n - j);
        sum += static_cast<double>(j) * static_cast<double>(n) / (gap * gap);
    }
    return sum.value();
}

Estimate recip_len_closed_form(long n, long m, PrecisionConfig const& cfg)
{
    cfg.validate();
    require_nm(n, m, "recip_len_closed_form");
    if (m == n)
        throw DomainError("recip_len_closed_form: m = n is handled by the series route " + cell(n, m));
    if (m == 1)
        return {1.0, Method::closed_form, 0.0};

    auto const bits = static_cast<mpfr_prec_t>(cfg.working_precision);
    auto const un = static_cast<unsigned long>(n);
    auto const um = static_cast<unsigned long>(m);

    mpz_t binom;
    mpz_init(binom);

    // scale = m C(n, m)
    detail::MpfrValue scale(bits);
    mpz_bin_uiui(binom, un, um);
    mpfr_set_z(scale.get(), binom, MPFR_RNDN);
    mpfr_mul_ui(scale.get(), scale.get(), um, MPFR_RNDN);

    detail::MpfrValue sum(bits);
    detail::MpfrValue magnitude(bits);
    detail::MpfrValue term(bits);
    detail::MpfrValue log_term(bits);

    // j = 0 term: (-1)^(m+1) m C(n, m) / n
    mpfr_div_ui(term.get(), scale.get(), un, MPFR_RNDN);
    if (m % 2 == 0)
        mpfr_neg(term.get(), term.get(), MPFR_RNDN);
    mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
    mpfr_abs(term.get(), term.get(), MPFR_RNDN);
    mpfr_add(magnitude.get(), magnitude.get(), term.get(), MPFR_RNDN);

    for (long j = 1; j <= m - 1; ++j)
    {
        auto const uj = static_cast<unsigned long>(j);
        // log(1 - j/n)
        mpfr_set_ui(log_term.get(), uj, MPFR_RNDN);
        mpfr_div_ui(log_term.get(), log_term.get(), un, MPFR_RNDN);
        mpfr_neg(log_term.get(), log_term.get(), MPFR_RNDN);
        mpfr_log1p(log_term.get(), log_term.get(), MPFR_RNDN);

        mpz_bin_uiui(binom, um - 1, uj);
        mpfr_mul_z(term.get(), scale.get(), binom, MPFR_RNDN);
        mpfr_mul(term.get(), term.get(), log_term.get(), MPFR_RNDN);
        mpfr_div_ui(term.get(), term.get(), uj, MPFR_RNDN);
        if ((m - j) % 2 != 0)
            mpfr_neg(term.get(), term.get(), MPFR_RNDN);
        mpfr_add(sum.get(), sum.get(), term.get(), MPFR_RNDN);
        mpfr_abs(term.get(), term.get(), MPFR_RNDN);
        mpfr_add(magnitude.get(), magnitude.get(), term.get(), MPFR_RNDN);
    }
    mpz_clear(binom);

    double const value = sum.to_double();
    // Each term carries a few ulps of rounding at `bits` precision; the sum of
    // magnitudes bounds how much of that survives the cancellation.
    double const ulps = static_cast<double>(m + 8);
    double const abs_error = std::ldexp(magnitude.to_double() * ulps, -static_cast<int>(bits));
    double const rel_error = abs_error / std::abs(value);
    if (!(rel_error <= cfg.tol))
        throw PrecisionLossError("recip_len_closed_form: cancellation exceeds tolerance at " +
                                     std::to_string(cfg.working_precision) + " bits " + cell(n, m),
                                 value, rel_error);
    return {value, Method::closed_form, abs_error};
}

double recip_len_m2(long n)
{
    if (n < 2)
        throw DomainError("recip_len_m2: need n >= 2");
    double const nd = static_cast<double>(n);
    // n(n-1) (log(1/(1 - 1/n)) - 1/n); the bracket is summed as a series to
    // avoid cancellation for large n: sum_{k>=2} n^-k / k.
    detail::CompensatedSum bracket;
    double power = 1.0 / nd;
    for (int k = 2; k < 4096; ++k)
    {
        power /= nd;
        double const term = power / static_cast<double>(k);
        bracket += term;
        if (term < 1e-18 * bracket.value())
            break;
    }
    return nd * (nd - 1.0) * bracket.value();
}

Estimate recip_len_series(long n, long m, PrecisionConfig const& cfg)
{
    cfg.validate();
    require_nm(n, m, "recip_len_series");
    if (m == 1)
        return {1.0, Method::series, 0.0};

    StoppingLaw law(n, m);
    RatioTest test(cfg.tol, static_cast<double>(m - 1) / static_cast<double>(n));
    detail::CompensatedSum sum;
    for (std::size_t terms = 0; terms < cfg.max_terms; ++terms)
    {
        long const len = law.next_len();
        double const term = law.next() / static_cast<double>(len);
        sum += term;
        if (test.feed(term, sum.value()))
            return {sum.value(), Method::series, test.tail_bound()};
    }
    throw ConvergenceError("recip_len_series: max_terms exhausted " + cell(n, m), sum.value(),
                           std::numeric_limits<double>::infinity());
}

namespace {

// prod_{i=1}^{m-1} u (n - i) / (n - i u): the integrand x^(m-1) / prod(1 - i x)
// on [0, 1/n] after x = u/n, with the n!/(n-m)! prefactor folded in.
double scaled_generating_kernel(long n, long m, double u)
{
    double product = 1.0;
    double const nd = static_cast<double>(n);
    for (long i = 1; i < m; ++i)
    {
        double const id = static_cast<double>(i);
        product *= u * (nd - id) / (nd - id * u);
    }
    return product;
}

template <class F>
Estimate integrate_unit(F const& integrand, PrecisionConfig const& cfg, std::string const& what)
{
    using boost::math::quadrature::gauss_kronrod;
    double error = 0.0;
    double const value =
        gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, kQuadratureDepth, cfg.quad_rel_err, &error);
    if (!(error <= std::max(cfg.tol, cfg.quad_rel_err) * std::abs(value)))
        throw ConvergenceError(what + ": quadrature did not converge", value, error);
    return {value, Method::quadrature, error};
}

}  // namespace

Estimate recip_len_quadrature(long n, long m, PrecisionConfig const& cfg)
{
    cfg.validate();
    require_nm(n, m, "recip_len_quadrature");
    return integrate_unit([n, m](double u) { return scaled_generating_kernel(n, m, u); }, cfg,
                          "recip_len_quadrature " + cell(n, m));
}

double tau_given_len(long n, long m, long j, long l)
{
    require_nm(n, m, "tau_given_len");
    require_j(m, j, "tau_given_len");
    if (l < m)
        throw DomainError("tau_given_len: need l >= m");
    if (l == m)
        return 0.0;
    auto const table = stirling_table(static_cast<unsigned>(l), static_cast<unsigned>(m));
    auto const col = static_cast<std::size_t>(m - 1);
    BigInt numerator = 0;
    BigInt power = 1;
    for (long k = 1; k <= l - m; ++k)
    {
        power *= j;
        numerator += power * table[static_cast<std::size_t>(l - k - 1)][col];
    }
    cpp_rational const ratio(numerator, table[static_cast<std::size_t>(l - 1)][col]);
    return ratio.convert_to<double>();
}

Estimate tau_recip_len(long n, long m, long j, PrecisionConfig const& cfg)
{
    cfg.validate();
    require_nm(n, m, "tau_recip_len");
    require_j(m, j, "tau_recip_len");
    long const js[] = {j};
    auto const result = tau_series(n, m, js, cfg);
    return {result.values[0], Method::series, result.tail_bounds[0]};
}

Estimate tau_recip_len_integral(long n, long m, long j, PrecisionConfig const& cfg)
{
    cfg.validate();
    require_nm(n, m, "tau_recip_len_integral");
    require_j(m, j, "tau_recip_len_integral");
    double const nd = static_cast<double>(n);
    double const jd = static_cast<double>(j);
    return integrate_unit(
        [=](double u) { return jd * u / (nd - jd * u) * scaled_generating_kernel(n, m, u); }, cfg,
        "tau_recip_len_integral " + cell(n, m));
}

double tau_mean(long n, long j)
{
    if (j < 1 || j >= n)
        throw DomainError("tau_mean: need 1 <= j < n");
    return static_cast<double>(j) / static_cast<double>(n - j);
}

DpResult first_passage_dp(long n, long m, std::optional<long> j_mark, std::size_t l_cap,
                          PrecisionConfig const& cfg)
{
    cfg.validate();
    require_nm(n, m, "first_passage_dp");
    if (j_mark)
        require_j(m, *j_mark, "first_passage_dp");
    if (l_cap == 0)
        l_cap = cfg.max_terms;

    DpResult result;
    if (j_mark)
        result.tau_recip = 0.0;
    if (m == 1)
    {
        result.recip_len = 1.0;
        result.steps = 1;
        return result;
    }

    double const nd = static_cast<double>(n);
    auto const top = static_cast<std::size_t>(m - 1);
    // prob[i]: P(state = i) over unabsorbed paths; tau[i]: E[tau_j 1(state = i)].
    std::vector<double> prob(top + 1, 0.0);
    std::vector<double> tau(top + 1, 0.0);
    prob[1] = 1.0;
    long const mark = j_mark.value_or(0);
    double const exit_rate = static_cast<double>(n - m + 1) / nd;

    detail::CompensatedSum recip;
    detail::CompensatedSum tau_recip;
    double residual = 1.0;
    std::size_t draws = 1;
    for (; draws < l_cap; ++draws)
    {
        double const len = static_cast<double>(draws + 1);
        recip += prob[top] * exit_rate / len;
        if (j_mark)
            tau_recip += tau[top] * exit_rate / len;

        for (std::size_t i = top; i >= 1; --i)
        {
            double const stay = static_cast<double>(i) / nd;
            double const arrive = i > 1 ? static_cast<double>(n - static_cast<long>(i) + 1) / nd : 0.0;
            double const self_hit = static_cast<long>(i) == mark ? prob[i] : 0.0;
            tau[i] = (tau[i] + self_hit) * stay + (i > 1 ? tau[i - 1] * arrive : 0.0);
            prob[i] = prob[i] * stay + (i > 1 ? prob[i - 1] * arrive : 0.0);
        }

        residual = 0.0;
        for (std::size_t i = 1; i <= top; ++i)
            residual += prob[i];
        if (residual < kDpMassFloor)
        {
            ++draws;
            break;
        }
    }

    result.recip_len = recip.value();
    if (j_mark)
        result.tau_recip = tau_recip.value();
    result.residual_mass = residual;
    result.steps = draws;
    if (residual >= cfg.tol)
        throw ConvergenceError("first_passage_dp: residual mass " + std::to_string(residual) +
                                   " above tolerance after " + std::to_string(draws) + " draws " + cell(n, m),
                               result.recip_len, residual);
    return result;
}

std::vector<double> recip_len_row(long n, PrecisionConfig const& cfg)
{
    cfg.validate();
    require_nm(n, 1, "recip_len_row");

    auto const size = static_cast<std::size_t>(n);
    double const nd = static_cast<double>(n);
    // prob[i]: P(i distinct objects after `draws` draws).
    std::vector<double> prob(size + 1, 0.0);
    prob[1] = 1.0;
    std::vector<detail::CompensatedSum> sums(size);
    sums[0] += 1.0;

    double residual = 1.0;
    std::size_t draws = 1;
    for (; draws < cfg.max_terms && residual >= kDpMassFloor; ++draws)
    {
        double const len = static_cast<double>(draws + 1);
        // The next draw is new with probability (n - i) / n; it lands m = i + 1.
        for (std::size_t i = 1; i < size; ++i)
            sums[i] += prob[i] * (nd - static_cast<double>(i)) / nd / len;
        for (std::size_t i = size; i >= 1; --i)
            prob[i] = prob[i] * static_cast<double>(i) / nd +
                      (i > 1 ? prob[i - 1] * (nd - static_cast<double>(i) + 1.0) / nd : 0.0);
        residual = 0.0;
        for (std::size_t i = 1; i < size; ++i)
            residual += prob[i];
    }
    std::vector<double> out(size);
    for (std::size_t i = 0; i < size; ++i)
        out[i] = sums[i].value();
    if (residual >= cfg.tol)
        throw ConvergenceError("recip_len_row: residual mass " + std::to_string(residual) + " for n=" +
                                   std::to_string(n),
                               out.back(), residual);
    return out;
}

Estimate recip_len(long n, long m, PrecisionConfig const& cfg)
{
    cfg.validate();
    require_nm(n, m, "recip_len");
    if (m == 1)
        return {1.0, Method::direct, 0.0};

    // Closed form where its cancellation is affordable, series otherwise;
    // quadrature referees a disagreement.
    Estimate primary;
    Estimate alternative;
    bool have_primary = false;
    if (m < n && m <= 30 && cfg.working_precision >= 256)
    {
        try
        {
            primary = recip_len_closed_form(n, m, cfg);
            have_primary = true;
        }
        catch (PrecisionLossError const&)
        {
        }
    }
    if (have_primary)
    {
        alternative = recip_len_series(n, m, cfg);
    }
    else
    {
        primary = recip_len_series(n, m, cfg);
        alternative = recip_len_quadrature(n, m, cfg);
    }
    double disagreement = std::abs(primary.value - alternative.value);
    if (disagreement > cfg.tol * std::abs(primary.value))
    {
        Estimate const referee =
            alternative.method == Method::quadrature ? alternative : recip_len_quadrature(n, m, cfg);
        if (std::abs(alternative.value - referee.value) < std::abs(primary.value - referee.value))
            primary = alternative;
        disagreement = std::max(disagreement, std::abs(primary.value - referee.value));
    }
    return {primary.value, primary.method, std::max(primary.est_error, disagreement)};
}

OccupancyMoments moments(long n, long m, PrecisionConfig const& cfg)
{
    cfg.validate();
    require_nm(n, m, "moments");

    OccupancyMoments out;
    out.n = n;
    out.m = m;
    out.expected_len = {expected_len(n, m), Method::direct, 0.0};
    out.var_len = {var_len(n, m), Method::direct, 0.0};

    out.recip_len = recip_len(n, m, cfg);

    if (m > 1)
    {
        std::vector<long> js(static_cast<std::size_t>(m - 1));
        for (long j = 1; j < m; ++j)
            js[static_cast<std::size_t>(j - 1)] = j;
        auto const series = tau_series(n, m, js, cfg);
        out.tau_recip.reserve(js.size());
        for (std::size_t idx = 0; idx < js.size(); ++idx)
        {
            double const check = tau_recip_len_integral(n, m, js[idx], cfg).value;
            double const disagreement = std::abs(series.values[idx] - check);
            out.tau_recip.push_back(
                {series.values[idx], Method::series, std::max(series.tail_bounds[idx], disagreement)});
        }
    }
    return out;
}

}  // namespace cleanup
