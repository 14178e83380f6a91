#pragma once

#include <vector>

#include "cleanup/model.hpp"

namespace cleanup {

// The approximate objective replaces E[1/l] by 1/E[l] and E[tau_j/l] by
// E[tau_j]/E[l]. It is defined for the complete-memory numbered model only;
// every entry point rejects other models with DomainError.

/// m b(n) / E[l]; the list part, counted once (cleanup mirrors it).
double f_tilde_list(long n, long m, Model model = Model::m4());

/// sum_{j<m} s(j) (j/(n-j)) / E[l].
double f_tilde_pile(long n, long m, Model model = Model::m4());

/// Approximate cost F~(m; n) = 2 f_tilde_list + f_tilde_pile.
double f_tilde(long n, long m, Model model = Model::m4());

struct ApproxCurve
{
    long n = 0;
    std::vector<double> values;  ///< F~(m) at index m - 1
    long m_opt_approx = 0;       ///< smallest argmin
    double bracket_low = 0.0;    ///< 3 b(n) - 3/2
    double bracket_high = 0.0;   ///< 3 b(n) + 1/2
};

/// Full approximate curve over m = 1..n and its smallest minimiser.
ApproxCurve m_opt_approx(long n, Model model = Model::m4());

/// sum_{j<m} ((m-j)/(n-j)) (4 b(n) - (m+j+1)); positive exactly when
/// F~(m) > F~(m+1). Requires 1 <= m < n.
double delta_sign_criterion(long n, long m);

/// sum_{j=0}^{a} (a-j)(b-j)/(c-j) for a > 1 and c >= max(a, b), c > a.
double sum_lemma_sign(long a, long b, long c);

struct BracketReport
{
    long n_max = 0;
    long checked = 0;
    std::vector<long> violations;
    long lower_branch = 0;  ///< m~_opt = ceil(3b(n) - 3/2)
    long upper_branch = 0;  ///< m~_opt = ceil(3b(n) - 3/2) + 1
    long right_half = 0;    ///< m~_opt > 3b(n) - 1/2
    long first_lower_witness = 0;
    long first_upper_witness = 0;
};

/// Checks m~_opt(n) in {ceil(3b(n) - 3/2), ceil(3b(n) - 3/2) + 1} for every
/// n in [5, n_max] with a full-range scan per n.
BracketReport verify_bracket(long n_max);

}  // namespace cleanup
