#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cleanup {

/// Probability weights on the n objects, all strictly positive.
class Distribution
{
public:
    enum class Kind { uniform, zipf, skewed, custom };

    static Distribution uniform(long n);
    /// Weight of object i (1-based) proportional to i^-exponent.
    static Distribution zipf(long n, double exponent = 1.0);
    /// Object r (1-based) has weight 1 - eps, the others eps / (n - 1).
    static Distribution skewed(long n, long r, double eps);
    /// Normalised copy of `weights`; every weight must be positive.
    static Distribution custom(std::vector<double> weights);

    /// Parses "uniform", "zipf:s=<x>", "skewed:r=<i>,eps=<x>" or
    /// "custom:<path>" (one positive weight per line, exactly n lines).
    static Distribution parse(std::string_view spec, long n);

    Kind kind() const { return kind_; }
    long size() const { return static_cast<long>(weights_.size()); }
    std::span<double const> weights() const { return weights_; }
    bool is_uniform() const { return kind_ == Kind::uniform; }
    std::string describe() const;

    /// Draws a 0-based object index.
    template <class Rng>
    std::size_t sample(Rng& rng) const
    {
        if (kind_ == Kind::uniform)
            return std::uniform_int_distribution<std::size_t>(0, weights_.size() - 1)(rng);
        double const u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        return index_for(u);
    }

    /// Inverse CDF: smallest i with cumulative(i) > u.
    std::size_t index_for(double u) const;

private:
    Distribution(Kind kind, std::vector<double> weights, std::string label);

    Kind kind_;
    std::vector<double> weights_;
    std::vector<double> cumulative_;
    std::string label_;
};

}  // namespace cleanup
