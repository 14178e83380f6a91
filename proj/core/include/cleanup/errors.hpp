#pragma once

#include <stdexcept>
#include <string>

namespace cleanup {

/// An argument outside the domain of a cost or moment function.
class DomainError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// A truncated series, quadrature or dynamic program failed to reach its
/// requested accuracy. Carries the best value found so far.
class ConvergenceError : public std::runtime_error
{
public:
    ConvergenceError(std::string const& what, double partial_value, double achieved_error)
        : std::runtime_error(what), partial_value_(partial_value), achieved_error_(achieved_error)
    {}

    double partial_value() const noexcept { return partial_value_; }
    double achieved_error() const noexcept { return achieved_error_; }

private:
    double partial_value_;
    double achieved_error_;
};

/// The alternating closed form lost too many bits to cancellation at the
/// configured working precision.
class PrecisionLossError : public std::runtime_error
{
public:
    PrecisionLossError(std::string const& what, double value, double estimated_error)
        : std::runtime_error(what), value_(value), estimated_error_(estimated_error)
    {}

    double value() const noexcept { return value_; }
    double estimated_error() const noexcept { return estimated_error_; }

private:
    double value_;
    double estimated_error_;
};

}  // namespace cleanup
