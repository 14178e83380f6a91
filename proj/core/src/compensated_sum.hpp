#pragma once

#include <cmath>

namespace cleanup::detail {

// Neumaier's variant of Kahan summation.
class CompensatedSum
{
public:
    void add(double x)
    {
        double const t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            compensation_ += (sum_ - t) + x;
        else
            compensation_ += (x - t) + sum_;
        sum_ = t;
    }

    CompensatedSum& operator+=(double x)
    {
        add(x);
        return *this;
    }

    double value() const { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace cleanup::detail
