#pragma once

#include <mpfr.h>

namespace cleanup::detail {

// Owning wrapper around an mpfr_t with a fixed precision.
class MpfrValue
{
public:
    explicit MpfrValue(mpfr_prec_t bits) { mpfr_init2(value_, bits); mpfr_set_zero(value_, 1); }
    ~MpfrValue() { mpfr_clear(value_); }

    MpfrValue(MpfrValue const&) = delete;
    MpfrValue& operator=(MpfrValue const&) = delete;

    mpfr_ptr get() { return value_; }
    mpfr_srcptr get() const { return value_; }

    double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

private:
    mpfr_t value_;
};

}  // namespace cleanup::detail
