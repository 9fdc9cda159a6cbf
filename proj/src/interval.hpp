#pragma once

#include "gpoly/errors.hpp"
#include "gpoly/rational.hpp"

#include <mpfr.h>

namespace gpoly::detail {

// Closed interval [lo, hi] with outward rounding. mul/div assume both
// operands are positive.
class Interval {
public:
    Interval(const Rational& x, mpfr_prec_t prec) {
        init(prec);
        mpfr_set_q(lo_, x.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(hi_, x.get_mpq_t(), MPFR_RNDU);
    }
    Interval(const Interval& o) {
        init(mpfr_get_prec(o.lo_));
        mpfr_set(lo_, o.lo_, MPFR_RNDD);
        mpfr_set(hi_, o.hi_, MPFR_RNDU);
    }
    Interval& operator=(const Interval&) = delete;
    ~Interval() {
        mpfr_clear(lo_);
        mpfr_clear(hi_);
    }

    friend Interval operator+(const Interval& a, const Interval& b) {
        Interval r(a.prec());
        mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend Interval operator-(const Interval& a, const Interval& b) {
        Interval r(a.prec());
        mpfr_sub(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_sub(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    friend Interval operator*(const Interval& a, const Interval& b) {
        a.require_positive();
        b.require_positive();
        Interval r(a.prec());
        mpfr_mul(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
        mpfr_mul(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
        return r;
    }
    friend Interval operator/(const Interval& a, const Interval& b) {
        a.require_positive();
        b.require_positive();
        Interval r(a.prec());
        mpfr_div(r.lo_, a.lo_, b.hi_, MPFR_RNDD);
        mpfr_div(r.hi_, a.hi_, b.lo_, MPFR_RNDU);
        return r;
    }
    friend Interval sqrt(const Interval& a) {
        a.require_positive();
        Interval r(a.prec());
        mpfr_sqrt(r.lo_, a.lo_, MPFR_RNDD);
        mpfr_sqrt(r.hi_, a.hi_, MPFR_RNDU);
        return r;
    }

    // Certainly a < b.
    friend bool certainly_less(const Interval& a, const Interval& b) { return mpfr_less_p(a.hi_, b.lo_) != 0; }
    // Certainly a > b.
    friend bool certainly_greater(const Interval& a, const Interval& b) { return mpfr_greater_p(a.lo_, b.hi_) != 0; }

    double lo() const { return mpfr_get_d(lo_, MPFR_RNDD); }
    double hi() const { return mpfr_get_d(hi_, MPFR_RNDU); }

private:
    explicit Interval(mpfr_prec_t prec) { init(prec); }
    void init(mpfr_prec_t prec) {
        mpfr_init2(lo_, prec);
        mpfr_init2(hi_, prec);
    }
    mpfr_prec_t prec() const { return mpfr_get_prec(lo_); }
    void require_positive() const {
        if (mpfr_sgn(lo_) < 0) throw InvariantViolation("interval operand not nonnegative");
    }

    mpfr_t lo_;
    mpfr_t hi_;
};

}  // namespace gpoly::detail
