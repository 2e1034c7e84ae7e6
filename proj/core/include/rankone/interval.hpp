#pragma once

#include "rankone/intutil.hpp"

namespace rankone {

// Closed interval with exact rational endpoints. All arithmetic is outward
// exact (no rounding); irrational functions enter only through the MPFR
// enclosure builders below, which round endpoints outward at a stated
// precision and convert back to exact dyadic rationals.
struct RealInterval {
    Rat lo, hi;

    RealInterval() : lo(0), hi(0) {}
    explicit RealInterval(const Rat& v) : lo(v), hi(v) {}
    RealInterval(Rat l, Rat h);

    static RealInterval hull(const RealInterval& a, const RealInterval& b);

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool is_point() const { return lo == hi; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool certainly_positive() const { return lo > 0; }
    bool certainly_negative() const { return hi < 0; }
    bool certainly_less(const RealInterval& o) const { return hi < o.lo; }
    bool overlaps(const RealInterval& o) const { return lo <= o.hi && o.lo <= hi; }
};

RealInterval operator+(const RealInterval& a, const RealInterval& b);
RealInterval operator-(const RealInterval& a, const RealInterval& b);
RealInterval operator-(const RealInterval& a);
RealInterval operator*(const RealInterval& a, const RealInterval& b);
RealInterval operator*(const Rat& c, const RealInterval& a);
// Throws (precision/IntervalDivByZero) when b straddles 0.
RealInterval operator/(const RealInterval& a, const RealInterval& b);

RealInterval abs(const RealInterval& a);
RealInterval max0(const RealInterval& a);
RealInterval max_iv(const RealInterval& a, const RealInterval& b);
RealInterval min_iv(const RealInterval& a, const RealInterval& b);
RealInterval pow_iv(const RealInterval& a, long e);

// Enclosures of irrational functions at `prec` mpfr bits, endpoints rounded
// outward. Domain violations throw precision errors.
RealInterval log_enclosure(const Rat& x, long prec);                // x > 0
RealInterval log_enclosure(const RealInterval& x, long prec);       // x.lo > 0
RealInterval sqrt_enclosure(const RealInterval& x, long prec);      // x.lo >= 0
RealInterval root_enclosure(const RealInterval& x, unsigned long k, long prec);  // x.lo >= 0, k >= 1

}  // namespace rankone
