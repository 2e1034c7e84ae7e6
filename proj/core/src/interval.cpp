#include "rankone/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <utility>

#include "rankone/errors.hpp"

namespace rankone {

RealInterval::RealInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw_precision("IntervalOrder", "lower endpoint exceeds upper endpoint");
}

RealInterval RealInterval::hull(const RealInterval& a, const RealInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RealInterval operator+(const RealInterval& a, const RealInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}

RealInterval operator-(const RealInterval& a, const RealInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}

RealInterval operator-(const RealInterval& a) { return {-a.hi, -a.lo}; }

RealInterval operator*(const RealInterval& a, const RealInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

RealInterval operator*(const Rat& c, const RealInterval& a) {
    if (c >= 0) return {c * a.lo, c * a.hi};
    return {c * a.hi, c * a.lo};
}

RealInterval operator/(const RealInterval& a, const RealInterval& b) {
    if (b.contains_zero()) throw_precision("IntervalDivByZero", "divisor interval straddles 0");
    RealInterval inv(Rat(1) / b.hi, Rat(1) / b.lo);
    return a * inv;
}

RealInterval abs(const RealInterval& a) {
    if (a.lo >= 0) return a;
    if (a.hi <= 0) return -a;
    Rat neg_lo = -a.lo;
    return {Rat(0), std::max(neg_lo, a.hi)};
}

RealInterval max0(const RealInterval& a) {
    return {std::max(a.lo, Rat(0)), std::max(a.hi, Rat(0))};
}

RealInterval max_iv(const RealInterval& a, const RealInterval& b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

RealInterval min_iv(const RealInterval& a, const RealInterval& b) {
    return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

RealInterval pow_iv(const RealInterval& a, long e) {
    if (e == 0) return RealInterval(Rat(1));
    RealInterval acc(Rat(1));
    RealInterval sq = a;
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    while (k) {
        if (k & 1) acc = acc * sq;
        if (k >>= 1) sq = sq * sq;
    }
    if (e < 0) return RealInterval(Rat(1)) / acc;
    return acc;
}

namespace {

struct MpfrVal {
    mpfr_t x;
    explicit MpfrVal(long prec) { mpfr_init2(x, static_cast<mpfr_prec_t>(prec)); }
    ~MpfrVal() { mpfr_clear(x); }
    MpfrVal(const MpfrVal&) = delete;
    MpfrVal& operator=(const MpfrVal&) = delete;
};

Rat to_rat(const mpfr_t x) {
    Rat q;
    mpfr_get_q(q.get_mpq_t(), x);
    return q;
}

// Enclosure of a monotone-increasing f over [lo, hi]: round the argument and
// the function value both toward the endpoint's side.
template <typename F>
RealInterval monotone_enclosure(const Rat& lo, const Rat& hi, long prec, F&& f) {
    MpfrVal a(prec), b(prec);
    mpfr_set_q(a.x, lo.get_mpq_t(), MPFR_RNDD);
    f(a.x, a.x, MPFR_RNDD);
    mpfr_set_q(b.x, hi.get_mpq_t(), MPFR_RNDU);
    f(b.x, b.x, MPFR_RNDU);
    return {to_rat(a.x), to_rat(b.x)};
}

}  // namespace

RealInterval log_enclosure(const Rat& x, long prec) {
    return log_enclosure(RealInterval(x), prec);
}

RealInterval log_enclosure(const RealInterval& x, long prec) {
    if (x.lo <= 0) throw_precision("LogDomain", "log of an interval touching (-inf, 0]");
    if (x.is_point() && x.lo == 1) return RealInterval(Rat(0));
    return monotone_enclosure(x.lo, x.hi, prec,
                              [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_log(r, v, rnd); });
}

RealInterval sqrt_enclosure(const RealInterval& x, long prec) {
    if (x.lo < 0) throw_precision("SqrtDomain", "sqrt of an interval touching (-inf, 0)");
    return monotone_enclosure(x.lo, x.hi, prec,
                              [](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) { mpfr_sqrt(r, v, rnd); });
}

RealInterval root_enclosure(const RealInterval& x, unsigned long k, long prec) {
    if (x.lo < 0) throw_precision("RootDomain", "k-th root of an interval touching (-inf, 0)");
    if (k == 0) throw_config("RootOrder", "0th root is undefined");
    if (k == 1) return x;
    return monotone_enclosure(x.lo, x.hi, prec, [k](mpfr_ptr r, mpfr_srcptr v, mpfr_rnd_t rnd) {
        mpfr_rootn_ui(r, v, k, rnd);
    });
}

}  // namespace rankone
