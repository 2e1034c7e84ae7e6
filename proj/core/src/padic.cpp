#include "rankone/padic.hpp"

#include "rankone/errors.hpp"

namespace rankone {

bool min_poly_squarefree_mod(const ZPoly& min_poly, const Int& p) {
    FpPoly fp = fp_from_coeffs(min_poly.c, p);
    return fp.degree() == min_poly.degree() && fp_is_squarefree(fp, p);
}

PAdicContext::PAdicContext(const ZPoly& min_poly, Int p) : f_(min_poly), p_(std::move(p)) {
    if (!min_poly_squarefree_mod(f_, p_))
        throw_config("RamifiedUnsupported",
                     "minimal polynomial is not squarefree mod " + p_.get_str() +
                         "; supply explicit place data for this prime");
    for (auto& [g, mult] : fp_factor(fp_from_coeffs(f_.c, p_), p_)) factors_.push_back(g);
}

void PAdicContext::ensure_precision(unsigned K) {
    if (lifted_K_ >= K) return;
    if (factors_.size() == 1) {
        Int pk = int_pow(p_, K);
        ZPoly lift;
        lift.c.reserve(f_.c.size());
        for (const auto& v : f_.c) {
            Int r;
            mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), pk.get_mpz_t());
            lift.c.push_back(r);
        }
        while (!lift.c.empty() && lift.c.back() == 0) lift.c.pop_back();
        lifted_ = {lift};
    } else {
        lifted_.clear();
        for (auto& coeffs : hensel_lift_monic(f_.c, factors_, p_, K)) {
            ZPoly g;
            g.c = std::move(coeffs);
            lifted_.push_back(std::move(g));
        }
    }
    lifted_K_ = K;
}

long PAdicContext::ord(const QPoly& x, size_t i) {
    if (x.is_zero()) throw_config("OrdOfZero", "valuation of 0 is undefined");
    if (i >= factors_.size()) throw_config("DimensionMismatch", "place index out of range");
    // K = Q shortcut: the element is a rational constant
    if (f_.degree() == 1) return padic_ord(x.at(0), p_);
    // split off the integer denominator: x = A / m with A integral on the
    // power basis
    Int m(1);
    for (const auto& v : x.c) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), v.get_den().get_mpz_t());
    ZPoly A;
    A.c.reserve(x.c.size());
    for (const auto& v : x.c) {
        Rat scaled = v * Rat(m);
        A.c.push_back(scaled.get_num());
    }
    while (!A.c.empty() && A.c.back() == 0) A.c.pop_back();
    long m_ord = m == 1 ? 0 : padic_ord(Rat(m), p_);

    // ord_v(A(alpha)) from the valuation of the local norm: resultant of the
    // lifted local factor with A. The lift precision only has to exceed the
    // valuation of Res(f, A), which bounds it.
    Int full_res = resultant(f_, A);
    if (full_res == 0) throw_precision("PadicOrd", "element shares a root with the minimal polynomial");
    long bound = full_res % p_ == 0 ? padic_ord(Rat(full_res), p_) : 0;
    unsigned K = static_cast<unsigned>(bound) + 1;
    ensure_precision(K);
    Int res = resultant(lifted_[i], A);
    Int pk = int_pow(p_, K);
    Int rem;
    mpz_fdiv_r(rem.get_mpz_t(), res.get_mpz_t(), pk.get_mpz_t());
    long rv;
    if (rem == 0) {
        // the true valuation is below K by the bound, so a vanishing residue
        // means A(alpha) is a unit times p^(>= K): impossible
        throw_precision("PadicOrd", "resultant residue vanished below the certified bound");
    } else {
        rv = rem % p_ == 0 ? padic_ord(Rat(rem), p_) : 0;
    }
    long fv = factors_[i].degree();
    if (rv % fv != 0)
        throw_precision("PadicOrd", "norm valuation not divisible by the residue degree");
    return rv / fv - m_ord;
}

}  // namespace rankone
