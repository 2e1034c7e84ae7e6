#pragma once

#include <string>

#include "rankone/modpoly.hpp"

namespace rankone {

// Rational function over F_p in canonical form: denominator monic,
// numerator and denominator coprime; zero is 0/1.
struct FqElem {
    FpPoly num, den;

    bool is_zero() const { return num.is_zero(); }
    bool operator==(const FqElem&) const = default;
    bool operator<(const FqElem& o) const {
        if (!(den == o.den)) return den < o.den;
        return num < o.num;
    }
};

FqElem fq_make(FpPoly num, FpPoly den, const Int& p);
FqElem fq_zero();
FqElem fq_one();
FqElem fq_t();
FqElem fq_from_int(const Int& v, const Int& p);

FqElem fq_add(const FqElem& a, const FqElem& b, const Int& p);
FqElem fq_sub(const FqElem& a, const FqElem& b, const Int& p);
FqElem fq_mul(const FqElem& a, const FqElem& b, const Int& p);
FqElem fq_div(const FqElem& a, const FqElem& b, const Int& p);
FqElem fq_neg(const FqElem& a, const Int& p);
FqElem fq_inv(const FqElem& a, const Int& p);
FqElem fq_pow(const FqElem& a, long e, const Int& p);

// ord at the finite place given by a monic irreducible polynomial.
long fq_ord_at(const FqElem& a, const FpPoly& prime, const Int& p);
// ord at the place at infinity: deg den - deg num.
long fq_ord_inf(const FqElem& a);

std::string fp_to_string(const FpPoly& f, const std::string& var = "t");
std::string fq_to_string(const FqElem& a);

}  // namespace rankone
