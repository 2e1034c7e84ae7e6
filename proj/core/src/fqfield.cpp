#include "rankone/fqfield.hpp"

#include "rankone/errors.hpp"

namespace rankone {

FqElem fq_make(FpPoly num, FpPoly den, const Int& p) {
    if (den.is_zero()) throw_precision("FieldDivByZero", "zero denominator");
    if (num.is_zero()) return fq_zero();
    FpPoly g = fp_gcd(num, den, p);
    if (g.degree() > 0) {
        num = fp_divmod(num, g, p).first;
        den = fp_divmod(den, g, p).first;
    }
    // monic denominator
    Int lead = den.c.back();
    if (lead != 1) {
        Int inv;
        mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), p.get_mpz_t());
        num = fp_scale(num, inv, p);
        den = fp_scale(den, inv, p);
    }
    return {std::move(num), std::move(den)};
}

FqElem fq_zero() { return {{}, fp_one()}; }
FqElem fq_one() { return {fp_one(), fp_one()}; }
FqElem fq_t() { return {fp_x(), fp_one()}; }

FqElem fq_from_int(const Int& v, const Int& p) {
    return fq_make(fp_from_coeffs({v}, p), fp_one(), p);
}

FqElem fq_add(const FqElem& a, const FqElem& b, const Int& p) {
    FpPoly num = fp_add(fp_mul(a.num, b.den, p), fp_mul(b.num, a.den, p), p);
    return fq_make(std::move(num), fp_mul(a.den, b.den, p), p);
}

FqElem fq_sub(const FqElem& a, const FqElem& b, const Int& p) {
    FpPoly num = fp_sub(fp_mul(a.num, b.den, p), fp_mul(b.num, a.den, p), p);
    return fq_make(std::move(num), fp_mul(a.den, b.den, p), p);
}

FqElem fq_mul(const FqElem& a, const FqElem& b, const Int& p) {
    return fq_make(fp_mul(a.num, b.num, p), fp_mul(a.den, b.den, p), p);
}

FqElem fq_div(const FqElem& a, const FqElem& b, const Int& p) {
    if (b.is_zero()) throw_precision("FieldDivByZero", "division by zero");
    return fq_make(fp_mul(a.num, b.den, p), fp_mul(a.den, b.num, p), p);
}

FqElem fq_neg(const FqElem& a, const Int& p) {
    return {fp_scale(a.num, p - 1, p), a.den};
}

FqElem fq_inv(const FqElem& a, const Int& p) {
    if (a.is_zero()) throw_precision("FieldDivByZero", "inverse of zero");
    return fq_make(a.den, a.num, p);
}

FqElem fq_pow(const FqElem& a, long e, const Int& p) {
    if (e == 0) return fq_one();
    FqElem base = e > 0 ? a : fq_inv(a, p);
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    FqElem acc = fq_one();
    FqElem sq = base;
    while (k) {
        if (k & 1) acc = fq_mul(acc, sq, p);
        if (k >>= 1) sq = fq_mul(sq, sq, p);
    }
    return acc;
}

namespace {

long ord_of_poly(FpPoly f, const FpPoly& prime, const Int& p) {
    long v = 0;
    while (true) {
        auto [q, r] = fp_divmod(f, prime, p);
        if (!r.is_zero()) return v;
        f = std::move(q);
        ++v;
    }
}

}  // namespace

long fq_ord_at(const FqElem& a, const FpPoly& prime, const Int& p) {
    if (a.is_zero()) throw_config("OrdOfZero", "valuation of 0 is undefined");
    return ord_of_poly(a.num, prime, p) - ord_of_poly(a.den, prime, p);
}

long fq_ord_inf(const FqElem& a) {
    if (a.is_zero()) throw_config("OrdOfZero", "valuation of 0 is undefined");
    return a.den.degree() - a.num.degree();
}

std::string fp_to_string(const FpPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        Int coef = f.at(i);
        if (coef == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || coef != 1) out += coef.get_str();
        if (i > 0) {
            if (coef != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::string fq_to_string(const FqElem& a) {
    if (a.is_zero()) return "0";
    std::string num = fp_to_string(a.num);
    if (a.den.is_one()) return num;
    bool num_simple = a.num.degree() == 0 || (a.num.degree() >= 1 && num.find('+') == std::string::npos && num.find('*') == std::string::npos);
    bool den_simple = a.den.degree() <= 1 && fp_to_string(a.den).find('+') == std::string::npos;
    std::string n = num_simple ? num : "(" + num + ")";
    std::string d = den_simple ? fp_to_string(a.den) : "(" + fp_to_string(a.den) + ")";
    return n + "/" + d;
}

}  // namespace rankone
