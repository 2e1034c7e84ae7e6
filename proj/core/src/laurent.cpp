#include "rankone/laurent.hpp"

namespace rankone {

namespace {

void check_dim(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.d != b.d) throw_config("DimensionMismatch", "Laurent polynomials of different dimension");
}

void insert_term(LaurentPoly& p, const ExponentVector& n, const Int& c) {
    if (c == 0) return;
    auto [it, fresh] = p.terms.emplace(n, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) p.terms.erase(it);
    }
}

}  // namespace

LaurentPoly lp_zero(int d) { return LaurentPoly{d, {}}; }

LaurentPoly lp_constant(int d, const Int& c) {
    LaurentPoly p{d, {}};
    if (c != 0) p.terms.emplace(ExponentVector(static_cast<size_t>(d), 0), c);
    return p;
}

LaurentPoly lp_monomial(const ExponentVector& n, const Int& c) {
    LaurentPoly p{static_cast<int>(n.size()), {}};
    if (c != 0) p.terms.emplace(n, c);
    return p;
}

LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b) {
    check_dim(a, b);
    LaurentPoly r = a;
    for (const auto& [n, c] : b.terms) insert_term(r, n, c);
    return r;
}

LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b) {
    check_dim(a, b);
    LaurentPoly r = a;
    for (const auto& [n, c] : b.terms) insert_term(r, n, Int(-c));
    return r;
}

LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b) {
    check_dim(a, b);
    LaurentPoly r{a.d, {}};
    for (const auto& [n, c] : a.terms)
        for (const auto& [m, e] : b.terms) insert_term(r, monomial_mul(n, m), Int(c * e));
    return r;
}

LaurentPoly lp_neg(const LaurentPoly& a) {
    LaurentPoly r = a;
    for (auto& [n, c] : r.terms) c = -c;
    return r;
}

FieldElement evaluate(const LaurentPoly& p, const Presentation& pres) {
    if (p.d != pres.d) throw_config("DimensionMismatch", "polynomial dimension does not match the system");
    FieldElement acc = fe_zero(pres);
    for (const auto& [n, c] : p.terms) {
        FieldElement term = fe_mul(fe_from_int(c, pres), power_product(n, pres), pres);
        acc = fe_add(acc, term, pres);
    }
    return acc;
}

}  // namespace rankone
