#include "rankone/trigpoly.hpp"

namespace rankone {

namespace {

bool g_equal(const GaussRat& a, const GaussRat& b) { return a.re == b.re && a.im == b.im; }

}  // namespace

TrigPolynomial make_trig_polynomial(PlaceEngine& eng,
                                    std::vector<std::pair<FieldElement, GaussRat>> terms,
                                    bool real_valued) {
    TrigPolynomial f;
    f.real_valued = real_valued;
    for (auto& [a, c] : terms) {
        auto it = f.coeffs.find(a);
        if (it == f.coeffs.end())
            f.coeffs.emplace(std::move(a), c);
        else
            it->second = g_add(it->second, c);
    }
    for (auto it = f.coeffs.begin(); it != f.coeffs.end();) {
        if (g_is_zero(it->second))
            it = f.coeffs.erase(it);
        else
            ++it;
    }
    for (const auto& [a, c] : f.coeffs) {
        if (!fe_is_zero(a) && !eng.in_ring(a))
            throw_config("SupportOutsideModule",
                         "character " + fe_to_string(a, eng.pres()) + " is not in the module");
    }
    if (real_valued) {
        for (const auto& [a, c] : f.coeffs) {
            const FieldElement neg = fe_neg(a, eng.pres());
            if (!g_equal(f.at(neg), g_conj(c)))
                throw_config("NotRealValued",
                             "coefficients lack the conjugate symmetry of a real function");
        }
    }
    return f;
}

GaussRat correlation(PlaceEngine& eng, const TrigPolynomial& f, const TrigPolynomial& g,
                     const ExponentVector& n) {
    const Presentation& pres = eng.pres();
    const FieldElement beta = power_product(n, pres);
    GaussRat acc;
    for (const auto& [b, gc] : g.coeffs) {
        if (fe_is_zero(b)) continue;
        const FieldElement matched = fe_neg(fe_mul(beta, b, pres), pres);
        const GaussRat fc = f.at(matched);
        if (g_is_zero(fc)) continue;
        acc = g_add(acc, g_mul(fc, gc));
    }
    return acc;
}

GaussRat periodic_pairing(PlaceEngine& eng, const TrigPolynomial& f, const ExponentVector& n) {
    if (is_zero(n)) throw_config("ZeroExponent", "pairing needs n != 0");
    const Presentation& pres = eng.pres();
    const FieldElement c = fe_sub(power_product(n, pres), fe_one(pres), pres);
    if (fe_is_zero(c))
        throw_config("FixInfinite", "u^n acts as the identity; the period-n measure is undefined");
    GaussRat acc;
    for (const auto& [a, fc] : f.coeffs) {
        if (fe_is_zero(a)) continue;
        if (eng.in_ring(fe_div(a, c, pres))) acc = g_add(acc, fc);
    }
    return acc;
}

}  // namespace rankone
