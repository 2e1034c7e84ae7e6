#include "rankone/periodic.hpp"

#include <algorithm>

#include "rankone/intmat.hpp"

namespace rankone {

namespace {

FieldElement beta_minus_one(PlaceEngine& eng, const ExponentVector& n) {
    if (is_zero(n)) throw_config("ZeroExponent", "fixed-point counts need n != 0");
    const Presentation& pres = eng.pres();
    FieldElement x = fe_sub(power_product(n, pres), fe_one(pres), pres);
    if (fe_is_zero(x))
        throw_config("FixInfinite", "u^n acts as the identity; the fixed group is infinite");
    return x;
}

}  // namespace

FixCount fix_count_product(PlaceEngine& eng, const ExponentVector& n, long precision) {
    const FieldElement x = beta_minus_one(eng, n);
    long prec = std::max<long>(precision, 64);
    for (int round = 0; round < 6; ++round, prec *= 2) {
        const RealInterval val = eng.product_over_S(x, prec);
        if (!(val.width() * 2 < 1)) continue;
        Int c;
        mpz_cdiv_q(c.get_mpz_t(), val.lo.get_num().get_mpz_t(), val.lo.get_den().get_mpz_t());
        if (Rat(c) > val.hi || c < 1)
            throw_precision("EnclosureNotIntegral",
                            "count enclosure excludes every positive integer");
        return {n, c, "product"};
    }
    throw_precision("EnclosureNotIntegral", "product enclosure failed to reach width 1/2");
}

FixCount fix_count_oracle(PlaceEngine& eng, const ExponentVector& n) {
    const FieldElement x = beta_minus_one(eng, n);
    const Presentation& pres = eng.pres();
    for (const Place& v : eng.S().places)
        if (v.is_explicit)
            throw_config("UnsupportedBackendShape",
                         "oracle cannot strip user-supplied places");

    if (pres.backend() == Backend::function_field) {
        const Int& q = pres.characteristic;
        FpPoly num = x.ff().num;
        for (const Place& v : eng.S().places) {
            if (v.kind != PlaceKind::ff_finite) continue;
            while (true) {
                auto [quo, rem] = fp_divmod(num, v.poly, q);
                if (!rem.is_zero()) break;
                num = quo;
            }
        }
        bool has_inf = false;
        for (const Place& v : eng.S().places)
            if (v.kind == PlaceKind::ff_inf) has_inf = true;
        long e = num.degree();
        if (!has_inf) e += fq_ord_inf(x.ff());
        return {n, int_pow(q, static_cast<unsigned long>(e)), "oracle"};
    }

    if (pres.field_degree() == 1) {
        const Rat r = fe_as_rat(x, pres);
        Int num = abs(r.get_num());
        for (const Place& v : eng.S().places)
            if (v.kind == PlaceKind::finite) num = remove_prime_power(num, v.prime);
        return {n, num, "oracle"};
    }

    // Monogenic field: [Z[alpha] : m*x*Z[alpha]] = prod of the Smith normal
    // form diagonal of the multiplication matrix of m*x, then the scaling
    // m^deg and the S-parts divide out.
    const QMatrix mm = multiplication_matrix(x, pres);
    const size_t deg = mm.size();
    Int m(1);
    for (const auto& row : mm)
        for (const Rat& e : row) {
            Int den = e.get_den();
            mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), den.get_mpz_t());
        }
    IMat im(deg, std::vector<Int>(deg));
    for (size_t i = 0; i < deg; ++i)
        for (size_t j = 0; j < deg; ++j) {
            const Rat scaled = mm[i][j] * Rat(m);
            im[i][j] = scaled.get_num();
        }
    Int raw(1);
    for (const Int& d : snf_diagonal(im)) raw *= abs(d);
    Rat count{raw};
    count /= rat_pow(Rat(m), static_cast<long>(deg));
    for (const Place& v : eng.S().places) {
        if (v.kind != PlaceKind::finite) continue;
        const long o = eng.ord_at(x, v);
        count /= rat_pow(Rat(int_pow(v.prime, v.res_degree)), o);
    }
    if (count.get_den() != 1 || count < 1)
        throw_precision("OracleNonIntegral", "stripped lattice index is not a positive integer");
    return {n, count.get_num(), "oracle"};
}

}  // namespace rankone
