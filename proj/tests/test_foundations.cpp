#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "rankone/errors.hpp"
#include "rankone/fqfield.hpp"
#include "rankone/interval.hpp"
#include "rankone/intutil.hpp"
#include "rankone/laurent.hpp"
#include "rankone/modpoly.hpp"
#include "rankone/roots.hpp"
#include "rankone/zpoly.hpp"

using namespace rankone;

TEST_CASE("integer utilities") {
    CHECK(is_prime(Int(2)));
    CHECK(is_prime(Int(97)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(91)));

    std::map<Int, unsigned> f = factor_integer(Int(360));
    REQUIRE(f.size() == 3);
    CHECK(f[Int(2)] == 3);
    CHECK(f[Int(3)] == 2);
    CHECK(f[Int(5)] == 1);

    CHECK(padic_ord(Rat(48), Int(2)) == 4);
    CHECK(padic_ord(Rat(-27), Int(3)) == 3);
    CHECK(padic_ord(Rat(3) / Rat(8), Int(2)) == -3);
    CHECK(remove_prime_power(Int(48), Int(2)) == 3);
    CHECK(int_pow(Int(2), 10) == 1024);
    CHECK(rat_pow(Rat(3) / Rat(2), -2) == Rat(4) / Rat(9));
    CHECK(euler_phi(12) == 4);
    CHECK(max_torsion_order(2) >= 6);
}

TEST_CASE("decimal rendering rounds outward") {
    Rat third = Rat(1) / Rat(3);
    CHECK(decimal_floor(third, 3) == "0.333");
    CHECK(decimal_ceil(third, 3) == "0.334");
    Rat neg = Rat(-1) / Rat(3);
    CHECK(decimal_floor(neg, 3) == "-0.334");
    CHECK(decimal_ceil(neg, 3) == "-0.333");
    CHECK(decimal_floor(Rat(2), 2) == "2.00");
    CHECK(decimal_ceil(Rat(2), 2) == "2.00");
}

TEST_CASE("interval arithmetic endpoints") {
    RealInterval a(Rat(1), Rat(2));
    RealInterval b(Rat(-1), Rat(3));
    RealInterval s = a + b;
    CHECK(s.lo == 0);
    CHECK(s.hi == 5);
    RealInterval p = a * b;
    CHECK(p.lo == -2);
    CHECK(p.hi == 6);
    CHECK(b.contains_zero());
    CHECK(a.certainly_positive());
    CHECK_FALSE(b.certainly_positive());
    CHECK_THROWS_AS(a / b, Error);

    RealInterval q = abs(RealInterval(Rat(-3), Rat(1)));
    CHECK(q.lo == 0);
    CHECK(q.hi == 3);
}

TEST_CASE("log and sqrt enclosures") {
    RealInterval l2 = log_enclosure(Rat(2), 96);
    CHECK(l2.lo < Rat(693148) / Rat(1000000));
    CHECK(l2.hi > Rat(693147) / Rat(1000000));
    CHECK(l2.width() < Rat(1) / (Int(1) << 64));

    RealInterval s2 = sqrt_enclosure(RealInterval(Rat(2)), 96);
    CHECK(s2.lo * s2.lo <= 2);
    CHECK(s2.hi * s2.hi >= 2);
    CHECK(s2.width() < Rat(1) / (Int(1) << 64));

    RealInterval c = root_enclosure(RealInterval(Rat(8)), 3, 96);
    CHECK(c.lo <= 2);
    CHECK(c.hi >= 2);
    CHECK(c.width() < Rat(1) / (Int(1) << 32));

    RealInterval l1 = log_enclosure(Rat(1), 64);
    CHECK(l1.lo <= 0);
    CHECK(l1.hi >= 0);
}

TEST_CASE("rational polynomial division and interpolation") {
    QPoly f = QPoly::from({-1, 0, 1});  // x^2 - 1
    QPoly g = QPoly::from({-1, 1});     // x - 1
    auto [q, r] = q_divmod(f, g);
    CHECK(q == QPoly::from({1, 1}));
    CHECK(r.is_zero());

    std::vector<std::pair<Rat, Rat>> pts{{Rat(0), Rat(1)}, {Rat(1), Rat(2)}, {Rat(2), Rat(5)}};
    QPoly p = interpolate(pts);
    CHECK(p == QPoly::from({1, 0, 1}));
}

TEST_CASE("resultants and pair products") {
    ZPoly f = ZPoly::from({-2, 1});
    ZPoly g = ZPoly::from({-3, 1});
    Int r = resultant(f, g);
    CHECK((r == 1 || r == -1));

    // roots of x^2-x-1 multiply to -1, so the pair-product poly kills -1
    ZPoly fib = ZPoly::from({-1, -1, 1});
    ZPoly pp = pair_product_poly(fib);
    CHECK(z_eval(pp, Int(-1)) == 0);
}

TEST_CASE("real root isolation") {
    ZPoly f = ZPoly::from({-2, 0, 1});  // x^2 - 2
    auto iso = isolate_real_roots(q_from_z(f));
    REQUIRE(iso.roots.size() == 2);
    for (IsolatedRoot rt : iso.roots) {
        refine_root(iso.squarefree, rt, Rat(1) / (Int(1) << 100));
        RealInterval iv = rt.exact ? RealInterval(rt.value) : RealInterval(rt.lo, rt.hi);
        RealInterval sq = iv * iv;
        CHECK(sq.lo <= 2);
        CHECK(sq.hi >= 2);
    }

    CHECK(is_irreducible_over_q(ZPoly::from({1, 0, 1})));
    CHECK_FALSE(is_irreducible_over_q(ZPoly::from({-1, 0, 1})));

    ZPoly fib = ZPoly::from({-1, -1, 1});
    auto fr = factor_monic_squarefree(z_mul(fib, ZPoly::from({-2, 0, 1})));
    CHECK(fr.size() == 2);
}

TEST_CASE("characteristic polynomial of companion data") {
    QMatrix m{{Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    QPoly cp = char_poly(m);
    CHECK(cp == QPoly::from({-1, -1, 1}));
}

TEST_CASE("mod-p polynomial factorization") {
    Int p(2);
    FpPoly f = fp_from_coeffs({Int(0), Int(1), Int(1)}, p);  // x + x^2 = x(x+1)
    auto factors = fp_factor(f, p);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0].second == 1);
    CHECK(factors[1].second == 1);

    FpPoly a = fp_from_coeffs({Int(1), Int(1)}, p);
    FpPoly b = fp_from_coeffs({Int(0), Int(1)}, p);
    CHECK(fp_gcd(fp_mul(a, b, p), a, p) == fp_make_monic(a, p));

    auto [q, r] = fp_divmod(fp_mul(a, b, p), a, p);
    CHECK(r.is_zero());
    CHECK(q == b);
}

TEST_CASE("hensel lifting reaches the target modulus") {
    Int p(3);
    ZPoly f = ZPoly::from({-1, 0, 1});  // (x-1)(x+1) mod 3
    std::vector<FpPoly> base;
    for (const auto& [g, mult] : fp_factor(fp_from_coeffs(f.c, p), p)) base.push_back(g);
    REQUIRE(base.size() == 2);
    auto lifted = hensel_lift_monic(f.c, base, p, 5);
    REQUIRE(lifted.size() == 2);
    Int mod = int_pow(p, 5);
    for (const auto& g : lifted) {
        // each lifted factor divides f modulo 3^5
        CHECK(g.size() == 2);
        Int root((mod - g[0]) % mod);
        Int val(z_eval(f, root) % mod);
        if (val < 0) val += mod;
        CHECK(val == 0);
    }
}

TEST_CASE("complex root enclosures") {
    RootSystem fib(ZPoly::from({-1, -1, 1}));
    CHECK(fib.num_real() == 2);
    CHECK(fib.num_complex() == 0);
    RealInterval phi = fib.real_root(1, Rat(1) / (Int(1) << 80));
    RealInterval gold = phi * phi - phi - RealInterval(Rat(1));
    CHECK(gold.contains_zero());

    RootSystem quad(ZPoly::from({1, 0, 1}));
    CHECK(quad.num_real() == 0);
    CHECK(quad.num_complex() == 1);
    ComplexBox i_box = quad.complex_root(0, Rat(1) / (Int(1) << 60));
    CHECK(i_box.re.contains_zero());
    CHECK(i_box.im.lo <= 1);
    CHECK(i_box.im.hi >= 1);
}

TEST_CASE("function field canonical forms") {
    Int p(2);
    FqElem t = fq_t();
    FqElem one = fq_one();
    FqElem sum = fq_add(t, t, p);
    CHECK(sum.is_zero());

    FqElem w = fq_add(one, t, p);
    FqElem prod = fq_mul(t, w, p);  // t + t^2
    CHECK(fq_ord_at(prod, fp_from_coeffs({Int(0), Int(1)}, p), p) == 1);
    CHECK(fq_ord_at(prod, fp_from_coeffs({Int(1), Int(1)}, p), p) == 1);
    CHECK(fq_ord_inf(prod) == -2);

    FqElem inv_t = fq_inv(t, p);
    CHECK(fq_ord_inf(inv_t) == 1);
    CHECK(fq_mul(t, inv_t, p) == fq_one());

    // canonicalization collapses common factors
    FqElem raw = fq_make(fp_mul(t.num, w.num, p), w.num, p);
    CHECK(raw == t);
    CHECK(fq_to_string(t) == "t");
}

TEST_CASE("laurent polynomials evaluate through the presentation") {
    LaurentPoly m = lp_monomial({2, -1}, Int(3));
    LaurentPoly s = lp_add(m, lp_constant(2, Int(1)));
    CHECK_FALSE(s.is_zero());
    CHECK(lp_sub(s, s).is_zero());

    Presentation pres = make_number_field_presentation(
        "x2x3", 2, ZPoly::from({0, 1}), {QPoly::from({2}), QPoly::from({3})}, true);
    FieldElement v = evaluate(s, pres);  // 3 * 4/3 + 1 = 5
    CHECK(fe_as_rat(v, pres) == Rat(5));
}
