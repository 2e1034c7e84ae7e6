#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "helpers.hpp"
#include "rankone/errors.hpp"
#include "rankone/exhaustive.hpp"
#include "rankone/rates.hpp"

using namespace rankone;
using namespace rankone::testing;

TEST_CASE("theta schedules") {
    ThetaSchedule g = ThetaSchedule::geometric_base(Rat(2));
    CHECK(g.value(1) == Rat(2));
    CHECK(g.value(3) == Rat(8));
    CHECK_THROWS_WITH_AS(g.value(0), doctest::Contains("ScheduleRange"), Error);
    CHECK_THROWS_WITH_AS(ThetaSchedule::geometric_base(Rat(1)),
                         doctest::Contains("ScheduleBase"), Error);

    ThetaSchedule u = ThetaSchedule::user({Rat(3) / Rat(2), Rat(2), Rat(7)});
    CHECK(u.value(2) == Rat(2));
    CHECK_THROWS_WITH_AS(u.value(4), doctest::Contains("ScheduleRange"), Error);
    CHECK_THROWS_WITH_AS(ThetaSchedule::user({}), doctest::Contains("ScheduleList"), Error);
    CHECK_THROWS_WITH_AS(ThetaSchedule::user({Rat(2), Rat(2)}),
                         doctest::Contains("ScheduleList"), Error);
    CHECK_THROWS_WITH_AS(ThetaSchedule::user({Rat(-1), Rat(2)}),
                         doctest::Contains("ScheduleList"), Error);
}

TEST_CASE("exhaustive set for doubling at theta 2") {
    Presentation x2 = make_x2();
    PlaceEngine eng(x2);
    ExhaustiveSet h = enumerate_Hk(eng, Rat(2));
    std::set<Rat> want{Rat(1),  Rat(-1), Rat(2),          Rat(-2),
                       Rat(1) / Rat(2), Rat(-1) / Rat(2), Rat(3) / Rat(2), Rat(-3) / Rat(2)};
    CHECK(as_rat_set(h.elements, x2) == want);

    ExhaustiveSet h1 = enumerate_Hk(eng, Rat(1));
    CHECK(as_rat_set(h1.elements, x2) == std::set<Rat>{Rat(1), Rat(-1)});

    CHECK_THROWS_WITH_AS(enumerate_Hk(eng, Rat(1) / Rat(2)), doctest::Contains("ThetaRange"),
                         Error);
    CHECK_THROWS_WITH_AS(enumerate_Hk(eng, Rat(64), 10), doctest::Contains("SetTooLarge"), Error);
}

TEST_CASE("enumeration needs the maximality attestation") {
    Presentation pres = make_number_field_presentation("x2na", 1, ZPoly::from({0, 1}),
                                                       {QPoly::from({2})}, false);
    PlaceEngine eng(pres);
    CHECK_THROWS_WITH_AS(enumerate_Hk(eng, Rat(2)), doctest::Contains("MaximalityNotAttested"),
                         Error);
}

TEST_CASE("enumeration rejects explicit user places") {
    std::vector<ExplicitPlaceData> places(1);
    places[0].prime = Int(2);
    places[0].ram_index = 1;
    places[0].res_degree = 1;
    places[0].gen_ords = {1};
    Presentation pres = make_number_field_presentation("x2exp", 1, ZPoly::from({0, 1}),
                                                       {QPoly::from({2})}, true, places);
    PlaceEngine eng(pres);
    CHECK_THROWS_WITH_AS(enumerate_Hk(eng, Rat(2)), doctest::Contains("RamifiedUnsupported"),
                         Error);
}

namespace {

long rat_ord(const Rat& v, const Int& p) {
    long ord = 0;
    Int n = v.get_num(), d = v.get_den();
    while (n % p == 0) {
        n /= p;
        ++ord;
    }
    while (d % p == 0) {
        d /= p;
        --ord;
    }
    return ord;
}

bool abs_in_window(const Rat& val, const Rat& theta) { return val <= theta && val * theta >= 1; }

// Complete scan of Z[1/2] resp. Z[1/6] for the S-unit ball at threshold
// theta: every candidate is m/den with den the largest admissible p-power
// denominator and |m| <= theta * den.
std::set<Rat> naive_s_unit_ball(const Rat& theta, bool with3) {
    std::set<Rat> out;
    unsigned long l2 = 0, l3 = 0;
    while (rat_pow(Rat(2), static_cast<long>(l2) + 1) <= theta) ++l2;
    while (with3 && rat_pow(Rat(3), static_cast<long>(l3) + 1) <= theta) ++l3;
    Int den = int_pow(Int(2), l2) * (with3 ? int_pow(Int(3), l3) : Int(1));
    Rat reach = theta * Rat(den);
    Int num_bound = reach.get_num() / reach.get_den();
    for (Int m(1); m <= num_bound; ++m) {
        Rat a = Rat(m) / Rat(den);
        if (!abs_in_window(a, theta)) continue;
        if (!abs_in_window(rat_pow(Rat(2), -rat_ord(a, Int(2))), theta)) continue;
        if (with3 && !abs_in_window(rat_pow(Rat(3), -rat_ord(a, Int(3))), theta)) continue;
        out.insert(a);
        out.insert(-a);
    }
    return out;
}

}  // namespace

TEST_CASE("enumeration matches a naive complete scan") {
    Presentation x2 = make_x2();
    PlaceEngine eng2(x2);
    Presentation x2x3 = make_x2x3();
    PlaceEngine eng23(x2x3);
    for (long th : {2, 3, 6, 12}) {
        Rat theta(th);
        CHECK(as_rat_set(enumerate_Hk(eng2, theta).elements, x2) == naive_s_unit_ball(theta, false));
        CHECK(as_rat_set(enumerate_Hk(eng23, theta).elements, x2x3) ==
              naive_s_unit_ball(theta, true));
    }
}

TEST_CASE("x2x3 spot membership at theta 6") {
    Presentation x2x3 = make_x2x3();
    PlaceEngine eng(x2x3);
    auto rats = as_rat_set(enumerate_Hk(eng, Rat(6)).elements, x2x3);
    for (long v : {1, 2, 3, 6, 4}) CHECK(rats.count(Rat(v)) == 1);
    CHECK(rats.count(Rat(1) / Rat(6)) == 1);
    CHECK(rats.count(Rat(5) / Rat(6)) == 1);
    CHECK(rats.count(Rat(7)) == 0);
    CHECK(rats.count(Rat(5)) == 1);
    CHECK(rats.count(Rat(0)) == 0);
}

TEST_CASE("quadratic field enumeration matches a coefficient box scan") {
    Presentation fib = make_fib();
    PlaceEngine eng(fib);
    for (long th : {2, 3, 5}) {
        Rat theta(th);
        ExhaustiveSet h = enumerate_Hk(eng, theta);
        std::set<FieldElement> got(h.elements.begin(), h.elements.end());
        // Z[phi] is the maximal order; scan a generous coefficient box
        std::set<FieldElement> naive;
        for (long a = -12; a <= 12; ++a)
            for (long b = -12; b <= 12; ++b) {
                FieldElement e = fe_reduce(QPoly{{Rat(a), Rat(b)}}, fib);
                if (hk_member(eng, theta, e)) naive.insert(e);
            }
        CHECK(got == naive);
        for (const auto& e : h.elements) CHECK(hk_member(eng, theta, e));
    }
}

TEST_CASE("function field enumeration matches a naive scan") {
    Presentation led = make_ledrappier();
    PlaceEngine eng(led);
    for (long th : {2, 4}) {
        Rat theta(th);
        ExhaustiveSet h = enumerate_Hk(eng, theta);
        std::set<FieldElement> got(h.elements.begin(), h.elements.end());
        // all num/(t^i (1+t)^j) with i, j <= 2; the infinite place caps
        // deg num at deg den + 2 <= 6
        std::set<FieldElement> naive;
        Int p(2);
        FpPoly t = fp_from_coeffs({Int(0), Int(1)}, p);
        FpPoly w = fp_from_coeffs({Int(1), Int(1)}, p);
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; j <= 2; ++j) {
                FpPoly den = fp_one();
                for (int k = 0; k < i; ++k) den = fp_mul(den, t, p);
                for (int k = 0; k < j; ++k) den = fp_mul(den, w, p);
                for (unsigned long mask = 1; mask < 128; ++mask) {
                    std::vector<Int> coeffs;
                    for (int bit = 0; bit < 7; ++bit) coeffs.push_back(Int((mask >> bit) & 1));
                    FieldElement e = fe_from_fq(fq_make(fp_from_coeffs(coeffs, p), den, p));
                    if (hk_member(eng, theta, e)) naive.insert(e);
                }
            }
        CHECK(got == naive);
    }
    ExhaustiveSet h2 = enumerate_Hk(eng, Rat(2));
    std::set<FieldElement> got(h2.elements.begin(), h2.elements.end());
    CHECK(got.count(fe_parse("t", led)) == 1);
    CHECK(got.count(fe_parse("1+t", led)) == 1);
    CHECK(got.count(fe_parse("t/(1+t)", led)) == 1);
    CHECK(got.count(fe_parse("t^2+t", led)) == 0);
}

TEST_CASE("sets grow with k") {
    Presentation x2x3 = make_x2x3();
    PlaceEngine eng(x2x3);
    auto h1 = as_rat_set(enumerate_Hk(eng, Rat(2)).elements, x2x3);
    auto h2 = as_rat_set(enumerate_Hk(eng, Rat(4)).elements, x2x3);
    auto h3 = as_rat_set(enumerate_Hk(eng, Rat(8)).elements, x2x3);
    CHECK(h1.size() < h2.size());
    for (const Rat& a : h1) CHECK(h2.count(a) == 1);
    for (const Rat& a : h2) CHECK(h3.count(a) == 1);
}

TEST_CASE("property I at hand-checked exponents") {
    Presentation x2 = make_x2();
    PlaceEngine eng(x2);
    ExhaustiveSet h = enumerate_Hk(eng, Rat(2));

    PropertyCheck c1 = check_property_I(eng, h, {1});
    CHECK_FALSE(c1.holds);
    REQUIRE(c1.witness.has_value());
    CHECK(hk_member(eng, Rat(2), *c1.witness));
    CHECK(hk_member(eng, Rat(2), *c1.witness_image));

    CHECK(check_property_I(eng, h, {3}).holds);
    CHECK_FALSE(check_property_I(eng, h, {-2}).holds);
    CHECK(check_property_I(eng, h, {-3}).holds);
    CHECK_THROWS_WITH_AS(check_property_I(eng, h, {0}), doctest::Contains("ZeroExponent"), Error);
}

TEST_CASE("property II literal and strong at hand-checked exponents") {
    Presentation x2 = make_x2();
    PlaceEngine eng(x2);
    ExhaustiveSet h = enumerate_Hk(eng, Rat(2));

    CHECK_FALSE(check_property_II(eng, h, {1}, IIVariant::literal).holds);
    CHECK(check_property_II(eng, h, {3}, IIVariant::literal).holds);

    // beta_2 - 1 = 3 and 3 * (1/2) = 3/2: both 1/2 and 3/2 lie in H, so the
    // literal and strong forms fail together at n = 2
    PropertyCheck lit = check_property_II(eng, h, {2}, IIVariant::literal);
    CHECK_FALSE(lit.holds);
    REQUIRE(lit.witness.has_value());
    CHECK(fe_as_rat(*lit.witness_image, x2) == fe_as_rat(*lit.witness, x2) * Rat(3));

    PropertyCheck strong = check_property_II(eng, h, {2}, IIVariant::strong);
    CHECK_FALSE(strong.holds);
    REQUIRE(strong.witness.has_value());
    CHECK(fe_as_rat(*strong.witness_image, x2) ==
          fe_as_rat(*strong.witness, x2) * Rat(3));

    CHECK(check_property_II(eng, h, {4}, IIVariant::strong).holds);
    CHECK(check_property_II(eng, h, {3}, IIVariant::strong).holds);
}

TEST_CASE("strong II implies literal II") {
    Presentation x2x3 = make_x2x3();
    PlaceEngine eng(x2x3);
    ExhaustiveSet h = enumerate_Hk(eng, Rat(4));
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            if (a == 0 && b == 0) continue;
            ExponentVector n{a, b};
            if (check_property_II(eng, h, n, IIVariant::strong).holds)
                CHECK(check_property_II(eng, h, n, IIVariant::literal).holds);
        }
}

TEST_CASE("property I is symmetric in the exponent sign") {
    Presentation x2 = make_x2();
    PlaceEngine eng(x2);
    ExhaustiveSet h = enumerate_Hk(eng, Rat(4));
    for (long n = 1; n <= 8; ++n)
        CHECK(check_property_I(eng, h, {n}).holds == check_property_I(eng, h, {-n}).holds);
}

TEST_CASE("degenerate exponent with beta equal to one") {
    Presentation nm = make_nonmix();
    PlaceEngine eng(nm);
    ExhaustiveSet h = enumerate_Hk(eng, Rat(2));
    ExponentVector n{1, -1};
    PropertyCheck lit = check_property_II(eng, h, n, IIVariant::literal);
    CHECK(lit.holds);
    PropertyCheck strong = check_property_II(eng, h, n, IIVariant::strong);
    CHECK_FALSE(strong.holds);
    REQUIRE(strong.witness.has_value());
    CHECK(fe_is_zero(*strong.witness_image));
    // beta_n = 1 keeps every element fixed, so property I fails outright
    CHECK_FALSE(check_property_I(eng, h, n).holds);
}

TEST_CASE("shell points are sorted and complete") {
    auto pts = shell_points(2, Int(8));
    CHECK(pts.size() == 24);
    CHECK(pts.front() == ExponentVector{-1, 0});
    for (size_t i = 1; i < pts.size(); ++i) {
        Int a = exp_norm_sq(pts[i - 1]);
        Int b = exp_norm_sq(pts[i]);
        CHECK(a <= b);
        if (a == b) CHECK(pts[i - 1] < pts[i]);
    }
    CHECK(exp_norm_sq(pts.back()) == 8);
    auto one_d = shell_points(1, Int(9));
    CHECK(one_d.size() == 6);
}

TEST_CASE("radius scan on the doubling system") {
    Presentation x2 = make_x2();
    PlaceEngine eng(x2);
    ExhaustiveSet h = enumerate_Hk(eng, Rat(2));

    RadiusReport r = scan_radius(eng, h, ScanProperty::property_I, Rat(10));
    CHECK(r.has_violation);
    CHECK(r.last_violation_norm_sq == 4);
    CHECK_FALSE(r.boundary_hit);
    REQUIRE(r.witness_n.has_value());
    CHECK(*r.witness_n == ExponentVector{-2});

    RadiusReport r2 = scan_radius(eng, h, ScanProperty::property_II_literal, Rat(10));
    CHECK(r2.last_violation_norm_sq == 4);
    CHECK_FALSE(r2.boundary_hit);

    // a window that stops exactly at the outermost violation flags the edge
    RadiusReport edge = scan_radius(eng, h, ScanProperty::property_I, Rat(2));
    CHECK(edge.has_violation);
    CHECK(edge.boundary_hit);

    CHECK_THROWS_WITH_AS(scan_radius(eng, h, ScanProperty::property_I, Rat(0)),
                         doctest::Contains("WindowRange"), Error);
    ExhaustiveSet h1 = enumerate_Hk(eng, Rat(1));
    CHECK_THROWS_WITH_AS(scan_radius(eng, h1, ScanProperty::property_I, Rat(5)),
                         doctest::Contains("ThetaRange"), Error);
}

TEST_CASE("radius bound from the separation constant") {
    // ||n|| > (2/C) log theta forces property I; C(x2) = log 2 gives 2k
    Presentation x2 = make_x2();
    PlaceEngine eng(x2);
    for (long k = 1; k <= 3; ++k) {
        Rat theta = rat_pow(Rat(2), k);
        ExhaustiveSet h = enumerate_Hk(eng, theta);
        for (long n = 2 * k + 1; n <= 2 * k + 4; ++n) {
            CHECK(check_property_I(eng, h, {n}).holds);
            CHECK(check_property_I(eng, h, {-n}).holds);
            CHECK(check_property_II(eng, h, {n}, IIVariant::strong).holds);
        }
    }
}

TEST_CASE("rate functions") {
    RealInterval B(Rat(28853901) / Rat(10000000), Rat(28853902) / Rat(10000000));
    RealInterval phi = phi_rate(B, Rat(2), 96);
    CHECK(phi.lo.get_d() > 1.9999);
    CHECK(phi.hi.get_d() < 2.0001);
    CHECK(phi_rate(B, Rat(4), 96).lo > phi.lo);
    CHECK_THROWS_WITH_AS(phi_rate(RealInterval(Rat(0), Rat(1)), Rat(2), 96),
                         doctest::Contains("NonpositiveRate"), Error);
    CHECK_THROWS_WITH_AS(phi_rate(B, Rat(-1), 96), doctest::Contains("ThetaRange"), Error);

    // sigma = 1, A = 2 kills the constant: psi = max(C1, 2 log theta / C2)
    RealInterval psi = psi_rate(1, Rat(2), Rat(1), Rat(1), Rat(2), 96);
    CHECK(psi.lo.get_d() > 1.386);
    CHECK(psi.hi.get_d() < 1.387);
    RealInterval psi_c1 = psi_rate(1, Rat(2), Rat(5), Rat(1), Rat(2), 96);
    CHECK(psi_c1.lo == 5);
}

TEST_CASE("interval least squares") {
    std::vector<std::pair<RealInterval, RealInterval>> pts;
    for (long x = 1; x <= 4; ++x)
        pts.emplace_back(RealInterval(Rat(x)), RealInterval(Rat(2 * x + 1)));
    FitResult fit = ols_fit(pts);
    CHECK(fit.slope.lo == 2);
    CHECK(fit.slope.hi == 2);
    CHECK(fit.intercept.lo == 1);
    CHECK(fit.intercept.hi == 1);
    CHECK(fit.points == 4);

    CHECK_THROWS_WITH_AS(ols_fit({{RealInterval(Rat(1)), RealInterval(Rat(1))}}),
                         doctest::Contains("FitUnderdetermined"), Error);
    std::vector<std::pair<RealInterval, RealInterval>> deg{
        {RealInterval(Rat(1)), RealInterval(Rat(1))}, {RealInterval(Rat(1)), RealInterval(Rat(2))}};
    CHECK_THROWS_WITH_AS(ols_fit(deg), doctest::Contains("FitDegenerate"), Error);
}
