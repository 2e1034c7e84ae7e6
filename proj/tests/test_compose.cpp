#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "rankone/compose.hpp"
#include "rankone/config.hpp"
#include "rankone/errors.hpp"
#include "rankone/report.hpp"

using namespace rankone;
using namespace rankone::testing;

namespace {

CElem leaf_rat(const Rat& a, const Presentation& pres) {
    return celem_leaf(fe_from_rat(a, pres));
}

CElem pair_rat(const Rat& a, const Rat& b, const Presentation& p1, const Presentation& p2) {
    return celem_tuple({leaf_rat(a, p1), leaf_rat(b, p2)});
}

}  // namespace

TEST_CASE("cyclic piece basics") {
    ComposedPtr m = ComposedModule::cyclic(make_x2());
    CHECK(m->shape() == ComposedShape::cyclic);
    CHECK(m->dimension() == 1);
    CHECK(m->describe() == "cyclic(x2)");
    const Presentation& pres = m->leaf_engine().pres();

    CElem three = leaf_rat(Rat(3), pres);
    CElem six = m->apply({1}, three);
    CHECK(six == leaf_rat(Rat(6), pres));
    CHECK(m->apply({-1}, six) == three);
    CHECK(m->add(three, three) == six);
    CHECK(m->subtract(three, three) == m->zero());
    CHECK(celem_is_zero(m->zero()));

    CHECK_THROWS_WITH_AS(ComposedModule::cyclic(make_nonmix()),
                         doctest::Contains("LeafNotMixing"), Error);
}

TEST_CASE("direct sum enumeration") {
    ComposedPtr m = ComposedModule::direct_sum(
        {ComposedModule::cyclic(make_x2()), ComposedModule::cyclic(make_x3())});
    CHECK(m->dimension() == 1);
    CHECK(m->describe() == "sum(cyclic(x2), cyclic(x3))");

    std::vector<CElem> h = m->enumerate_H(Rat(2));
    // 8 leaf choices + zero on the left, 4 + zero on the right, minus zero
    CHECK(h.size() == 44);
    CHECK(std::is_sorted(h.begin(), h.end()));

    Presentation x2 = make_x2();
    Presentation x3 = make_x3();
    std::set<CElem> hs(h.begin(), h.end());
    CHECK(hs.count(pair_rat(Rat(1), Rat(0), x2, x3)) == 1);
    CHECK(hs.count(pair_rat(Rat(0), Rat(1), x2, x3)) == 1);
    CHECK(hs.count(pair_rat(Rat(3) / Rat(2), Rat(-2), x2, x3)) == 1);
    CHECK(hs.count(pair_rat(Rat(3), Rat(1), x2, x3)) == 0);
    CHECK(hs.count(pair_rat(Rat(0), Rat(0), x2, x3)) == 0);

    CHECK_THROWS_WITH_AS(m->enumerate_H(Rat(2), 10), doctest::Contains("SetTooLarge"), Error);
    CHECK_THROWS_WITH_AS(ComposedModule::direct_sum({}), doctest::Contains("EmptySum"), Error);
    CHECK_THROWS_WITH_AS(
        ComposedModule::direct_sum(
            {ComposedModule::cyclic(make_x2()), ComposedModule::cyclic(make_x2x3())}),
        doctest::Contains("DimensionMismatch"), Error);
}

TEST_CASE("extension action for the Jordan block over doubling") {
    ComposedPtr sub = ComposedModule::cyclic(make_x2());
    ComposedPtr quot = ComposedModule::cyclic(make_x2());
    Presentation x2 = make_x2();
    ComposedPtr m =
        ComposedModule::extension(sub, quot, {fe_one(x2)}, {});
    CHECK(m->shape() == ComposedShape::extension);
    CHECK(m->dimension() == 1);

    // u(l, q) = (2l + q, 2q)
    CElem e01 = pair_rat(Rat(0), Rat(1), x2, x2);
    CHECK(m->apply({1}, e01) == pair_rat(Rat(1), Rat(2), x2, x2));
    CElem e12 = pair_rat(Rat(1), Rat(2), x2, x2);
    CHECK(m->apply({-1}, m->apply({1}, e12)) == e12);
    CHECK(m->apply({2}, e01) == pair_rat(Rat(4), Rat(4), x2, x2));

    // (u - 1)(l, q) = (l + q, q)
    auto div1 = m->divide_un_minus_one(pair_rat(Rat(3), Rat(2), x2, x2), {1});
    REQUIRE(div1.has_value());
    CHECK(*div1 == pair_rat(Rat(1), Rat(2), x2, x2));

    // (u^2 - 1)(l, q) = (3l + 4q, 3q)
    auto div2 = m->divide_un_minus_one(pair_rat(Rat(7), Rat(3), x2, x2), {2});
    REQUIRE(div2.has_value());
    CHECK(*div2 == pair_rat(Rat(1), Rat(1), x2, x2));
    CHECK_FALSE(m->divide_un_minus_one(pair_rat(Rat(1), Rat(1), x2, x2), {2}).has_value());
}

TEST_CASE("extension constructor rejections") {
    Presentation x2 = make_x2();
    auto cyc_x2 = [] { return ComposedModule::cyclic(make_x2()); };

    CHECK_THROWS_WITH_AS(
        ComposedModule::extension(cyc_x2(), ComposedModule::cyclic(make_fib()), {fe_one(x2)}, {}),
        doctest::Contains("ExtensionFieldMismatch"), Error);

    CHECK_THROWS_WITH_AS(
        ComposedModule::extension(cyc_x2(), cyc_x2(), {fe_one(x2), fe_one(x2)}, {}),
        doctest::Contains("CocycleShape"), Error);

    ComposedPtr sum = ComposedModule::direct_sum({cyc_x2()});
    CHECK_THROWS_WITH_AS(ComposedModule::extension(sum, cyc_x2(), {fe_one(x2)}, {}),
                         doctest::Contains("ExtensionShape"), Error);

    std::map<FieldElement, FieldElement> bad_reps{{fe_one(x2), fe_zero(x2)}};
    CHECK_THROWS_WITH_AS(ComposedModule::extension(cyc_x2(), cyc_x2(), {fe_one(x2)}, bad_reps),
                         doctest::Contains("RepsMissingZero"), Error);

    std::map<FieldElement, FieldElement> partial{{fe_zero(x2), fe_zero(x2)},
                                                 {fe_one(x2), fe_zero(x2)}};
    ComposedPtr holed = ComposedModule::extension(cyc_x2(), cyc_x2(), {fe_one(x2)}, partial);
    CHECK_THROWS_WITH_AS(holed->enumerate_H(Rat(2)), doctest::Contains("RepsNotSection"), Error);
}

TEST_CASE("cocycle must commute across coordinates") {
    // bL = (2, 3), bQ = (3, 2): (bL_i - bQ_i) gamma_j = (bL_j - bQ_j) gamma_i
    // forces gamma_2 = -gamma_1
    Presentation q2 = make_number_field_presentation(
        "sub23", 2, ZPoly::from({0, 1}), {QPoly::from({2}), QPoly::from({3})}, true);
    Presentation q3 = make_number_field_presentation(
        "quot32", 2, ZPoly::from({0, 1}), {QPoly::from({3}), QPoly::from({2})}, true);
    auto sub = ComposedModule::cyclic(q2);
    auto quot = ComposedModule::cyclic(q3);
    CHECK_THROWS_WITH_AS(
        ComposedModule::extension(sub, quot, {fe_one(q2), fe_one(q2)}, {}),
        doctest::Contains("CocycleNotCommuting"), Error);
    ComposedPtr ok = ComposedModule::extension(
        sub, quot, {fe_one(q2), fe_neg(fe_one(q2), q2)}, {});
    CHECK(ok->dimension() == 2);
    // commuting verified by value: u_1 u_2 e = u_2 u_1 e
    CElem e = pair_rat(Rat(1), Rat(1), q2, q3);
    CHECK(ok->apply({1, 0}, ok->apply({0, 1}, e)) == ok->apply({0, 1}, ok->apply({1, 0}, e)));
}

TEST_CASE("leaf properties transfer to the sum") {
    ComposedPtr m = ComposedModule::direct_sum(
        {ComposedModule::cyclic(make_x2()), ComposedModule::cyclic(make_x3())});
    std::vector<CElem> h = m->enumerate_H(Rat(2));

    Presentation x2 = make_x2();
    Presentation x3 = make_x3();
    PlaceEngine e2(x2), e3(x3);
    ExhaustiveSet h2 = enumerate_Hk(e2, Rat(2));
    ExhaustiveSet h3 = enumerate_Hk(e3, Rat(2));

    for (long n = 1; n <= 6; ++n) {
        for (long s : {n, -n}) {
            bool leaf_ok = check_property_I(e2, h2, {s}).holds &&
                           check_property_I(e3, h3, {s}).holds;
            if (leaf_ok) CHECK(composed_property_I(*m, h, {s}).holds);
            bool leaf_strong = check_property_II(e2, h2, {s}, IIVariant::strong).holds &&
                               check_property_II(e3, h3, {s}, IIVariant::strong).holds;
            if (leaf_strong)
                CHECK(composed_property_II(*m, h, {s}, IIVariant::strong).holds);
        }
    }

    ComposedCheck bad = composed_property_I(*m, h, {1});
    CHECK_FALSE(bad.holds);
    REQUIRE(bad.witness.has_value());
    CHECK_THROWS_WITH_AS(composed_property_I(*m, h, {0}), doctest::Contains("ZeroExponent"),
                         Error);
}

TEST_CASE("leaf properties transfer to the extension") {
    Presentation x2 = make_x2();
    ComposedPtr m = ComposedModule::extension(ComposedModule::cyclic(make_x2()),
                                              ComposedModule::cyclic(make_x2()), {fe_one(x2)},
                                              {});
    std::vector<CElem> h = m->enumerate_H(Rat(2));
    CHECK(h.size() == 80);

    PlaceEngine e2(x2);
    ExhaustiveSet h2 = enumerate_Hk(e2, Rat(2));
    for (long n = 1; n <= 6; ++n) {
        for (long s : {n, -n}) {
            if (check_property_I(e2, h2, {s}).holds)
                CHECK(composed_property_I(*m, h, {s}).holds);
            if (check_property_II(e2, h2, {s}, IIVariant::strong).holds)
                CHECK(composed_property_II(*m, h, {s}, IIVariant::strong).holds);
        }
    }
    CHECK_FALSE(composed_property_I(*m, h, {1}).holds);
}

TEST_CASE("split extension agrees with the direct sum") {
    Presentation x2 = make_x2();
    ComposedPtr split = ComposedModule::extension(
        ComposedModule::cyclic(make_x2()), ComposedModule::cyclic(make_x2()), {fe_zero(x2)}, {});
    ComposedPtr sum = ComposedModule::direct_sum(
        {ComposedModule::cyclic(make_x2()), ComposedModule::cyclic(make_x2())});

    std::vector<CElem> hs = split->enumerate_H(Rat(2));
    std::vector<CElem> hd = sum->enumerate_H(Rat(2));
    CHECK(hs == hd);

    for (long n = 1; n <= 4; ++n) {
        CHECK(composed_property_I(*split, hs, {n}).holds ==
              composed_property_I(*sum, hd, {n}).holds);
        CHECK(composed_property_II(*split, hs, {n}, IIVariant::literal).holds ==
              composed_property_II(*sum, hd, {n}, IIVariant::literal).holds);
        CHECK(composed_property_II(*split, hs, {n}, IIVariant::strong).holds ==
              composed_property_II(*sum, hd, {n}, IIVariant::strong).holds);
    }
}

TEST_CASE("restriction to a vanishing component matches the surviving leaf") {
    ComposedPtr sum = ComposedModule::direct_sum(
        {ComposedModule::cyclic(make_x2()), ComposedModule::cyclic(make_x3())});
    ComposedPtr restr =
        ComposedModule::restriction(sum, predicate_components_zero({1}), "second_zero");
    CHECK(restr->describe() == "restrict(sum(cyclic(x2), cyclic(x3)), second_zero)");

    std::vector<CElem> h = restr->enumerate_H(Rat(2));
    Presentation x2 = make_x2();
    PlaceEngine e2(x2);
    ExhaustiveSet h2 = enumerate_Hk(e2, Rat(2));
    CHECK(h.size() == h2.elements.size());

    for (long n = 1; n <= 5; ++n)
        CHECK(composed_property_I(*restr, h, {n}).holds ==
              check_property_I(e2, h2, {n}).holds);

    ComposedPtr nothing = ComposedModule::restriction(sum, predicate_zero(), "zero");
    CHECK(nothing->enumerate_H(Rat(2)).empty());

    ComposedPtr everything = ComposedModule::restriction(sum, predicate_all(), "all");
    CHECK(everything->enumerate_H(Rat(2)).size() == 44);

    Presentation x3 = make_x3();
    auto first_is_one = [x2](const CElem& e) {
        const auto& parts = std::get<std::vector<CElem>>(e.v);
        return std::get<FieldElement>(parts[0].v) == fe_one(x2);
    };
    ComposedPtr broken = ComposedModule::restriction(sum, first_is_one, "first_one");
    CHECK_THROWS_WITH_AS(broken->enumerate_H(Rat(2)), doctest::Contains("PredicateNotInvariant"),
                         Error);
}

TEST_CASE("combined rate constant is the worst leaf") {
    ComposedPtr sum = ComposedModule::direct_sum(
        {ComposedModule::cyclic(make_x2()), ComposedModule::cyclic(make_x3())});
    RealInterval b = sum->rate_B(128, Rat(1) / Rat(1000000));
    // 2 / log 2 = 2.88539008...
    CHECK(b.lo.get_d() > 2.885385);
    CHECK(b.hi.get_d() < 2.885395);

    Presentation x2 = make_x2();
    ComposedPtr ext = ComposedModule::extension(
        ComposedModule::cyclic(make_x2()), ComposedModule::cyclic(make_x2()), {fe_one(x2)}, {});
    RealInterval be = ext->rate_B(128, Rat(1) / Rat(1000000));
    CHECK(be.lo.get_d() > 2.885385);
    CHECK(be.hi.get_d() < 2.885395);
}

TEST_CASE("composed radius scan") {
    ComposedPtr sum = ComposedModule::direct_sum(
        {ComposedModule::cyclic(make_x2()), ComposedModule::cyclic(make_x3())});
    std::vector<CElem> h = sum->enumerate_H(Rat(2));
    ComposedRadius r = composed_scan_radius(*sum, h, 1, Rat(2), ScanProperty::property_I, Rat(8));
    CHECK(r.has_violation);
    CHECK(r.last_violation_norm_sq == 4);
    CHECK_FALSE(r.boundary_hit);
    REQUIRE(r.witness_n.has_value());
    CHECK(*r.witness_n == ExponentVector{-2});
    CHECK_THROWS_WITH_AS(
        composed_scan_radius(*sum, h, 1, Rat(2), ScanProperty::property_I, Rat(1) / Rat(2)),
        doctest::Contains("WindowRange"), Error);
}

TEST_CASE("stock configuration files parse") {
    auto path = [](const std::string& f) { return std::string(CONFIGS_DIR) + "/" + f; };

    SystemConfig x2 = load_config(path("x2.json"));
    CHECK(x2.name == "x2");
    CHECK(x2.d == 1);
    CHECK_FALSE(x2.composed);
    REQUIRE(x2.presentation.has_value());
    CHECK(x2.schedule.value(3) == Rat(8));

    for (const char* f : {"x3.json", "x2x3.json", "fibonacci.json", "nonmix.json"}) {
        SystemConfig c = load_config(path(f));
        CHECK(c.presentation.has_value());
        CHECK(c.characteristic == 0);
    }

    SystemConfig led = load_config(path("ledrappier.json"));
    CHECK(led.characteristic == 2);
    CHECK(led.d == 2);
    REQUIRE(led.presentation.has_value());
    CHECK(led.presentation->backend() == Backend::function_field);

    SystemConfig cs = load_config(path("compose_sum.json"));
    CHECK(cs.composed);
    ComposedPtr sum = build_composed(cs);
    CHECK(sum->shape() == ComposedShape::direct_sum);
    CHECK(sum->describe() == "sum(cyclic(x2), cyclic(x3))");

    SystemConfig ce = load_config(path("compose_ext.json"));
    ComposedPtr ext = build_composed(ce);
    CHECK(ext->shape() == ComposedShape::extension);

    Presentation px2 = make_x2();
    FunctionTerms ft = load_functions(path("x2_functions.json"), px2);
    CHECK(ft.f.size() == 2);
    CHECK(ft.has_g);
}

TEST_CASE("configuration rejections") {
    CHECK_THROWS_WITH_AS(parse_config("this is not json"), doctest::Contains("ConfigSyntax"),
                         Error);
    CHECK_THROWS_WITH_AS(parse_config("{\"field\": {}}"), doctest::Contains("ConfigSchema"),
                         Error);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"system": {"name": "b", "d": 1, "characteristic": 0},
                         "field": {"min_poly": "x^2-1", "generator_images": ["x"],
                                   "maximality_attested": true},
                         "schedule": {"theta_base": 2}})"),
        doctest::Contains("ReducibleMinPoly"), Error);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"system": {"name": "b", "d": 1, "characteristic": 0},
                         "field": {"min_poly": "x", "generator_images": ["2"],
                                   "maximality_attested": true},
                         "schedule": {"theta_base": 2, "theta_list": [2]}})"),
        doctest::Contains("ConfigValue"), Error);
    CHECK_THROWS_WITH_AS(
        parse_config(R"({"system": {"name": "b", "d": 1, "characteristic": 0},
                         "field": {"min_poly": "x", "generator_images": ["2"],
                                   "maximality_attested": true},
                         "schedule": {"theta_base": 1}})"),
        doctest::Contains("ScheduleBase"), Error);
}

TEST_CASE("function documents parse") {
    Presentation x2 = make_x2();
    FunctionTerms t = parse_functions(
        R"({"f": [{"support": "1", "re": 1, "im": 0},
                  {"support": "-2", "re": "1/2", "im": "-1/3"}],
            "g": [{"support": "1", "re": 1, "im": 0}]})",
        x2);
    CHECK(t.f.size() == 2);
    CHECK(t.g.size() == 1);
    CHECK(t.has_g);
    CHECK(t.f[1].second.re == Rat(1) / Rat(2));
    CHECK(t.f[1].second.im == Rat(-1) / Rat(3));

    FunctionTerms solo = parse_functions(R"({"f": [{"support": "2", "re": 1, "im": 0}]})", x2);
    CHECK_FALSE(solo.has_g);

    CHECK_THROWS_WITH_AS(parse_functions("nope", x2), doctest::Contains("ConfigSyntax"), Error);
    CHECK_THROWS_WITH_AS(parse_functions(R"({"g": []})", x2), doctest::Contains("ConfigSchema"),
                         Error);
}

TEST_CASE("reports are deterministic") {
    auto path = [](const std::string& f) { return std::string(CONFIGS_DIR) + "/" + f; };
    SystemConfig cfg = load_config(path("x2.json"));
    std::string a1 = analyze_report(cfg, 128, "json");
    std::string a2 = analyze_report(cfg, 128, "json");
    CHECK(a1 == a2);
    CHECK(!a1.empty());

    ScanRequest req;
    req.k_min = 1;
    req.k_max = 2;
    std::string s1 = scan_report(cfg, req, "csv");
    std::string s2 = scan_report(cfg, req, "csv");
    CHECK(s1 == s2);

    SystemConfig cs = load_config(path("compose_sum.json"));
    std::string c1 = compose_report(cs, req, "json");
    std::string c2 = compose_report(cs, req, "json");
    CHECK(c1 == c2);
}
