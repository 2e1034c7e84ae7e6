#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "rankone/errors.hpp"
#include "rankone/lyapunov.hpp"

using namespace rankone;
using namespace rankone::testing;

namespace {

bool brackets(const RealInterval& iv, double v, double tol = 1e-9) {
    return iv.lo.get_d() <= v + tol && iv.hi.get_d() >= v - tol;
}

const double kLog2 = 0.6931471805599453;
const double kLog3 = 1.0986122886681098;
const double kLogPhi = 0.4812118250596035;

}  // namespace

TEST_CASE("lyapunov vectors carry exact finite data") {
    Presentation x2 = make_x2();
    PlaceEngine eng(x2);
    auto lv = lyapunov_vectors(eng, 128);
    REQUIRE(lv.size() == 2);
    CHECK(brackets(lv[0].ell[0], kLog2));
    CHECK_FALSE(lv[0].has_exact);
    REQUIRE(lv[1].has_exact);
    CHECK(lv[1].exact_base == 2);
    CHECK(lv[1].exact_dir == std::vector<Int>{Int(-1)});
    CHECK(brackets(lv[1].ell[0], -kLog2));
}

TEST_CASE("lyapunov rows sum to zero componentwise") {
    for (const Presentation& pres :
         {make_x2(), make_x2x3(), make_fib(), make_golden11(), make_ledrappier(), make_nonmix()}) {
        PlaceEngine eng(pres);
        auto lv = lyapunov_vectors(eng, 160);
        std::vector<RealInterval> sum(static_cast<size_t>(pres.d), RealInterval(Rat(0)));
        for (const auto& row : lv)
            for (size_t j = 0; j < sum.size(); ++j) sum[j] = sum[j] + row.ell[j];
        for (const auto& s : sum) {
            CHECK(s.contains_zero());
            CHECK(s.width() < Rat(1) / int_pow(Int(10), 20));
        }
    }
}

TEST_CASE("function field lyapunov data is exact") {
    Presentation led = make_ledrappier();
    PlaceEngine eng(led);
    auto lv = lyapunov_vectors(eng, 96);
    REQUIRE(lv.size() == 3);
    for (const auto& row : lv) {
        CHECK(row.has_exact);
        CHECK(row.exact_base == 2);
    }
    // ell((t)) = (-log2, 0), ell((t+1)) = (0, -log2), ell(inf) = (log2, log2)
    CHECK(lv[0].exact_dir == std::vector<Int>{Int(-1), Int(0)});
    CHECK(lv[1].exact_dir == std::vector<Int>{Int(0), Int(-1)});
    CHECK(lv[2].exact_dir == std::vector<Int>{Int(1), Int(1)});
}

TEST_CASE("mixing classification") {
    for (const Presentation& pres : {make_x2(), make_x2x3(), make_fib(), make_ledrappier()}) {
        PlaceEngine eng(pres);
        MixingReport r = is_mixing(eng, 128);
        CHECK(r.mixing);
        CHECK_FALSE(r.witness.has_value());
    }
    Presentation nm = make_nonmix();
    PlaceEngine eng(nm);
    MixingReport r = is_mixing(eng, 128);
    CHECK_FALSE(r.mixing);
    REQUIRE(r.witness.has_value());
    FieldElement beta = power_product(*r.witness, nm);
    CHECK(beta == fe_one(nm));
    CHECK_FALSE(is_zero(*r.witness));
}

TEST_CASE("directional entropy hand values") {
    Presentation x2 = make_x2();
    PlaceEngine eng2(x2);
    CHECK(brackets(directional_entropy(eng2, {Rat(1)}, 128), kLog2));
    CHECK(brackets(directional_entropy(eng2, {Rat(-1)}, 128), kLog2));
    CHECK(brackets(directional_entropy(eng2, {Rat(2)}, 128), 2 * kLog2));

    Presentation x2x3 = make_x2x3();
    PlaceEngine eng23(x2x3);
    CHECK(brackets(directional_entropy(eng23, {Rat(1), Rat(0)}, 128), kLog2));
    CHECK(brackets(directional_entropy(eng23, {Rat(0), Rat(1)}, 128), kLog3));
    CHECK(brackets(directional_entropy(eng23, {Rat(1), Rat(1)}, 128), kLog2 + kLog3));
    CHECK(brackets(directional_entropy(eng23, {Rat(-1), Rat(-1)}, 128), kLog2 + kLog3));
    CHECK(brackets(directional_entropy(eng23, {Rat(1), Rat(-1)}, 128), kLog3));

    Presentation fib = make_fib();
    PlaceEngine engf(fib);
    CHECK(brackets(directional_entropy(engf, {Rat(1)}, 128), kLogPhi));
    CHECK(brackets(directional_entropy(engf, {Rat(-1)}, 128), kLogPhi));

    Presentation led = make_ledrappier();
    PlaceEngine engl(led);
    CHECK(brackets(directional_entropy(engl, {Rat(1), Rat(0)}, 96), kLog2));
    CHECK(brackets(directional_entropy(engl, {Rat(1), Rat(1)}, 96), 2 * kLog2));
    CHECK(brackets(directional_entropy(engl, {Rat(1), Rat(-1)}, 96), kLog2));
}

TEST_CASE("entropy scales linearly along rays") {
    Presentation x2x3 = make_x2x3();
    PlaceEngine eng(x2x3);
    RealInterval base = directional_entropy(eng, {Rat(1), Rat(-1)}, 128);
    RealInterval tripled = directional_entropy(eng, {Rat(3), Rat(-3)}, 128);
    RealInterval scaled = RealInterval(Rat(3)) * base;
    CHECK(scaled.lo <= tripled.hi);
    CHECK(tripled.lo <= scaled.hi);
}

TEST_CASE("separation constants") {
    Rat tol = Rat(1) / Rat(1000000);

    Presentation x2 = make_x2();
    PlaceEngine eng2(x2);
    SeparationData s2 = separation_constant(eng2, 128, tol);
    CHECK(s2.sigma == 1);
    CHECK(brackets(s2.c, kLog2));
    CHECK(s2.c.width() <= tol * s2.c.lo);
    CHECK(brackets(s2.one_sided, kLog2));

    Presentation fib = make_fib();
    PlaceEngine engf(fib);
    SeparationData sf = separation_constant(engf, 128, tol);
    CHECK(sf.sigma == 1);
    CHECK(brackets(sf.c, kLogPhi));

    Presentation x2x3 = make_x2x3();
    PlaceEngine eng23(x2x3);
    SeparationData s23 = separation_constant(eng23, 128, Rat(1) / Rat(10000));
    CHECK(s23.sigma == 2);
    CHECK(s23.c.certainly_positive());
    CHECK(s23.c.lo.get_d() > 0.5859);
    CHECK(s23.c.hi.get_d() < 0.5866);

    Presentation led = make_ledrappier();
    PlaceEngine engl(led);
    SeparationData sl = separation_constant(engl, 96, Rat(1) / Rat(10000));
    CHECK(sl.sigma == 2);
    // min over the unit circle of the max |ell.z| lands at log2 / sqrt(2)
    CHECK(sl.c.lo.get_d() > 0.49006);
    CHECK(sl.c.hi.get_d() < 0.49020);
}

TEST_CASE("separation rejects degenerate input") {
    Presentation x2 = make_x2();
    PlaceEngine eng(x2);
    CHECK_THROWS_WITH_AS(separation_constant(eng, 128, Rat(0)),
                         doctest::Contains("SeparationTol"), Error);
}
