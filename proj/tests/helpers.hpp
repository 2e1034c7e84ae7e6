#pragma once

#include <set>
#include <vector>

#include "rankone/fqfield.hpp"
#include "rankone/presentation.hpp"
#include "rankone/zpoly.hpp"

namespace rankone::testing {

inline Presentation make_x2() {
    return make_number_field_presentation("x2", 1, ZPoly::from({0, 1}), {QPoly::from({2})}, true);
}

inline Presentation make_x3() {
    return make_number_field_presentation("x3", 1, ZPoly::from({0, 1}), {QPoly::from({3})}, true);
}

inline Presentation make_x2x3() {
    return make_number_field_presentation("x2x3", 2, ZPoly::from({0, 1}),
                                          {QPoly::from({2}), QPoly::from({3})}, true);
}

inline Presentation make_fib() {
    return make_number_field_presentation("fibonacci", 1, ZPoly::from({-1, -1, 1}),
                                          {QPoly::from({0, 1})}, true);
}

// 11 splits in Q[x]/(x^2-x-1); only one of the two places above 11 divides
// the generator 3+x, so S holds both real places plus that single one.
inline Presentation make_golden11() {
    return make_number_field_presentation("golden11", 1, ZPoly::from({-1, -1, 1}),
                                          {QPoly::from({3, 1})}, true);
}

inline Presentation make_nonmix() {
    return make_number_field_presentation("nonmix", 2, ZPoly::from({0, 1}),
                                          {QPoly::from({2}), QPoly::from({2})}, true);
}

inline Presentation make_ledrappier() {
    FqElem t = fq_t();
    FqElem one_plus_t = fq_add(fq_one(), t, Int(2));
    return make_function_field_presentation("ledrappier", 2, Int(2), {t, one_plus_t}, true);
}

inline std::set<Rat> as_rat_set(const std::vector<FieldElement>& elems, const Presentation& pres) {
    std::set<Rat> out;
    for (const auto& e : elems) out.insert(fe_as_rat(e, pres));
    return out;
}

}  // namespace rankone::testing
