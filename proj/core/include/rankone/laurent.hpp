#pragma once

#include <map>

#include "rankone/exponent.hpp"
#include "rankone/presentation.hpp"

namespace rankone {

// Element of the Laurent polynomial ring in d variables over Z; in
// characteristic q the coefficients are read as residues at evaluation.
struct LaurentPoly {
    int d = 1;
    std::map<ExponentVector, Int> terms;  // no stored zeros

    bool is_zero() const { return terms.empty(); }
    bool operator==(const LaurentPoly&) const = default;
};

LaurentPoly lp_zero(int d);
LaurentPoly lp_constant(int d, const Int& c);
LaurentPoly lp_monomial(const ExponentVector& n, const Int& c = Int(1));
LaurentPoly lp_add(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_sub(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_mul(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly lp_neg(const LaurentPoly& a);

// Substitutes the generator images for the variables.
FieldElement evaluate(const LaurentPoly& p, const Presentation& pres);

}  // namespace rankone
