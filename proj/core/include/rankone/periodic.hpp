#pragma once

#include <string>

#include "rankone/exponent.hpp"
#include "rankone/places.hpp"

namespace rankone {

struct FixCount {
    ExponentVector n;
    Int count;  // >= 1
    std::string method;
};

// |Fix(alpha^n)| as prod_{v in S} |beta_n - 1|_v, an enclosure refined until
// it pins a single integer (exact in characteristic q).
FixCount fix_count_product(PlaceEngine& eng, const ExponentVector& n, long precision);

// The same count along an independent route: numerator stripping over Q,
// Smith normal form of the multiplication matrix on monogenic fields,
// stripped numerator degree over F_q(t).
FixCount fix_count_oracle(PlaceEngine& eng, const ExponentVector& n);

}  // namespace rankone
