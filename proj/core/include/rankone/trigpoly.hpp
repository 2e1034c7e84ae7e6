#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rankone/exponent.hpp"
#include "rankone/places.hpp"
#include "rankone/roots.hpp"

namespace rankone {

// Finitely supported Fourier data: character (module element) to exact
// Gaussian-rational coefficient. No stored zeros.
struct TrigPolynomial {
    std::map<FieldElement, GaussRat> coeffs;
    bool real_valued = false;

    GaussRat at(const FieldElement& a) const {
        auto it = coeffs.find(a);
        return it == coeffs.end() ? GaussRat() : it->second;
    }
};

// Folds duplicate support points by addition, drops zeros, verifies every
// character lies in the module, and (when flagged) checks the conjugate
// symmetry that makes the function real-valued.
TrigPolynomial make_trig_polynomial(PlaceEngine& eng,
                                    std::vector<std::pair<FieldElement, GaussRat>> terms,
                                    bool real_valued);

// Mixing correlation at shift n: sum over nonzero b in supp(g^) with
// -beta_n*b in supp(f^) of f^(-beta_n*b)*g^(b).
GaussRat correlation(PlaceEngine& eng, const TrigPolynomial& f, const TrigPolynomial& g,
                     const ExponentVector& n);

// Pairing against the period-n measure: sum over nonzero a in supp(f^) with
// a in (beta_n - 1)M of f^(a); membership via in_ring(a / (beta_n - 1)).
GaussRat periodic_pairing(PlaceEngine& eng, const TrigPolynomial& f, const ExponentVector& n);

}  // namespace rankone
