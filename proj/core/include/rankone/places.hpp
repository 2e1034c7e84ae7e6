#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankone/interval.hpp"
#include "rankone/padic.hpp"
#include "rankone/presentation.hpp"
#include "rankone/roots.hpp"

namespace rankone {

enum class PlaceKind { real, complex, finite, ff_finite, ff_inf };

// A normalized place of the presented field. Real places carry |x|, complex
// places the squared modulus, finite places (residue field size)^(-ord), so
// the product over all places of a nonzero element is 1.
struct Place {
    PlaceKind kind = PlaceKind::real;
    int index = 0;        // embedding index, or factor index within the prime
    Int prime;            // finite places: the rational prime below
    FpPoly poly;          // finite: local factor mod p; ff_finite: the irreducible
    unsigned ram_index = 1;
    unsigned res_degree = 1;
    bool is_explicit = false;     // valuation data supplied by the user
    std::vector<long> gen_ords;   // explicit places only: ord_v of each generator

    bool is_exact() const { return kind != PlaceKind::real && kind != PlaceKind::complex; }
    std::string id() const;
};

struct PlaceSet {
    std::vector<Place> places;  // canonical order: kind, then index/prime/poly
};

// Owns the presentation plus every valuation backend needed to evaluate
// absolute values: root enclosures for the archimedean places and lifted
// local factorizations for the finite ones. Enclosure refinement mutates
// cached data, so share one engine per thread.
class PlaceEngine {
public:
    explicit PlaceEngine(Presentation pres);

    const Presentation& pres() const { return pres_; }
    const PlaceSet& S() const { return S_; }

    // Enclosure of |x|_v of relative width <= 2^(1-precision); exact (zero
    // width) at finite and function-field places.
    RealInterval abs_value(const FieldElement& x, const Place& v, long precision);
    // Exact value at an exact place.
    Rat abs_exact(const FieldElement& x, const Place& v);
    // Exact sign of |x|_v - bound for bound > 0, x != 0 (ties are decided
    // algebraically).
    int compare_abs(const FieldElement& x, const Place& v, const Rat& bound);
    // ord_v(x) at a finite or function-field place; x != 0.
    long ord_at(const FieldElement& x, const Place& v);

    // Membership in M = O_S; needs the maximality attestation.
    bool in_ring(const FieldElement& x);
    // All valuations outside S vanish.
    bool is_s_unit(const FieldElement& x);
    // Enclosure of prod_{v in S} |x|_v (exact in char q).
    RealInterval product_over_S(const FieldElement& x, long precision);
    // prod_{v in S} |x|_v = 1 within enclosure; requires an S-unit argument.
    bool product_formula_check(const FieldElement& x, long precision);

private:
    Presentation pres_;
    std::optional<RootSystem> roots_;
    PlaceSet S_;
    std::map<Int, PAdicContext> padic_;
    std::map<Int, std::vector<size_t>> s_factor_indices_;  // prime -> local-factor indexes in S
    std::vector<FpPoly> s_ff_polys_;                       // char q: finite S-places
    bool s_has_inf_ = false;

    void discover_char0();
    void discover_charq();
    PAdicContext& context_for(const Int& p);
    bool prime_is_explicit(const Int& p) const;
    RealInterval archimedean_value(const QPoly& x, const Place& v, long precision);
    std::vector<Int> denominator_candidate_primes(const FieldElement& x) const;
};

// Convenience wrapper matching the operation-level surface.
PlaceSet discover_places(const Presentation& pres);

}  // namespace rankone
