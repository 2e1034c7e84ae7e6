#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rankone/exponent.hpp"
#include "rankone/places.hpp"
#include "rankone/theta.hpp"

namespace rankone {

// H = {a in M : theta^{-1} <= |a|_v <= theta at every v in S} \ {0}; the
// zero element is implicit. Elements strictly sorted.
struct ExhaustiveSet {
    long k = 0;
    Rat theta;
    std::vector<FieldElement> elements;
};

// Complete duplicate-free enumeration. Needs theta >= 1 and the maximality
// attestation; explicit user places are not enumerable.
ExhaustiveSet enumerate_Hk(PlaceEngine& eng, const Rat& theta, size_t cap = 1000000);

// Exact bounds test for a single nonzero candidate (returns false at zero).
bool hk_member(PlaceEngine& eng, const Rat& theta, const FieldElement& a);

struct PropertyCheck {
    bool holds = true;
    std::optional<FieldElement> witness;        // violating member a of H
    std::optional<FieldElement> witness_image;  // beta_n*a resp. (beta_n-1)*a
};

// H cap u^n H = {0}: no nonzero a in H with beta_n*a again in H.
PropertyCheck check_property_I(PlaceEngine& eng, const ExhaustiveSet& h, const ExponentVector& n);

enum class IIVariant { literal, strong };

// literal: H cap (beta_n - 1)H = {0}. strong: H cap (beta_n - 1)M = {0},
// decided by dividing each member of H by beta_n - 1 and testing in_ring.
PropertyCheck check_property_II(PlaceEngine& eng, const ExhaustiveSet& h, const ExponentVector& n,
                                IIVariant variant);

enum class ScanProperty { property_I, property_II_literal, property_II_strong };

std::string scan_property_name(ScanProperty p);

struct RadiusReport {
    long k = 0;
    Rat theta;
    ScanProperty property = ScanProperty::property_I;
    Rat window_radius;
    bool has_violation = false;
    Int last_violation_norm_sq;  // ||n||^2 of the outermost violating n
    bool boundary_hit = false;   // violation on the outermost nonempty shell
    std::optional<ExponentVector> witness_n;
    std::optional<FieldElement> witness_a;
};

// Checks the property at every nonzero n with Euclidean norm <= window_radius
// and reports the outermost violation. window_radius >= 1, theta > 1.
RadiusReport scan_radius(PlaceEngine& eng, const ExhaustiveSet& h, ScanProperty prop,
                         const Rat& window_radius);

// Nonzero integer vectors with ||n||^2 <= norm_sq_bound, sorted by
// (||n||^2, lexicographic).
std::vector<ExponentVector> shell_points(int d, const Int& norm_sq_bound);

}  // namespace rankone
