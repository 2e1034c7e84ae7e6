#pragma once

#include <optional>
#include <vector>

#include "rankone/places.hpp"

namespace rankone {

// log|g_i|_v for one place. Finite and function-field places additionally
// carry the data as an integer vector times log(base), which downstream
// lattice computations use exactly.
struct LyapunovVector {
    Place place;
    std::vector<RealInterval> ell;
    bool has_exact = false;
    Int exact_base;
    std::vector<Int> exact_dir;
};

std::vector<LyapunovVector> lyapunov_vectors(PlaceEngine& eng, long precision);

struct MixingReport {
    bool mixing = false;
    std::optional<ExponentVector> witness;  // nonzero n with beta_n = 1
};

// Decides mixing: a nonzero exponent with beta_n = 1 disproves it; full rank
// of the archimedean log data on the exact-valuation kernel certifies it.
MixingReport is_mixing(PlaceEngine& eng, long precision);

// Enclosure of h(w) = sum_v max(ell_v . w, 0), in nats.
RealInterval directional_entropy(PlaceEngine& eng, const std::vector<Rat>& w, long precision);

struct SeparationData {
    RealInterval c;          // min over the unit sphere of max_v |ell_v . z|
    int sigma = 0;           // |S| - 1
    RealInterval one_sided;  // c / sigma
};

// Certified enclosure of the separation constant, relative width <= rel_tol;
// branch and bound over the cube surface.
SeparationData separation_constant(PlaceEngine& eng, long precision, const Rat& rel_tol);

}  // namespace rankone
