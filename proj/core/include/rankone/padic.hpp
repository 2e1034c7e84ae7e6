#pragma once

#include <vector>

#include "rankone/presentation.hpp"

namespace rankone {

// Valuations at the finite places of a monogenic number field above one
// rational prime p, available when the minimal polynomial is squarefree
// mod p (every such place is unramified with e = 1; residue degree = degree
// of its local factor). Lifted factorizations are cached and re-lifted as
// deeper precision is needed.
class PAdicContext {
public:
    PAdicContext(const ZPoly& min_poly, Int p);

    const Int& p() const { return p_; }
    size_t num_places() const { return factors_.size(); }
    const FpPoly& local_factor(size_t i) const { return factors_[i]; }
    unsigned residue_degree(size_t i) const {
        return static_cast<unsigned>(factors_[i].degree());
    }

    // ord_v(x) for the place of the i-th local factor; x != 0.
    long ord(const QPoly& x, size_t i);

private:
    ZPoly f_;
    Int p_;
    std::vector<FpPoly> factors_;  // monic irreducible, sorted
    unsigned lifted_K_ = 0;
    std::vector<ZPoly> lifted_;

    void ensure_precision(unsigned K);
};

// True iff the minimal polynomial stays squarefree mod p (automatic place
// data exists).
bool min_poly_squarefree_mod(const ZPoly& min_poly, const Int& p);

}  // namespace rankone
