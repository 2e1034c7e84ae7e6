#pragma once

#include <vector>

#include "rankone/errors.hpp"
#include "rankone/intutil.hpp"

namespace rankone {

// n in Z^d
using ExponentVector = std::vector<long>;

inline bool is_zero(const ExponentVector& n) {
    for (long v : n)
        if (v != 0) return false;
    return true;
}

inline Int exp_norm_sq(const ExponentVector& n) {
    Int s(0);
    for (long v : n) s += Int(v) * Int(v);
    return s;
}

// Euclidean norm, exact: the squared norm plus its integer square root and
// whether that root is exact.
struct ExpNorm {
    Int norm_sq;
    Int floor_root;
    bool is_exact;
};

inline ExpNorm exp_norm(const ExponentVector& n) {
    ExpNorm r;
    r.norm_sq = exp_norm_sq(n);
    mpz_sqrt(r.floor_root.get_mpz_t(), r.norm_sq.get_mpz_t());
    r.is_exact = r.floor_root * r.floor_root == r.norm_sq;
    return r;
}

inline ExponentVector monomial_mul(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw_config("DimensionMismatch", "exponent vectors of different dimension");
    ExponentVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

}  // namespace rankone
