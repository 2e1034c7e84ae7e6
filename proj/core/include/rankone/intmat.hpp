#pragma once

#include <vector>

#include "rankone/exponent.hpp"
#include "rankone/intutil.hpp"

namespace rankone {

// Row-major integer matrices; small sizes only (field degrees and lattice
// dimensions), so fraction-free elimination is plenty.
using IMat = std::vector<std::vector<Int>>;

IMat imat_identity(int n);
IMat imat_mul(const IMat& a, const IMat& b);
Int imat_det(IMat a);
ExponentVector imat_apply(const IMat& a, const ExponentVector& v);

// Lower-triangular column basis of the lattice spanned by the columns of a
// nonsingular square matrix: result[i][j] = 0 for j > i, positive diagonal.
IMat column_hnf(IMat a);
// Unique representative of v modulo the lattice with lower-triangular basis
// h, componentwise in [0, h[i][i]).
ExponentVector lattice_reduce(const IMat& h, ExponentVector v);
// All representatives of Z^d modulo the lattice (index = product of the
// diagonal); h lower triangular.
std::vector<ExponentVector> lattice_cosets(const IMat& h);

// Diagonal of the Smith normal form: nonnegative, each entry dividing the
// next, length min(rows, cols).
std::vector<Int> snf_diagonal(IMat a);

// Basis of { v : a v = 0 } over the integers.
std::vector<std::vector<Int>> integer_kernel(const IMat& a);

}  // namespace rankone
