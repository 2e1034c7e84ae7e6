#include "rankone/intmat.hpp"

#include <utility>

#include "rankone/errors.hpp"

namespace rankone {

namespace {

void check_rect(const IMat& a) {
    if (a.empty()) throw_config("MatrixShape", "matrix must be nonempty");
    for (const auto& row : a)
        if (row.size() != a[0].size()) throw_config("MatrixShape", "ragged matrix");
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IMat imat_identity(int n) {
    IMat e(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
    for (int i = 0; i < n; ++i) e[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
    return e;
}

IMat imat_mul(const IMat& a, const IMat& b) {
    check_rect(a);
    check_rect(b);
    size_t m = a.size(), k = a[0].size(), n = b[0].size();
    if (b.size() != k) throw_config("MatrixShape", "inner dimensions differ");
    IMat c(m, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < m; ++i)
        for (size_t t = 0; t < k; ++t)
            for (size_t j = 0; j < n; ++j) c[i][j] += a[i][t] * b[t][j];
    return c;
}

Int imat_det(IMat a) {
    check_rect(a);
    size_t n = a.size();
    if (a[0].size() != n) throw_config("MatrixShape", "determinant needs a square matrix");
    // Bareiss fraction-free elimination; divisions are exact.
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t swap_row = n;
            for (size_t i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    swap_row = i;
                    break;
                }
            if (swap_row == n) return Int(0);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : Int(-a[n - 1][n - 1]);
}

ExponentVector imat_apply(const IMat& a, const ExponentVector& v) {
    check_rect(a);
    if (a[0].size() != v.size()) throw_config("MatrixShape", "matrix/vector size mismatch");
    ExponentVector out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        Int acc(0);
        for (size_t j = 0; j < v.size(); ++j) acc += a[i][j] * Int(v[j]);
        if (!acc.fits_slong_p()) throw_cap("ExponentOverflow", "mapped exponent too large");
        out[i] = acc.get_si();
    }
    return out;
}

IMat column_hnf(IMat a) {
    check_rect(a);
    size_t n = a.size();
    if (a[0].size() != n) throw_config("MatrixShape", "lattice basis must be square");
    auto col_sub = [&](size_t dst, size_t src, const Int& q) {
        for (size_t i = 0; i < n; ++i) a[i][dst] -= q * a[i][src];
    };
    auto col_swap = [&](size_t x, size_t y) {
        for (size_t i = 0; i < n; ++i) std::swap(a[i][x], a[i][y]);
    };
    for (size_t i = 0; i < n; ++i) {
        for (;;) {
            size_t j = n;
            for (size_t t = i + 1; t < n; ++t)
                if (a[i][t] != 0) {
                    j = t;
                    break;
                }
            if (j == n) break;
            if (a[i][i] == 0) {
                col_swap(i, j);
                continue;
            }
            Int q = floor_div(a[i][j], a[i][i]);
            col_sub(j, i, q);
            if (a[i][j] != 0) col_swap(i, j);
        }
        if (a[i][i] == 0) throw_config("SingularLattice", "lattice basis is singular");
        if (a[i][i] < 0)
            for (size_t r = 0; r < n; ++r) a[r][i] = -a[r][i];
    }
    return a;
}

ExponentVector lattice_reduce(const IMat& h, ExponentVector v) {
    size_t n = h.size();
    if (v.size() != n) throw_config("MatrixShape", "vector/lattice dimension mismatch");
    for (size_t i = 0; i < n; ++i) {
        Int q = floor_div(Int(v[i]), h[i][i]);
        if (q == 0) continue;
        for (size_t r = i; r < n; ++r) {
            Int nv = Int(v[r]) - q * h[r][i];
            if (!nv.fits_slong_p()) throw_cap("ExponentOverflow", "reduced exponent too large");
            v[r] = nv.get_si();
        }
    }
    return v;
}

std::vector<ExponentVector> lattice_cosets(const IMat& h) {
    size_t n = h.size();
    std::vector<ExponentVector> out;
    ExponentVector cur(n, 0);
    for (;;) {
        out.push_back(cur);
        size_t i = 0;
        while (i < n) {
            ++cur[i];
            if (Int(cur[i]) < h[i][i]) break;
            cur[i] = 0;
            ++i;
        }
        if (i == n) break;
    }
    return out;
}

std::vector<Int> snf_diagonal(IMat a) {
    check_rect(a);
    size_t m = a.size(), n = a[0].size();
    auto row_op = [&](size_t dst, size_t src, const Int& q) {
        for (size_t j = 0; j < n; ++j) a[dst][j] -= q * a[src][j];
    };
    auto col_op = [&](size_t dst, size_t src, const Int& q) {
        for (size_t i = 0; i < m; ++i) a[i][dst] -= q * a[i][src];
    };
    auto col_swap = [&](size_t x, size_t y) {
        for (size_t i = 0; i < m; ++i) std::swap(a[i][x], a[i][y]);
    };

    size_t t = 0;
    size_t bound = m < n ? m : n;
    while (t < bound) {
        size_t pi = m, pj = n;
        for (size_t i = t; i < m && pi == m; ++i)
            for (size_t j = t; j < n; ++j)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == m) break;
        std::swap(a[t], a[pi]);
        if (pj != t) col_swap(t, pj);

        for (;;) {
            bool clean = true;
            for (size_t i = t + 1; i < m; ++i) {
                if (a[i][t] == 0) continue;
                Int q = floor_div(a[i][t], a[t][t]);
                row_op(i, t, q);
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (a[t][j] == 0) continue;
                Int q = floor_div(a[t][j], a[t][t]);
                col_op(j, t, q);
                if (a[t][j] != 0) {
                    col_swap(t, j);
                    clean = false;
                }
            }
            if (!clean) continue;

            // Pivot must divide the untouched block for a divisibility chain.
            bool redo = false;
            for (size_t i = t + 1; i < m && !redo; ++i)
                for (size_t j = t + 1; j < n && !redo; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (size_t c = 0; c < n; ++c) a[t][c] += a[i][c];
                        redo = true;
                    }
            if (!redo) break;
        }
        ++t;
    }

    std::vector<Int> diag;
    for (size_t i = 0; i < bound; ++i) {
        Int v = i < t ? a[i][i] : Int(0);
        diag.push_back(v < 0 ? Int(-v) : v);
    }
    return diag;
}

std::vector<std::vector<Int>> integer_kernel(const IMat& a) {
    check_rect(a);
    size_t m = a.size(), n = a[0].size();
    // Column-reduce a copy while tracking the same operations on an identity
    // block; columns that vanish in the top block span the kernel.
    IMat top = a;
    IMat bot = imat_identity(static_cast<int>(n));
    auto col_sub = [&](size_t dst, size_t src, const Int& q) {
        for (size_t i = 0; i < m; ++i) top[i][dst] -= q * top[i][src];
        for (size_t i = 0; i < n; ++i) bot[i][dst] -= q * bot[i][src];
    };
    auto col_swap = [&](size_t x, size_t y) {
        for (size_t i = 0; i < m; ++i) std::swap(top[i][x], top[i][y]);
        for (size_t i = 0; i < n; ++i) std::swap(bot[i][x], bot[i][y]);
    };

    size_t pivot_col = 0;
    for (size_t i = 0; i < m && pivot_col < n; ++i) {
        for (;;) {
            size_t j = n;
            for (size_t t = pivot_col + 1; t < n; ++t)
                if (top[i][t] != 0) {
                    j = t;
                    break;
                }
            if (j == n) break;
            if (top[i][pivot_col] == 0) {
                col_swap(pivot_col, j);
                continue;
            }
            Int q = floor_div(top[i][j], top[i][pivot_col]);
            col_sub(j, pivot_col, q);
            if (top[i][j] != 0) col_swap(pivot_col, j);
        }
        if (top[i][pivot_col] != 0) ++pivot_col;
    }

    std::vector<std::vector<Int>> kernel;
    for (size_t j = pivot_col; j < n; ++j) {
        bool zero = true;
        for (size_t i = 0; i < m; ++i)
            if (top[i][j] != 0) zero = false;
        if (!zero) continue;
        std::vector<Int> v;
        for (size_t i = 0; i < n; ++i) v.push_back(bot[i][j]);
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace rankone
