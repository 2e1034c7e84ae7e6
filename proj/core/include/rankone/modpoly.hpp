#pragma once

#include <utility>
#include <vector>

#include "rankone/intutil.hpp"

namespace rankone {

// Dense polynomials over F_p, p prime. Coefficient i multiplies x^i; entries
// reduced into [0, p); normalized (no trailing zeros, zero poly is empty).
struct FpPoly {
    std::vector<Int> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_one() const { return c.size() == 1 && c[0] == 1; }
    Int at(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : Int(0);
    }
    bool operator==(const FpPoly&) const = default;
    bool operator<(const FpPoly& o) const;  // degree, then coefficients from the top
};

FpPoly fp_from_coeffs(std::vector<Int> raw, const Int& p);
FpPoly fp_one();
FpPoly fp_x();

FpPoly fp_add(const FpPoly& a, const FpPoly& b, const Int& p);
FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const Int& p);
FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const Int& p);
FpPoly fp_scale(const FpPoly& a, const Int& s, const Int& p);
std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, const Int& p);
FpPoly fp_rem(const FpPoly& a, const FpPoly& b, const Int& p);
FpPoly fp_make_monic(const FpPoly& a, const Int& p);
FpPoly fp_gcd(const FpPoly& a, const FpPoly& b, const Int& p);  // monic (or zero)

struct FpBezout {
    FpPoly g, s, t;  // s*a + t*b = g, g monic
};
FpBezout fp_gcd_ext(const FpPoly& a, const FpPoly& b, const Int& p);

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod, const Int& p);
FpPoly fp_derivative(const FpPoly& a, const Int& p);
Int fp_eval(const FpPoly& a, const Int& x, const Int& p);

bool fp_is_squarefree(const FpPoly& f, const Int& p);
bool fp_is_irreducible(const FpPoly& f, const Int& p);

// Monic irreducible factors of f with multiplicities, sorted canonically.
// Splitting uses a fixed-seed generator, so the result is deterministic.
std::vector<std::pair<FpPoly, unsigned>> fp_factor(const FpPoly& f, const Int& p);

// Lifts a factorization of monic f into distinct monic pairwise-coprime
// factors from mod p to mod p^K. Returns monic factors with coefficients in
// [0, p^K) whose product is f mod p^K, in the input order.
std::vector<std::vector<Int>> hensel_lift_monic(const std::vector<Int>& f,
                                                const std::vector<FpPoly>& factors,
                                                const Int& p, unsigned K);

}  // namespace rankone
