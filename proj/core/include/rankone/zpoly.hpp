#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "rankone/intutil.hpp"

namespace rankone {

// Dense univariate polynomials; coefficient i multiplies x^i, normalized
// (no trailing zeros; the zero polynomial has an empty vector).
struct ZPoly {
    std::vector<Int> c;

    ZPoly() = default;
    explicit ZPoly(std::vector<Int> coeffs);
    static ZPoly from(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Int& lead() const { return c.back(); }
    Int at(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : Int(0);
    }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    bool operator==(const ZPoly&) const = default;
    bool operator<(const ZPoly& o) const {
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (size_t i = c.size(); i-- > 0;)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }
};

struct QPoly {
    std::vector<Rat> c;

    QPoly() = default;
    explicit QPoly(std::vector<Rat> coeffs);
    static QPoly from(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    const Rat& lead() const { return c.back(); }
    Rat at(int i) const {
        return (i >= 0 && i < static_cast<int>(c.size())) ? c[static_cast<size_t>(i)] : Rat(0);
    }
    bool operator==(const QPoly&) const = default;
    bool operator<(const QPoly& o) const {
        if (c.size() != o.c.size()) return c.size() < o.c.size();
        for (size_t i = c.size(); i-- > 0;)
            if (c[i] != o.c[i]) return c[i] < o.c[i];
        return false;
    }
};

ZPoly z_add(const ZPoly& a, const ZPoly& b);
ZPoly z_sub(const ZPoly& a, const ZPoly& b);
ZPoly z_mul(const ZPoly& a, const ZPoly& b);
ZPoly z_neg(const ZPoly& a);
Int z_eval(const ZPoly& f, const Int& x);
Rat z_eval(const ZPoly& f, const Rat& x);
ZPoly z_derivative(const ZPoly& f);
Int z_content(const ZPoly& f);     // gcd of coefficients, >= 0
ZPoly z_primitive(const ZPoly& f); // content removed, leading coefficient > 0

QPoly q_from_z(const ZPoly& f);
// Primitive integer polynomial with the same roots, positive leading coeff.
ZPoly z_clear_denominators(const QPoly& f);

QPoly q_add(const QPoly& a, const QPoly& b);
QPoly q_sub(const QPoly& a, const QPoly& b);
QPoly q_mul(const QPoly& a, const QPoly& b);
QPoly q_scale(const QPoly& a, const Rat& s);
Rat q_eval(const QPoly& f, const Rat& x);
QPoly q_derivative(const QPoly& f);
std::pair<QPoly, QPoly> q_divmod(const QPoly& a, const QPoly& b);
QPoly q_gcd(const QPoly& a, const QPoly& b);  // monic (or zero)
struct QBezout {
    QPoly g, s, t;  // s*a + t*b = g, g monic
};
QBezout q_gcd_ext(const QPoly& a, const QPoly& b);
QPoly q_monic(const QPoly& f);
QPoly q_squarefree_part(const QPoly& f);  // monic product of distinct roots' factors

// Resultant of integer polynomials via fraction-free elimination of the
// Sylvester matrix.
Int resultant(const ZPoly& f, const ZPoly& g);

// Integer polynomial whose roots are all pairwise products of roots of F
// (ordered pairs, so squares of roots included). Requires F(0) != 0.
ZPoly pair_product_poly(const ZPoly& F);

// Unique polynomial of degree < #points through the given points (distinct
// abscissae).
QPoly interpolate(const std::vector<std::pair<Rat, Rat>>& pts);

// A real root, either an exact rational or an open isolating interval with
// sign change: f(lo) f(hi) < 0 and exactly one root inside.
struct IsolatedRoot {
    bool exact = false;
    Rat value;    // when exact
    Rat lo, hi;   // when not exact
    Rat upper() const { return exact ? value : hi; }
    Rat lower() const { return exact ? value : lo; }
};

struct RealRootIsolation {
    QPoly squarefree;                // the polynomial the intervals refer to
    std::vector<IsolatedRoot> roots; // ascending; pairwise disjoint
};

// All real roots of f (any nonzero polynomial; multiplicities dropped).
RealRootIsolation isolate_real_roots(const QPoly& f);
// Shrinks an isolating interval below `width` by bisection; may turn exact.
void refine_root(const QPoly& squarefree, IsolatedRoot& r, const Rat& width);

// Sign variation count of the Sturm chain of f at x; exposed for tests.
int sturm_variations(const std::vector<QPoly>& chain, const Rat& x);
std::vector<QPoly> sturm_chain(const QPoly& f);

using QMatrix = std::vector<std::vector<Rat>>;
// det(T*I - M), monic of degree n, by the trace recurrence.
QPoly char_poly(const QMatrix& m);

// Monic irreducible factors of a monic squarefree integer polynomial
// (modular factorization, lifting, subset recombination).
std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f);
bool is_irreducible_over_q(const ZPoly& f);  // f monic, degree >= 1

}  // namespace rankone
