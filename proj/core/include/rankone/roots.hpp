#pragma once

#include <vector>

#include "rankone/interval.hpp"
#include "rankone/zpoly.hpp"

namespace rankone {

struct GaussRat {
    Rat re, im;

    GaussRat() : re(0), im(0) {}
    GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
};

GaussRat g_add(const GaussRat& a, const GaussRat& b);
GaussRat g_sub(const GaussRat& a, const GaussRat& b);
GaussRat g_mul(const GaussRat& a, const GaussRat& b);
GaussRat g_div(const GaussRat& a, const GaussRat& b);
GaussRat g_conj(const GaussRat& a);
Rat g_norm2(const GaussRat& a);
bool g_is_zero(const GaussRat& a);

struct ComplexBox {
    RealInterval re, im;
};

// Horner evaluation of a rational polynomial over a complex rectangle.
ComplexBox eval_box(const QPoly& f, const ComplexBox& z);
// Enclosure of |w|^2 over the rectangle.
RealInterval box_norm2(const ComplexBox& b);

// Real and upper-half-plane roots of a monic squarefree integer polynomial,
// with certified enclosures that can be refined on demand. Real roots are
// Sturm-isolated; complex roots carry discs (exact rational center and
// squared radius) certified to hold exactly one root each, strictly above
// the real axis.
class RootSystem {
public:
    explicit RootSystem(const ZPoly& f);

    int num_real() const { return static_cast<int>(real_.size()); }
    int num_complex() const { return static_cast<int>(centers_.size()); }
    int degree() const { return f_.degree(); }

    // Enclosure of the i-th real root (ascending), width <= max_width.
    RealInterval real_root(int i, const Rat& max_width);
    // Rectangle around the i-th upper root (sorted by center), enclosing its
    // certified disc, with half-width <= max_width.
    ComplexBox complex_root(int i, const Rat& max_width);

private:
    ZPoly f_;
    QPoly fq_, dfq_;
    std::vector<IsolatedRoot> real_;
    std::vector<GaussRat> centers_;
    std::vector<Rat> radius_sq_;

    void certify_initial(std::vector<GaussRat> approx);
    GaussRat newton_step(const GaussRat& c, long dyadic_bits) const;
    Rat disc_radius_sq(const GaussRat& c) const;
};

}  // namespace rankone
