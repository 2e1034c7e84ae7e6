#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rankone/exponent.hpp"
#include "rankone/fqfield.hpp"
#include "rankone/zpoly.hpp"

namespace rankone {

enum class Backend { number_field, function_field };

// Element of the presented global field: a polynomial in the field generator
// reduced below the minimal polynomial's degree (characteristic 0), or a
// rational function in t (characteristic q).
struct FieldElement {
    std::variant<QPoly, FqElem> rep;

    const QPoly& nf() const { return std::get<QPoly>(rep); }
    const FqElem& ff() const { return std::get<FqElem>(rep); }
    bool operator==(const FieldElement&) const = default;
    bool operator<(const FieldElement& o) const {
        if (rep.index() != o.rep.index()) return rep.index() < o.rep.index();
        if (rep.index() == 0) return nf() < o.nf();
        return ff() < o.ff();
    }
};

// User-supplied valuation data for a finite place the automatic discovery
// cannot produce (minimal polynomial not squarefree modulo the prime).
struct ExplicitPlaceData {
    Int prime;
    unsigned ram_index = 1;   // e
    unsigned res_degree = 1;  // f
    std::vector<long> gen_ords;  // ord_v of each generator image
};

struct Presentation {
    std::string name;
    int d = 1;
    Int characteristic;  // 0 or a prime q
    bool maximality_attested = false;

    // characteristic 0: K = Q[x]/(min_poly)
    ZPoly min_poly;           // monic irreducible
    std::vector<QPoly> gens;  // generator images, reduced

    // characteristic q: K = F_q(t)
    std::vector<FqElem> gens_ff;

    std::vector<ExplicitPlaceData> explicit_places;

    Backend backend() const {
        return characteristic == 0 ? Backend::number_field : Backend::function_field;
    }
    int field_degree() const { return min_poly.degree(); }
    FieldElement generator_image(int i) const;
};

Presentation make_number_field_presentation(std::string name, int d, ZPoly min_poly,
                                            std::vector<QPoly> gen_images, bool maximality,
                                            std::vector<ExplicitPlaceData> explicit_places = {});
Presentation make_function_field_presentation(std::string name, int d, Int q,
                                              std::vector<FqElem> gen_images, bool maximality);

FieldElement fe_zero(const Presentation& pres);
FieldElement fe_one(const Presentation& pres);
FieldElement fe_from_int(const Int& v, const Presentation& pres);
FieldElement fe_from_rat(const Rat& v, const Presentation& pres);
FieldElement fe_reduce(QPoly raw, const Presentation& pres);
FieldElement fe_from_fq(FqElem raw);

bool fe_is_zero(const FieldElement& a);
FieldElement fe_add(const FieldElement& a, const FieldElement& b, const Presentation& pres);
FieldElement fe_sub(const FieldElement& a, const FieldElement& b, const Presentation& pres);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b, const Presentation& pres);
FieldElement fe_div(const FieldElement& a, const FieldElement& b, const Presentation& pres);
FieldElement fe_neg(const FieldElement& a, const Presentation& pres);
FieldElement fe_inv(const FieldElement& a, const Presentation& pres);
FieldElement fe_pow(const FieldElement& a, long e, const Presentation& pres);

// beta_n = product of generator images to the powers in n.
FieldElement power_product(const ExponentVector& n, const Presentation& pres);

// The constant value of an element of a degree-one field (K = Q).
Rat fe_as_rat(const FieldElement& a, const Presentation& pres);

std::string fe_to_string(const FieldElement& a, const Presentation& pres);

// Expression over the field: integer literals, the field variable (x in
// characteristic 0, t in characteristic q), + - * / ^ and parentheses.
FieldElement fe_parse(const std::string& expr, const Presentation& pres);

// Matrix of multiplication by a on the power basis 1, x, ..., x^(n-1).
QMatrix multiplication_matrix(const FieldElement& a, const Presentation& pres);
// Monic minimal polynomial of the element over Q.
QPoly element_min_poly(const FieldElement& a, const Presentation& pres);
// Field norm N(a) = det of the multiplication matrix.
Rat element_norm(const FieldElement& a, const Presentation& pres);

}  // namespace rankone
