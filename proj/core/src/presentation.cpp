#include "rankone/presentation.hpp"

#include <cctype>

#include "rankone/errors.hpp"

namespace rankone {

FieldElement Presentation::generator_image(int i) const {
    if (i < 0 || i >= d) throw_config("DimensionMismatch", "generator index out of range");
    if (backend() == Backend::number_field) return FieldElement{gens[static_cast<size_t>(i)]};
    return FieldElement{gens_ff[static_cast<size_t>(i)]};
}

Presentation make_number_field_presentation(std::string name, int d, ZPoly min_poly,
                                            std::vector<QPoly> gen_images, bool maximality,
                                            std::vector<ExplicitPlaceData> explicit_places) {
    if (d < 1) throw_config("DimensionMismatch", "system dimension must be at least 1");
    if (!min_poly.is_monic() || min_poly.degree() < 1)
        throw_config("ReducibleMinPoly", "minimal polynomial must be monic of degree >= 1");
    if (!is_irreducible_over_q(min_poly))
        throw_config("ReducibleMinPoly", "minimal polynomial factors over the rationals");
    if (static_cast<int>(gen_images.size()) != d)
        throw_config("DimensionMismatch", "expected one generator image per dimension");
    Presentation pres;
    pres.name = std::move(name);
    pres.d = d;
    pres.characteristic = 0;
    pres.min_poly = std::move(min_poly);
    pres.maximality_attested = maximality;
    QPoly qf = q_from_z(pres.min_poly);
    for (auto& g : gen_images) {
        QPoly reduced = q_divmod(g, qf).second;
        if (reduced.is_zero()) throw_config("ZeroGenerator", "generator image is zero");
        pres.gens.push_back(std::move(reduced));
    }
    for (auto& ep : explicit_places) {
        if (!is_prime(ep.prime))
            throw_config("SchemaError", "explicit place prime " + ep.prime.get_str() + " is not prime");
        if (ep.ram_index < 1 || ep.res_degree < 1)
            throw_config("SchemaError", "explicit place needs e >= 1 and f >= 1");
        if (static_cast<int>(ep.gen_ords.size()) != d)
            throw_config("SchemaError", "explicit place needs one generator order per dimension");
        pres.explicit_places.push_back(std::move(ep));
    }
    return pres;
}

Presentation make_function_field_presentation(std::string name, int d, Int q,
                                              std::vector<FqElem> gen_images, bool maximality) {
    if (d < 1) throw_config("DimensionMismatch", "system dimension must be at least 1");
    if (q < 2 || !is_prime(q))
        throw_config("CompositeCharacteristic", "characteristic must be prime, got " + q.get_str());
    if (static_cast<int>(gen_images.size()) != d)
        throw_config("DimensionMismatch", "expected one generator image per dimension");
    for (const auto& g : gen_images) {
        if (g.is_zero()) throw_config("ZeroGenerator", "generator image is zero");
    }
    Presentation pres;
    pres.name = std::move(name);
    pres.d = d;
    pres.characteristic = std::move(q);
    pres.maximality_attested = maximality;
    pres.gens_ff = std::move(gen_images);
    return pres;
}

FieldElement fe_zero(const Presentation& pres) {
    if (pres.backend() == Backend::number_field) return FieldElement{QPoly{}};
    return FieldElement{fq_zero()};
}

FieldElement fe_one(const Presentation& pres) {
    if (pres.backend() == Backend::number_field) return FieldElement{QPoly({Rat(1)})};
    return FieldElement{fq_one()};
}

FieldElement fe_from_int(const Int& v, const Presentation& pres) {
    if (pres.backend() == Backend::number_field) return FieldElement{QPoly({Rat(v)})};
    return FieldElement{fq_from_int(v, pres.characteristic)};
}

FieldElement fe_from_rat(const Rat& v, const Presentation& pres) {
    if (pres.backend() == Backend::number_field) return FieldElement{QPoly({v})};
    const Int& q = pres.characteristic;
    if (v.get_den() % q == 0)
        throw_config("SchemaError", "rational constant with denominator divisible by the characteristic");
    FqElem num = fq_from_int(v.get_num(), q);
    FqElem den = fq_from_int(v.get_den(), q);
    return FieldElement{fq_div(num, den, q)};
}

FieldElement fe_reduce(QPoly raw, const Presentation& pres) {
    return FieldElement{q_divmod(raw, q_from_z(pres.min_poly)).second};
}

FieldElement fe_from_fq(FqElem raw) { return FieldElement{std::move(raw)}; }

bool fe_is_zero(const FieldElement& a) {
    if (a.rep.index() == 0) return a.nf().is_zero();
    return a.ff().is_zero();
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b, const Presentation& pres) {
    if (pres.backend() == Backend::number_field) return FieldElement{q_add(a.nf(), b.nf())};
    return FieldElement{fq_add(a.ff(), b.ff(), pres.characteristic)};
}

FieldElement fe_sub(const FieldElement& a, const FieldElement& b, const Presentation& pres) {
    if (pres.backend() == Backend::number_field) return FieldElement{q_sub(a.nf(), b.nf())};
    return FieldElement{fq_sub(a.ff(), b.ff(), pres.characteristic)};
}

FieldElement fe_mul(const FieldElement& a, const FieldElement& b, const Presentation& pres) {
    if (pres.backend() == Backend::number_field)
        return fe_reduce(q_mul(a.nf(), b.nf()), pres);
    return FieldElement{fq_mul(a.ff(), b.ff(), pres.characteristic)};
}

FieldElement fe_neg(const FieldElement& a, const Presentation& pres) {
    if (pres.backend() == Backend::number_field) return FieldElement{q_scale(a.nf(), Rat(-1))};
    return FieldElement{fq_neg(a.ff(), pres.characteristic)};
}

FieldElement fe_inv(const FieldElement& a, const Presentation& pres) {
    if (fe_is_zero(a)) throw_precision("FieldDivByZero", "inverse of zero");
    if (pres.backend() == Backend::function_field)
        return FieldElement{fq_inv(a.ff(), pres.characteristic)};
    QBezout bz = q_gcd_ext(a.nf(), q_from_z(pres.min_poly));
    if (bz.g.degree() != 0)
        throw_precision("FieldDivByZero", "element shares a factor with the minimal polynomial");
    return fe_reduce(q_scale(bz.s, Rat(1) / bz.g.c[0]), pres);
}

FieldElement fe_div(const FieldElement& a, const FieldElement& b, const Presentation& pres) {
    return fe_mul(a, fe_inv(b, pres), pres);
}

FieldElement fe_pow(const FieldElement& a, long e, const Presentation& pres) {
    if (e == 0) return fe_one(pres);
    FieldElement base = e > 0 ? a : fe_inv(a, pres);
    unsigned long k = e > 0 ? static_cast<unsigned long>(e) : static_cast<unsigned long>(-e);
    FieldElement acc = fe_one(pres);
    FieldElement sq = base;
    while (k) {
        if (k & 1) acc = fe_mul(acc, sq, pres);
        if (k >>= 1) sq = fe_mul(sq, sq, pres);
    }
    return acc;
}

FieldElement power_product(const ExponentVector& n, const Presentation& pres) {
    if (static_cast<int>(n.size()) != pres.d)
        throw_config("DimensionMismatch", "exponent vector dimension mismatch");
    FieldElement acc = fe_one(pres);
    for (size_t i = 0; i < n.size(); ++i) {
        if (n[i] == 0) continue;
        acc = fe_mul(acc, fe_pow(pres.generator_image(static_cast<int>(i)), n[i], pres), pres);
    }
    return acc;
}

Rat fe_as_rat(const FieldElement& a, const Presentation& pres) {
    if (pres.backend() != Backend::number_field || pres.field_degree() != 1)
        throw_config("UnsupportedBackendShape", "rational value only exists over Q");
    return a.nf().at(0);
}

std::string fe_to_string(const FieldElement& a, const Presentation& pres) {
    if (pres.backend() == Backend::function_field) return fq_to_string(a.ff());
    const QPoly& f = a.nf();
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        Rat coef = f.at(i);
        if (coef == 0) continue;
        Rat coef_abs = abs(coef);
        std::string mag = coef_abs.get_str();
        if (out.empty()) {
            if (coef < 0) out += "-";
        } else {
            out += coef < 0 ? "-" : "+";
        }
        if (i == 0 || coef_abs != 1) out += mag;
        if (i > 0) {
            if (coef_abs != 1) out += "*";
            out += "x";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

namespace {

struct ExprParser {
    const std::string& s;
    size_t pos = 0;
    const Presentation& pres;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& why) {
        throw_config("ExpressionSyntax", why + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }

    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected an integer");
        return Int(s.substr(start, pos - start));
    }

    long signed_small_int() {
        skip_ws();
        bool neg = eat('-');
        Int v = integer();
        if (!v.fits_slong_p()) fail("exponent too large");
        return neg ? -v.get_si() : v.get_si();
    }

    FieldElement atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression");
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FieldElement e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return fe_from_int(integer(), pres);
        if (c == 'x' || c == 't') {
            char want = pres.backend() == Backend::number_field ? 'x' : 't';
            if (c != want) fail(std::string("variable '") + c + "' does not match the field (use '" + want + "')");
            ++pos;
            if (pres.backend() == Backend::number_field) return fe_reduce(QPoly({Rat(0), Rat(1)}), pres);
            return fe_from_fq(fq_t());
        }
        fail("unexpected character");
    }

    FieldElement factor() {
        if (eat('-')) return fe_neg(factor(), pres);
        FieldElement base = atom();
        if (eat('^')) {
            long e = signed_small_int();
            return fe_pow(base, e, pres);
        }
        return base;
    }

    FieldElement term() {
        FieldElement acc = factor();
        while (true) {
            if (eat('*'))
                acc = fe_mul(acc, factor(), pres);
            else if (eat('/')) {
                FieldElement den = factor();
                if (fe_is_zero(den)) fail("division by zero");
                acc = fe_div(acc, den, pres);
            } else
                return acc;
        }
    }

    FieldElement expr() {
        FieldElement acc = term();
        while (true) {
            if (eat('+'))
                acc = fe_add(acc, term(), pres);
            else if (eat('-'))
                acc = fe_sub(acc, term(), pres);
            else
                return acc;
        }
    }
};

}  // namespace

FieldElement fe_parse(const std::string& expr, const Presentation& pres) {
    ExprParser p{expr, 0, pres};
    FieldElement e = p.expr();
    p.skip_ws();
    if (p.pos != expr.size()) p.fail("trailing input");
    return e;
}

QMatrix multiplication_matrix(const FieldElement& a, const Presentation& pres) {
    if (pres.backend() != Backend::number_field)
        throw_config("UnsupportedBackendShape", "multiplication matrices exist for the number-field backend only");
    size_t n = static_cast<size_t>(pres.field_degree());
    QMatrix m(n, std::vector<Rat>(n, Rat(0)));
    QPoly qf = q_from_z(pres.min_poly);
    QPoly col = a.nf();
    for (size_t j = 0; j < n; ++j) {
        for (int i = 0; i <= col.degree(); ++i) m[static_cast<size_t>(i)][j] = col.c[static_cast<size_t>(i)];
        if (j + 1 < n) {
            // multiply by x and reduce
            QPoly shifted;
            shifted.c.assign(col.c.size() + 1, Rat(0));
            for (size_t i = 0; i < col.c.size(); ++i) shifted.c[i + 1] = col.c[i];
            while (!shifted.c.empty() && shifted.c.back() == 0) shifted.c.pop_back();
            col = q_divmod(shifted, qf).second;
        }
    }
    return m;
}

QPoly element_min_poly(const FieldElement& a, const Presentation& pres) {
    return q_squarefree_part(char_poly(multiplication_matrix(a, pres)));
}

Rat element_norm(const FieldElement& a, const Presentation& pres) {
    QPoly cp = char_poly(multiplication_matrix(a, pres));
    Rat c0 = cp.at(0);
    return pres.field_degree() % 2 == 0 ? c0 : Rat(-c0);
}

}  // namespace rankone
