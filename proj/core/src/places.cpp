#include "rankone/places.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "rankone/errors.hpp"

namespace rankone {

namespace {

int kind_rank(PlaceKind k) {
    switch (k) {
        case PlaceKind::real: return 0;
        case PlaceKind::complex: return 1;
        case PlaceKind::finite: return 2;
        case PlaceKind::ff_finite: return 3;
        case PlaceKind::ff_inf: return 4;
    }
    return 5;
}

bool place_less(const Place& a, const Place& b) {
    if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
    switch (a.kind) {
        case PlaceKind::real:
        case PlaceKind::complex:
            return a.index < b.index;
        case PlaceKind::finite:
            if (a.prime != b.prime) return a.prime < b.prime;
            return a.index < b.index;
        case PlaceKind::ff_finite:
            return a.poly < b.poly;
        case PlaceKind::ff_inf:
            return false;
    }
    return false;
}

// Denominator-free scaled form of a rational polynomial: A = m * g with
// integer coefficients, m = lcm of coefficient denominators.
std::pair<ZPoly, Int> scaled_integer_form(const QPoly& g) {
    Int m(1);
    for (const Rat& coef : g.c) {
        Int den = coef.get_den();
        m = lcm(m, den);
    }
    std::vector<Int> ac;
    ac.reserve(g.c.size());
    for (const Rat& coef : g.c) {
        Rat scaled = coef * m;
        ac.push_back(scaled.get_num());
    }
    return {ZPoly(std::move(ac)), m};
}

std::vector<FpPoly> monic_irreducible_factors(const FpPoly& f, const Int& p) {
    std::vector<FpPoly> out;
    if (f.degree() < 1) return out;
    for (const auto& [fac, mult] : fp_factor(fp_make_monic(f, p), p)) out.push_back(fac);
    return out;
}

}  // namespace

std::string Place::id() const {
    switch (kind) {
        case PlaceKind::real:
            return "real" + std::to_string(index);
        case PlaceKind::complex:
            return "complex" + std::to_string(index);
        case PlaceKind::finite: {
            std::string s = "p" + prime.get_str() + "." + std::to_string(index);
            if (is_explicit) s += "x";
            return s;
        }
        case PlaceKind::ff_finite:
            return "(" + fp_to_string(poly) + ")";
        case PlaceKind::ff_inf:
            return "inf";
    }
    return "?";
}

PlaceEngine::PlaceEngine(Presentation pres) : pres_(std::move(pres)) {
    if (pres_.backend() == Backend::number_field)
        discover_char0();
    else
        discover_charq();
    std::sort(S_.places.begin(), S_.places.end(), place_less);
    for (const Place& v : S_.places) {
        switch (v.kind) {
            case PlaceKind::finite:
                if (!v.is_explicit)
                    s_factor_indices_[v.prime].push_back(static_cast<size_t>(v.index));
                break;
            case PlaceKind::ff_finite:
                s_ff_polys_.push_back(v.poly);
                break;
            case PlaceKind::ff_inf:
                s_has_inf_ = true;
                break;
            default:
                break;
        }
    }
}

void PlaceEngine::discover_char0() {
    roots_.emplace(pres_.min_poly);
    for (int i = 0; i < roots_->num_real(); ++i) {
        Place v;
        v.kind = PlaceKind::real;
        v.index = i;
        S_.places.push_back(v);
    }
    for (int i = 0; i < roots_->num_complex(); ++i) {
        Place v;
        v.kind = PlaceKind::complex;
        v.index = i;
        S_.places.push_back(v);
    }

    // Finite candidates: a place can see a generator only above a prime
    // dividing the generator's denominator or the norm of its numerator.
    std::set<Int> cand;
    for (const QPoly& g : pres_.gens) {
        auto [a, m] = scaled_integer_form(g);
        if (m > 1)
            for (const auto& [p, e] : factor_integer(m)) cand.insert(p);
        Int nrm = abs(resultant(pres_.min_poly, a));
        if (nrm == 0)
            throw_config("ZeroGenerator", "generator image has zero norm");
        if (nrm > 1)
            for (const auto& [p, e] : factor_integer(nrm)) cand.insert(p);
    }
    for (const auto& ep : pres_.explicit_places) cand.insert(ep.prime);

    for (const Int& p : cand) {
        if (prime_is_explicit(p)) {
            int idx = 0;
            for (const auto& ep : pres_.explicit_places) {
                if (ep.prime != p) continue;
                bool active = false;
                for (long o : ep.gen_ords)
                    if (o != 0) active = true;
                if (active) {
                    Place v;
                    v.kind = PlaceKind::finite;
                    v.index = idx;
                    v.prime = p;
                    v.ram_index = ep.ram_index;
                    v.res_degree = ep.res_degree;
                    v.is_explicit = true;
                    v.gen_ords = ep.gen_ords;
                    S_.places.push_back(v);
                }
                ++idx;
            }
            continue;
        }
        PAdicContext& ctx = context_for(p);
        for (size_t i = 0; i < ctx.num_places(); ++i) {
            bool active = false;
            for (const QPoly& g : pres_.gens) {
                if (ctx.ord(g, i) != 0) {
                    active = true;
                    break;
                }
            }
            if (!active) continue;
            Place v;
            v.kind = PlaceKind::finite;
            v.index = static_cast<int>(i);
            v.prime = p;
            v.poly = ctx.local_factor(i);
            v.res_degree = ctx.residue_degree(i);
            S_.places.push_back(v);
        }
    }
}

void PlaceEngine::discover_charq() {
    const Int& q = pres_.characteristic;
    std::set<FpPoly> polys;
    bool inf_active = false;
    for (const FqElem& g : pres_.gens_ff) {
        for (const FpPoly& fac : monic_irreducible_factors(g.num, q)) polys.insert(fac);
        for (const FpPoly& fac : monic_irreducible_factors(g.den, q)) polys.insert(fac);
        if (fq_ord_inf(g) != 0) inf_active = true;
    }
    for (const FpPoly& pi : polys) {
        bool active = false;
        for (const FqElem& g : pres_.gens_ff)
            if (fq_ord_at(g, pi, q) != 0) active = true;
        if (!active) continue;
        Place v;
        v.kind = PlaceKind::ff_finite;
        v.poly = pi;
        v.res_degree = static_cast<unsigned>(pi.degree());
        S_.places.push_back(v);
    }
    if (inf_active) {
        Place v;
        v.kind = PlaceKind::ff_inf;
        S_.places.push_back(v);
    }
}

PAdicContext& PlaceEngine::context_for(const Int& p) {
    auto it = padic_.find(p);
    if (it == padic_.end()) it = padic_.emplace(p, PAdicContext(pres_.min_poly, p)).first;
    return it->second;
}

bool PlaceEngine::prime_is_explicit(const Int& p) const {
    for (const auto& ep : pres_.explicit_places)
        if (ep.prime == p) return true;
    return false;
}

Rat PlaceEngine::abs_exact(const FieldElement& x, const Place& v) {
    if (fe_is_zero(x)) return Rat(0);
    switch (v.kind) {
        case PlaceKind::real:
        case PlaceKind::complex:
            throw_config("NotExactPlace", "archimedean values are enclosures, not rationals");
        case PlaceKind::finite: {
            long o = ord_at(x, v);
            Int res_size = int_pow(v.prime, v.res_degree);
            return rat_pow(Rat(res_size), -o);
        }
        case PlaceKind::ff_finite: {
            long o = fq_ord_at(x.ff(), v.poly, pres_.characteristic);
            return rat_pow(Rat(pres_.characteristic), -static_cast<long>(v.res_degree) * o);
        }
        case PlaceKind::ff_inf: {
            long o = fq_ord_inf(x.ff());
            return rat_pow(Rat(pres_.characteristic), -o);
        }
    }
    throw_config("NotExactPlace", "unknown place kind");
}

long PlaceEngine::ord_at(const FieldElement& x, const Place& v) {
    if (fe_is_zero(x)) throw_config("OrdOfZero", "ord is undefined at zero");
    switch (v.kind) {
        case PlaceKind::real:
        case PlaceKind::complex:
            throw_config("NotFinitePlace", "ord applies to finite places only");
        case PlaceKind::finite: {
            if (v.is_explicit) {
                if (x.nf().degree() > 0)
                    throw_config("RamifiedUnsupported",
                                 "user-supplied place " + v.id() +
                                     " carries generator data only; ord of a general element "
                                     "is not computable");
                return static_cast<long>(v.ram_index) * padic_ord(x.nf().at(0), v.prime);
            }
            return context_for(v.prime).ord(x.nf(), static_cast<size_t>(v.index));
        }
        case PlaceKind::ff_finite:
            return fq_ord_at(x.ff(), v.poly, pres_.characteristic);
        case PlaceKind::ff_inf:
            return fq_ord_inf(x.ff());
    }
    throw_config("NotFinitePlace", "unknown place kind");
}

RealInterval PlaceEngine::archimedean_value(const QPoly& x, const Place& v, long precision) {
    if (x.degree() <= 0) {
        Rat a = abs(Rat(x.at(0)));
        if (v.kind == PlaceKind::complex) a = a * a;
        return RealInterval(a);
    }
    if (precision < 2) precision = 2;
    Rat target(Int(1), Int(1) << static_cast<unsigned>(precision - 1));  // 2^(1-precision)
    Rat w(1, 16);
    for (int iter = 0; iter < 256; ++iter) {
        RealInterval val;
        if (v.kind == PlaceKind::real) {
            RealInterval root = roots_->real_root(v.index, w);
            RealInterval acc{};
            for (size_t i = x.c.size(); i-- > 0;) {
                RealInterval coef(x.c[i]);
                acc = acc * root + coef;
            }
            val = abs(acc);
        } else {
            ComplexBox b = roots_->complex_root(v.index, w);
            val = box_norm2(eval_box(x, b));
        }
        if (val.lo > 0 && val.width() <= target * val.lo) return val;
        w = w / 16;
    }
    throw_precision("AbsValueRefine", "enclosure did not reach the requested relative width");
}

RealInterval PlaceEngine::abs_value(const FieldElement& x, const Place& v, long precision) {
    if (fe_is_zero(x)) return RealInterval(Rat(0));
    if (v.is_exact()) return RealInterval(abs_exact(x, v));
    return archimedean_value(x.nf(), v, precision);
}

int PlaceEngine::compare_abs(const FieldElement& x, const Place& v, const Rat& bound) {
    if (fe_is_zero(x)) throw_config("CompareDomain", "element must be nonzero");
    if (bound <= 0) throw_config("CompareDomain", "bound must be positive");
    if (v.is_exact()) {
        Rat a = abs_exact(x, v);
        return a < bound ? -1 : (a > bound ? 1 : 0);
    }

    const QPoly& xq = x.nf();
    if (xq.degree() <= 0) {
        Rat a = abs(Rat(xq.at(0)));
        if (v.kind == PlaceKind::complex) a = a * a;
        return a < bound ? -1 : (a > bound ? 1 : 0);
    }

    if (v.kind == PlaceKind::real) {
        // |sigma(x)| = bound would make x - (+-bound) a low-degree multiple of
        // the irreducible minimal polynomial; impossible, so refinement decides.
        Rat w(1, 16);
        for (int iter = 0; iter < 512; ++iter) {
            RealInterval root = roots_->real_root(v.index, w);
            RealInterval acc{};
            for (size_t i = xq.c.size(); i-- > 0;) acc = acc * root + RealInterval(xq.c[i]);
            RealInterval val = abs(acc);
            if (val.lo > bound) return 1;
            if (val.hi < bound) return -1;
            w = w / 16;
        }
        throw_precision("CompareRefine", "real-place comparison exceeded the refinement cap");
    }

    // Complex place: the squared modulus is a root of the pair-product
    // polynomial of the element's minimal polynomial. A nonzero value there
    // certifies no tie; a zero demands an isolation gap around the bound.
    QPoly mx = element_min_poly(x, pres_);
    ZPoly fx = z_clear_denominators(mx);
    ZPoly pp = pair_product_poly(fx);
    QPoly ppq = q_from_z(pp);
    bool tie_possible = (q_eval(ppq, bound) == 0);

    Rat delta(0);
    bool have_delta = false;
    if (tie_possible) {
        QPoly reduced = ppq;
        QPoly lin(std::vector<Rat>{-bound, Rat(1)});
        for (;;) {
            auto [quot, rem] = q_divmod(reduced, lin);
            if (!rem.is_zero()) break;
            reduced = quot;
        }
        RealRootIsolation iso = isolate_real_roots(reduced);
        if (iso.roots.empty()) return 0;  // the squared modulus has nowhere else to be
        for (IsolatedRoot r : iso.roots) {
            while (!r.exact && r.lo <= bound && bound <= r.hi)
                refine_root(iso.squarefree, r, (r.hi - r.lo) / 4);
            Rat dist;
            if (r.exact)
                dist = abs(Rat(r.value - bound));
            else
                dist = r.lo > bound ? Rat(r.lo - bound) : Rat(bound - r.hi);
            if (!have_delta || dist < delta) {
                delta = dist;
                have_delta = true;
            }
        }
    }

    Rat w(1, 16);
    for (int iter = 0; iter < 512; ++iter) {
        ComplexBox b = roots_->complex_root(v.index, w);
        RealInterval val = box_norm2(eval_box(xq, b));
        if (val.lo > bound) return 1;
        if (val.hi < bound) return -1;
        if (tie_possible && have_delta && bound - val.lo < delta && val.hi - bound < delta)
            return 0;
        w = w / 16;
    }
    throw_precision("CompareRefine", "complex-place comparison exceeded the refinement cap");
}

std::vector<Int> PlaceEngine::denominator_candidate_primes(const FieldElement& x) const {
    std::vector<Int> out;
    Int m(1);
    for (const Rat& coef : x.nf().c) {
        Int den = coef.get_den();
        m = lcm(m, den);
    }
    if (m > 1)
        for (const auto& [p, e] : factor_integer(m)) out.push_back(p);
    return out;
}

bool PlaceEngine::in_ring(const FieldElement& x) {
    if (!pres_.maximality_attested)
        throw_config("MaximalityNotAttested",
                     "ring membership needs the generator-maximality attestation");
    if (fe_is_zero(x)) return true;

    if (pres_.backend() == Backend::function_field) {
        const Int& q = pres_.characteristic;
        const FqElem& a = x.ff();
        for (const FpPoly& pi : monic_irreducible_factors(a.den, q)) {
            bool in_s = std::find(s_ff_polys_.begin(), s_ff_polys_.end(), pi) != s_ff_polys_.end();
            if (!in_s) return false;
        }
        if (!s_has_inf_ && fq_ord_inf(a) < 0) return false;
        return true;
    }

    for (const Int& p : denominator_candidate_primes(x)) {
        if (prime_is_explicit(p))
            throw_config("RamifiedUnsupported",
                         "cannot verify membership at unlisted places above " + p.get_str());
        auto it = s_factor_indices_.find(p);
        if (it == s_factor_indices_.end()) {
            // no place above p lies in S; maximality makes integrality at p a
            // coefficient-denominator test, which p fails by construction
            return false;
        }
        PAdicContext& ctx = context_for(p);
        const std::vector<size_t>& in_s = it->second;
        for (size_t i = 0; i < ctx.num_places(); ++i) {
            if (std::find(in_s.begin(), in_s.end(), i) != in_s.end()) continue;
            if (ctx.ord(x.nf(), i) < 0) return false;
        }
    }
    return true;
}

bool PlaceEngine::is_s_unit(const FieldElement& x) {
    if (fe_is_zero(x)) return false;

    if (pres_.backend() == Backend::function_field) {
        const Int& q = pres_.characteristic;
        const FqElem& a = x.ff();
        for (const FpPoly& pi : monic_irreducible_factors(a.num, q))
            if (std::find(s_ff_polys_.begin(), s_ff_polys_.end(), pi) == s_ff_polys_.end())
                return false;
        for (const FpPoly& pi : monic_irreducible_factors(a.den, q))
            if (std::find(s_ff_polys_.begin(), s_ff_polys_.end(), pi) == s_ff_polys_.end())
                return false;
        if (!s_has_inf_ && fq_ord_inf(a) != 0) return false;
        return true;
    }

    std::set<Int> cand;
    auto [a, m] = scaled_integer_form(x.nf());
    if (m > 1)
        for (const auto& [p, e] : factor_integer(m)) cand.insert(p);
    Int nrm = abs(resultant(pres_.min_poly, a));
    if (nrm > 1)
        for (const auto& [p, e] : factor_integer(nrm)) cand.insert(p);

    for (const Int& p : cand) {
        if (prime_is_explicit(p))
            throw_config("RamifiedUnsupported",
                         "cannot verify valuations at unlisted places above " + p.get_str());
        auto it = s_factor_indices_.find(p);
        if (it == s_factor_indices_.end()) {
            // no place above p lies in S, so x must have order zero at every
            // place over p. A denominator prime breaks integrality outright;
            // otherwise all orders are nonnegative and their norm total is
            // ord_p(nrm) > 0. Either way p being a candidate refutes unit-ness.
            return false;
        }
        PAdicContext& ctx = context_for(p);
        const std::vector<size_t>& in_s = it->second;
        for (size_t i = 0; i < ctx.num_places(); ++i) {
            if (std::find(in_s.begin(), in_s.end(), i) != in_s.end()) continue;
            if (ctx.ord(x.nf(), i) != 0) return false;
        }
    }
    return true;
}

RealInterval PlaceEngine::product_over_S(const FieldElement& x, long precision) {
    Rat exact(1);
    RealInterval arch(Rat(1));
    bool any_arch = false;
    for (const Place& v : S_.places) {
        if (v.is_exact()) {
            exact *= abs_exact(x, v);
        } else {
            arch = arch * abs_value(x, v, precision);
            any_arch = true;
        }
    }
    if (!any_arch) return RealInterval(exact);
    return exact * arch;
}

bool PlaceEngine::product_formula_check(const FieldElement& x, long precision) {
    if (fe_is_zero(x) || !is_s_unit(x))
        throw_config("NotAnSUnit", "product formula applies to S-units only");
    RealInterval prod = product_over_S(x, precision);
    return prod.contains(Rat(1));
}

PlaceSet discover_places(const Presentation& pres) {
    PlaceEngine engine(pres);
    return engine.S();
}

}  // namespace rankone
