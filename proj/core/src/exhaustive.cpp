#include "rankone/exhaustive.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>

#include "rankone/roots.hpp"

namespace rankone {

namespace {

Int rat_floor(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return r;
}

// Gauss-Jordan over intervals. Fails (nullopt) when no zero-free pivot is
// available, which a tighter input matrix repairs.
std::optional<std::vector<std::vector<RealInterval>>> iv_inverse(
    std::vector<std::vector<RealInterval>> m) {
    const size_t n = m.size();
    std::vector<std::vector<RealInterval>> inv(n, std::vector<RealInterval>(n));
    for (size_t i = 0; i < n; ++i) inv[i][i] = RealInterval(Rat(1));
    for (size_t col = 0; col < n; ++col) {
        size_t piv = n;
        Rat best(0);
        for (size_t r = col; r < n; ++r) {
            if (m[r][col].contains_zero()) continue;
            Rat mig = m[r][col].lo > 0 ? m[r][col].lo : -m[r][col].hi;
            if (piv == n || mig > best) {
                piv = r;
                best = mig;
            }
        }
        if (piv == n) return std::nullopt;
        std::swap(m[piv], m[col]);
        std::swap(inv[piv], inv[col]);
        const RealInterval p = m[col][col];
        for (size_t j = 0; j < n; ++j) {
            m[col][j] = m[col][j] / p;
            inv[col][j] = inv[col][j] / p;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            const RealInterval f = m[r][col];
            if (f.lo == 0 && f.hi == 0) continue;
            for (size_t j = 0; j < n; ++j) {
                m[r][j] = m[r][j] - f * m[col][j];
                inv[r][j] = inv[r][j] - f * inv[col][j];
            }
        }
    }
    return inv;
}

// Per-coordinate bound on the power-basis coordinates of b given bounds on
// every embedding: |b_i| <= sum_j |V^{-1}_{ij}| * rhs_j where V is the
// real-form embedding matrix of 1, alpha, ..., alpha^{deg-1}.
std::vector<Int> coordinate_box(const ZPoly& min_poly, const Rat& real_bound,
                                const Rat& complex_bound) {
    RootSystem rs(min_poly);
    const size_t n = static_cast<size_t>(min_poly.degree());
    Rat width = Rat(1) / Rat(Int(1) << 40);
    for (int attempt = 0; attempt < 6; ++attempt) {
        std::vector<std::vector<RealInterval>> V(n, std::vector<RealInterval>(n));
        std::vector<Rat> rhs(n);
        size_t row = 0;
        for (int i = 0; i < rs.num_real(); ++i, ++row) {
            RealInterval r = rs.real_root(i, width);
            RealInterval pw{Rat(1)};
            for (size_t j = 0; j < n; ++j) {
                V[row][j] = pw;
                pw = pw * r;
            }
            rhs[row] = real_bound;
        }
        for (int i = 0; i < rs.num_complex(); ++i, row += 2) {
            ComplexBox z = rs.complex_root(i, width);
            RealInterval px{Rat(1)}, py{Rat(0)};
            for (size_t j = 0; j < n; ++j) {
                V[row][j] = px;
                V[row + 1][j] = py;
                RealInterval nx = px * z.re - py * z.im;
                py = px * z.im + py * z.re;
                px = nx;
            }
            rhs[row] = complex_bound;
            rhs[row + 1] = complex_bound;
        }
        auto inv = iv_inverse(std::move(V));
        if (!inv) {
            width /= 1024;
            continue;
        }
        std::vector<Int> box(n);
        for (size_t i = 0; i < n; ++i) {
            Rat bound(0);
            for (size_t j = 0; j < n; ++j) bound += abs((*inv)[i][j]).hi * rhs[j];
            box[i] = rat_floor(bound);
        }
        return box;
    }
    throw_precision("BoxSolveFailed", "embedding matrix stayed singular under refinement");
}

ExhaustiveSet enumerate_char0(PlaceEngine& eng, const Rat& theta, size_t cap) {
    const Presentation& pres = eng.pres();
    std::map<Int, long> dpow;
    for (const Place& v : eng.S().places) {
        if (v.kind != PlaceKind::finite) continue;
        if (v.is_explicit)
            throw_config("RamifiedUnsupported",
                         "cannot enumerate with user-supplied places (no local arithmetic)");
        const Rat size{int_pow(v.prime, v.res_degree)};
        long L = 0;
        Rat acc = size;
        while (acc <= theta) {
            ++L;
            acc *= size;
        }
        auto it = dpow.find(v.prime);
        if (it == dpow.end())
            dpow.emplace(v.prime, L);
        else
            it->second = std::max(it->second, L);
    }
    Int D(1);
    for (const auto& [p, e] : dpow) D *= int_pow(p, static_cast<unsigned long>(e));

    const int deg = pres.field_degree();
    std::vector<Int> box;
    if (deg == 1) {
        box.push_back(rat_floor(Rat(D) * theta));
    } else {
        const Rat sqrt_theta_hi = sqrt_enclosure(RealInterval(theta), 64).hi;
        box = coordinate_box(pres.min_poly, Rat(D) * theta, Rat(D) * sqrt_theta_hi);
    }

    Int count(1);
    for (const Int& b : box) count *= 2 * b + 1;
    if (count > Int(static_cast<unsigned long>(cap)))
        throw_cap("SetTooLarge", "candidate box holds " + count.get_str() + " points");

    std::set<FieldElement> found;
    std::vector<Int> b(box.size());
    for (size_t i = 0; i < box.size(); ++i) b[i] = -box[i];
    while (true) {
        bool all_zero = true;
        for (const Int& x : b)
            if (x != 0) {
                all_zero = false;
                break;
            }
        if (!all_zero) {
            std::vector<Rat> coeffs(box.size());
            for (size_t i = 0; i < box.size(); ++i) coeffs[i] = Rat(b[i]) / Rat(D);
            FieldElement a = fe_reduce(QPoly(std::move(coeffs)), pres);
            if (hk_member(eng, theta, a)) found.insert(std::move(a));
        }
        size_t pos = 0;
        while (pos < box.size()) {
            if (b[pos] < box[pos]) {
                ++b[pos];
                break;
            }
            b[pos] = -box[pos];
            ++pos;
        }
        if (pos == box.size()) break;
    }

    ExhaustiveSet out;
    out.theta = theta;
    out.elements.assign(found.begin(), found.end());
    return out;
}

ExhaustiveSet enumerate_charq(PlaceEngine& eng, const Rat& theta, size_t cap) {
    const Presentation& pres = eng.pres();
    const Int q = pres.characteristic;
    std::vector<std::pair<FpPoly, long>> dens;
    long l_inf = 0;
    for (const Place& v : eng.S().places) {
        if (v.kind == PlaceKind::ff_finite) {
            const Rat size{int_pow(q, static_cast<unsigned long>(v.poly.degree()))};
            long L = 0;
            Rat acc = size;
            while (acc <= theta) {
                ++L;
                acc *= size;
            }
            dens.emplace_back(v.poly, L);
        } else if (v.kind == PlaceKind::ff_inf) {
            const Rat qr{q};
            Rat acc = qr;
            while (acc <= theta) {
                ++l_inf;
                acc *= qr;
            }
        }
    }

    // candidate count over all denominator exponent tuples
    Int count(0);
    std::vector<long> m(dens.size(), 0);
    while (true) {
        long degw = 0;
        for (size_t i = 0; i < dens.size(); ++i) degw += m[i] * dens[i].first.degree();
        count += int_pow(q, static_cast<unsigned long>(degw + l_inf + 1)) - 1;
        size_t pos = 0;
        while (pos < dens.size()) {
            if (m[pos] < dens[pos].second) {
                ++m[pos];
                break;
            }
            m[pos] = 0;
            ++pos;
        }
        if (pos == dens.size()) break;
    }
    if (count > Int(static_cast<unsigned long>(cap)))
        throw_cap("SetTooLarge", "candidate family holds " + count.get_str() + " points");

    std::set<FieldElement> found;
    std::fill(m.begin(), m.end(), 0);
    while (true) {
        FpPoly w = fp_one();
        for (size_t i = 0; i < dens.size(); ++i)
            for (long e = 0; e < m[i]; ++e) w = fp_mul(w, dens[i].first, q);
        const long maxdeg = w.degree() + l_inf;
        std::vector<Int> coeff(static_cast<size_t>(maxdeg) + 1, Int(0));
        while (true) {
            size_t cpos = 0;
            while (cpos < coeff.size()) {
                if (coeff[cpos] + 1 < q) {
                    ++coeff[cpos];
                    break;
                }
                coeff[cpos] = 0;
                ++cpos;
            }
            if (cpos == coeff.size()) break;
            FieldElement a = fe_from_fq(fq_make(fp_from_coeffs(coeff, q), w, q));
            if (hk_member(eng, theta, a)) found.insert(std::move(a));
        }
        size_t pos = 0;
        while (pos < dens.size()) {
            if (m[pos] < dens[pos].second) {
                ++m[pos];
                break;
            }
            m[pos] = 0;
            ++pos;
        }
        if (pos == dens.size()) break;
    }

    ExhaustiveSet out;
    out.theta = theta;
    out.elements.assign(found.begin(), found.end());
    return out;
}

}  // namespace

bool hk_member(PlaceEngine& eng, const Rat& theta, const FieldElement& a) {
    if (fe_is_zero(a)) return false;
    const Rat inv_theta = Rat(1) / theta;
    for (const Place& v : eng.S().places) {
        if (v.is_exact()) {
            const Rat r = eng.abs_exact(a, v);
            if (r > theta || r < inv_theta) return false;
        } else {
            if (eng.compare_abs(a, v, theta) > 0) return false;
            if (eng.compare_abs(a, v, inv_theta) < 0) return false;
        }
    }
    return true;
}

ExhaustiveSet enumerate_Hk(PlaceEngine& eng, const Rat& theta, size_t cap) {
    if (theta < 1) throw_config("ThetaRange", "enumeration needs theta >= 1");
    if (!eng.pres().maximality_attested)
        throw_config("MaximalityNotAttested",
                     "enumeration relies on the power basis spanning the maximal order");
    return eng.pres().backend() == Backend::number_field ? enumerate_char0(eng, theta, cap)
                                                         : enumerate_charq(eng, theta, cap);
}

PropertyCheck check_property_I(PlaceEngine& eng, const ExhaustiveSet& h, const ExponentVector& n) {
    if (is_zero(n)) throw_config("ZeroExponent", "property checks need n != 0");
    const Presentation& pres = eng.pres();
    const FieldElement beta = power_product(n, pres);
    for (const FieldElement& a : h.elements) {
        FieldElement img = fe_mul(beta, a, pres);
        if (hk_member(eng, h.theta, img)) return {false, a, std::move(img)};
    }
    return {};
}

PropertyCheck check_property_II(PlaceEngine& eng, const ExhaustiveSet& h, const ExponentVector& n,
                                IIVariant variant) {
    if (is_zero(n)) throw_config("ZeroExponent", "property checks need n != 0");
    const Presentation& pres = eng.pres();
    const FieldElement beta = power_product(n, pres);
    const FieldElement c = fe_sub(beta, fe_one(pres), pres);
    if (fe_is_zero(c)) {
        // u^n acts as the identity. (beta-1)H = {0}, so the literal
        // intersection is trivial; but every a in M lands on 0 in H, so the
        // strong form fails, witnessed by 1.
        if (variant == IIVariant::literal) return {};
        return {false, fe_one(pres), fe_zero(pres)};
    }
    if (variant == IIVariant::literal) {
        for (const FieldElement& a : h.elements) {
            FieldElement img = fe_mul(c, a, pres);
            if (hk_member(eng, h.theta, img)) return {false, a, std::move(img)};
        }
        return {};
    }
    for (const FieldElement& member : h.elements) {
        FieldElement a = fe_div(member, c, pres);
        if (eng.in_ring(a)) return {false, std::move(a), member};
    }
    return {};
}

std::string scan_property_name(ScanProperty p) {
    switch (p) {
        case ScanProperty::property_I:
            return "I";
        case ScanProperty::property_II_literal:
            return "II";
        case ScanProperty::property_II_strong:
            return "II-strong";
    }
    return "?";
}

std::vector<ExponentVector> shell_points(int d, const Int& norm_sq_bound) {
    if (d < 1) throw_config("DimensionMismatch", "dimension must be positive");
    std::vector<ExponentVector> out;
    if (norm_sq_bound < 1) return out;
    Int r0i;
    mpz_sqrt(r0i.get_mpz_t(), norm_sq_bound.get_mpz_t());
    if (!r0i.fits_slong_p()) throw_cap("WindowTooLarge", "scan radius out of range");
    const long r0 = r0i.get_si();
    Int raw(2 * r0 + 1);
    Int total(1);
    for (int i = 0; i < d; ++i) total *= raw;
    if (total > 10000000) throw_cap("WindowTooLarge", "scan window holds too many points");

    std::vector<std::pair<Int, ExponentVector>> keyed;
    ExponentVector n(static_cast<size_t>(d), -r0);
    while (true) {
        if (!is_zero(n)) {
            Int n2 = exp_norm_sq(n);
            if (n2 <= norm_sq_bound) keyed.emplace_back(std::move(n2), n);
        }
        size_t pos = 0;
        while (pos < n.size()) {
            if (n[pos] < r0) {
                ++n[pos];
                break;
            }
            n[pos] = -r0;
            ++pos;
        }
        if (pos == n.size()) break;
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
    });
    out.reserve(keyed.size());
    for (auto& kv : keyed) out.push_back(std::move(kv.second));
    return out;
}

RadiusReport scan_radius(PlaceEngine& eng, const ExhaustiveSet& h, ScanProperty prop,
                         const Rat& window_radius) {
    if (window_radius < 1) throw_config("WindowRange", "window radius must be >= 1");
    if (h.theta <= 1) throw_config("ThetaRange", "scans need theta > 1");
    const int d = eng.pres().d;
    const auto pts = shell_points(d, rat_floor(window_radius * window_radius));

    RadiusReport rep;
    rep.k = h.k;
    rep.theta = h.theta;
    rep.property = prop;
    rep.window_radius = window_radius;
    if (pts.empty()) return rep;
    const Int outer = exp_norm_sq(pts.back());

    for (const ExponentVector& n : pts) {
        PropertyCheck c;
        switch (prop) {
            case ScanProperty::property_I:
                c = check_property_I(eng, h, n);
                break;
            case ScanProperty::property_II_literal:
                c = check_property_II(eng, h, n, IIVariant::literal);
                break;
            case ScanProperty::property_II_strong:
                c = check_property_II(eng, h, n, IIVariant::strong);
                break;
        }
        if (c.holds) continue;
        const Int n2 = exp_norm_sq(n);
        if (!rep.has_violation || n2 > rep.last_violation_norm_sq) {
            rep.has_violation = true;
            rep.last_violation_norm_sq = n2;
            rep.witness_n = n;
            rep.witness_a = c.witness;
        }
        if (n2 == outer) rep.boundary_hit = true;
    }
    return rep;
}

}  // namespace rankone
