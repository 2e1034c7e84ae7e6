#include "rankone/modpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

#include "rankone/errors.hpp"

namespace rankone {

namespace {

Int mod_reduce(const Int& a, const Int& p) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

Int mod_inv(const Int& a, const Int& p) {
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()))
        throw_precision("ModInverse", "non-invertible element mod " + p.get_str());
    return r;
}

void normalize(FpPoly& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

}  // namespace

bool FpPoly::operator<(const FpPoly& o) const {
    if (c.size() != o.c.size()) return c.size() < o.c.size();
    for (size_t i = c.size(); i-- > 0;) {
        if (c[i] != o.c[i]) return c[i] < o.c[i];
    }
    return false;
}

FpPoly fp_from_coeffs(std::vector<Int> raw, const Int& p) {
    FpPoly f{std::move(raw)};
    for (auto& v : f.c) v = mod_reduce(v, p);
    normalize(f);
    return f;
}

FpPoly fp_one() { return FpPoly{{Int(1)}}; }
FpPoly fp_x() { return FpPoly{{Int(0), Int(1)}}; }

FpPoly fp_add(const FpPoly& a, const FpPoly& b, const Int& p) {
    FpPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = mod_reduce(a.at(static_cast<int>(i)) + b.at(static_cast<int>(i)), p);
    normalize(r);
    return r;
}

FpPoly fp_sub(const FpPoly& a, const FpPoly& b, const Int& p) {
    FpPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = mod_reduce(a.at(static_cast<int>(i)) - b.at(static_cast<int>(i)), p);
    normalize(r);
    return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, const Int& p) {
    if (a.is_zero() || b.is_zero()) return {};
    FpPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    for (auto& v : r.c) v = mod_reduce(v, p);
    normalize(r);
    return r;
}

FpPoly fp_scale(const FpPoly& a, const Int& s, const Int& p) {
    FpPoly r = a;
    for (auto& v : r.c) v = mod_reduce(v * s, p);
    normalize(r);
    return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b, const Int& p) {
    if (b.is_zero()) throw_precision("PolyDivByZero", "division by the zero polynomial");
    FpPoly rem = a;
    FpPoly quo;
    int db = b.degree();
    if (rem.degree() >= db) quo.c.assign(rem.c.size() - b.c.size() + 1, Int(0));
    Int lead_inv = mod_inv(b.c.back(), p);
    while (rem.degree() >= db) {
        int k = rem.degree() - db;
        Int q = mod_reduce(rem.c.back() * lead_inv, p);
        quo.c[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= db; ++i)
            rem.c[static_cast<size_t>(i + k)] = mod_reduce(rem.c[static_cast<size_t>(i + k)] - q * b.c[static_cast<size_t>(i)], p);
        normalize(rem);
    }
    normalize(quo);
    return {quo, rem};
}

FpPoly fp_rem(const FpPoly& a, const FpPoly& b, const Int& p) { return fp_divmod(a, b, p).second; }

FpPoly fp_make_monic(const FpPoly& a, const Int& p) {
    if (a.is_zero()) return a;
    return fp_scale(a, mod_inv(a.c.back(), p), p);
}

FpPoly fp_gcd(const FpPoly& a, const FpPoly& b, const Int& p) {
    FpPoly x = a, y = b;
    while (!y.is_zero()) {
        FpPoly r = fp_rem(x, y, p);
        x = std::move(y);
        y = std::move(r);
    }
    return fp_make_monic(x, p);
}

FpBezout fp_gcd_ext(const FpPoly& a, const FpPoly& b, const Int& p) {
    FpPoly r0 = a, r1 = b;
    FpPoly s0 = fp_one(), s1 = {};
    FpPoly t0 = {}, t1 = fp_one();
    while (!r1.is_zero()) {
        auto [q, r] = fp_divmod(r0, r1, p);
        FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
        FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Int inv = mod_inv(r0.c.back(), p);
    return {fp_scale(r0, inv, p), fp_scale(s0, inv, p), fp_scale(t0, inv, p)};
}

FpPoly fp_powmod(const FpPoly& base, const Int& e, const FpPoly& mod, const Int& p) {
    if (e < 0) throw_precision("NegativePolyPower", "negative exponent in powmod");
    FpPoly acc = fp_rem(fp_one(), mod, p);
    FpPoly sq = fp_rem(base, mod, p);
    size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return acc;
    for (size_t i = 0; i < bits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), i)) acc = fp_rem(fp_mul(acc, sq, p), mod, p);
        if (i + 1 < bits) sq = fp_rem(fp_mul(sq, sq, p), mod, p);
    }
    return acc;
}

FpPoly fp_derivative(const FpPoly& a, const Int& p) {
    FpPoly r;
    if (a.degree() < 1) return r;
    r.c.resize(a.c.size() - 1);
    for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mod_reduce(a.c[i] * Int(static_cast<unsigned long>(i)), p);
    normalize(r);
    return r;
}

Int fp_eval(const FpPoly& a, const Int& x, const Int& p) {
    Int acc(0);
    for (size_t i = a.c.size(); i-- > 0;) acc = mod_reduce(acc * x + a.c[i], p);
    return acc;
}

bool fp_is_squarefree(const FpPoly& f, const Int& p) {
    if (f.degree() <= 0) return true;
    FpPoly d = fp_derivative(f, p);
    if (d.is_zero()) return false;  // p-th power
    return fp_gcd(f, d, p).degree() == 0;
}

namespace {

// p-th root of a p-th power (coefficients only at indices divisible by p;
// Frobenius is the identity on F_p, so coefficients pass through).
FpPoly fp_pth_root(const FpPoly& f, const Int& p) {
    if (!p.fits_ulong_p()) throw_precision("PthRoot", "characteristic too large for p-th root");
    unsigned long pl = p.get_ui();
    FpPoly r;
    r.c.resize(f.c.size() / pl + 1, Int(0));
    for (size_t i = 0; i < f.c.size(); ++i) {
        if (f.c[i] != 0) {
            if (i % pl != 0) throw_precision("PthRoot", "polynomial is not a p-th power");
            r.c[i / pl] = f.c[i];
        }
    }
    normalize(r);
    return r;
}

// Product of the distinct monic irreducible factors of monic f.
FpPoly fp_radical(const FpPoly& f, const Int& p) {
    if (f.degree() <= 0) return fp_one();
    FpPoly d = fp_derivative(f, p);
    if (d.is_zero()) return fp_radical(fp_pth_root(f, p), p);
    FpPoly g = fp_gcd(f, d, p);
    FpPoly w = fp_divmod(f, g, p).first;  // distinct factors with multiplicity prime to p
    // strip all w-support from g; what remains is a p-th power
    while (true) {
        FpPoly h = fp_gcd(g, w, p);
        if (h.degree() <= 0) break;
        g = fp_divmod(g, h, p).first;
    }
    if (g.degree() <= 0) return w;
    return fp_mul(w, fp_radical(fp_pth_root(g, p), p), p);
}

struct SplitRng {
    uint64_t state = 0x9e3779b97f4a7c15ull;
    uint64_t next() {
        state = state * 6364136223846793005ull + 1442695040888963407ull;
        return state ^ (state >> 29);
    }
    Int draw_mod(const Int& p) {
        Int v = Int(next());
        v = (v << 64) + Int(next());
        return mod_reduce(v, p);
    }
    FpPoly draw_poly(int max_deg, const Int& p) {
        FpPoly f;
        f.c.resize(static_cast<size_t>(max_deg) + 1);
        for (auto& v : f.c) v = draw_mod(p);
        normalize(f);
        return f;
    }
};

// Distinct-degree: (product of degree-k irreducibles, k) for squarefree monic f.
std::vector<std::pair<FpPoly, int>> fp_ddf(FpPoly f, const Int& p) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly h = fp_rem(fp_x(), f, p);
    int k = 0;
    while (f.degree() > 2 * (k + 1) - 1) {
        ++k;
        h = fp_powmod(h, p, f, p);
        FpPoly g = fp_gcd(fp_sub(h, fp_x(), p), f, p);
        if (g.degree() > 0) {
            out.emplace_back(g, k);
            f = fp_divmod(f, g, p).first;
            h = fp_rem(h, f, p);
        }
    }
    if (f.degree() > 0) out.emplace_back(f, f.degree());
    return out;
}

// Equal-degree splitting (Cantor-Zassenhaus); f monic squarefree, all
// irreducible factors of degree k.
void fp_edf(const FpPoly& f, int k, const Int& p, SplitRng& rng, std::vector<FpPoly>& out) {
    if (f.degree() == k) {
        out.push_back(f);
        return;
    }
    FpPoly splitter;
    while (true) {
        FpPoly a = rng.draw_poly(f.degree() - 1, p);
        if (a.degree() < 1) continue;  // constants never split
        FpPoly b;
        if (p == 2) {
            // trace map over F_{2^k}
            b = a;
            FpPoly t = a;
            for (int i = 1; i < k; ++i) {
                t = fp_rem(fp_mul(t, t, p), f, p);
                b = fp_add(b, t, p);
            }
        } else {
            Int e = (int_pow(p, static_cast<unsigned long>(k)) - 1) / 2;
            b = fp_sub(fp_powmod(a, e, f, p), fp_one(), p);
        }
        FpPoly g = fp_gcd(b, f, p);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            splitter = g;
            break;
        }
    }
    fp_edf(splitter, k, p, rng, out);
    fp_edf(fp_divmod(f, splitter, p).first, k, p, rng, out);
}

}  // namespace

bool fp_is_irreducible(const FpPoly& f, const Int& p) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (!fp_is_squarefree(f, p)) return false;
    auto parts = fp_ddf(fp_make_monic(f, p), p);
    return parts.size() == 1 && parts[0].second == f.degree();
}

std::vector<std::pair<FpPoly, unsigned>> fp_factor(const FpPoly& f, const Int& p) {
    if (f.degree() < 0) throw_config("FactorZero", "cannot factor the zero polynomial");
    std::vector<std::pair<FpPoly, unsigned>> out;
    if (f.degree() == 0) return out;
    FpPoly monic = fp_make_monic(f, p);
    FpPoly rad = fp_radical(monic, p);
    SplitRng rng;
    std::vector<FpPoly> irreducibles;
    for (auto& [g, k] : fp_ddf(rad, p)) fp_edf(g, k, p, rng, irreducibles);
    std::sort(irreducibles.begin(), irreducibles.end());
    for (const auto& g : irreducibles) {
        unsigned m = 0;
        FpPoly rem = monic;
        while (true) {
            auto [q, r] = fp_divmod(rem, g, p);
            if (!r.is_zero()) break;
            rem = q;
            ++m;
        }
        out.emplace_back(g, m);
    }
    return out;
}

namespace {

using IntPoly = std::vector<Int>;  // plain integer coefficients, index = degree

void ip_normalize(IntPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

IntPoly ip_reduce(IntPoly f, const Int& m) {
    for (auto& v : f) v = mod_reduce(v, m);
    ip_normalize(f);
    return f;
}

IntPoly ip_mul(const IntPoly& a, const IntPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return ip_reduce(std::move(r), m);
}

IntPoly ip_sub(const IntPoly& a, const IntPoly& b, const Int& m) {
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        Int av = i < a.size() ? a[i] : Int(0);
        Int bv = i < b.size() ? b[i] : Int(0);
        r[i] = av - bv;
    }
    return ip_reduce(std::move(r), m);
}

IntPoly ip_add(const IntPoly& a, const IntPoly& b, const Int& m) {
    IntPoly r(std::max(a.size(), b.size()), Int(0));
    for (size_t i = 0; i < r.size(); ++i) {
        Int av = i < a.size() ? a[i] : Int(0);
        Int bv = i < b.size() ? b[i] : Int(0);
        r[i] = av + bv;
    }
    return ip_reduce(std::move(r), m);
}

IntPoly ip_from_fp(const FpPoly& f) { return f.c; }

FpPoly fp_from_ip(const IntPoly& f, const Int& p) {
    return fp_from_coeffs(f, p);
}

// Lifts monic f = g*h from mod p^j to mod p^K; s*g + t*h = 1 mod p.
void hensel_pair(const IntPoly& f, IntPoly& g, IntPoly& h, const FpPoly& s, const FpPoly& t,
                 const Int& p, unsigned K) {
    Int m = p;
    for (unsigned j = 1; j < K; ++j) {
        Int m_next = m * p;
        // e = (f - g*h)/m mod p
        IntPoly prod = ip_mul(g, h, m_next);
        IntPoly diff(std::max(f.size(), prod.size()), Int(0));
        for (size_t i = 0; i < diff.size(); ++i) {
            Int fv = i < f.size() ? f[i] : Int(0);
            Int pv = i < prod.size() ? prod[i] : Int(0);
            diff[i] = mod_reduce(fv - pv, m_next);
        }
        ip_normalize(diff);
        FpPoly e;
        e.c.resize(diff.size());
        for (size_t i = 0; i < diff.size(); ++i) {
            Int q, r;
            mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), diff[i].get_mpz_t(), m.get_mpz_t());
            if (r != 0) throw_precision("HenselDrift", "approximate factorization lost p-divisibility");
            e.c[i] = mod_reduce(q, p);
        }
        while (!e.c.empty() && e.c.back() == 0) e.c.pop_back();
        // u = (t*e) rem g, w = (e - u*h)/g, both mod p
        FpPoly gp = fp_from_ip(g, p), hp = fp_from_ip(h, p);
        FpPoly u = fp_rem(fp_mul(t, e, p), gp, p);
        auto [w, wr] = fp_divmod(fp_sub(e, fp_mul(u, hp, p), p), gp, p);
        if (!wr.is_zero()) throw_precision("HenselDrift", "cofactor correction not divisible");
        IntPoly mu = ip_from_fp(u), mw = ip_from_fp(w);
        for (auto& v : mu) v *= m;
        for (auto& v : mw) v *= m;
        g = ip_reduce(ip_add(g, mu, m_next), m_next);
        h = ip_reduce(ip_add(h, mw, m_next), m_next);
        m = m_next;
    }
}

}  // namespace

std::vector<std::vector<Int>> hensel_lift_monic(const std::vector<Int>& f,
                                                const std::vector<FpPoly>& factors,
                                                const Int& p, unsigned K) {
    if (factors.empty()) throw_config("HenselInput", "no factors to lift");
    Int pK = int_pow(p, K);
    if (factors.size() == 1) return {ip_reduce(f, pK)};
    // peel the first factor against the product of the rest
    FpPoly g0 = factors[0];
    FpPoly h0 = fp_one();
    for (size_t i = 1; i < factors.size(); ++i) h0 = fp_mul(h0, factors[i], p);
    FpBezout bz = fp_gcd_ext(g0, h0, p);
    if (!bz.g.is_one()) throw_precision("HenselInput", "factors not coprime mod " + p.get_str());
    IntPoly g = ip_from_fp(g0), h = ip_from_fp(h0);
    hensel_pair(ip_reduce(f, pK), g, h, bz.s, bz.t, p, K);
    std::vector<FpPoly> rest(factors.begin() + 1, factors.end());
    auto lifted_rest = hensel_lift_monic(h, rest, p, K);
    std::vector<std::vector<Int>> out;
    out.push_back(std::move(g));
    for (auto& v : lifted_rest) out.push_back(std::move(v));
    return out;
}

}  // namespace rankone
