#include "rankone/zpoly.hpp"

#include <algorithm>

#include "rankone/errors.hpp"
#include "rankone/modpoly.hpp"

namespace rankone {

namespace {

template <typename P>
void normalize(P& f) {
    while (!f.c.empty() && f.c.back() == 0) f.c.pop_back();
}

}  // namespace

ZPoly::ZPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(*this); }

ZPoly ZPoly::from(std::initializer_list<long> coeffs) {
    std::vector<Int> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return ZPoly(std::move(v));
}

QPoly::QPoly(std::vector<Rat> coeffs) : c(std::move(coeffs)) {
    for (auto& v : c) v.canonicalize();
    normalize(*this);
}

QPoly QPoly::from(std::initializer_list<long> coeffs) {
    std::vector<Rat> v;
    v.reserve(coeffs.size());
    for (long x : coeffs) v.emplace_back(x);
    return QPoly(std::move(v));
}

ZPoly z_add(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(static_cast<int>(i)) + b.at(static_cast<int>(i));
    normalize(r);
    return r;
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(static_cast<int>(i)) - b.at(static_cast<int>(i));
    normalize(r);
    return r;
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
}

ZPoly z_neg(const ZPoly& a) {
    ZPoly r = a;
    for (auto& v : r.c) v = -v;
    return r;
}

Int z_eval(const ZPoly& f, const Int& x) {
    Int acc(0);
    for (size_t i = f.c.size(); i-- > 0;) acc = acc * x + f.c[i];
    return acc;
}

Rat z_eval(const ZPoly& f, const Rat& x) {
    Rat acc(0);
    for (size_t i = f.c.size(); i-- > 0;) acc = acc * x + f.c[i];
    return acc;
}

ZPoly z_derivative(const ZPoly& f) {
    ZPoly r;
    if (f.degree() < 1) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) r.c[i - 1] = f.c[i] * Int(static_cast<unsigned long>(i));
    normalize(r);
    return r;
}

Int z_content(const ZPoly& f) {
    Int g(0);
    for (const auto& v : f.c) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

ZPoly z_primitive(const ZPoly& f) {
    if (f.is_zero()) return f;
    Int g = z_content(f);
    if (f.lead() < 0) g = -g;
    ZPoly r = f;
    for (auto& v : r.c) v /= g;
    return r;
}

QPoly q_from_z(const ZPoly& f) {
    QPoly r;
    r.c.reserve(f.c.size());
    for (const auto& v : f.c) r.c.emplace_back(v);
    return r;
}

ZPoly z_clear_denominators(const QPoly& f) {
    Int lcm(1);
    for (const auto& v : f.c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    ZPoly r;
    r.c.reserve(f.c.size());
    for (const auto& v : f.c) {
        Rat scaled = v * Rat(lcm);
        r.c.push_back(scaled.get_num());
    }
    normalize(r);
    return z_primitive(r);
}

QPoly q_add(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(static_cast<int>(i)) + b.at(static_cast<int>(i));
    normalize(r);
    return r;
}

QPoly q_sub(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()));
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.at(static_cast<int>(i)) - b.at(static_cast<int>(i));
    normalize(r);
    return r;
}

QPoly q_mul(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    QPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    normalize(r);
    return r;
}

QPoly q_scale(const QPoly& a, const Rat& s) {
    if (s == 0) return {};
    QPoly r = a;
    for (auto& v : r.c) v *= s;
    return r;
}

Rat q_eval(const QPoly& f, const Rat& x) {
    Rat acc(0);
    for (size_t i = f.c.size(); i-- > 0;) acc = acc * x + f.c[i];
    return acc;
}

QPoly q_derivative(const QPoly& f) {
    QPoly r;
    if (f.degree() < 1) return r;
    r.c.resize(f.c.size() - 1);
    for (size_t i = 1; i < f.c.size(); ++i) r.c[i - 1] = f.c[i] * Rat(static_cast<unsigned long>(i));
    normalize(r);
    return r;
}

std::pair<QPoly, QPoly> q_divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw_precision("PolyDivByZero", "division by the zero polynomial");
    QPoly rem = a;
    QPoly quo;
    int db = b.degree();
    if (rem.degree() >= db) quo.c.assign(rem.c.size() - b.c.size() + 1, Rat(0));
    while (rem.degree() >= db) {
        int k = rem.degree() - db;
        Rat q = rem.lead() / b.lead();
        quo.c[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= db; ++i)
            rem.c[static_cast<size_t>(i + k)] -= q * b.c[static_cast<size_t>(i)];
        normalize(rem);
    }
    normalize(quo);
    return {quo, rem};
}

QPoly q_monic(const QPoly& f) {
    if (f.is_zero()) return f;
    return q_scale(f, Rat(1) / f.lead());
}

QPoly q_gcd(const QPoly& a, const QPoly& b) {
    QPoly x = a, y = b;
    while (!y.is_zero()) {
        QPoly r = q_divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return q_monic(x);
}

QBezout q_gcd_ext(const QPoly& a, const QPoly& b) {
    QPoly r0 = a, r1 = b;
    QPoly s0 = QPoly({Rat(1)}), s1 = {};
    QPoly t0 = {}, t1 = QPoly({Rat(1)});
    while (!r1.is_zero()) {
        auto [q, r] = q_divmod(r0, r1);
        QPoly s2 = q_sub(s0, q_mul(q, s1));
        QPoly t2 = q_sub(t0, q_mul(q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rat inv = Rat(1) / r0.lead();
    return {q_scale(r0, inv), q_scale(s0, inv), q_scale(t0, inv)};
}

QPoly q_squarefree_part(const QPoly& f) {
    if (f.degree() < 1) return q_monic(f);
    QPoly g = q_gcd(f, q_derivative(f));
    return q_monic(q_divmod(f, g).first);
}

namespace {

// Fraction-free determinant (Bareiss) of a square integer matrix; destroys m.
Int bareiss_det(std::vector<std::vector<Int>>& m) {
    size_t n = m.size();
    if (n == 0) return Int(1);
    Int prev(1);
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Int(0);
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Int(-m[n - 1][n - 1]);
}

}  // namespace

Int resultant(const ZPoly& f, const ZPoly& g) {
    if (f.is_zero() || g.is_zero()) return Int(0);
    int n = f.degree(), m = g.degree();
    if (n == 0) return int_pow(f.c[0], static_cast<unsigned long>(m));
    if (m == 0) return int_pow(g.c[0], static_cast<unsigned long>(n));
    size_t dim = static_cast<size_t>(n + m);
    std::vector<std::vector<Int>> syl(dim, std::vector<Int>(dim, Int(0)));
    for (int row = 0; row < m; ++row)
        for (int j = 0; j <= n; ++j) syl[static_cast<size_t>(row)][static_cast<size_t>(row + j)] = f.c[static_cast<size_t>(n - j)];
    for (int row = 0; row < n; ++row)
        for (int j = 0; j <= m; ++j) syl[static_cast<size_t>(m + row)][static_cast<size_t>(row + j)] = g.c[static_cast<size_t>(m - j)];
    return bareiss_det(syl);
}

ZPoly pair_product_poly(const ZPoly& F) {
    if (F.degree() < 1) throw_config("PairProduct", "constant polynomial has no roots");
    if (F.at(0) == 0) throw_config("PairProduct", "zero constant term (0 is a root)");
    int n = F.degree();
    int deg = n * n;
    std::vector<std::pair<Rat, Rat>> pts;
    pts.reserve(static_cast<size_t>(deg) + 1);
    for (int t = 0; t <= deg; ++t) {
        // G_t(y) = y^n F(t/y): coefficient of y^(n-j) is F_j t^j
        ZPoly G;
        G.c.assign(static_cast<size_t>(n) + 1, Int(0));
        Int tp(1);
        for (int j = 0; j <= n; ++j) {
            G.c[static_cast<size_t>(n - j)] = F.c[static_cast<size_t>(j)] * tp;
            tp *= t;
        }
        while (!G.c.empty() && G.c.back() == 0) G.c.pop_back();
        pts.emplace_back(Rat(t), Rat(resultant(F, G)));
    }
    QPoly P = interpolate(pts);
    return z_clear_denominators(P);
}

QPoly interpolate(const std::vector<std::pair<Rat, Rat>>& pts) {
    // Newton form, then expansion.
    size_t n = pts.size();
    std::vector<Rat> coef(n);
    for (size_t i = 0; i < n; ++i) coef[i] = pts[i].second;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n; i-- > j;)
            coef[i] = (coef[i] - coef[i - 1]) / (pts[i].first - pts[i - j].first);
    QPoly result;
    for (size_t i = n; i-- > 0;) {
        // result = result*(x - x_i) + coef[i]
        QPoly shifted;
        shifted.c.assign(result.c.size() + 1, Rat(0));
        for (size_t k = 0; k < result.c.size(); ++k) {
            shifted.c[k + 1] += result.c[k];
            shifted.c[k] -= pts[i].first * result.c[k];
        }
        normalize(shifted);
        result = q_add(shifted, QPoly({coef[i]}));
    }
    return result;
}

std::vector<QPoly> sturm_chain(const QPoly& f) {
    std::vector<QPoly> chain;
    chain.push_back(f);
    QPoly d = q_derivative(f);
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        QPoly r = q_divmod(chain[chain.size() - 2], chain.back()).second;
        if (r.is_zero()) break;
        for (auto& v : r.c) v = -v;
        chain.push_back(r);
    }
    return chain;
}

int sturm_variations(const std::vector<QPoly>& chain, const Rat& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& g : chain) {
        int s = sgn(q_eval(g, x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

namespace {

Rat cauchy_bound(const QPoly& f) {
    Rat mx(0);
    for (int i = 0; i < f.degree(); ++i) {
        Rat c = abs(f.at(i));
        mx = std::max(mx, c);
    }
    Rat lead = abs(f.lead());
    return Rat(1) + mx / lead;
}

}  // namespace

RealRootIsolation isolate_real_roots(const QPoly& f_in) {
    if (f_in.is_zero()) throw_config("RootIsolation", "zero polynomial");
    RealRootIsolation iso;
    iso.squarefree = q_squarefree_part(f_in);
    QPoly f = iso.squarefree;
    std::vector<Rat> exact_roots;
    // peel exact rational roots discovered at bisection points
    while (true) {
        if (f.degree() < 1) break;
        if (f.degree() == 1) {
            exact_roots.push_back(-f.c[0] / f.c[1]);
            f = QPoly({Rat(1)});
            break;
        }
        auto chain = sturm_chain(f);
        Rat bound = cauchy_bound(f);
        // recursive bisection; restart from scratch whenever a bisection
        // point lands exactly on a root (deflate and repeat)
        struct Frame {
            Rat lo, hi;
            int vlo, vhi;
        };
        std::vector<Frame> stack;
        std::vector<IsolatedRoot> found;
        bool deflated = false;
        int vl = sturm_variations(chain, -bound);
        int vr = sturm_variations(chain, bound);
        stack.push_back({-bound, bound, vl, vr});
        while (!stack.empty()) {
            Frame fr = stack.back();
            stack.pop_back();
            int count = fr.vlo - fr.vhi;
            if (count <= 0) continue;
            if (count == 1) {
                IsolatedRoot r;
                r.lo = fr.lo;
                r.hi = fr.hi;
                found.push_back(r);
                continue;
            }
            Rat mid = (fr.lo + fr.hi) / 2;
            if (q_eval(f, mid) == 0) {
                exact_roots.push_back(mid);
                f = q_divmod(f, QPoly({-mid, Rat(1)})).first;
                deflated = true;
                break;
            }
            int vmid = sturm_variations(chain, mid);
            stack.push_back({fr.lo, mid, fr.vlo, vmid});
            stack.push_back({mid, fr.hi, vmid, fr.vhi});
        }
        if (deflated) continue;
        // shrink intervals until they exclude every exact root found earlier
        for (auto& r : found) {
            for (const auto& e : exact_roots) {
                while (!r.exact && r.lo < e && e < r.hi) {
                    Rat mid = (r.lo + r.hi) / 2;
                    Rat v = q_eval(f, mid);
                    if (v == 0) {
                        // the interval's root is mid itself
                        r.exact = true;
                        r.value = mid;
                        r.lo = r.hi = mid;
                        break;
                    }
                    if (sgn(q_eval(f, r.lo)) * sgn(v) < 0)
                        r.hi = mid;
                    else
                        r.lo = mid;
                }
            }
        }
        iso.roots = std::move(found);
        break;
    }
    for (const auto& e : exact_roots) {
        IsolatedRoot r;
        r.exact = true;
        r.value = e;
        r.lo = r.hi = e;
        iso.roots.push_back(r);
    }
    std::sort(iso.roots.begin(), iso.roots.end(),
              [](const IsolatedRoot& a, const IsolatedRoot& b) { return a.lower() < b.lower(); });
    // after deflation the working polynomial may have shrunk; keep the
    // squarefree part that matches the stored intervals
    iso.squarefree = f;
    return iso;
}

void refine_root(const QPoly& f, IsolatedRoot& r, const Rat& width) {
    if (r.exact) return;
    int slo = sgn(q_eval(f, r.lo));
    while (r.hi - r.lo > width) {
        Rat mid = (r.lo + r.hi) / 2;
        Rat v = q_eval(f, mid);
        if (v == 0) {
            r.exact = true;
            r.value = mid;
            r.lo = r.hi = mid;
            return;
        }
        if (sgn(v) == slo)
            r.lo = mid;
        else
            r.hi = mid;
    }
}

QPoly char_poly(const QMatrix& m) {
    size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw_config("DimensionMismatch", "characteristic polynomial of a non-square matrix");
    // Faddeev-LeVerrier: N_0 = I, c_n = 1; N_k = M N_{k-1} + c_{n-k+1} I,
    // c_{n-k} = -tr(M N_k)/k
    std::vector<Rat> coeffs(n + 1, Rat(0));
    coeffs[n] = 1;
    QMatrix N(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) N[i][i] = 1;
    for (size_t k = 1; k <= n; ++k) {
        // MN = M * N
        QMatrix MN(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t l = 0; l < n; ++l) {
                if (m[i][l] == 0) continue;
                for (size_t j = 0; j < n; ++j) MN[i][j] += m[i][l] * N[l][j];
            }
        Rat tr(0);
        for (size_t i = 0; i < n; ++i) tr += MN[i][i];
        Rat ck = -tr / Rat(static_cast<unsigned long>(k));
        coeffs[n - k] = ck;
        for (size_t i = 0; i < n; ++i) MN[i][i] += ck;
        N = std::move(MN);
    }
    QPoly out;
    out.c = std::move(coeffs);
    normalize(out);
    return out;
}

namespace {

std::pair<ZPoly, bool> z_try_divide(const ZPoly& f, const ZPoly& g) {
    // exact division test, g monic
    ZPoly rem = f, quo;
    int dg = g.degree();
    if (rem.degree() >= dg) quo.c.assign(rem.c.size() - g.c.size() + 1, Int(0));
    while (rem.degree() >= dg) {
        int k = rem.degree() - dg;
        Int q = rem.lead();
        quo.c[static_cast<size_t>(k)] = q;
        for (int i = 0; i <= dg; ++i) rem.c[static_cast<size_t>(i + k)] -= q * g.c[static_cast<size_t>(i)];
        normalize(rem);
    }
    normalize(quo);
    return {quo, rem.is_zero()};
}

Int centered(const Int& c, const Int& m) {
    return 2 * c > m ? Int(c - m) : c;
}

bool next_combination(std::vector<size_t>& idx, size_t n) {
    size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
        if (idx[i] != i + n - k) {
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
            return true;
        }
    }
    return false;
}

}  // namespace

std::vector<ZPoly> factor_monic_squarefree(const ZPoly& f) {
    if (!f.is_monic()) throw_config("FactorInput", "expected a monic polynomial");
    if (f.degree() < 1) throw_config("FactorInput", "expected degree >= 1");
    if (f.degree() == 1) return {f};
    {
        QPoly qf = q_from_z(f);
        if (q_gcd(qf, q_derivative(qf)).degree() != 0)
            throw_config("FactorInput", "expected a squarefree polynomial");
    }
    // prime with f squarefree mod p
    Int p(2);
    FpPoly fp;
    while (true) {
        fp = fp_from_coeffs(f.c, p);
        if (fp.degree() == f.degree() && fp_is_squarefree(fp, p)) break;
        mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
    }
    auto modular = fp_factor(fp, p);
    std::vector<FpPoly> parts;
    for (auto& [g, mult] : modular) parts.push_back(g);
    if (parts.size() == 1) return {f};
    // lift beyond twice the factor-coefficient bound
    Int norm2(0);
    for (const auto& v : f.c) norm2 += v * v;
    Int root;
    mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
    root += 1;
    Int bound = (Int(1) << static_cast<unsigned long>(f.degree())) * root;
    unsigned K = 1;
    Int pk = p;
    while (pk <= 2 * bound) {
        pk *= p;
        ++K;
    }
    auto lifted = hensel_lift_monic(f.c, parts, p, K);
    // subset recombination
    std::vector<ZPoly> result;
    ZPoly rem_f = f;
    std::vector<std::vector<Int>> pool = lifted;
    size_t subset_size = 1;
    while (2 * subset_size <= pool.size()) {
        bool found = false;
        std::vector<size_t> idx(subset_size);
        for (size_t i = 0; i < subset_size; ++i) idx[i] = i;
        while (true) {
            // candidate = centered product of the selected lifted factors
            std::vector<Int> prod{Int(1)};
            for (size_t i : idx) {
                std::vector<Int> next(prod.size() + pool[i].size() - 1, Int(0));
                for (size_t a = 0; a < prod.size(); ++a)
                    for (size_t b = 0; b < pool[i].size(); ++b) next[a + b] += prod[a] * pool[i][b];
                for (auto& v : next) {
                    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), pk.get_mpz_t());
                }
                prod = std::move(next);
            }
            ZPoly cand;
            cand.c.reserve(prod.size());
            for (auto& v : prod) cand.c.push_back(centered(v, pk));
            while (!cand.c.empty() && cand.c.back() == 0) cand.c.pop_back();
            auto [quo, ok] = z_try_divide(rem_f, cand);
            if (ok) {
                result.push_back(cand);
                rem_f = quo;
                std::vector<std::vector<Int>> next_pool;
                for (size_t i = 0, j = 0; i < pool.size(); ++i) {
                    if (j < idx.size() && idx[j] == i) {
                        ++j;
                        continue;
                    }
                    next_pool.push_back(pool[i]);
                }
                pool = std::move(next_pool);
                found = true;
                break;
            }
            if (!next_combination(idx, pool.size())) break;
        }
        if (!found) ++subset_size;
    }
    if (rem_f.degree() > 0) result.push_back(rem_f);
    std::sort(result.begin(), result.end(), [](const ZPoly& a, const ZPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (size_t i = a.c.size(); i-- > 0;)
            if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
        return false;
    });
    return result;
}

bool is_irreducible_over_q(const ZPoly& f) {
    if (!f.is_monic() || f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    QPoly qf = q_from_z(f);
    if (q_gcd(qf, q_derivative(qf)).degree() != 0) return false;
    return factor_monic_squarefree(f).size() == 1;
}

}  // namespace rankone
