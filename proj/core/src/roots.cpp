#include "rankone/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "rankone/errors.hpp"

namespace rankone {

GaussRat g_add(const GaussRat& a, const GaussRat& b) { return {a.re + b.re, a.im + b.im}; }
GaussRat g_sub(const GaussRat& a, const GaussRat& b) { return {a.re - b.re, a.im - b.im}; }

GaussRat g_mul(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussRat g_div(const GaussRat& a, const GaussRat& b) {
    Rat n2 = g_norm2(b);
    if (n2 == 0) throw_precision("FieldDivByZero", "complex division by zero");
    GaussRat num = g_mul(a, g_conj(b));
    return {num.re / n2, num.im / n2};
}

GaussRat g_conj(const GaussRat& a) { return {a.re, -a.im}; }
Rat g_norm2(const GaussRat& a) { return a.re * a.re + a.im * a.im; }
bool g_is_zero(const GaussRat& a) { return a.re == 0 && a.im == 0; }

ComplexBox eval_box(const QPoly& f, const ComplexBox& z) {
    ComplexBox acc{RealInterval(Rat(0)), RealInterval(Rat(0))};
    for (size_t i = f.c.size(); i-- > 0;) {
        // acc = acc*z + c_i
        RealInterval re = acc.re * z.re - acc.im * z.im + RealInterval(f.c[i]);
        RealInterval im = acc.re * z.im + acc.im * z.re;
        acc.re = re;
        acc.im = im;
    }
    return acc;
}

RealInterval box_norm2(const ComplexBox& b) {
    RealInterval re2 = b.re * b.re;
    RealInterval im2 = b.im * b.im;
    // squares are nonnegative regardless of sign straddling
    re2.lo = std::max(re2.lo, Rat(0));
    im2.lo = std::max(im2.lo, Rat(0));
    return re2 + im2;
}

namespace {

Rat dyadic_round(const Rat& x, long bits) {
    Int scaled_num = x.get_num() << static_cast<unsigned long>(bits);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den().get_mpz_t());
    Rat r(q, Int(1) << static_cast<unsigned long>(bits));
    r.canonicalize();
    return r;
}

GaussRat eval_gauss(const QPoly& f, const GaussRat& z) {
    GaussRat acc;
    for (size_t i = f.c.size(); i-- > 0;) acc = g_add(g_mul(acc, z), GaussRat(f.c[i], Rat(0)));
    return acc;
}

// sqrt(a) > sqrt(s) + sqrt(t) for nonnegative rationals, exactly
bool gap_exceeds(const Rat& a, const Rat& s, const Rat& t) {
    Rat d = a - s - t;
    if (d <= 0) return false;
    return d * d > 4 * s * t;
}

std::vector<std::complex<double>> durand_kerner(const ZPoly& f) {
    int n = f.degree();
    std::vector<double> cf(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        double v = f.c[static_cast<size_t>(i)].get_d();
        if (!std::isfinite(v)) throw_precision("RootApprox", "coefficients overflow double precision");
        cf[static_cast<size_t>(i)] = v;
    }
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * z + cf[static_cast<size_t>(i)];
        return acc;
    };
    std::vector<std::complex<double>> roots(static_cast<size_t>(n));
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> w(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
        roots[static_cast<size_t>(i)] = w;
        w *= seed;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double worst = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> num = eval(roots[static_cast<size_t>(i)]);
            std::complex<double> den = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) den *= roots[static_cast<size_t>(i)] - roots[static_cast<size_t>(j)];
            if (den == std::complex<double>(0.0, 0.0)) den = 1e-30;
            std::complex<double> delta = num / den;
            roots[static_cast<size_t>(i)] -= delta;
            worst = std::max(worst, std::abs(delta));
        }
        if (worst < 1e-14) break;
    }
    return roots;
}

}  // namespace

RootSystem::RootSystem(const ZPoly& f) : f_(f) {
    if (!f.is_monic() || f.degree() < 1)
        throw_config("RootSystem", "expected a monic polynomial of degree >= 1");
    fq_ = q_from_z(f_);
    if (q_gcd(fq_, q_derivative(fq_)).degree() != 0)
        throw_config("RootSystem", "expected a squarefree polynomial");
    dfq_ = q_derivative(fq_);
    RealRootIsolation iso = isolate_real_roots(fq_);
    real_ = iso.roots;
    int r1 = static_cast<int>(real_.size());
    int pairs = (f_.degree() - r1) / 2;
    if (r1 + 2 * pairs != f_.degree())
        throw_precision("RootSystem", "real root count does not match the degree parity");
    if (pairs == 0) return;
    auto approx = durand_kerner(f_);
    std::sort(approx.begin(), approx.end(),
              [](const std::complex<double>& a, const std::complex<double>& b) { return a.imag() > b.imag(); });
    std::vector<GaussRat> upper;
    for (int i = 0; i < pairs; ++i) {
        Rat re, im;
        mpq_set_d(re.get_mpq_t(), approx[static_cast<size_t>(i)].real());
        mpq_set_d(im.get_mpq_t(), approx[static_cast<size_t>(i)].imag());
        upper.emplace_back(dyadic_round(re, 64), dyadic_round(im, 64));
    }
    std::sort(upper.begin(), upper.end(), [](const GaussRat& a, const GaussRat& b) {
        if (a.re != b.re) return a.re < b.re;
        return a.im < b.im;
    });
    certify_initial(std::move(upper));
}

GaussRat RootSystem::newton_step(const GaussRat& c, long dyadic_bits) const {
    GaussRat fv = eval_gauss(fq_, c);
    GaussRat dv = eval_gauss(dfq_, c);
    if (g_is_zero(dv)) throw_precision("RootRefine", "derivative vanished at the center");
    GaussRat next = g_sub(c, g_div(fv, dv));
    return {dyadic_round(next.re, dyadic_bits), dyadic_round(next.im, dyadic_bits)};
}

Rat RootSystem::disc_radius_sq(const GaussRat& c) const {
    GaussRat fv = eval_gauss(fq_, c);
    GaussRat dv = eval_gauss(dfq_, c);
    if (g_is_zero(dv)) throw_precision("RootRefine", "derivative vanished at the center");
    Rat n(static_cast<unsigned long>(f_.degree()));
    return n * n * g_norm2(fv) / g_norm2(dv);
}

void RootSystem::certify_initial(std::vector<GaussRat> approx) {
    long bits = 128;
    for (int attempt = 0; attempt < 24; ++attempt) {
        std::vector<Rat> rsq(approx.size());
        bool ok = true;
        for (size_t i = 0; i < approx.size() && ok; ++i) {
            try {
                rsq[i] = disc_radius_sq(approx[i]);
            } catch (const Error&) {
                // derivative vanished at the center; nudge and retry
                approx[i].re += Rat(Int(1), Int(1) << 48);
                ok = false;
                continue;
            }
            // strictly above the real axis: Im(c) > r
            if (approx[i].im <= 0 || approx[i].im * approx[i].im <= rsq[i]) ok = false;
        }
        // pairwise disjoint, including against the mirrored (conjugate) discs
        for (size_t i = 0; i < approx.size() && ok; ++i) {
            for (size_t j = i + 1; j < approx.size() && ok; ++j) {
                Rat dist2 = g_norm2(g_sub(approx[i], approx[j]));
                if (!gap_exceeds(dist2, rsq[i], rsq[j])) ok = false;
                Rat dist2m = g_norm2(g_sub(approx[i], g_conj(approx[j])));
                if (!gap_exceeds(dist2m, rsq[i], rsq[j])) ok = false;
            }
        }
        if (ok) {
            centers_ = std::move(approx);
            radius_sq_ = std::move(rsq);
            return;
        }
        for (auto& c : approx) {
            try {
                c = newton_step(c, bits);
            } catch (const Error&) {
                c.re += Rat(Int(1), Int(1) << 48);
            }
        }
        bits += 64;
    }
    throw_precision("RootSystem", "could not certify disjoint root discs");
}

RealInterval RootSystem::real_root(int i, const Rat& max_width) {
    if (i < 0 || i >= num_real()) throw_config("RootSystem", "real root index out of range");
    IsolatedRoot& r = real_[static_cast<size_t>(i)];
    refine_root(fq_, r, max_width);
    return {r.lower(), r.upper()};
}

ComplexBox RootSystem::complex_root(int i, const Rat& max_width) {
    if (i < 0 || i >= num_complex()) throw_config("RootSystem", "complex root index out of range");
    GaussRat& c = centers_[static_cast<size_t>(i)];
    Rat& rsq = radius_sq_[static_cast<size_t>(i)];
    Rat target = max_width * max_width;
    long bits = 192;
    int stalls = 0;
    while (rsq > target) {
        GaussRat next = newton_step(c, bits);
        Rat next_rsq = disc_radius_sq(next);
        // accept only when the new disc sits inside the certified one, so the
        // exactly-one-root property is inherited
        Rat shift2 = g_norm2(g_sub(next, c));
        Rat slack = rsq - shift2 - next_rsq;
        bool contained = slack >= 0 && slack * slack >= 4 * shift2 * next_rsq;
        if (contained && next_rsq < rsq) {
            c = next;
            rsq = next_rsq;
            stalls = 0;
        } else {
            bits += 128;
            if (++stalls > 40) throw_precision("RootRefine", "complex root refinement stalled");
        }
    }
    // rational upper bound on the radius
    RealInterval rad = sqrt_enclosure(RealInterval(rsq), 96);
    Rat r_up = rad.hi;
    return {RealInterval(c.re - r_up, c.re + r_up), RealInterval(c.im - r_up, c.im + r_up)};
}

}  // namespace rankone
