#include "rankone/lyapunov.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <utility>

#include "rankone/errors.hpp"
#include "rankone/intmat.hpp"

namespace rankone {

namespace {

// Interval determinant by Laplace expansion; fine for the tiny minors here.
RealInterval interval_det(const std::vector<std::vector<RealInterval>>& m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    RealInterval acc{};
    int sign = 1;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<RealInterval>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<RealInterval> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        RealInterval term = m[0][j] * interval_det(minor);
        acc = sign > 0 ? acc + term : acc - term;
        sign = -sign;
    }
    return acc;
}

RealInterval interval_dot(const std::vector<RealInterval>& row,
                          const std::vector<RealInterval>& z) {
    RealInterval acc{};
    for (size_t i = 0; i < row.size(); ++i) acc = acc + row[i] * z[i];
    return acc;
}

long torsion_search_bound(const Presentation& pres) {
    if (pres.backend() == Backend::function_field) {
        Int b = pres.characteristic - 1;
        return 2 * (b.fits_slong_p() ? b.get_si() : 64);
    }
    return 2 * static_cast<long>(max_torsion_order(static_cast<unsigned>(pres.field_degree())));
}

}  // namespace

std::vector<LyapunovVector> lyapunov_vectors(PlaceEngine& eng, long precision) {
    const Presentation& pres = eng.pres();
    int d = pres.d;
    std::vector<FieldElement> gens;
    for (int i = 0; i < d; ++i) gens.push_back(pres.generator_image(i));

    std::vector<LyapunovVector> out;
    for (const Place& v : eng.S().places) {
        LyapunovVector lv;
        lv.place = v;
        if (!v.is_exact()) {
            for (int i = 0; i < d; ++i)
                lv.ell.push_back(log_enclosure(eng.abs_value(gens[i], v, precision), precision));
            out.push_back(std::move(lv));
            continue;
        }
        lv.has_exact = true;
        lv.exact_base = v.kind == PlaceKind::finite ? v.prime : pres.characteristic;
        for (int i = 0; i < d; ++i) {
            long o = v.is_explicit ? v.gen_ords[static_cast<size_t>(i)] : eng.ord_at(gens[i], v);
            lv.exact_dir.push_back(Int(-static_cast<long>(v.res_degree) * o));
        }
        RealInterval logb = log_enclosure(Rat(lv.exact_base), precision);
        for (int i = 0; i < d; ++i) lv.ell.push_back(Rat(lv.exact_dir[static_cast<size_t>(i)]) * logb);
        out.push_back(std::move(lv));
    }
    return out;
}

MixingReport is_mixing(PlaceEngine& eng, long precision) {
    const Presentation& pres = eng.pres();
    int d = pres.d;

    IMat exact_rows;
    for (const LyapunovVector& lv : lyapunov_vectors(eng, precision))
        if (lv.has_exact) exact_rows.push_back(lv.exact_dir);

    std::vector<std::vector<Int>> lambda;
    if (exact_rows.empty()) {
        for (int j = 0; j < d; ++j) {
            std::vector<Int> e(static_cast<size_t>(d), Int(0));
            e[static_cast<size_t>(j)] = 1;
            lambda.push_back(std::move(e));
        }
    } else {
        lambda = integer_kernel(exact_rows);
    }
    if (lambda.empty()) return {true, std::nullopt};
    size_t r = lambda.size();

    // Any relation beta_n = 1 lives in the kernel lattice with coefficients
    // bounded by torsion considerations; search shells outward so the
    // reported witness is minimal in the search order.
    long bound = torsion_search_bound(pres);
    FieldElement one = fe_one(pres);
    std::vector<long> coef(r, 0);
    std::function<std::optional<ExponentVector>(size_t, long)> search =
        [&](size_t pos, long shell) -> std::optional<ExponentVector> {
        if (pos == r) {
            bool on_shell = false;
            for (long c : coef)
                if (c == shell || c == -shell) on_shell = true;
            if (!on_shell) return std::nullopt;
            ExponentVector n(static_cast<size_t>(d), 0);
            bool zero = true;
            for (size_t j = 0; j < r; ++j)
                for (int i = 0; i < d; ++i) {
                    Int val = Int(n[static_cast<size_t>(i)]) + Int(coef[j]) * lambda[j][static_cast<size_t>(i)];
                    if (!val.fits_slong_p()) throw_cap("ExponentOverflow", "witness exponent too large");
                    n[static_cast<size_t>(i)] = val.get_si();
                }
            for (long c : n)
                if (c != 0) zero = false;
            if (zero) return std::nullopt;
            if (power_product(n, pres) == one) return n;
            return std::nullopt;
        }
        for (long c = -shell; c <= shell; ++c) {
            coef[pos] = c;
            if (auto w = search(pos + 1, shell)) return w;
        }
        return std::nullopt;
    };
    for (long shell = 1; shell <= bound; ++shell)
        if (auto w = search(0, shell)) return {false, std::move(w)};

    // Certify full archimedean rank on the kernel lattice; rank deficiency
    // would force a multiplicative relation, contradicting the failed search.
    for (long prec = precision; prec <= 4 * precision; prec *= 2) {
        std::vector<std::vector<RealInterval>> cols;  // one row per arch place
        for (const LyapunovVector& lv : lyapunov_vectors(eng, prec)) {
            if (lv.has_exact) continue;
            std::vector<RealInterval> row;
            for (size_t j = 0; j < r; ++j) {
                RealInterval acc{};
                for (int i = 0; i < d; ++i)
                    acc = acc + Rat(lambda[j][static_cast<size_t>(i)]) * lv.ell[static_cast<size_t>(i)];
                row.push_back(acc);
            }
            cols.push_back(std::move(row));
        }
        size_t na = cols.size();
        if (na < r) break;
        std::vector<size_t> pick(r);
        for (size_t i = 0; i < r; ++i) pick[i] = i;
        auto next_pick = [&]() {
            for (size_t i = r; i-- > 0;) {
                if (pick[i] + (r - i) < na) {
                    ++pick[i];
                    for (size_t t = i + 1; t < r; ++t) pick[t] = pick[t - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            std::vector<std::vector<RealInterval>> minor;
            for (size_t i = 0; i < r; ++i) minor.push_back(cols[pick[i]]);
            RealInterval det = interval_det(minor);
            if (!det.contains_zero()) return {true, std::nullopt};
        } while (next_pick());
    }
    throw_precision("MixingUndecided",
                    "no relation found and archimedean rank could not be certified");
}

RealInterval directional_entropy(PlaceEngine& eng, const std::vector<Rat>& w, long precision) {
    const Presentation& pres = eng.pres();
    if (static_cast<int>(w.size()) != pres.d)
        throw_config("DimensionMismatch", "direction length must match the action rank");
    RealInterval total{};
    for (const LyapunovVector& lv : lyapunov_vectors(eng, precision)) {
        if (lv.has_exact) {
            Rat dot(0);
            for (size_t i = 0; i < w.size(); ++i) dot += Rat(lv.exact_dir[i]) * w[i];
            if (dot <= 0) continue;  // exact sign, no interval slack
            total = total + dot * log_enclosure(Rat(lv.exact_base), precision);
            continue;
        }
        RealInterval dot{};
        for (size_t i = 0; i < w.size(); ++i) dot = dot + w[i] * lv.ell[i];
        total = total + max0(dot);
    }
    return total;
}

namespace {

struct FaceBox {
    Rat lo_bound;  // lower end of the ratio enclosure, the heap key
    size_t face;
    std::vector<RealInterval> coords;  // free coordinates, face coordinate fixed at 1
};

struct FaceBoxOrder {
    bool operator()(const FaceBox& a, const FaceBox& b) const { return a.lo_bound > b.lo_bound; }
};

RealInterval ratio_over(const std::vector<std::vector<RealInterval>>& rows,
                        const std::vector<RealInterval>& z, long prec) {
    RealInterval f{};
    bool first = true;
    for (const auto& row : rows) {
        RealInterval a = abs(interval_dot(row, z));
        f = first ? a : max_iv(f, a);
        first = false;
    }
    RealInterval nsq{};
    for (const auto& zi : z) {
        RealInterval az = abs(zi);  // tight square: zi*zi is loose across 0
        nsq = nsq + az * az;
    }
    RealInterval nrm = sqrt_enclosure(nsq, prec);
    return f / nrm;
}

std::vector<RealInterval> embed_face(size_t face, const std::vector<RealInterval>& free_coords,
                                     size_t d) {
    std::vector<RealInterval> z;
    size_t t = 0;
    for (size_t i = 0; i < d; ++i) {
        if (i == face)
            z.push_back(RealInterval(Rat(1)));
        else
            z.push_back(free_coords[t++]);
    }
    return z;
}

}  // namespace

SeparationData separation_constant(PlaceEngine& eng, long precision, const Rat& rel_tol) {
    const Presentation& pres = eng.pres();
    size_t d = static_cast<size_t>(pres.d);
    size_t nplaces = eng.S().places.size();
    if (nplaces < 2) throw_config("DegenerateSystem", "separation needs at least two places");
    if (rel_tol <= 0) throw_config("SeparationTol", "relative tolerance must be positive");

    SeparationData out;
    out.sigma = static_cast<int>(nplaces) - 1;

    for (long prec = precision;; prec *= 2) {
        std::vector<std::vector<RealInterval>> rows;
        for (const LyapunovVector& lv : lyapunov_vectors(eng, prec)) rows.push_back(lv.ell);

        if (d == 1) {
            RealInterval best{};
            bool first = true;
            for (const auto& row : rows) {
                RealInterval a = abs(row[0]);
                best = first ? a : max_iv(best, a);
                first = false;
            }
            if (best.lo > 0 && best.width() <= rel_tol * best.lo) {
                out.c = best;
                out.one_sided = Rat(1, out.sigma) * best;
                return out;
            }
            if (prec > 64 * precision)
                throw_precision("SeparationRefine", "d = 1 enclosure did not converge");
            continue;
        }

        std::priority_queue<FaceBox, std::vector<FaceBox>, FaceBoxOrder> queue;
        Rat upper(-1);
        auto consider_point = [&](size_t face, const std::vector<Rat>& pt) {
            std::vector<RealInterval> z;
            for (const Rat& c : pt) z.push_back(RealInterval(c));
            RealInterval r = ratio_over(rows, embed_face(face, z, d), prec);
            if (upper < 0 || r.hi < upper) upper = r.hi;
        };
        for (size_t face = 0; face < d; ++face) {
            std::vector<RealInterval> coords(d - 1, RealInterval(Rat(-1), Rat(1)));
            std::vector<Rat> mid(d - 1, Rat(0));
            consider_point(face, mid);
            FaceBox box;
            box.face = face;
            box.coords = coords;
            box.lo_bound = ratio_over(rows, embed_face(face, coords, d), prec).lo;
            queue.push(std::move(box));
        }

        bool stalled = false;
        for (long iter = 0; iter < 400000; ++iter) {
            if (queue.empty()) {
                // Every box was pruned against the running upper bound, which
                // forces the minimum to equal that bound exactly.
                if (upper > 0) {
                    out.c = RealInterval(upper);
                    out.one_sided = Rat(1, out.sigma) * out.c;
                    return out;
                }
                stalled = true;
                break;
            }
            FaceBox box = queue.top();
            Rat global_lo = box.lo_bound;
            if (global_lo > 0 && upper - global_lo <= rel_tol * global_lo) {
                out.c = RealInterval(global_lo, upper);
                out.one_sided = Rat(1, out.sigma) * out.c;
                return out;
            }
            queue.pop();
            if (box.lo_bound >= upper) continue;

            size_t split = 0;
            Rat wmax(-1);
            Rat box_width(0);
            for (size_t i = 0; i < box.coords.size(); ++i) {
                Rat wd = box.coords[i].width();
                if (wd > wmax) {
                    wmax = wd;
                    split = i;
                }
                if (wd > box_width) box_width = wd;
            }
            if (box_width < Rat(1, Int(1) << 48)) {
                stalled = true;  // row enclosures dominate; need more precision
                break;
            }
            Rat mid = box.coords[split].mid();
            for (int half = 0; half < 2; ++half) {
                FaceBox child = box;
                child.coords[split] =
                    half == 0 ? RealInterval(box.coords[split].lo, mid)
                              : RealInterval(mid, box.coords[split].hi);
                std::vector<Rat> pt;
                for (const auto& ci : child.coords) pt.push_back(ci.mid());
                consider_point(child.face, pt);
                child.lo_bound =
                    ratio_over(rows, embed_face(child.face, child.coords, d), prec).lo;
                if (child.lo_bound < upper) queue.push(std::move(child));
            }
        }
        if (!stalled && prec > 16 * precision)
            throw_precision("SeparationRefine", "branch and bound exceeded the iteration cap");
        if (prec > 64 * precision)
            throw_precision("SeparationRefine", "separation enclosure did not converge");
    }
}

}  // namespace rankone
