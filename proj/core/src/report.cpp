#include "rankone/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

#include "rankone/compose.hpp"
#include "rankone/errors.hpp"
#include "rankone/intutil.hpp"
#include "rankone/trigpoly.hpp"

namespace rankone {
namespace {

using json = nlohmann::ordered_json;

constexpr int kDigits = 12;
const Rat kSeparationTol = Rat(1) / Rat(100000);

json iv_json(const RealInterval& iv) {
    return json{{"lo", decimal_floor(iv.lo, kDigits)}, {"hi", decimal_ceil(iv.hi, kDigits)}};
}

std::string kind_name(PlaceKind k) {
    switch (k) {
        case PlaceKind::real: return "real";
        case PlaceKind::complex: return "complex";
        case PlaceKind::finite: return "finite";
        case PlaceKind::ff_finite: return "ff_finite";
        case PlaceKind::ff_inf: return "ff_inf";
    }
    return "unknown";
}

json place_json(const Place& v) {
    json out;
    out["id"] = v.id();
    out["kind"] = kind_name(v.kind);
    switch (v.kind) {
        case PlaceKind::real:
        case PlaceKind::complex:
            out["index"] = v.index;
            break;
        case PlaceKind::finite:
            out["prime"] = v.prime.get_str();
            out["factor"] = fp_to_string(v.poly, "x");
            out["e"] = v.ram_index;
            out["f"] = v.res_degree;
            out["explicit"] = v.is_explicit;
            break;
        case PlaceKind::ff_finite:
            out["poly"] = fp_to_string(v.poly, "t");
            out["degree"] = static_cast<long>(v.poly.c.size()) - 1;
            break;
        case PlaceKind::ff_inf:
            break;
    }
    return out;
}

const Presentation& require_presentation(const SystemConfig& cfg) {
    if (cfg.composed || !cfg.presentation)
        throw_config("ComposedSystem", "this command needs a cyclic system configuration");
    return *cfg.presentation;
}

void require_format(const std::string& format) {
    if (format != "json" && format != "csv")
        throw_config("OutputFormat", "unknown output format: " + format);
}

// CSV fields that may contain commas or quotes are always double-quoted.
std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string join_exponent(const ExponentVector& n) {
    std::string out;
    for (size_t i = 0; i < n.size(); ++i) {
        if (i) out += ';';
        out += std::to_string(n[i]);
    }
    return out;
}

json exponent_json(const ExponentVector& n) {
    json arr = json::array();
    for (long c : n) arr.push_back(c);
    return arr;
}

std::vector<std::vector<Rat>> entropy_directions(int d) {
    std::vector<std::vector<Rat>> dirs;
    if (d == 1) {
        dirs.push_back({Rat(1)});
        dirs.push_back({Rat(-1)});
        return dirs;
    }
    for (int i = 0; i < d; ++i) {
        std::vector<Rat> axis(static_cast<size_t>(d), Rat(0));
        axis[static_cast<size_t>(i)] = Rat(1);
        dirs.push_back(std::move(axis));
    }
    if (d == 2) {
        dirs.push_back({Rat(1), Rat(1)});
        dirs.push_back({Rat(1), Rat(-1)});
    } else if (d == 3) {
        for (int s1 : {1, -1})
            for (int s2 : {1, -1}) dirs.push_back({Rat(1), Rat(s1), Rat(s2)});
    }
    return dirs;
}

// Exact radius display: "0", the integer root, or "sqrt(N)".
std::string radius_display(bool has_violation, const Int& norm_sq) {
    if (!has_violation) return "0";
    Int r;
    mpz_sqrt(r.get_mpz_t(), norm_sq.get_mpz_t());
    if (r * r == norm_sq) return r.get_str();
    return "sqrt(" + norm_sq.get_str() + ")";
}

// r <= phi.hi decided exactly: ||n||^2 <= phi.hi^2 over the rationals.
bool within_bound(bool has_violation, const Int& norm_sq, const RealInterval& phi) {
    if (!has_violation) return true;
    if (phi.hi < 0) return false;
    Rat bound = phi.hi * phi.hi;
    return Rat(norm_sq) <= bound;
}

struct ScanRowData {
    long k = 0;
    Rat theta;
    bool has_violation = false;
    Int norm_sq;
    bool boundary_hit = false;
    std::string witness;  // empty when the property holds everywhere
    RealInterval phi;
    bool bounded = true;
};

void check_k_range(const ScanRequest& req) {
    if (req.k_min < 1 || req.k_max < req.k_min)
        throw_config("KRange", "need 1 <= k_min <= k_max");
}

std::pair<std::string, std::string> property_columns(ScanProperty p) {
    switch (p) {
        case ScanProperty::property_I: return {"I", ""};
        case ScanProperty::property_II_literal: return {"II", "literal"};
        case ScanProperty::property_II_strong: return {"II", "strong"};
    }
    return {"?", ""};
}

json fit_json(const std::vector<std::pair<RealInterval, RealInterval>>& pts) {
    if (pts.size() < 2) return nullptr;
    FitResult fit = ols_fit(pts);
    json out;
    out["slope"] = iv_json(fit.slope);
    out["intercept"] = iv_json(fit.intercept);
    out["points"] = fit.points;
    return out;
}

std::string fit_comment(const std::vector<std::pair<RealInterval, RealInterval>>& pts) {
    if (pts.size() < 2) return "# fit: insufficient data\n";
    FitResult fit = ols_fit(pts);
    std::ostringstream os;
    os << "# fit slope_lo=" << decimal_floor(fit.slope.lo, kDigits)
       << " slope_hi=" << decimal_ceil(fit.slope.hi, kDigits)
       << " intercept_lo=" << decimal_floor(fit.intercept.lo, kDigits)
       << " intercept_hi=" << decimal_ceil(fit.intercept.hi, kDigits) << " points=" << fit.points
       << "\n";
    return os.str();
}

std::string render_scan(const std::string& head_comment, const std::vector<ScanRowData>& rows,
                        ScanProperty prop, const RealInterval& rate_b,
                        const std::vector<std::pair<RealInterval, RealInterval>>& fit_pts,
                        const json& meta, const std::string& format) {
    auto [prop_col, variant_col] = property_columns(prop);
    if (format == "csv") {
        std::ostringstream os;
        if (!head_comment.empty()) os << "# " << head_comment << "\n";
        os << "k,theta,property,variant,r,boundary_hit,witness,phi_hi,within_bound\n";
        for (const auto& r : rows) {
            os << r.k << ',' << rat_string(r.theta) << ',' << prop_col << ',' << variant_col << ','
               << radius_display(r.has_violation, r.norm_sq) << ','
               << (r.boundary_hit ? "true" : "false") << ','
               << (r.witness.empty() ? std::string() : csv_quote(r.witness)) << ','
               << decimal_ceil(r.phi.hi, kDigits) << ',' << (r.bounded ? "true" : "false") << "\n";
        }
        os << "# rate_B_lo=" << decimal_floor(rate_b.lo, kDigits)
           << " rate_B_hi=" << decimal_ceil(rate_b.hi, kDigits) << "\n";
        os << fit_comment(fit_pts);
        return os.str();
    }
    json doc = meta;
    doc["property"] = prop_col;
    doc["variant"] = variant_col;
    doc["rate_B"] = iv_json(rate_b);
    json jrows = json::array();
    for (const auto& r : rows) {
        json row;
        row["k"] = r.k;
        row["theta"] = rat_string(r.theta);
        row["r"] = radius_display(r.has_violation, r.norm_sq);
        row["r_norm_sq"] = r.has_violation ? json(r.norm_sq.get_str()) : json(nullptr);
        row["boundary_hit"] = r.boundary_hit;
        row["witness"] = r.witness.empty() ? json(nullptr) : json(r.witness);
        row["phi"] = iv_json(r.phi);
        row["within_bound"] = r.bounded;
        jrows.push_back(std::move(row));
    }
    doc["rows"] = std::move(jrows);
    doc["fit"] = fit_json(fit_pts);
    return doc.dump(2) + "\n";
}

std::string gauss_json(const GaussRat& v, const ExponentVector& n, const std::string& what,
                       const std::string& format) {
    if (format == "csv") {
        std::ostringstream os;
        os << "re,im\n" << rat_string(v.re) << ',' << rat_string(v.im) << "\n";
        return os.str();
    }
    json doc;
    doc["quantity"] = what;
    doc["n"] = exponent_json(n);
    doc["re"] = rat_string(v.re);
    doc["im"] = rat_string(v.im);
    return doc.dump(2) + "\n";
}

}  // namespace

std::string rat_string(const Rat& q) { return q.get_str(); }

std::vector<ExponentVector> perpoints_grid(int d, long radius) {
    if (radius < 1) throw_config("RadiusRange", "count radius must be >= 1");
    if (d == 1) {
        std::vector<ExponentVector> out;
        out.reserve(static_cast<size_t>(radius));
        for (long n = 1; n <= radius; ++n) out.push_back({n});
        return out;
    }
    std::vector<ExponentVector> out;
    for (auto& n : shell_points(d, Int(radius) * Int(radius))) {
        long lead = 0;
        for (long c : n) {
            if (c != 0) {
                lead = c;
                break;
            }
        }
        if (lead > 0) out.push_back(std::move(n));
    }
    return out;
}

std::string analyze_report(const SystemConfig& cfg, long precision, const std::string& format) {
    require_format(format);
    const Presentation& pres = require_presentation(cfg);
    PlaceEngine eng(pres);

    for (int i = 0; i < pres.d; ++i) {
        const FieldElement x = pres.generator_image(i);
        if (!eng.product_formula_check(x, precision))
            throw Error(errc::precision, "ProductFormulaViolation",
                        "generator " + fe_to_string(x, pres) + " fails the product formula over S");
    }

    auto lyap = lyapunov_vectors(eng, precision);
    std::vector<RealInterval> sums(static_cast<size_t>(pres.d), RealInterval(Rat(0)));
    for (const auto& lv : lyap)
        for (size_t j = 0; j < sums.size(); ++j) sums[j] = sums[j] + lv.ell[j];
    MixingReport mix = is_mixing(eng, precision);

    if (format == "csv") {
        std::ostringstream os;
        os << "place,coordinate,ell_lo,ell_hi,exact\n";
        for (const auto& lv : lyap)
            for (size_t j = 0; j < lv.ell.size(); ++j) {
                std::string exact;
                if (lv.has_exact)
                    exact = lv.exact_dir[j].get_str() + "*log(" + lv.exact_base.get_str() + ")";
                os << lv.place.id() << ',' << j << ',' << decimal_floor(lv.ell[j].lo, kDigits)
                   << ',' << decimal_ceil(lv.ell[j].hi, kDigits) << ','
                   << (exact.empty() ? std::string() : csv_quote(exact)) << "\n";
            }
        os << "# mixing=" << (mix.mixing ? "true" : "false");
        if (mix.witness) os << " witness=" << join_exponent(*mix.witness);
        os << "\n";
        if (mix.mixing) {
            SeparationData sep = separation_constant(eng, precision, kSeparationTol);
            os << "# sigma=" << sep.sigma << " C_lo=" << decimal_floor(sep.c.lo, kDigits)
               << " C_hi=" << decimal_ceil(sep.c.hi, kDigits) << "\n";
        }
        return os.str();
    }

    json doc;
    doc["system"] = {{"name", cfg.name},
                     {"d", pres.d},
                     {"characteristic", pres.characteristic.get_str()},
                     {"degree", pres.field_degree()},
                     {"maximality_attested", pres.maximality_attested}};
    doc["precision_bits"] = precision;
    json jplaces = json::array();
    for (const auto& v : eng.S().places) jplaces.push_back(place_json(v));
    doc["places"] = std::move(jplaces);
    json jgens = json::array();
    for (int i = 0; i < pres.d; ++i) {
        jgens.push_back(json{{"image", fe_to_string(pres.generator_image(i), pres)},
                             {"product_formula", "verified"}});
    }
    doc["generators"] = std::move(jgens);
    json jlyap = json::array();
    for (const auto& lv : lyap) {
        json row;
        row["place"] = lv.place.id();
        json ell = json::array();
        for (const auto& iv : lv.ell) ell.push_back(iv_json(iv));
        row["ell"] = std::move(ell);
        if (lv.has_exact) {
            json dir = json::array();
            for (const auto& c : lv.exact_dir) dir.push_back(c.get_str());
            row["exact"] = json{{"log_base", lv.exact_base.get_str()}, {"direction", dir}};
        } else {
            row["exact"] = nullptr;
        }
        jlyap.push_back(std::move(row));
    }
    doc["lyapunov"] = std::move(jlyap);
    json jsums = json::array();
    for (const auto& iv : sums) jsums.push_back(iv_json(iv));
    doc["lyapunov_sum"] = std::move(jsums);
    doc["mixing"] = mix.mixing;
    doc["mixing_witness"] = mix.witness ? exponent_json(*mix.witness) : json(nullptr);
    if (mix.mixing) {
        SeparationData sep = separation_constant(eng, precision, kSeparationTol);
        doc["sigma"] = sep.sigma;
        doc["separation_C"] = iv_json(sep.c);
        doc["separation_one_sided"] = iv_json(sep.one_sided);
        doc["rate_B"] = iv_json(RealInterval(Rat(2)) / sep.c);
    }
    json jent = json::array();
    for (const auto& w : entropy_directions(pres.d)) {
        RealInterval h = directional_entropy(eng, w, precision);
        json dir = json::array();
        for (const auto& c : w) dir.push_back(rat_string(c));
        jent.push_back(json{{"direction", dir}, {"entropy", iv_json(h)}});
    }
    doc["entropy"] = std::move(jent);
    return doc.dump(2) + "\n";
}

std::string perpoints_report(const SystemConfig& cfg, long radius, long precision,
                             const std::string& format) {
    require_format(format);
    const Presentation& pres = require_presentation(cfg);
    PlaceEngine eng(pres);
    bool oracle_ok = true;
    for (const auto& v : eng.S().places)
        if (v.is_explicit) oracle_ok = false;

    auto grid = perpoints_grid(pres.d, radius);
    struct Row {
        ExponentVector n;
        Int count;
        Int oracle;
        bool agree = false;
    };
    std::vector<Row> rows;
    rows.reserve(grid.size());
    for (const auto& n : grid) {
        Row row;
        row.n = n;
        row.count = fix_count_product(eng, n, precision).count;
        if (oracle_ok) {
            row.oracle = fix_count_oracle(eng, n).count;
            row.agree = row.count == row.oracle;
        }
        rows.push_back(std::move(row));
    }

    if (format == "csv") {
        std::ostringstream os;
        os << "n,count,method,agreement\n";
        for (const auto& r : rows) {
            os << join_exponent(r.n) << ',' << r.count.get_str() << ",product,"
               << (oracle_ok ? (r.agree ? "true" : "false") : "") << "\n";
        }
        return os.str();
    }
    json doc;
    doc["system"] = cfg.name;
    doc["radius"] = radius;
    json jrows = json::array();
    for (const auto& r : rows) {
        json row;
        row["n"] = exponent_json(r.n);
        row["count"] = r.count.get_str();
        row["method"] = "product";
        row["oracle"] = oracle_ok ? json(r.oracle.get_str()) : json(nullptr);
        row["agreement"] = oracle_ok ? json(r.agree) : json(nullptr);
        jrows.push_back(std::move(row));
    }
    doc["rows"] = std::move(jrows);
    return doc.dump(2) + "\n";
}

std::string scan_report(const SystemConfig& cfg, const ScanRequest& req,
                        const std::string& format) {
    require_format(format);
    check_k_range(req);
    const Presentation& pres = require_presentation(cfg);
    PlaceEngine eng(pres);
    MixingReport mix = is_mixing(eng, req.precision);
    if (!mix.mixing) {
        std::string msg = "property scans need a mixing system";
        if (mix.witness) msg += "; beta_n = 1 at n = " + join_exponent(*mix.witness);
        throw_config("NotMixing", msg);
    }
    SeparationData sep = separation_constant(eng, req.precision, kSeparationTol);
    RealInterval rate_b = RealInterval(Rat(2)) / sep.c;

    std::vector<ScanRowData> rows;
    std::vector<std::pair<RealInterval, RealInterval>> fit_pts;
    for (long k = req.k_min; k <= req.k_max; ++k) {
        Rat theta = cfg.schedule.value(k);
        ExhaustiveSet h = enumerate_Hk(eng, theta, req.cap);
        h.k = k;
        RadiusReport rep = scan_radius(eng, h, req.property, req.window);
        ScanRowData row;
        row.k = k;
        row.theta = theta;
        row.has_violation = rep.has_violation;
        row.norm_sq = rep.last_violation_norm_sq;
        row.boundary_hit = rep.boundary_hit;
        if (rep.witness_n)
            row.witness =
                "n=" + join_exponent(*rep.witness_n) + " a=" + fe_to_string(*rep.witness_a, pres);
        row.phi = phi_rate(rate_b, theta, req.precision);
        row.bounded = within_bound(rep.has_violation, rep.last_violation_norm_sq, row.phi);
        rows.push_back(std::move(row));
        if (rep.has_violation) {
            fit_pts.emplace_back(
                log_enclosure(theta, 96),
                sqrt_enclosure(RealInterval(Rat(rep.last_violation_norm_sq)), 96));
        }
    }

    json meta;
    meta["system"] = cfg.name;
    meta["window_radius"] = rat_string(req.window);
    return render_scan(std::string(), rows, req.property, rate_b, fit_pts, meta, format);
}

std::string compose_report(const SystemConfig& cfg, const ScanRequest& req,
                           const std::string& format) {
    require_format(format);
    check_k_range(req);
    if (!cfg.composed)
        throw_config("NotComposed", "compose report needs a composed system configuration");
    ComposedPtr m = build_composed(cfg, req.precision);
    RealInterval rate_b = m->rate_B(req.precision, kSeparationTol);

    std::vector<ScanRowData> rows;
    std::vector<std::pair<RealInterval, RealInterval>> fit_pts;
    for (long k = req.k_min; k <= req.k_max; ++k) {
        Rat theta = cfg.schedule.value(k);
        std::vector<CElem> h = m->enumerate_H(theta, req.cap);
        ComposedRadius rep = composed_scan_radius(*m, h, k, theta, req.property, req.window);
        ScanRowData row;
        row.k = k;
        row.theta = theta;
        row.has_violation = rep.has_violation;
        row.norm_sq = rep.last_violation_norm_sq;
        row.boundary_hit = rep.boundary_hit;
        if (rep.witness_n)
            row.witness =
                "n=" + join_exponent(*rep.witness_n) + " a=" + m->element_string(*rep.witness);
        row.phi = phi_rate(rate_b, theta, req.precision);
        row.bounded = within_bound(rep.has_violation, rep.last_violation_norm_sq, row.phi);
        rows.push_back(std::move(row));
        if (rep.has_violation) {
            fit_pts.emplace_back(
                log_enclosure(theta, 96),
                sqrt_enclosure(RealInterval(Rat(rep.last_violation_norm_sq)), 96));
        }
    }

    json meta;
    meta["system"] = cfg.name;
    meta["module"] = m->describe();
    meta["dimension"] = m->dimension();
    meta["window_radius"] = rat_string(req.window);
    return render_scan("module " + m->describe(), rows, req.property, rate_b, fit_pts, meta,
                       format);
}

std::string correlation_report(const SystemConfig& cfg, const std::string& functions_path,
                               const ExponentVector& n, long precision,
                               const std::string& format) {
    require_format(format);
    const Presentation& pres = require_presentation(cfg);
    PlaceEngine eng(pres);
    FunctionTerms terms = load_functions(functions_path, pres);
    if (!terms.has_g) throw_config("MissingFunction", "correlation needs both f and g terms");
    TrigPolynomial f = make_trig_polynomial(eng, terms.f, false);
    TrigPolynomial g = make_trig_polynomial(eng, terms.g, false);
    (void)precision;
    GaussRat val = correlation(eng, f, g, n);
    return gauss_json(val, n, "correlation", format);
}

std::string pairing_report(const SystemConfig& cfg, const std::string& functions_path,
                           const ExponentVector& n, long precision, const std::string& format) {
    require_format(format);
    const Presentation& pres = require_presentation(cfg);
    PlaceEngine eng(pres);
    FunctionTerms terms = load_functions(functions_path, pres);
    TrigPolynomial f = make_trig_polynomial(eng, terms.f, false);
    (void)precision;
    GaussRat val = periodic_pairing(eng, f, n);
    return gauss_json(val, n, "pairing", format);
}

}  // namespace rankone
