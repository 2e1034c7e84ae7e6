#include "rankone/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace rankone {

namespace {

using json = nlohmann::ordered_json;

Rat parse_rat(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Rat(v.get<long>());
    if (v.is_string()) {
        try {
            Rat r(v.get<std::string>());
            if (r.get_den() == 0) throw_config("ConfigValue", field + ": zero denominator");
            r.canonicalize();
            return r;
        } catch (const std::invalid_argument&) {
            throw_config("ConfigValue", field + ": not a rational: " + v.get<std::string>());
        }
    }
    throw_config("ConfigValue", field + ": expected an integer or an \"a/b\" string");
}

Int parse_int(const json& v, const std::string& field) {
    if (v.is_number_integer()) return Int(v.get<long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw_config("ConfigValue", field + ": not an integer: " + v.get<std::string>());
        }
    }
    throw_config("ConfigValue", field + ": expected an integer");
}

// Polynomial expressions in x over the integers: literals, + - * ^, parens.
// No reduction, unlike the field-element parser.
struct PolyParser {
    const std::string& s;
    size_t pos = 0;

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
    [[noreturn]] void fail(const std::string& why) {
        throw_config("ConfigValue",
                     why + " at position " + std::to_string(pos) + " in \"" + s + "\"");
    }

    QPoly atom() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of polynomial");
        const char c = s[pos];
        if (c == '(') {
            ++pos;
            QPoly e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            return QPoly({Rat(Int(s.substr(start, pos - start)))});
        }
        if (c == 'x') {
            ++pos;
            return QPoly({Rat(0), Rat(1)});
        }
        fail("unexpected character");
    }

    QPoly factor() {
        if (eat('-')) return q_scale(factor(), Rat(-1));
        QPoly base = atom();
        if (eat('^')) {
            skip_ws();
            const size_t start = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == start) fail("expected an exponent");
            const Int e(s.substr(start, pos - start));
            if (!e.fits_slong_p() || e.get_si() > 64) fail("exponent out of range");
            QPoly out({Rat(1)});
            for (long i = 0; i < e.get_si(); ++i) out = q_mul(out, base);
            return out;
        }
        return base;
    }

    QPoly term() {
        QPoly acc = factor();
        while (eat('*')) acc = q_mul(acc, factor());
        return acc;
    }

    QPoly expr() {
        QPoly acc = term();
        while (true) {
            if (eat('+'))
                acc = q_add(acc, term());
            else if (eat('-'))
                acc = q_sub(acc, term());
            else
                return acc;
        }
    }
};

ZPoly parse_min_poly(const json& v) {
    std::vector<Int> coeffs;
    if (v.is_string()) {
        const std::string text = v.get<std::string>();
        PolyParser p{text};
        const QPoly q = p.expr();
        p.skip_ws();
        if (p.pos != text.size()) p.fail("trailing input");
        for (const Rat& c : q.c) {
            if (c.get_den() != 1)
                throw_config("ConfigValue", "min_poly must have integer coefficients");
            coeffs.push_back(c.get_num());
        }
    } else if (v.is_array()) {
        for (const json& c : v) coeffs.push_back(parse_int(c, "min_poly"));
    } else {
        throw_config("ConfigValue", "min_poly: expected an expression string or array");
    }
    return ZPoly(std::move(coeffs));
}

std::vector<ExplicitPlaceData> parse_explicit_places(const json& field) {
    std::vector<ExplicitPlaceData> out;
    if (!field.contains("explicit_places")) return out;
    for (const json& e : field.at("explicit_places")) {
        ExplicitPlaceData d;
        d.prime = parse_int(e.at("prime"), "explicit_places.prime");
        d.ram_index = e.value("e", 1u);
        d.res_degree = e.value("f", 1u);
        d.gen_ords = e.at("gen_ords").get<std::vector<long>>();
        out.push_back(std::move(d));
    }
    return out;
}

Presentation parse_field_node(const json& field, const std::string& name, int d,
                              const Int& characteristic) {
    const bool attested = field.value("maximality_attested", false);
    const std::vector<std::string> gens =
        field.at("generator_images").get<std::vector<std::string>>();
    if (static_cast<int>(gens.size()) != d)
        throw_config("ConfigValue", "generator_images must list exactly d entries");

    if (characteristic == 0) {
        const ZPoly mp = parse_min_poly(field.at("min_poly"));
        auto explicit_places = parse_explicit_places(field);
        const Presentation scratch = make_number_field_presentation(
            name, d, mp, std::vector<QPoly>(static_cast<size_t>(d), QPoly({Rat(1)})), attested,
            explicit_places);
        std::vector<QPoly> images;
        images.reserve(gens.size());
        for (const std::string& g : gens) images.push_back(fe_parse(g, scratch).nf());
        return make_number_field_presentation(name, d, mp, std::move(images), attested,
                                              std::move(explicit_places));
    }

    if (field.contains("base_q")) {
        const Int q = parse_int(field.at("base_q"), "base_q");
        if (q != characteristic)
            throw_config("ConfigValue", "base_q disagrees with system.characteristic");
    }
    const Presentation scratch = make_function_field_presentation(
        name, d, characteristic, std::vector<FqElem>(static_cast<size_t>(d), fq_one()), attested);
    std::vector<FqElem> images;
    images.reserve(gens.size());
    for (const std::string& g : gens) images.push_back(fe_parse(g, scratch).ff());
    return make_function_field_presentation(name, d, characteristic, std::move(images), attested);
}

ThetaSchedule parse_schedule(const json& doc) {
    if (!doc.contains("schedule")) return ThetaSchedule::geometric_base(Rat(2));
    const json& s = doc.at("schedule");
    const bool has_base = s.contains("theta_base");
    const bool has_list = s.contains("theta_list");
    if (has_base == has_list)
        throw_config("ConfigValue", "schedule needs exactly one of theta_base, theta_list");
    if (has_base) return ThetaSchedule::geometric_base(parse_rat(s.at("theta_base"), "theta_base"));
    std::vector<Rat> values;
    for (const json& v : s.at("theta_list")) values.push_back(parse_rat(v, "theta_list"));
    return ThetaSchedule::user(std::move(values));
}

ComposedPtr build_node(const json& node, const SystemConfig& cfg, long precision) {
    const std::string type = node.at("type").get<std::string>();
    if (type == "cyclic") {
        const std::string name = node.value("name", cfg.name);
        return ComposedModule::cyclic(
            parse_field_node(node.at("field"), name, cfg.d, cfg.characteristic), precision);
    }
    if (type == "sum") {
        std::vector<ComposedPtr> parts;
        for (const json& p : node.at("parts")) parts.push_back(build_node(p, cfg, precision));
        return ComposedModule::direct_sum(std::move(parts));
    }
    if (type == "extension") {
        ComposedPtr sub = build_node(node.at("sub"), cfg, precision);
        ComposedPtr quot = build_node(node.at("quotient"), cfg, precision);
        if (sub->shape() != ComposedShape::cyclic || quot->shape() != ComposedShape::cyclic)
            throw_config("ExtensionShape", "extension pieces must be cyclic presentations");
        const Presentation& ps = sub->leaf_engine().pres();
        const Presentation& pq = quot->leaf_engine().pres();
        std::vector<FieldElement> cocycle;
        for (const json& g : node.at("cocycle"))
            cocycle.push_back(fe_parse(g.get<std::string>(), ps));
        std::map<FieldElement, FieldElement> reps;
        if (node.contains("reps")) {
            for (const json& r : node.at("reps")) {
                FieldElement coset = fe_parse(r.at("coset").get<std::string>(), pq);
                FieldElement lift = fe_parse(r.at("lift").get<std::string>(), ps);
                reps.emplace(std::move(coset), std::move(lift));
            }
        }
        return ComposedModule::extension(std::move(sub), std::move(quot), std::move(cocycle),
                                         std::move(reps), precision);
    }
    if (type == "restrict") {
        ComposedPtr parent = build_node(node.at("parent"), cfg, precision);
        const json& pr = node.at("predicate");
        const std::string pt = pr.at("type").get<std::string>();
        if (pt == "all") return ComposedModule::restriction(std::move(parent), predicate_all(), "all");
        if (pt == "zero")
            return ComposedModule::restriction(std::move(parent), predicate_zero(), "zero");
        if (pt == "components_zero") {
            const auto idx = pr.at("indices").get<std::vector<size_t>>();
            std::string label = "components_zero[";
            for (size_t i = 0; i < idx.size(); ++i) {
                if (i > 0) label += ",";
                label += std::to_string(idx[i]);
            }
            label += "]";
            return ComposedModule::restriction(std::move(parent),
                                               predicate_components_zero(idx), std::move(label));
        }
        throw_config("ConfigValue", "unknown predicate type: " + pt);
    }
    throw_config("ConfigValue", "unknown composition node type: " + type);
}

FunctionTerms parse_terms_doc(const json& doc, const Presentation& pres) {
    FunctionTerms out;
    auto read_list = [&](const json& arr) {
        std::vector<std::pair<FieldElement, GaussRat>> terms;
        for (const json& t : arr) {
            FieldElement a = fe_parse(t.at("support").get<std::string>(), pres);
            GaussRat c;
            if (t.contains("re")) c.re = parse_rat(t.at("re"), "re");
            if (t.contains("im")) c.im = parse_rat(t.at("im"), "im");
            terms.emplace_back(std::move(a), std::move(c));
        }
        return terms;
    };
    out.f = read_list(doc.at("f"));
    if (doc.contains("g")) {
        out.g = read_list(doc.at("g"));
        out.has_g = true;
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw_config("ConfigFile", "cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

SystemConfig parse_config(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw_config("ConfigSyntax", e.what());
    }
    try {
        SystemConfig cfg;
        const json& sys = doc.at("system");
        cfg.name = sys.at("name").get<std::string>();
        cfg.d = sys.at("d").get<int>();
        cfg.characteristic = parse_int(sys.at("characteristic"), "characteristic");
        cfg.schedule = parse_schedule(doc);
        if (doc.contains("compose")) {
            cfg.composed = true;
            cfg.compose_json = doc.at("compose").dump();
        } else {
            cfg.presentation =
                parse_field_node(doc.at("field"), cfg.name, cfg.d, cfg.characteristic);
        }
        return cfg;
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw_config("ConfigSchema", e.what());
    }
}

SystemConfig load_config(const std::string& path) { return parse_config(read_file(path)); }

ComposedPtr build_composed(const SystemConfig& cfg, long precision) {
    if (!cfg.composed) throw_config("ConfigValue", "config has no composition node");
    json node;
    try {
        node = json::parse(cfg.compose_json);
    } catch (const std::exception& e) {
        throw_config("ConfigSyntax", e.what());
    }
    try {
        return build_node(node, cfg, precision);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw_config("ConfigSchema", e.what());
    }
}

FunctionTerms parse_functions(const std::string& text, const Presentation& pres) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const std::exception& e) {
        throw_config("ConfigSyntax", e.what());
    }
    try {
        return parse_terms_doc(doc, pres);
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        throw_config("ConfigSchema", e.what());
    }
}

FunctionTerms load_functions(const std::string& path, const Presentation& pres) {
    return parse_functions(read_file(path), pres);
}

}  // namespace rankone
