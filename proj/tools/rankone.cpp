#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "rankone/config.hpp"
#include "rankone/errors.hpp"
#include "rankone/report.hpp"

namespace {

using namespace rankone;

struct CommonOpts {
    std::string config_path;
    std::string output = "json";
    long precision = 128;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--config", opts.config_path, "system configuration file")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--output", opts.output, "output format: json or csv")
        ->default_val("json")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--precision", opts.precision, "working precision in bits")
        ->default_val(128)
        ->check(CLI::PositiveNumber);
}

ExponentVector parse_exponent(const std::string& text, int d) {
    ExponentVector n;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t next = text.find(',', pos);
        std::string tok = text.substr(pos, next == std::string::npos ? next : next - pos);
        try {
            size_t used = 0;
            n.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw_config("ExponentSyntax", "bad exponent component: '" + tok + "'");
        }
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (static_cast<int>(n.size()) != d)
        throw_config("DimensionMismatch", "exponent has " + std::to_string(n.size()) +
                                              " components, system has d = " + std::to_string(d));
    return n;
}

std::pair<long, long> parse_k_range(const std::string& text) {
    auto parse_long = [](const std::string& tok) {
        try {
            size_t used = 0;
            long v = std::stol(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            return v;
        } catch (const std::exception&) {
            throw_config("KRange", "bad k value: '" + tok + "'");
            return 0L;
        }
    };
    size_t dots = text.find("..");
    if (dots == std::string::npos) {
        long k = parse_long(text);
        return {k, k};
    }
    return {parse_long(text.substr(0, dots)), parse_long(text.substr(dots + 2))};
}

ScanProperty parse_property(const std::string& text) {
    if (text == "I") return ScanProperty::property_I;
    if (text == "II") return ScanProperty::property_II_literal;
    if (text == "II-strong") return ScanProperty::property_II_strong;
    throw_config("PropertyName", "unknown property: '" + text + "'");
    return ScanProperty::property_I;
}

Rat parse_window(const std::string& text) {
    Rat q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0 || q.get_den() == 0)
        throw_config("WindowSyntax", "bad window radius: '" + text + "'");
    q.canonicalize();
    return q;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for rank-one algebraic Z^d actions"};
    app.require_subcommand(1);

    CommonOpts analyze_opts;
    CLI::App* analyze = app.add_subcommand("analyze", "places, Lyapunov data, mixing, entropy");
    add_common(analyze, analyze_opts);

    CommonOpts per_opts;
    long per_radius = 5;
    CLI::App* perpoints = app.add_subcommand("perpoints", "fixed-point counts over a norm grid");
    add_common(perpoints, per_opts);
    perpoints->add_option("--radius", per_radius, "max Euclidean norm of exponents")
        ->default_val(5)
        ->check(CLI::PositiveNumber);

    CommonOpts scan_opts;
    std::string scan_k = "1..3", scan_prop = "I", scan_window = "10";
    size_t scan_cap = 1000000;
    CLI::App* scan = app.add_subcommand("scan", "uniformity radius scan across the schedule");
    add_common(scan, scan_opts);
    scan->add_option("--k", scan_k, "schedule index or range MIN..MAX")->default_val("1..3");
    scan->add_option("--window", scan_window, "scan window radius (rational)")->default_val("10");
    scan->add_option("--property", scan_prop, "I, II, or II-strong")
        ->default_val("I")
        ->check(CLI::IsMember({"I", "II", "II-strong"}));
    scan->add_option("--cap", scan_cap, "enumeration size cap")->default_val(1000000);

    CommonOpts corr_opts;
    std::string corr_functions, corr_n;
    CLI::App* correlate = app.add_subcommand("correlate", "exact correlation of two trig polynomials");
    add_common(correlate, corr_opts);
    correlate->add_option("--functions", corr_functions, "trig polynomial terms file")
        ->required()
        ->check(CLI::ExistingFile);
    correlate->add_option("--n", corr_n, "exponent, comma-separated")->required();

    CommonOpts pair_opts;
    std::string pair_functions, pair_n;
    CLI::App* pairing = app.add_subcommand("pairing", "periodic-point pairing of a trig polynomial");
    add_common(pairing, pair_opts);
    pairing->add_option("--functions", pair_functions, "trig polynomial terms file")
        ->required()
        ->check(CLI::ExistingFile);
    pairing->add_option("--n", pair_n, "exponent, comma-separated")->required();

    CommonOpts comp_opts;
    std::string comp_k = "1..3", comp_prop = "I", comp_window = "10";
    size_t comp_cap = 1000000;
    CLI::App* compose = app.add_subcommand("compose", "scans on a composed module");
    add_common(compose, comp_opts);
    compose->add_option("--k", comp_k, "schedule index or range MIN..MAX")->default_val("1..3");
    compose->add_option("--window", comp_window, "scan window radius (rational)")->default_val("10");
    compose->add_option("--property", comp_prop, "I, II, or II-strong")
        ->default_val("I")
        ->check(CLI::IsMember({"I", "II", "II-strong"}));
    compose->add_option("--cap", comp_cap, "enumeration size cap")->default_val(1000000);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        std::string out;
        if (analyze->parsed()) {
            SystemConfig cfg = load_config(analyze_opts.config_path);
            out = analyze_report(cfg, analyze_opts.precision, analyze_opts.output);
        } else if (perpoints->parsed()) {
            SystemConfig cfg = load_config(per_opts.config_path);
            out = perpoints_report(cfg, per_radius, per_opts.precision, per_opts.output);
        } else if (scan->parsed()) {
            SystemConfig cfg = load_config(scan_opts.config_path);
            ScanRequest req;
            std::tie(req.k_min, req.k_max) = parse_k_range(scan_k);
            req.property = parse_property(scan_prop);
            req.window = parse_window(scan_window);
            req.cap = scan_cap;
            req.precision = scan_opts.precision;
            out = scan_report(cfg, req, scan_opts.output);
        } else if (correlate->parsed()) {
            SystemConfig cfg = load_config(corr_opts.config_path);
            ExponentVector n = parse_exponent(corr_n, cfg.d);
            out = correlation_report(cfg, corr_functions, n, corr_opts.precision,
                                     corr_opts.output);
        } else if (pairing->parsed()) {
            SystemConfig cfg = load_config(pair_opts.config_path);
            ExponentVector n = parse_exponent(pair_n, cfg.d);
            out = pairing_report(cfg, pair_functions, n, pair_opts.precision, pair_opts.output);
        } else if (compose->parsed()) {
            SystemConfig cfg = load_config(comp_opts.config_path);
            ScanRequest req;
            std::tie(req.k_min, req.k_max) = parse_k_range(comp_k);
            req.property = parse_property(comp_prop);
            req.window = parse_window(comp_window);
            req.cap = comp_cap;
            req.precision = comp_opts.precision;
            out = compose_report(cfg, req, comp_opts.output);
        }
        std::fputs(out.c_str(), stdout);
        return 0;
    } catch (const Error& e) {
        std::cerr << "error [" << e.kind() << "]: " << e.what() << "\n";
        switch (e.category()) {
            case errc::config: return 2;
            case errc::precision: return 3;
            case errc::cap: return 4;
        }
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
