#pragma once

#include <string>
#include <vector>

#include "rankone/config.hpp"
#include "rankone/exhaustive.hpp"
#include "rankone/lyapunov.hpp"
#include "rankone/periodic.hpp"
#include "rankone/rates.hpp"

namespace rankone {

// Exact rational rendering: "a" or "a/b".
std::string rat_string(const Rat& q);

// Canonical count grid: d = 1 gives n = 1..R; d >= 2 gives one
// representative per antipodal pair (first nonzero component positive)
// with norm <= R, sorted by (norm^2, lex).
std::vector<ExponentVector> perpoints_grid(int d, long radius);

struct ScanRequest {
    long k_min = 1;
    long k_max = 1;
    ScanProperty property = ScanProperty::property_I;
    Rat window = Rat(10);
    size_t cap = 1000000;
    long precision = 128;
};

// Full system report: places, Lyapunov data, sum rule, mixing, separation,
// entropy samples. Throws ProductFormulaViolation when a generator fails the
// product-formula check. format: "json" or "csv".
std::string analyze_report(const SystemConfig& cfg, long precision, const std::string& format);

// Fixed-point counts over the canonical grid with oracle agreement flags.
std::string perpoints_report(const SystemConfig& cfg, long radius, long precision,
                             const std::string& format);

// Windowed property scans across a k range, with an OLS fit of the measured
// radius against log theta(k).
std::string scan_report(const SystemConfig& cfg, const ScanRequest& req,
                        const std::string& format);

// Composed-module scans plus the max-combined rate constant.
std::string compose_report(const SystemConfig& cfg, const ScanRequest& req,
                           const std::string& format);

// Exact correlation / pairing values for trigonometric polynomial data.
std::string correlation_report(const SystemConfig& cfg, const std::string& functions_path,
                               const ExponentVector& n, long precision,
                               const std::string& format);
std::string pairing_report(const SystemConfig& cfg, const std::string& functions_path,
                           const ExponentVector& n, long precision, const std::string& format);

}  // namespace rankone
