#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankone/compose.hpp"
#include "rankone/theta.hpp"
#include "rankone/trigpoly.hpp"

namespace rankone {

// Parsed configuration document. Plain systems carry a presentation;
// composed systems retain the composition subtree (rebuilt on demand, since
// construction runs leaf mixing checks).
struct SystemConfig {
    std::string name;
    int d = 1;
    Int characteristic;
    ThetaSchedule schedule;
    std::optional<Presentation> presentation;
    bool composed = false;
    std::string compose_json;
};

SystemConfig load_config(const std::string& path);
SystemConfig parse_config(const std::string& text);

// Builds the composition tree of a composed config (leaf mixing verified).
ComposedPtr build_composed(const SystemConfig& cfg, long precision = 128);

struct FunctionTerms {
    std::vector<std::pair<FieldElement, GaussRat>> f, g;
    bool has_g = false;
};

// {"f": [{"support": expr, "re": rat, "im": rat}, ...], "g": [...]}
FunctionTerms load_functions(const std::string& path, const Presentation& pres);
FunctionTerms parse_functions(const std::string& text, const Presentation& pres);

}  // namespace rankone
