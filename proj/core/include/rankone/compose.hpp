#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rankone/exhaustive.hpp"
#include "rankone/lyapunov.hpp"

namespace rankone {

// Element of a composed module: a leaf field element or a tuple of parts
// (pair (sub, quotient) for extensions, one entry per summand for sums).
struct CElem {
    std::variant<FieldElement, std::vector<CElem>> v;

    bool operator==(const CElem&) const;
    bool operator<(const CElem&) const;
};

CElem celem_leaf(FieldElement a);
CElem celem_tuple(std::vector<CElem> parts);
// Structural zero test (every leaf zero).
bool celem_is_zero(const CElem& e);

enum class ComposedShape { cyclic, direct_sum, extension, restriction };

class ComposedModule;
using ComposedPtr = std::shared_ptr<ComposedModule>;

// A module assembled from mixing cyclic pieces: direct sums, extensions of a
// cyclic piece by a cyclic piece over the same field (action
// u_i(l, q) = (bL_i l + gamma_i q, bQ_i q)), and restrictions to an
// action-invariant subset. Scans touch only the finite enumerated sets.
class ComposedModule {
public:
    static ComposedPtr cyclic(Presentation pres, long precision = 128);
    static ComposedPtr direct_sum(std::vector<ComposedPtr> parts);
    // reps: quotient coset -> sub-component of its representative; empty map
    // means the zero section. A nonempty table must send 0 to 0 and cover
    // every coset the enumeration needs.
    static ComposedPtr extension(ComposedPtr sub, ComposedPtr quotient,
                                 std::vector<FieldElement> cocycle,
                                 std::map<FieldElement, FieldElement> reps, long precision = 128);
    static ComposedPtr restriction(ComposedPtr parent,
                                   std::function<bool(const CElem&)> predicate,
                                   std::string predicate_name);

    ComposedShape shape() const { return shape_; }
    int dimension() const;
    std::string describe() const;

    CElem zero() const;
    CElem add(const CElem& a, const CElem& b);
    CElem subtract(const CElem& a, const CElem& b);
    // u^n e, generator by generator (generators commute; validated for
    // extensions at construction).
    CElem apply(const ExponentVector& n, const CElem& e);
    // The unique m with (u^n - 1)m = h when it lies in the module.
    std::optional<CElem> divide_un_minus_one(const CElem& h, const ExponentVector& n);

    // Sorted nonzero elements with every leaf coordinate constrained by the
    // leaf bounds; restriction additionally spot-checks invariance of its
    // predicate on every element it keeps.
    std::vector<CElem> enumerate_H(const Rat& theta, size_t cap = 1000000);

    // max over leaves of 2 / C(leaf): the composed radius-rate constant.
    RealInterval rate_B(long precision, const Rat& rel_tol);

    std::string element_string(const CElem& e) const;

    // Cyclic leaves only.
    PlaceEngine& leaf_engine();

private:
    ComposedModule() = default;

    ComposedShape shape_ = ComposedShape::cyclic;
    std::optional<PlaceEngine> engine_;
    std::vector<ComposedPtr> parts_;
    ComposedPtr sub_, quot_;
    std::vector<FieldElement> cocycle_;
    std::map<FieldElement, FieldElement> reps_;
    bool reps_table_ = false;
    ComposedPtr parent_;
    std::function<bool(const CElem&)> pred_;
    std::string pred_name_;

    CElem apply_gen(int i, int sign, const CElem& e);
    void check_invariant(const CElem& e);
};

struct ComposedCheck {
    bool holds = true;
    std::optional<CElem> witness;
};

// H cap u^n H = {0} on the enumerated composed set (membership by lookup).
ComposedCheck composed_property_I(ComposedModule& m, const std::vector<CElem>& h,
                                  const ExponentVector& n);
// literal: H cap (u^n - 1)H = {0}; strong: no member of H is (u^n - 1)m for
// a module element m.
ComposedCheck composed_property_II(ComposedModule& m, const std::vector<CElem>& h,
                                   const ExponentVector& n, IIVariant variant);

struct ComposedRadius {
    long k = 0;
    Rat theta;
    ScanProperty property = ScanProperty::property_I;
    Rat window_radius;
    bool has_violation = false;
    Int last_violation_norm_sq;
    bool boundary_hit = false;
    std::optional<ExponentVector> witness_n;
    std::optional<CElem> witness;
};

ComposedRadius composed_scan_radius(ComposedModule& m, const std::vector<CElem>& h, long k,
                                    const Rat& theta, ScanProperty prop,
                                    const Rat& window_radius);

// Predicate builders for restrictions.
std::function<bool(const CElem&)> predicate_all();
std::function<bool(const CElem&)> predicate_zero();
// Tuple elements whose components at the listed indices vanish.
std::function<bool(const CElem&)> predicate_components_zero(std::vector<size_t> indices);

}  // namespace rankone
