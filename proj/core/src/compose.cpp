#include "rankone/compose.hpp"

#include <algorithm>
#include <set>

namespace rankone {

bool CElem::operator==(const CElem& o) const { return v == o.v; }

bool CElem::operator<(const CElem& o) const {
    if (v.index() != o.v.index()) return v.index() < o.v.index();
    if (v.index() == 0) return std::get<FieldElement>(v) < std::get<FieldElement>(o.v);
    return std::get<std::vector<CElem>>(v) < std::get<std::vector<CElem>>(o.v);
}

CElem celem_leaf(FieldElement a) { return CElem{std::move(a)}; }

CElem celem_tuple(std::vector<CElem> parts) { return CElem{std::move(parts)}; }

bool celem_is_zero(const CElem& e) {
    if (e.v.index() == 0) return fe_is_zero(std::get<FieldElement>(e.v));
    for (const CElem& p : std::get<std::vector<CElem>>(e.v))
        if (!celem_is_zero(p)) return false;
    return true;
}

namespace {

const FieldElement& leaf_of(const CElem& e) {
    if (e.v.index() != 0) throw_config("ElementShape", "expected a leaf element");
    return std::get<FieldElement>(e.v);
}

const std::vector<CElem>& tuple_of(const CElem& e) {
    if (e.v.index() != 1) throw_config("ElementShape", "expected a tuple element");
    return std::get<std::vector<CElem>>(e.v);
}

}  // namespace

ComposedPtr ComposedModule::cyclic(Presentation pres, long precision) {
    auto m = ComposedPtr(new ComposedModule());
    m->shape_ = ComposedShape::cyclic;
    m->engine_.emplace(std::move(pres));
    const MixingReport mx = is_mixing(*m->engine_, precision);
    if (!mx.mixing)
        throw_config("LeafNotMixing",
                     "composition requires mixing pieces; " + m->engine_->pres().name +
                         " has a nontrivial exponent kernel");
    return m;
}

ComposedPtr ComposedModule::direct_sum(std::vector<ComposedPtr> parts) {
    if (parts.empty()) throw_config("EmptySum", "direct sum needs at least one part");
    const int d = parts[0]->dimension();
    for (const auto& p : parts)
        if (p->dimension() != d)
            throw_config("DimensionMismatch", "summands act for different Z^d");
    auto m = ComposedPtr(new ComposedModule());
    m->shape_ = ComposedShape::direct_sum;
    m->parts_ = std::move(parts);
    return m;
}

ComposedPtr ComposedModule::extension(ComposedPtr sub, ComposedPtr quotient,
                                      std::vector<FieldElement> cocycle,
                                      std::map<FieldElement, FieldElement> reps, long precision) {
    if (sub->shape_ != ComposedShape::cyclic || quotient->shape_ != ComposedShape::cyclic)
        throw_config("ExtensionShape", "extension pieces must be cyclic presentations");
    const Presentation& ps = sub->engine_->pres();
    const Presentation& pq = quotient->engine_->pres();
    if (ps.characteristic != pq.characteristic || !(ps.min_poly == pq.min_poly))
        throw_config("ExtensionFieldMismatch", "extension pieces must share one field");
    if (ps.d != pq.d) throw_config("DimensionMismatch", "extension pieces disagree on d");
    if (cocycle.size() != static_cast<size_t>(ps.d))
        throw_config("CocycleShape", "need one cocycle entry per coordinate");

    // u_i u_j = u_j u_i forces (bL_i - bQ_i) gamma_j = (bL_j - bQ_j) gamma_i.
    for (int i = 0; i < ps.d; ++i)
        for (int j = i + 1; j < ps.d; ++j) {
            const FieldElement di =
                fe_sub(ps.generator_image(i), pq.generator_image(i), ps);
            const FieldElement dj =
                fe_sub(ps.generator_image(j), pq.generator_image(j), ps);
            const FieldElement lhs = fe_mul(di, cocycle[static_cast<size_t>(j)], ps);
            const FieldElement rhs = fe_mul(dj, cocycle[static_cast<size_t>(i)], ps);
            if (!(lhs == rhs))
                throw_config("CocycleNotCommuting",
                             "coordinate actions do not commute with this cocycle");
        }

    auto m = ComposedPtr(new ComposedModule());
    m->shape_ = ComposedShape::extension;
    m->sub_ = std::move(sub);
    m->quot_ = std::move(quotient);
    m->cocycle_ = std::move(cocycle);
    m->reps_table_ = !reps.empty();
    if (m->reps_table_) {
        const auto it = reps.find(fe_zero(pq));
        if (it == reps.end() || !fe_is_zero(it->second))
            throw_config("RepsMissingZero", "representative table must send 0 to 0");
    }
    m->reps_ = std::move(reps);
    (void)precision;
    return m;
}

ComposedPtr ComposedModule::restriction(ComposedPtr parent,
                                        std::function<bool(const CElem&)> predicate,
                                        std::string predicate_name) {
    auto m = ComposedPtr(new ComposedModule());
    m->shape_ = ComposedShape::restriction;
    m->parent_ = std::move(parent);
    m->pred_ = std::move(predicate);
    m->pred_name_ = std::move(predicate_name);
    return m;
}

int ComposedModule::dimension() const {
    switch (shape_) {
        case ComposedShape::cyclic:
            return engine_->pres().d;
        case ComposedShape::direct_sum:
            return parts_[0]->dimension();
        case ComposedShape::extension:
            return sub_->dimension();
        case ComposedShape::restriction:
            return parent_->dimension();
    }
    return 0;
}

std::string ComposedModule::describe() const {
    switch (shape_) {
        case ComposedShape::cyclic:
            return "cyclic(" + engine_->pres().name + ")";
        case ComposedShape::direct_sum: {
            std::string s = "sum(";
            for (size_t i = 0; i < parts_.size(); ++i) {
                if (i > 0) s += ", ";
                s += parts_[i]->describe();
            }
            return s + ")";
        }
        case ComposedShape::extension:
            return "extension(" + sub_->describe() + ", " + quot_->describe() + ")";
        case ComposedShape::restriction:
            return "restrict(" + parent_->describe() + ", " + pred_name_ + ")";
    }
    return "?";
}

CElem ComposedModule::zero() const {
    switch (shape_) {
        case ComposedShape::cyclic:
            return celem_leaf(fe_zero(engine_->pres()));
        case ComposedShape::direct_sum: {
            std::vector<CElem> parts;
            parts.reserve(parts_.size());
            for (const auto& p : parts_) parts.push_back(p->zero());
            return celem_tuple(std::move(parts));
        }
        case ComposedShape::extension:
            return celem_tuple({sub_->zero(), quot_->zero()});
        case ComposedShape::restriction:
            return parent_->zero();
    }
    return celem_leaf(FieldElement{});
}

CElem ComposedModule::add(const CElem& a, const CElem& b) {
    switch (shape_) {
        case ComposedShape::cyclic:
            return celem_leaf(fe_add(leaf_of(a), leaf_of(b), engine_->pres()));
        case ComposedShape::direct_sum: {
            const auto& ta = tuple_of(a);
            const auto& tb = tuple_of(b);
            std::vector<CElem> out;
            out.reserve(parts_.size());
            for (size_t i = 0; i < parts_.size(); ++i) out.push_back(parts_[i]->add(ta[i], tb[i]));
            return celem_tuple(std::move(out));
        }
        case ComposedShape::extension: {
            const auto& ta = tuple_of(a);
            const auto& tb = tuple_of(b);
            return celem_tuple({sub_->add(ta[0], tb[0]), quot_->add(ta[1], tb[1])});
        }
        case ComposedShape::restriction:
            return parent_->add(a, b);
    }
    return a;
}

CElem ComposedModule::subtract(const CElem& a, const CElem& b) {
    switch (shape_) {
        case ComposedShape::cyclic:
            return celem_leaf(fe_sub(leaf_of(a), leaf_of(b), engine_->pres()));
        case ComposedShape::direct_sum: {
            const auto& ta = tuple_of(a);
            const auto& tb = tuple_of(b);
            std::vector<CElem> out;
            out.reserve(parts_.size());
            for (size_t i = 0; i < parts_.size(); ++i)
                out.push_back(parts_[i]->subtract(ta[i], tb[i]));
            return celem_tuple(std::move(out));
        }
        case ComposedShape::extension: {
            const auto& ta = tuple_of(a);
            const auto& tb = tuple_of(b);
            return celem_tuple({sub_->subtract(ta[0], tb[0]), quot_->subtract(ta[1], tb[1])});
        }
        case ComposedShape::restriction:
            return parent_->subtract(a, b);
    }
    return a;
}

CElem ComposedModule::apply_gen(int i, int sign, const CElem& e) {
    switch (shape_) {
        case ComposedShape::cyclic: {
            const Presentation& pres = engine_->pres();
            const FieldElement g = pres.generator_image(i);
            const FieldElement& x = leaf_of(e);
            return celem_leaf(sign > 0 ? fe_mul(g, x, pres) : fe_div(x, g, pres));
        }
        case ComposedShape::direct_sum: {
            const auto& t = tuple_of(e);
            std::vector<CElem> out;
            out.reserve(parts_.size());
            for (size_t k = 0; k < parts_.size(); ++k)
                out.push_back(parts_[k]->apply_gen(i, sign, t[k]));
            return celem_tuple(std::move(out));
        }
        case ComposedShape::extension: {
            const Presentation& pres = sub_->engine_->pres();
            const FieldElement bl = pres.generator_image(i);
            const FieldElement bq = quot_->engine_->pres().generator_image(i);
            const FieldElement& gamma = cocycle_[static_cast<size_t>(i)];
            const FieldElement& l = leaf_of(tuple_of(e)[0]);
            const FieldElement& q = leaf_of(tuple_of(e)[1]);
            if (sign > 0) {
                FieldElement nl =
                    fe_add(fe_mul(bl, l, pres), fe_mul(gamma, q, pres), pres);
                FieldElement nq = fe_mul(bq, q, pres);
                return celem_tuple({celem_leaf(std::move(nl)), celem_leaf(std::move(nq))});
            }
            FieldElement nq = fe_div(q, bq, pres);
            FieldElement nl = fe_div(fe_sub(l, fe_mul(gamma, nq, pres), pres), bl, pres);
            return celem_tuple({celem_leaf(std::move(nl)), celem_leaf(std::move(nq))});
        }
        case ComposedShape::restriction:
            return parent_->apply_gen(i, sign, e);
    }
    return e;
}

CElem ComposedModule::apply(const ExponentVector& n, const CElem& e) {
    if (static_cast<int>(n.size()) != dimension())
        throw_config("DimensionMismatch", "exponent dimension does not match the module");
    CElem cur = e;
    for (size_t i = 0; i < n.size(); ++i) {
        const int sign = n[i] > 0 ? 1 : -1;
        for (long r = 0; r < (n[i] > 0 ? n[i] : -n[i]); ++r)
            cur = apply_gen(static_cast<int>(i), sign, cur);
    }
    return cur;
}

std::optional<CElem> ComposedModule::divide_un_minus_one(const CElem& h, const ExponentVector& n) {
    switch (shape_) {
        case ComposedShape::cyclic: {
            const Presentation& pres = engine_->pres();
            const FieldElement c = fe_sub(power_product(n, pres), fe_one(pres), pres);
            if (fe_is_zero(c)) return std::nullopt;
            FieldElement m = fe_div(leaf_of(h), c, pres);
            if (!engine_->in_ring(m)) return std::nullopt;
            return celem_leaf(std::move(m));
        }
        case ComposedShape::direct_sum: {
            const auto& t = tuple_of(h);
            std::vector<CElem> out;
            out.reserve(parts_.size());
            for (size_t k = 0; k < parts_.size(); ++k) {
                auto piece = parts_[k]->divide_un_minus_one(t[k], n);
                if (!piece) return std::nullopt;
                out.push_back(std::move(*piece));
            }
            return celem_tuple(std::move(out));
        }
        case ComposedShape::extension: {
            const Presentation& pres = sub_->engine_->pres();
            const Presentation& pq = quot_->engine_->pres();
            const FieldElement cq = fe_sub(power_product(n, pq), fe_one(pq), pq);
            const FieldElement cl = fe_sub(power_product(n, pres), fe_one(pres), pres);
            if (fe_is_zero(cq) || fe_is_zero(cl)) return std::nullopt;
            const FieldElement& hl = leaf_of(tuple_of(h)[0]);
            const FieldElement& hq = leaf_of(tuple_of(h)[1]);
            FieldElement q0 = fe_div(hq, cq, pres);
            if (!quot_->engine_->in_ring(q0)) return std::nullopt;
            // gamma_n is the sub-component of u^n (0, 1)
            const CElem unit = celem_tuple({sub_->zero(), celem_leaf(fe_one(pq))});
            const FieldElement gamma_n = leaf_of(tuple_of(apply(n, unit))[0]);
            FieldElement l0 =
                fe_div(fe_sub(hl, fe_mul(gamma_n, q0, pres), pres), cl, pres);
            if (!sub_->engine_->in_ring(l0)) return std::nullopt;
            return celem_tuple({celem_leaf(std::move(l0)), celem_leaf(std::move(q0))});
        }
        case ComposedShape::restriction: {
            auto m = parent_->divide_un_minus_one(h, n);
            if (!m || !pred_(*m)) return std::nullopt;
            return m;
        }
    }
    return std::nullopt;
}

void ComposedModule::check_invariant(const CElem& e) {
    for (int i = 0; i < dimension(); ++i)
        for (int sign : {1, -1})
            if (!pred_(parent_->apply_gen(i, sign, e)))
                throw_config("PredicateNotInvariant",
                             "restriction predicate is not action-invariant at " +
                                 element_string(e));
}

std::vector<CElem> ComposedModule::enumerate_H(const Rat& theta, size_t cap) {
    std::set<CElem> found;
    switch (shape_) {
        case ComposedShape::cyclic: {
            const ExhaustiveSet es = enumerate_Hk(*engine_, theta, cap);
            for (const FieldElement& a : es.elements) found.insert(celem_leaf(a));
            break;
        }
        case ComposedShape::direct_sum: {
            std::vector<std::vector<CElem>> lists;
            lists.reserve(parts_.size());
            Int count(1);
            for (const auto& p : parts_) {
                lists.push_back(p->enumerate_H(theta, cap));
                count *= Int(static_cast<unsigned long>(lists.back().size()) + 1);
            }
            Int total = count - 1;
            if (total > Int(static_cast<unsigned long>(cap)))
                throw_cap("SetTooLarge", "composed sum holds " + total.get_str() + " elements");
            std::vector<size_t> idx(parts_.size(), 0);
            while (true) {
                bool all_zero = true;
                for (size_t i = 0; i < idx.size(); ++i)
                    if (idx[i] != 0) all_zero = false;
                if (!all_zero) {
                    std::vector<CElem> parts;
                    parts.reserve(parts_.size());
                    for (size_t i = 0; i < idx.size(); ++i)
                        parts.push_back(idx[i] == 0 ? parts_[i]->zero()
                                                    : lists[i][idx[i] - 1]);
                    found.insert(celem_tuple(std::move(parts)));
                }
                size_t pos = 0;
                while (pos < idx.size()) {
                    if (idx[pos] < lists[pos].size()) {
                        ++idx[pos];
                        break;
                    }
                    idx[pos] = 0;
                    ++pos;
                }
                if (pos == idx.size()) break;
            }
            break;
        }
        case ComposedShape::extension: {
            const std::vector<CElem> hs = sub_->enumerate_H(theta, cap);
            const std::vector<CElem> hq = quot_->enumerate_H(theta, cap);
            const Int count =
                Int(static_cast<unsigned long>(hs.size()) + 1) *
                    Int(static_cast<unsigned long>(hq.size()) + 1) -
                1;
            if (count > Int(static_cast<unsigned long>(cap)))
                throw_cap("SetTooLarge",
                          "composed extension holds " + count.get_str() + " elements");
            const Presentation& pres = sub_->engine_->pres();
            std::vector<CElem> quots = hq;
            quots.insert(quots.begin(), quot_->zero());
            for (const CElem& b : quots) {
                const FieldElement& bq = leaf_of(b);
                FieldElement rho = fe_zero(pres);
                if (reps_table_ && !fe_is_zero(bq)) {
                    const auto it = reps_.find(bq);
                    if (it == reps_.end())
                        throw_config("RepsNotSection",
                                     "representative table misses coset " +
                                         fe_to_string(bq, pres));
                    rho = it->second;
                }
                for (size_t hi = 0; hi <= hs.size(); ++hi) {
                    const FieldElement l =
                        hi == 0 ? rho : fe_add(rho, leaf_of(hs[hi - 1]), pres);
                    if (fe_is_zero(l) && fe_is_zero(bq)) continue;
                    found.insert(celem_tuple({celem_leaf(l), celem_leaf(bq)}));
                }
            }
            break;
        }
        case ComposedShape::restriction: {
            for (const CElem& e : parent_->enumerate_H(theta, cap)) {
                if (!pred_(e)) continue;
                check_invariant(e);
                found.insert(e);
            }
            break;
        }
    }
    return {found.begin(), found.end()};
}

RealInterval ComposedModule::rate_B(long precision, const Rat& rel_tol) {
    switch (shape_) {
        case ComposedShape::cyclic: {
            const SeparationData sd = separation_constant(*engine_, precision, rel_tol);
            return RealInterval(Rat(2)) / sd.c;
        }
        case ComposedShape::direct_sum: {
            RealInterval best = parts_[0]->rate_B(precision, rel_tol);
            for (size_t i = 1; i < parts_.size(); ++i)
                best = max_iv(best, parts_[i]->rate_B(precision, rel_tol));
            return best;
        }
        case ComposedShape::extension:
            return max_iv(sub_->rate_B(precision, rel_tol), quot_->rate_B(precision, rel_tol));
        case ComposedShape::restriction:
            return parent_->rate_B(precision, rel_tol);
    }
    return RealInterval();
}

std::string ComposedModule::element_string(const CElem& e) const {
    switch (shape_) {
        case ComposedShape::cyclic:
            return fe_to_string(leaf_of(e), engine_->pres());
        case ComposedShape::direct_sum: {
            const auto& t = tuple_of(e);
            std::string s = "(";
            for (size_t i = 0; i < parts_.size(); ++i) {
                if (i > 0) s += ", ";
                s += parts_[i]->element_string(t[i]);
            }
            return s + ")";
        }
        case ComposedShape::extension: {
            const auto& t = tuple_of(e);
            return "(" + sub_->element_string(t[0]) + ", " + quot_->element_string(t[1]) + ")";
        }
        case ComposedShape::restriction:
            return parent_->element_string(e);
    }
    return "?";
}

PlaceEngine& ComposedModule::leaf_engine() {
    if (shape_ != ComposedShape::cyclic)
        throw_config("ElementShape", "only cyclic pieces expose a place engine");
    return *engine_;
}

ComposedCheck composed_property_I(ComposedModule& m, const std::vector<CElem>& h,
                                  const ExponentVector& n) {
    if (is_zero(n)) throw_config("ZeroExponent", "property checks need n != 0");
    const std::set<CElem> members(h.begin(), h.end());
    for (const CElem& e : h) {
        if (members.count(m.apply(n, e))) return {false, e};
    }
    return {};
}

ComposedCheck composed_property_II(ComposedModule& m, const std::vector<CElem>& h,
                                   const ExponentVector& n, IIVariant variant) {
    if (is_zero(n)) throw_config("ZeroExponent", "property checks need n != 0");
    if (variant == IIVariant::literal) {
        const std::set<CElem> members(h.begin(), h.end());
        for (const CElem& e : h) {
            const CElem img = m.subtract(m.apply(n, e), e);
            if (!celem_is_zero(img) && members.count(img)) return {false, e};
        }
        return {};
    }
    for (const CElem& e : h) {
        if (m.divide_un_minus_one(e, n)) return {false, e};
    }
    return {};
}

ComposedRadius composed_scan_radius(ComposedModule& m, const std::vector<CElem>& h, long k,
                                    const Rat& theta, ScanProperty prop,
                                    const Rat& window_radius) {
    if (window_radius < 1) throw_config("WindowRange", "window radius must be >= 1");
    if (theta <= 1) throw_config("ThetaRange", "scans need theta > 1");
    Int bound2;
    {
        const Rat r2 = window_radius * window_radius;
        mpz_fdiv_q(bound2.get_mpz_t(), r2.get_num().get_mpz_t(), r2.get_den().get_mpz_t());
    }
    const auto pts = shell_points(m.dimension(), bound2);

    ComposedRadius rep;
    rep.k = k;
    rep.theta = theta;
    rep.property = prop;
    rep.window_radius = window_radius;
    if (pts.empty()) return rep;
    const Int outer = exp_norm_sq(pts.back());

    for (const ExponentVector& n : pts) {
        ComposedCheck c;
        switch (prop) {
            case ScanProperty::property_I:
                c = composed_property_I(m, h, n);
                break;
            case ScanProperty::property_II_literal:
                c = composed_property_II(m, h, n, IIVariant::literal);
                break;
            case ScanProperty::property_II_strong:
                c = composed_property_II(m, h, n, IIVariant::strong);
                break;
        }
        if (c.holds) continue;
        const Int n2 = exp_norm_sq(n);
        if (!rep.has_violation || n2 > rep.last_violation_norm_sq) {
            rep.has_violation = true;
            rep.last_violation_norm_sq = n2;
            rep.witness_n = n;
            rep.witness = c.witness;
        }
        if (n2 == outer) rep.boundary_hit = true;
    }
    return rep;
}

std::function<bool(const CElem&)> predicate_all() {
    return [](const CElem&) { return true; };
}

std::function<bool(const CElem&)> predicate_zero() {
    return [](const CElem& e) { return celem_is_zero(e); };
}

std::function<bool(const CElem&)> predicate_components_zero(std::vector<size_t> indices) {
    return [indices = std::move(indices)](const CElem& e) {
        if (e.v.index() != 1) return false;
        const auto& t = std::get<std::vector<CElem>>(e.v);
        for (size_t i : indices) {
            if (i >= t.size()) return false;
            if (!celem_is_zero(t[i])) return false;
        }
        return true;
    };
}

}  // namespace rankone
