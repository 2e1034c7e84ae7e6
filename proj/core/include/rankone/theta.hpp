#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "rankone/errors.hpp"
#include "rankone/intutil.hpp"

namespace rankone {

// Strictly increasing unbounded threshold schedule: geometric base^k, or a
// user list (finite, so queries past its end are rejected).
struct ThetaSchedule {
    bool geometric = true;
    Rat base;
    std::vector<Rat> list;

    static ThetaSchedule geometric_base(Rat b) {
        if (b <= 1) throw_config("ScheduleBase", "geometric base must exceed 1");
        ThetaSchedule s;
        s.geometric = true;
        s.base = std::move(b);
        return s;
    }

    static ThetaSchedule user(std::vector<Rat> values) {
        if (values.empty()) throw_config("ScheduleList", "user schedule must be nonempty");
        for (size_t i = 0; i < values.size(); ++i) {
            if (values[i] <= 0) throw_config("ScheduleList", "thresholds must be positive");
            if (i > 0 && values[i] <= values[i - 1])
                throw_config("ScheduleList", "thresholds must be strictly increasing");
        }
        ThetaSchedule s;
        s.geometric = false;
        s.list = std::move(values);
        return s;
    }

    // theta(k), k >= 1.
    Rat value(long k) const {
        if (k < 1) throw_config("ScheduleRange", "schedule index must be >= 1");
        if (geometric) return rat_pow(base, k);
        if (static_cast<size_t>(k) > list.size())
            throw_config("ScheduleRange", "index past the end of the user schedule");
        return list[static_cast<size_t>(k - 1)];
    }
};

}  // namespace rankone
