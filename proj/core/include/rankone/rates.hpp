#pragma once

#include <utility>
#include <vector>

#include "rankone/interval.hpp"

namespace rankone {

// B * log(theta): the radius bound matching Property I. B > 0, theta > 0.
RealInterval phi_rate(const RealInterval& B, const Rat& theta, long prec);

// max{C1, ((sigma+1)*log(theta) - log(A^sigma / 2)) / C2}: the radius bound
// matching Property II. sigma >= 1; A, C1, C2 > 0.
RealInterval psi_rate(int sigma, const Rat& A, const Rat& C1, const Rat& C2, const Rat& theta,
                      long prec);

struct FitResult {
    RealInterval slope, intercept, residual_sum_sq;
    size_t points = 0;
};

// Ordinary least squares of y against x; every moment is tracked as an
// interval, so the outputs enclose the exact fit of any selection of point
// values from the input boxes.
FitResult ols_fit(const std::vector<std::pair<RealInterval, RealInterval>>& xy);

}  // namespace rankone
