#include "rankone/rates.hpp"

#include "rankone/errors.hpp"

namespace rankone {

RealInterval phi_rate(const RealInterval& B, const Rat& theta, long prec) {
    if (!(B.lo > 0)) throw_config("NonpositiveRate", "rate constant B must be positive");
    if (theta <= 0) throw_config("ThetaRange", "threshold must be positive");
    return B * log_enclosure(theta, prec);
}

RealInterval psi_rate(int sigma, const Rat& A, const Rat& C1, const Rat& C2, const Rat& theta,
                      long prec) {
    if (sigma < 1) throw_config("NonpositiveRate", "sigma must be at least 1");
    if (A <= 0 || C1 <= 0 || C2 <= 0)
        throw_config("NonpositiveRate", "A, C1, C2 must be positive");
    if (theta <= 0) throw_config("ThetaRange", "threshold must be positive");
    const RealInterval log_theta = log_enclosure(theta, prec);
    const RealInterval log_a = log_enclosure(rat_pow(A, sigma) / 2, prec);
    const RealInterval term = (Rat(1) / C2) * (Rat(sigma + 1) * log_theta - log_a);
    return max_iv(RealInterval(C1), term);
}

FitResult ols_fit(const std::vector<std::pair<RealInterval, RealInterval>>& xy) {
    if (xy.size() < 2) throw_config("FitUnderdetermined", "need at least two points");
    const Rat n(static_cast<unsigned long>(xy.size()));
    RealInterval sx, sy, sxx, sxy;
    for (const auto& [x, y] : xy) {
        sx = sx + x;
        sy = sy + y;
        sxx = sxx + x * x;
        sxy = sxy + x * y;
    }
    const RealInterval denom = n * sxx - sx * sx;
    if (denom.contains_zero())
        throw_precision("FitDegenerate", "abscissas do not separate (zero variance)");
    FitResult r;
    r.points = xy.size();
    r.slope = (n * sxy - sx * sy) / denom;
    r.intercept = (Rat(1) / n) * (sy - r.slope * sx);
    for (const auto& [x, y] : xy) {
        const RealInterval res = y - r.intercept - r.slope * x;
        r.residual_sum_sq = r.residual_sum_sq + res * res;
    }
    return r;
}

}  // namespace rankone
