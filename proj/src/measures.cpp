#include "wiro/measures.hpp"

#include <algorithm>

namespace wiro {

OccCoords to_occ_coords(const SpinMeasure& nu) {
    OccCoords c;
    c.x = 1.0 - nu.p_zero;
    if (c.x > 0.0) {
        c.m = (nu.p_plus - nu.p_minus) / c.x;
        c.m = std::clamp(c.m, -1.0, 1.0);
    } else {
        c.x = 0.0;
        c.m = 0.0;
        c.degenerate = true;
    }
    return c;
}

SpinMeasure from_occ_coords(const OccCoords& c) {
    SpinMeasure nu;
    nu.p_minus = 0.5 * c.x * (1.0 - c.m);
    nu.p_zero = 1.0 - c.x;
    nu.p_plus = 0.5 * c.x * (1.0 + c.m);
    return nu;
}

FieldCoords field_coords(const SpinMeasure& alpha) {
    if (alpha.p_minus <= 0.0 || alpha.p_zero <= 0.0 || alpha.p_plus <= 0.0) {
        throw std::domain_error("field_coords: alpha must have strictly positive components");
    }
    FieldCoords f;
    f.h = 0.5 * std::log(alpha.p_plus / alpha.p_minus);
    f.l = std::log((1.0 - alpha.p_zero) / alpha.p_zero);
    return f;
}

double relative_entropy(const SpinMeasure& nu, const SpinMeasure& alpha) {
    double s = 0.0;
    const double n[3] = {nu.p_minus, nu.p_zero, nu.p_plus};
    const double a[3] = {alpha.p_minus, alpha.p_zero, alpha.p_plus};
    for (int i = 0; i < 3; ++i) {
        if (n[i] > 0.0) {
            if (a[i] <= 0.0) {
                throw std::domain_error("relative_entropy: nu not absolutely continuous w.r.t. alpha");
            }
            s += n[i] * std::log(n[i] / a[i]);
        }
    }
    return std::max(s, 0.0);
}

double spin_entropy(double m) {
    if (m < -1.0 || m > 1.0) throw std::domain_error("spin_entropy: |m| must be <= 1");
    const double pm = 0.5 * (1.0 - m);
    const double pp = 0.5 * (1.0 + m);
    double s = 0.0;
    if (pm > 0.0) s += pm * std::log(std::max(pm, kLogFloor));
    if (pp > 0.0) s += pp * std::log(std::max(pp, kLogFloor));
    return s;
}

double spin_entropy_prime(double m) {
    if (m <= -1.0 || m >= 1.0) throw std::domain_error("spin_entropy_prime: |m| must be < 1");
    return std::atanh(m);
}

double occ_entropy(double x) {
    if (x < 0.0 || x > 1.0) throw std::domain_error("occ_entropy: x must be in [0,1]");
    double s = 0.0;
    if (x < 1.0) s += (1.0 - x) * std::log(std::max(3.0 * (1.0 - x), kLogFloor));
    if (x > 0.0) s += x * std::log(std::max(1.5 * x, kLogFloor));
    return s;
}

}  // namespace wiro
