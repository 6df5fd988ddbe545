#pragma once

#include <cmath>
#include <stdexcept>

namespace wiro {

// Global tolerance for set-membership / equality decisions on measures,
// in total-variation distance.
inline constexpr double kTvTol = 1e-9;

// Floor used only to guard exact zeros inside logs; never shifts values
// above 1e-12.
inline constexpr double kLogFloor = 1e-300;

/// Probability measure on the three-point alphabet {-1, 0, +1}.
struct SpinMeasure {
    double p_minus = 0.0;
    double p_zero = 1.0;
    double p_plus = 0.0;

    static SpinMeasure uniform() { return {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}; }

    /// Symmetric measure with the given hole mass: (s/2, 1-s... ) with
    /// equal spin weights.
    static SpinMeasure symmetric(double hole_mass) {
        const double s = 0.5 * (1.0 - hole_mass);
        return {s, hole_mass, s};
    }

    double operator[](int symbol) const {
        switch (symbol) {
            case -1: return p_minus;
            case 0: return p_zero;
            case 1: return p_plus;
        }
        throw std::invalid_argument("SpinMeasure: symbol must be -1, 0 or +1");
    }

    bool valid(double tol = 1e-12) const {
        return p_minus >= 0.0 && p_zero >= 0.0 && p_plus >= 0.0 &&
               std::fabs(p_minus + p_zero + p_plus - 1.0) <= tol;
    }

    bool symmetric_spins(double tol = 1e-12) const {
        return std::fabs(p_plus - p_minus) <= tol;
    }

    double tv_distance(const SpinMeasure& other) const {
        return 0.5 * (std::fabs(p_minus - other.p_minus) +
                      std::fabs(p_zero - other.p_zero) +
                      std::fabs(p_plus - other.p_plus));
    }

    double l2_distance(const SpinMeasure& other) const {
        const double a = p_minus - other.p_minus;
        const double b = p_zero - other.p_zero;
        const double c = p_plus - other.p_plus;
        return std::sqrt(a * a + b * b + c * c);
    }
};

/// Occupation-density / magnetization coordinates for a SpinMeasure:
/// nu = (x/2 (1-m), 1-x, x/2 (1+m)).
struct OccCoords {
    double x = 0.0;  // occupation density in [0,1]
    double m = 0.0;  // magnetization on occupied sites in [-1,1]
    bool degenerate = false;  // set when x == 0 (m fixed to 0 by convention)
};

/// Field coordinates of an a-priori measure alpha:
/// h = 1/2 log(alpha(1)/alpha(-1)), l = log((1-alpha(0))/alpha(0)).
struct FieldCoords {
    double h = 0.0;
    double l = 0.0;
};

OccCoords to_occ_coords(const SpinMeasure& nu);
SpinMeasure from_occ_coords(const OccCoords& c);
FieldCoords field_coords(const SpinMeasure& alpha);

/// Relative entropy sum_s nu(s) log(nu(s)/alpha(s)), with 0 log 0 = 0.
/// Throws std::domain_error if nu puts mass where alpha has none.
double relative_entropy(const SpinMeasure& nu, const SpinMeasure& alpha);

/// Spin entropy I(m) = (1-m)/2 log((1-m)/2) + (1+m)/2 log((1+m)/2).
double spin_entropy(double m);

/// d/dm spin_entropy = atanh(m).
double spin_entropy_prime(double m);

/// Occupation entropy J(x) = (1-x) log(3(1-x)) + x log(3x/2).
double occ_entropy(double x);

}  // namespace wiro
