#pragma once

#include <vector>

#include "wiro/measures.hpp"

namespace wiro {

/// Boundary law normalized to hole component 1; stored in log scale would
/// overflow less, but the public values are the plain positive components.
struct BoundaryLaw {
    double l_minus = 1.0;
    double l_plus = 1.0;

    bool valid() const {
        return l_minus > 0.0 && l_plus > 0.0 && std::isfinite(l_minus) && std::isfinite(l_plus);
    }
};

struct TreeParams {
    int k = 2;  // offspring number; vertex degree k+1
    double beta = 0.0;
    SpinMeasure alpha = SpinMeasure::uniform();
};

/// One step of the boundary-law recursion
/// l'(s) = (alpha(s)/alpha(0)) * [ sum_{s'} e^{-beta 1{ss'=-1}} l(s') /
///                                 sum_{s'} l(s') ]^k,  l(0) = 1.
BoundaryLaw recursion_step(const BoundaryLaw& l, const TreeParams& params);

/// All fixed points of the recursion: multi-start damped iteration in log
/// scale plus Newton polish, deduplicated at 1e-8.
std::vector<BoundaryLaw> find_fixed_points(const TreeParams& params);

/// Hole probability at the root of the (k+1)-regular tree under the
/// splitting Gibbs measure described by l.
double hole_density(const BoundaryLaw& l, const TreeParams& params);

struct CriticalRow {
    double alpha0 = 0.0;
    double beta_crit = 0.0;
    int k = 0;
};

/// Per symmetric alpha(0), the beta where the fixed-point count changes,
/// bisected to 1e-4 between beta_lo (unique) and beta_hi (multiple).
std::vector<CriticalRow> critical_scan(int k, const std::vector<double>& alpha0_grid,
                                       double beta_lo = 0.0, double beta_hi = 10.0);

}  // namespace wiro
