#pragma once

#include <utility>
#include <vector>

#include "wiro/mf_equilibrium.hpp"
#include "wiro/measures.hpp"

namespace wiro {

/// Neighborhood of a lattice site summarized by symbol counts; the kernels
/// depend on the neighbors only through these.
struct NeighborContext {
    int n_plus = 0;
    int n_minus = 0;
    int n_zero = 0;

    int degree() const { return n_plus + n_minus + n_zero; }
    NeighborContext with(int symbol) const;  // context extended by one neighbor
};

// sentinel: no end-conditioning (static model)
inline constexpr int kNoEta = 2;

/// Worst-case interdependence report: c = degree * C with C the maximal
/// total-variation sensitivity of the single-site kernel to one neighbor.
struct DobrushinReport {
    double c_value = 0.0;
    double max_entry = 0.0;  // C, the worst single-entry value
    bool satisfied = false;  // c_value < 1
    // witness attaining max_entry: remaining neighbors, the two values at
    // the varied site, and (first-layer only) the end conditioning
    NeighborContext context;
    int j_from = 0;
    int j_to = 0;
    int eta = kNoEta;
};

/// Single-site specification kernel given the neighbor counts. Soft-core:
/// opposite-sign neighbors suppressed by e^{-beta}; hard-core: forbidden.
SpinMeasure single_site_kernel(const NeighborContext& context, const ModelParams& params,
                               bool hardcore);

/// First-layer kernel: single_site_kernel tilted by p_t(., eta_i) at the
/// site's own future symbol eta_i.
SpinMeasure first_layer_kernel(const NeighborContext& context, const ModelParams& params,
                               double t, int eta_i, bool hardcore);

/// Dobrushin coefficient of the static model by exhaustive enumeration over
/// count triples of the other degree-1 neighbors and value pairs at j.
DobrushinReport dobrushin_coefficient(const ModelParams& params, int degree, bool hardcore);

/// Same for the time-evolved first-layer model; the sup additionally runs
/// over the end conditioning eta_i at the updated site.
DobrushinReport first_layer_dobrushin(const ModelParams& params, double t, int degree,
                                      bool hardcore);

struct RegionPoint {
    double alpha_plus = 0.0;
    double alpha_minus = 0.0;
    double c_value = 0.0;
    bool satisfied = false;
};

struct DobrushinRegion {
    std::vector<RegionPoint> points;                    // full grid scan
    std::vector<std::pair<double, double>> boundary;    // ordered polyline
};

/// Scan of the (alpha(1), alpha(-1)) simplex projection for the soft-core
/// model on Z^d (degree = 2d); boundary by sign change of the condition.
DobrushinRegion dobrushin_region(double beta, int degree, int grid);

}  // namespace wiro
