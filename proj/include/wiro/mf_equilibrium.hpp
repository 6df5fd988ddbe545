#pragma once

#include <utility>
#include <vector>

#include "wiro/measures.hpp"

namespace wiro {

/// Parameters of the mean-field soft-core model: repulsion strength beta
/// (negative values give the antiferromagnetic model) and a-priori
/// measure alpha.
struct ModelParams {
    double beta = 0.0;
    SpinMeasure alpha = SpinMeasure::uniform();
};

/// Global maximizers of the rate-function supremum, in (x,m) coordinates.
struct MaximizerSet {
    std::vector<OccCoords> points;
    double value = 0.0;        // attained supremum
    double gap_to_next = 0.0;  // value gap to the best non-global local max
};

struct MfOptions {
    int grid = 400;            // coarse scan resolution in x (2*grid+1 in m)
    double refine_tol = 1e-10; // argument tolerance of Newton refinement
    double tol_deg = 1e-9;     // value tolerance for degenerate maximizers
    double sep_min = 1e-4;     // minimal (x,m)-separation between reported points
};

/// Variational objective -beta nu(1) nu(-1) - I(nu|alpha) at nu(x,m).
double mf_objective(double x, double m, const ModelParams& params);

/// Pressure as a supremum of mf_objective over the simplex.
double pressure(const ModelParams& params, const MfOptions& opt = {});

/// Pressure through the decomposed (x,m) formula: occupation part plus an
/// Ising part at occupation-dependent temperature. Requires strictly
/// positive alpha.
double pressure_decomposed(const ModelParams& params, const MfOptions& opt = {});

/// All global maximizers of mf_objective.
MaximizerSet maximizers(const ModelParams& params, const MfOptions& opt = {});

/// Limiting single-site kernel gamma(.|nu): weight alpha(s) e^{-beta nu(-s)}
/// for s = +-1 and alpha(0) for s = 0, normalized.
SpinMeasure limiting_kernel(const SpinMeasure& nu, const ModelParams& params);

/// Critical repulsion strength 2 + e alpha(0)/alpha(1) of the symmetric model.
double beta_critical(const SpinMeasure& alpha);

/// Closed-form (beta, x) with maximizer (x, +-m) for given 0 < |m| < 1.
struct Parametrization {
    double beta = 0.0;
    double x = 0.0;
};
Parametrization parametrize(double m, const SpinMeasure& alpha);

/// Nonnegative maximizer magnetization m(beta, h) at the symmetric-hole
/// a-priori measure with hole mass alpha0 tilted by external field h.
double magnetization(double beta, double h, double alpha0, const MfOptions& opt = {});

/// Log-log fitted critical exponents: m(beta,0) ~ (beta-beta_c)^exp_beta and
/// m(beta_c,h) ~ h^exp_h. Requires symmetric alpha.
std::pair<double, double> critical_exponents(const SpinMeasure& alpha);

/// One detected first-order jump of the occupation density along beta.
struct AntiferroRow {
    double alpha0 = 0.0;
    double beta_line = 0.0;
    double x_low = 0.0;
    double x_high = 0.0;
};

/// Scan of the antiferromagnetic (beta < 0) first-order line: for each
/// symmetric alpha(0) in the ladder, the beta at which the maximizing x
/// jumps by more than x_jump_min, with m* = 0 on both sides.
std::vector<AntiferroRow> antiferro_scan(const std::vector<double>& alpha0_grid,
                                         const std::vector<double>& beta_grid,
                                         double x_jump_min = 0.05,
                                         const MfOptions& opt = {});

}  // namespace wiro
