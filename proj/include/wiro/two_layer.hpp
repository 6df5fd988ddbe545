#pragma once

#include <string>
#include <vector>

#include "wiro/mf_equilibrium.hpp"
#include "wiro/measures.hpp"

namespace wiro {

/// Independent spin-flip semigroup at time t: holes fixed, occupied spins
/// flip with probability (1 - e^{-2t})/2.
struct FlipKernel {
    double t = 0.0;
    double m[3][3] = {};  // row: time-0 symbol + 1, col: time-t symbol + 1

    double operator()(int s0, int st) const { return m[s0 + 1][st + 1]; }
};

FlipKernel flip_kernel(double t);

/// Joint single-site law of (time-0, time-t) symbols.
struct JointMeasure {
    double q[3][3] = {};  // indexed like FlipKernel

    double& at(int s0, int st) { return q[s0 + 1][st + 1]; }
    double at(int s0, int st) const { return q[s0 + 1][st + 1]; }
    SpinMeasure marginal0() const;
    SpinMeasure marginal_t() const;
    bool valid(double tol = 1e-12) const;
};

/// Product coupling nu0(s) p_t(s, s') of a first-layer law with the kernel.
JointMeasure product_coupling(const SpinMeasure& nu0, const FlipKernel& kernel);

/// Two-layer rate beta q0(1) q0(-1) + H(q | alpha (x) p_t) + const(beta, alpha),
/// normalized so its unconstrained minimum over q is 0.
double joint_rate(const JointMeasure& q, const ModelParams& params, double t);

struct ConstrainedOptions {
    int grid = 64;            // coarse scan per free coupling coordinate
    double refine_tol = 1e-12;
    double eps_gap = 1e-8;    // value degeneracy threshold for global minima
    double delta_sep = 1e-3;  // separation threshold in first-layer magnetization
};

/// All global minimizers of joint_rate over couplings with second marginal
/// nu_t, reported by their first marginals. `value` is the minimal rate and
/// gap_to_next the value gap to the best non-global local minimum.
MaximizerSet constrained_min(const SpinMeasure& nu_t, const ModelParams& params,
                             double t, const ConstrainedOptions& opt = {});

/// One bad point: a conditioning at which the constrained first-layer
/// problem has two global minimizers.
struct BadPoint {
    double x = 1.0;          // occupation density of the conditioning
    double b = 0.0;          // its occupied magnetization
    double gap = 0.0;        // residual rate gap between the two minimizers
    double separation = 0.0; // distance between their minimizing magnetizations
    double a_lo = 0.0;       // the two minimizing first-layer magnetizations
    double a_hi = 0.0;
    int branch_id = 0;       // 0: b = 0 stem, 1: b > 0 arm, 2: b < 0 arm

    SpinMeasure nu() const { return from_occ_coords({x, b, false}); }
};

struct BadSet {
    std::vector<BadPoint> points;
    std::string shape;  // empty / origin / symmetric_pair / segment / y_shape / other

    bool empty() const { return points.empty(); }
};

struct BadSetOptions {
    int grid = 400;           // scan resolution (per axis)
    double eps_gap = 1e-8;
    double delta_sep = 1e-3;
};

/// Bad magnetizations of the time-evolved Curie-Weiss Ising model with
/// interaction -beta_I a^2/2, uniform spin a-priori measure.
BadSet ising_bad_set(double beta_I, double t, const BadSetOptions& opt = {});

/// Bad empirical measures of the time-evolved mean-field model, detected by
/// constrained-minimizer multiplicity on a simplex scan. Symmetric alpha only.
BadSet wiro_bad_set(const ModelParams& params, double t, const BadSetOptions& opt = {});

/// Time-t image of the equilibrium maximizers under the flip semigroup.
std::vector<SpinMeasure> typical_evolution(const ModelParams& params, double t,
                                           const MfOptions& opt = {});

struct AtypicalityReport {
    bool atypical = true;     // every typical measure is far from the bad set
    double min_distance = 0;  // (x,m)-Euclidean distance, +inf for empty bad set
};

AtypicalityReport atypicality_check(const ModelParams& params, double t,
                                    const BadSetOptions& opt = {});

}  // namespace wiro
