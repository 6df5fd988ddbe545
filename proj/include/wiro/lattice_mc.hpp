#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "wiro/dobrushin.hpp"
#include "wiro/mf_equilibrium.hpp"

namespace wiro {

enum class Boundary { all_plus, all_minus, all_hole, free_, explicit_ring };

/// Finite-box spin configuration, d in {1,2}, row-major over [0,L)^d.
/// The explicit ring lists outside neighbor values in the fixed order:
/// d=2: (x,-1) x=0..L-1, (x,L) x=0..L-1, (-1,y) y=0..L-1, (L,y) y=0..L-1;
/// d=1: (-1), (L).
struct LatticeConfig {
    int L = 0;
    int d = 2;
    std::vector<int> spins;
    Boundary boundary = Boundary::all_hole;
    std::vector<int> ring;

    int size() const { return d == 1 ? L : L * L; }
    int at(int x, int y = 0) const { return spins[d == 1 ? x : x * L + y]; }

    /// Symbol counts of the neighbors of a site (boundary included; free
    /// boundary contributes nothing).
    NeighborContext context(int site) const;

    /// No adjacent +/- pair, boundary included.
    bool hardcore_valid() const;
};

LatticeConfig make_config(int L, int d, Boundary boundary, std::vector<int> ring = {});

struct ChainOptions {
    int burn_in = 1000;  // sweeps before the first sample
    int thin = 10;       // sweeps between samples
};

/// One raster-order heat-bath sweep with the static specification kernel.
void heat_bath_sweep(LatticeConfig& config, const ModelParams& params, bool hardcore,
                     std::mt19937_64& rng);

/// Configuration after `sweeps` full heat-bath sweeps from the all-hole
/// start; deterministic given seed.
LatticeConfig gibbs_sample(const ModelParams& params, int L, int d, Boundary boundary,
                           bool hardcore, int sweeps, std::uint64_t seed,
                           std::vector<int> ring = {});

/// Runs one chain and hands every retained sample to the sink.
void gibbs_chain(const ModelParams& params, int L, int d, Boundary boundary, bool hardcore,
                 int n_samples, std::uint64_t seed,
                 const std::function<void(const LatticeConfig&)>& sink,
                 const ChainOptions& opt = {}, std::vector<int> ring = {});

/// Independent spin flips with probability (1-e^{-2t})/2; holes fixed.
LatticeConfig evolve(const LatticeConfig& config, double t, std::uint64_t seed);

struct CondEstimate {
    SpinMeasure probabilities;
    double stderr_minus = 0.0;
    double stderr_zero = 0.0;
    double stderr_plus = 0.0;
    long n_samples = 0;
};

/// Conditional law of the time-t symbol at the box center given the time-t
/// configuration everywhere else (eta; its center value is ignored) and the
/// boundary stored in eta. Sampled by a heat-bath chain for the first-layer
/// measure (static weights tilted per site by p_t(., eta_i)); the estimate
/// is the chain average of p_t(omega_center, .).
CondEstimate conditional_estimate(const ModelParams& params, double t,
                                  const LatticeConfig& eta, bool hardcore, int n_samples,
                                  std::uint64_t seed, const ChainOptions& opt = {});

/// Time-t configuration for the checkerboard experiment: alternating +- on
/// the Chebyshev annulus of radius <= r around the center of an L x L box,
/// constant far_sign outside it, far_sign boundary ring.
LatticeConfig checkerboard_eta(int L, int radius, int far_sign);

/// Exact origin marginal by full enumeration; at most 12 sites.
SpinMeasure exact_small_volume(const ModelParams& params, int L, int d, Boundary boundary,
                               bool hardcore, std::vector<int> ring = {});

}  // namespace wiro
