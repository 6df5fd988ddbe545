#pragma once

#include <cstdint>
#include <vector>

namespace wiro {

struct MarkedPoint {
    double x = 0.0;
    double y = 0.0;
    int mark = 1;  // +-1
};

/// Two-color point cloud in [0,S]^2 with disc radius a.
struct MarkedCloud {
    std::vector<MarkedPoint> points;
    double radius = 0.5;
    double box_side = 1.0;

    /// No +/- pair at interspecies distance < 2a.
    bool hardcore_valid() const;
};

/// Two independent homogeneous Poisson point processes with the given
/// intensities; deterministic given seed.
MarkedCloud sample_poisson(double lambda_plus, double lambda_minus, double a,
                           double box_side, std::uint64_t seed);

struct McmcOptions {
    double p_birth = 0.4;
    double p_death = 0.4;  // remainder: single-mark flip
};

/// Birth-death-flip Metropolis chain targeting the hard-core two-color
/// measure (Poisson reference, empty boundary); every state is valid.
MarkedCloud wr_mcmc(double lambda_plus, double lambda_minus, double a, double box_side,
                    long steps, std::uint64_t seed, const McmcOptions& opt = {});

struct ClusterDecomposition {
    std::vector<int> cluster_id;  // per point, consecutive ids from 0
    std::vector<int> sizes;       // per cluster id
    bool spanning = false;        // some cluster touches both side walls
};

/// Union-find over pairs of points at distance < 2a (grid-bucketed).
ClusterDecomposition percolation(const MarkedCloud& cloud);

/// True iff every overlap cluster carries one sign; throws for clouds
/// violating the hard-core constraint.
bool sign_rigidity_check(const MarkedCloud& cloud);

/// Reentrance time (1/2) log((l+ + l-)/(l+ - l-)); +infinity at l+ = l-.
double reentrance_time(double lambda_plus, double lambda_minus);

/// Marks flipped independently with probability (1-e^{-2t})/2; positions
/// fixed. The result is generally no longer hard-core valid.
MarkedCloud evolve_cloud(const MarkedCloud& cloud, double t, std::uint64_t seed);

}  // namespace wiro
