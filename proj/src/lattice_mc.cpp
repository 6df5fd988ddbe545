#include "wiro/lattice_mc.hpp"

#include <cmath>
#include <stdexcept>

#include "wiro/rng.hpp"
#include "wiro/two_layer.hpp"

namespace wiro {

namespace {

int center_site(int L, int d) { return d == 1 ? L / 2 : (L / 2) * L + L / 2; }

int sample_symbol(const SpinMeasure& k, std::mt19937_64& rng) {
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    if (u < k.p_minus) return -1;
    if (u < k.p_minus + k.p_zero) return 0;
    return 1;
}

SpinMeasure normalize3(double wm, double w0, double wp) {
    const double z = wm + w0 + wp;
    if (z <= 0.0) throw std::domain_error("lattice_mc: empty single-site support");
    return {wm / z, w0 / z, wp / z};
}

// per-site heat-bath weights of the first-layer chain: static kernel weights
// tilted by p_t(., eta_i); untilted at the estimated site
SpinMeasure tilted_kernel(const NeighborContext& ctx, const ModelParams& params,
                          bool hardcore, const FlipKernel& k, int eta_i) {
    const SpinMeasure& a = params.alpha;
    double wm, wp;
    if (hardcore) {
        wm = ctx.n_plus > 0 ? 0.0 : a.p_minus;
        wp = ctx.n_minus > 0 ? 0.0 : a.p_plus;
    } else {
        wm = a.p_minus * std::exp(-params.beta * ctx.n_plus);
        wp = a.p_plus * std::exp(-params.beta * ctx.n_minus);
    }
    return normalize3(wm * k(-1, eta_i), a.p_zero * k(0, eta_i), wp * k(1, eta_i));
}

}  // namespace

NeighborContext LatticeConfig::context(int site) const {
    NeighborContext ctx;
    auto add = [&](int symbol) {
        if (symbol == 1) {
            ++ctx.n_plus;
        } else if (symbol == -1) {
            ++ctx.n_minus;
        } else {
            ++ctx.n_zero;
        }
    };
    auto outside = [&](int ring_idx) {
        switch (boundary) {
            case Boundary::all_plus: add(1); break;
            case Boundary::all_minus: add(-1); break;
            case Boundary::all_hole: add(0); break;
            case Boundary::free_: break;
            case Boundary::explicit_ring: add(ring.at(ring_idx)); break;
        }
    };
    if (d == 1) {
        if (site > 0) add(spins[site - 1]); else outside(0);
        if (site < L - 1) add(spins[site + 1]); else outside(1);
        return ctx;
    }
    const int x = site / L, y = site % L;
    if (y > 0) add(spins[site - 1]); else outside(x);            // (x, -1)
    if (y < L - 1) add(spins[site + 1]); else outside(L + x);    // (x, L)
    if (x > 0) add(spins[site - L]); else outside(2 * L + y);    // (-1, y)
    if (x < L - 1) add(spins[site + L]); else outside(3 * L + y);  // (L, y)
    return ctx;
}

bool LatticeConfig::hardcore_valid() const {
    for (int i = 0; i < size(); ++i) {
        if (spins[i] == 0) continue;
        const NeighborContext ctx = context(i);
        if ((spins[i] == 1 && ctx.n_minus > 0) || (spins[i] == -1 && ctx.n_plus > 0)) {
            return false;
        }
    }
    return true;
}

LatticeConfig make_config(int L, int d, Boundary boundary, std::vector<int> ring) {
    if (L < 1 || (d != 1 && d != 2)) {
        throw std::invalid_argument("make_config: L >= 1 and d in {1,2} required");
    }
    LatticeConfig c;
    c.L = L;
    c.d = d;
    c.boundary = boundary;
    c.spins.assign(d == 1 ? L : L * L, 0);
    if (boundary == Boundary::explicit_ring) {
        const size_t need = d == 1 ? 2 : 4 * static_cast<size_t>(L);
        if (ring.size() != need) {
            throw std::invalid_argument("make_config: explicit ring has wrong length");
        }
        c.ring = std::move(ring);
    }
    return c;
}

void heat_bath_sweep(LatticeConfig& config, const ModelParams& params, bool hardcore,
                     std::mt19937_64& rng) {
    for (int i = 0; i < config.size(); ++i) {
        const SpinMeasure k = single_site_kernel(config.context(i), params, hardcore);
        config.spins[i] = sample_symbol(k, rng);
    }
}

LatticeConfig gibbs_sample(const ModelParams& params, int L, int d, Boundary boundary,
                           bool hardcore, int sweeps, std::uint64_t seed,
                           std::vector<int> ring) {
    LatticeConfig c = make_config(L, d, boundary, std::move(ring));
    std::mt19937_64 rng = make_rng(seed);
    for (int s = 0; s < sweeps; ++s) heat_bath_sweep(c, params, hardcore, rng);
    return c;
}

void gibbs_chain(const ModelParams& params, int L, int d, Boundary boundary, bool hardcore,
                 int n_samples, std::uint64_t seed,
                 const std::function<void(const LatticeConfig&)>& sink,
                 const ChainOptions& opt, std::vector<int> ring) {
    LatticeConfig c = make_config(L, d, boundary, std::move(ring));
    std::mt19937_64 rng = make_rng(seed);
    for (int s = 0; s < opt.burn_in; ++s) heat_bath_sweep(c, params, hardcore, rng);
    for (int n = 0; n < n_samples; ++n) {
        for (int s = 0; s < opt.thin; ++s) heat_bath_sweep(c, params, hardcore, rng);
        sink(c);
    }
}

LatticeConfig evolve(const LatticeConfig& config, double t, std::uint64_t seed) {
    if (!(t >= 0.0)) throw std::domain_error("evolve: t must be >= 0");
    const double po = 0.5 * (1.0 - std::exp(-2.0 * t));
    LatticeConfig out = config;
    std::mt19937_64 rng = make_rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int& s : out.spins) {
        if (s != 0 && unif(rng) < po) s = -s;
    }
    return out;
}

CondEstimate conditional_estimate(const ModelParams& params, double t,
                                  const LatticeConfig& eta, bool hardcore, int n_samples,
                                  std::uint64_t seed, const ChainOptions& opt) {
    if (n_samples < 1) throw std::invalid_argument("conditional_estimate: n_samples >= 1");
    const FlipKernel k = flip_kernel(t);
    const int c = center_site(eta.L, eta.d);

    LatticeConfig omega = eta;
    omega.spins[c] = 0;  // start consistent with the tilt support
    std::mt19937_64 rng = make_rng(seed);

    double mean[3] = {0, 0, 0}, m2[3] = {0, 0, 0};
    long n = 0;
    auto sweep_tilted = [&]() {
        for (int i = 0; i < omega.size(); ++i) {
            const NeighborContext ctx = omega.context(i);
            const SpinMeasure kern =
                i == c ? single_site_kernel(ctx, params, hardcore)
                       : tilted_kernel(ctx, params, hardcore, k, eta.spins[i]);
            omega.spins[i] = sample_symbol(kern, rng);
        }
    };
    for (int s = 0; s < opt.burn_in; ++s) sweep_tilted();
    for (int s = 0; s < n_samples; ++s) {
        for (int r = 0; r < opt.thin; ++r) sweep_tilted();
        const int w = omega.spins[c];
        const double row[3] = {k(w, -1), k(w, 0), k(w, 1)};
        ++n;
        for (int j = 0; j < 3; ++j) {
            const double d = row[j] - mean[j];
            mean[j] += d / n;
            m2[j] += d * (row[j] - mean[j]);
        }
    }
    CondEstimate est;
    est.probabilities = {mean[0], mean[1], mean[2]};
    est.stderr_minus = n > 1 ? std::sqrt(m2[0] / (n - 1) / n) : 0.0;
    est.stderr_zero = n > 1 ? std::sqrt(m2[1] / (n - 1) / n) : 0.0;
    est.stderr_plus = n > 1 ? std::sqrt(m2[2] / (n - 1) / n) : 0.0;
    est.n_samples = n;
    return est;
}

LatticeConfig checkerboard_eta(int L, int radius, int far_sign) {
    if (far_sign != 1 && far_sign != -1) {
        throw std::invalid_argument("checkerboard_eta: far_sign must be +-1");
    }
    LatticeConfig c = make_config(L, 2, far_sign == 1 ? Boundary::all_plus : Boundary::all_minus);
    const int cx = L / 2, cy = L / 2;
    for (int x = 0; x < L; ++x) {
        for (int y = 0; y < L; ++y) {
            const int cheb = std::max(std::abs(x - cx), std::abs(y - cy));
            int v;
            if (cheb == 0) {
                v = 0;  // ignored by conditional_estimate
            } else if (cheb <= radius) {
                v = ((x + y - cx - cy) % 2 == 0) ? 1 : -1;
            } else {
                v = far_sign;
            }
            c.spins[x * L + y] = v;
        }
    }
    return c;
}

SpinMeasure exact_small_volume(const ModelParams& params, int L, int d, Boundary boundary,
                               bool hardcore, std::vector<int> ring) {
    LatticeConfig c = make_config(L, d, boundary, std::move(ring));
    const int n = c.size();
    if (n > 12) throw std::invalid_argument("exact_small_volume: more than 12 sites");
    const int origin = center_site(L, d);
    double z = 0.0, w[3] = {0, 0, 0};
    std::vector<int> sym(n, -1);
    c.spins = sym;
    while (true) {
        // weight of the current configuration
        double weight = 1.0;
        for (int i = 0; i < n && weight > 0.0; ++i) {
            weight *= params.alpha[c.spins[i]];
            if (c.spins[i] == 0) continue;
            // pair factors: each internal pair once (higher-index neighbor),
            // boundary adjacencies once per site
            int n_opp = 0;  // opposite-sign count among counted adjacencies
            auto visit = [&](int j_inside, int ring_idx) {
                int val;
                if (j_inside >= 0) {
                    if (j_inside < i) return;  // counted from the other side
                    val = c.spins[j_inside];
                } else {
                    switch (boundary) {
                        case Boundary::all_plus: val = 1; break;
                        case Boundary::all_minus: val = -1; break;
                        case Boundary::all_hole: val = 0; break;
                        case Boundary::free_: return;
                        case Boundary::explicit_ring: val = c.ring.at(ring_idx); break;
                        default: return;
                    }
                }
                if (val * c.spins[i] == -1) ++n_opp;
            };
            if (d == 1) {
                visit(i > 0 ? i - 1 : -1, 0);
                visit(i < L - 1 ? i + 1 : -1, 1);
            } else {
                const int x = i / L, y = i % L;
                visit(y > 0 ? i - 1 : -1, x);
                visit(y < L - 1 ? i + 1 : -1, L + x);
                visit(x > 0 ? i - L : -1, 2 * L + y);
                visit(x < L - 1 ? i + L : -1, 3 * L + y);
            }
            weight *= hardcore ? (n_opp > 0 ? 0.0 : 1.0) : std::exp(-params.beta * n_opp);
        }
        z += weight;
        w[c.spins[origin] + 1] += weight;
        // next configuration in {-1,0,1}^n
        int i = 0;
        while (i < n && c.spins[i] == 1) c.spins[i++] = -1;
        if (i == n) break;
        ++c.spins[i];
    }
    if (z <= 0.0) throw std::domain_error("exact_small_volume: empty support");
    return {w[0] / z, w[1] / z, w[2] / z};
}

}  // namespace wiro
