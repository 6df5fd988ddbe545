#include "wiro/dobrushin.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wiro/two_layer.hpp"

namespace wiro {

namespace {

SpinMeasure normalize_or_throw(double wm, double w0, double wp, const char* who) {
    const double z = wm + w0 + wp;
    if (z <= 0.0) throw std::domain_error(std::string(who) + ": empty support");
    return {wm / z, w0 / z, wp / z};
}

// enumerate count triples (n_plus, n_minus, n_zero) with given sum
template <class F>
void for_each_context(int total, F&& f) {
    for (int np = 0; np <= total; ++np) {
        for (int nm = 0; nm + np <= total; ++nm) {
            f(NeighborContext{np, nm, total - np - nm});
        }
    }
}

template <class Kernel>
DobrushinReport enumerate_coefficient(int degree, const Kernel& kernel) {
    DobrushinReport rep;
    const int vals[3] = {-1, 0, 1};
    for_each_context(degree - 1, [&](const NeighborContext& ctx) {
        for (int a = 0; a < 3; ++a) {
            for (int b = a + 1; b < 3; ++b) {
                double tv;
                try {
                    tv = kernel(ctx.with(vals[a])).tv_distance(kernel(ctx.with(vals[b])));
                } catch (const std::domain_error&) {
                    // conditioning with zero probability (hard-core plus an
                    // occupied end symbol can leave no admissible value)
                    continue;
                }
                if (tv > rep.max_entry) {
                    rep.max_entry = tv;
                    rep.context = ctx;
                    rep.j_from = vals[a];
                    rep.j_to = vals[b];
                }
            }
        }
    });
    rep.c_value = degree * rep.max_entry;
    rep.satisfied = rep.c_value < 1.0;
    return rep;
}

}  // namespace

NeighborContext NeighborContext::with(int symbol) const {
    NeighborContext c = *this;
    if (symbol == 1) {
        ++c.n_plus;
    } else if (symbol == -1) {
        ++c.n_minus;
    } else if (symbol == 0) {
        ++c.n_zero;
    } else {
        throw std::invalid_argument("NeighborContext: symbol must be -1, 0 or +1");
    }
    return c;
}

SpinMeasure single_site_kernel(const NeighborContext& context, const ModelParams& params,
                               bool hardcore) {
    const SpinMeasure& a = params.alpha;
    double wm, wp;
    if (hardcore) {
        wm = context.n_plus > 0 ? 0.0 : a.p_minus;
        wp = context.n_minus > 0 ? 0.0 : a.p_plus;
    } else {
        wm = a.p_minus * std::exp(-params.beta * context.n_plus);
        wp = a.p_plus * std::exp(-params.beta * context.n_minus);
    }
    return normalize_or_throw(wm, a.p_zero, wp, "single_site_kernel");
}

SpinMeasure first_layer_kernel(const NeighborContext& context, const ModelParams& params,
                               double t, int eta_i, bool hardcore) {
    const FlipKernel k = flip_kernel(t);
    const SpinMeasure& a = params.alpha;
    double wm, wp;
    if (hardcore) {
        wm = context.n_plus > 0 ? 0.0 : a.p_minus;
        wp = context.n_minus > 0 ? 0.0 : a.p_plus;
    } else {
        wm = a.p_minus * std::exp(-params.beta * context.n_plus);
        wp = a.p_plus * std::exp(-params.beta * context.n_minus);
    }
    return normalize_or_throw(wm * k(-1, eta_i), a.p_zero * k(0, eta_i), wp * k(1, eta_i),
                              "first_layer_kernel");
}

DobrushinReport dobrushin_coefficient(const ModelParams& params, int degree, bool hardcore) {
    if (degree < 1) throw std::invalid_argument("dobrushin_coefficient: degree >= 1 required");
    return enumerate_coefficient(degree, [&](const NeighborContext& ctx) {
        return single_site_kernel(ctx, params, hardcore);
    });
}

DobrushinReport first_layer_dobrushin(const ModelParams& params, double t, int degree,
                                      bool hardcore) {
    if (degree < 1) throw std::invalid_argument("first_layer_dobrushin: degree >= 1 required");
    if (!(t > 0.0)) throw std::domain_error("first_layer_dobrushin: t must be > 0");
    DobrushinReport best;
    for (int eta = -1; eta <= 1; ++eta) {
        DobrushinReport rep = enumerate_coefficient(degree, [&](const NeighborContext& ctx) {
            return first_layer_kernel(ctx, params, t, eta, hardcore);
        });
        rep.eta = eta;
        if (rep.c_value >= best.c_value) best = rep;
    }
    best.satisfied = best.c_value < 1.0;
    return best;
}

DobrushinRegion dobrushin_region(double beta, int degree, int grid) {
    if (grid < 2) throw std::invalid_argument("dobrushin_region: grid >= 2 required");
    DobrushinRegion out;
    const int n = grid;
    // satisfied flags on the triangular grid, row-major in (i: alpha+, j: alpha-)
    std::vector<signed char> flag(static_cast<size_t>(n + 1) * (n + 1), -1);
    auto idx = [&](int i, int j) { return static_cast<size_t>(i) * (n + 1) + j; };
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            const double ap = static_cast<double>(i) / n;
            const double am = static_cast<double>(j) / n;
            ModelParams p{beta, SpinMeasure{am, 1.0 - ap - am, ap}};
            const DobrushinReport rep = dobrushin_coefficient(p, degree, false);
            out.points.push_back({ap, am, rep.c_value, rep.satisfied});
            flag[idx(i, j)] = rep.satisfied ? 1 : 0;
        }
    }
    std::vector<std::pair<double, double>> mids;
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; i + j <= n; ++j) {
            if (i + 1 + j <= n && flag[idx(i + 1, j)] >= 0 &&
                flag[idx(i, j)] != flag[idx(i + 1, j)]) {
                mids.emplace_back((i + 0.5) / n, static_cast<double>(j) / n);
            }
            if (i + j + 1 <= n && flag[idx(i, j + 1)] >= 0 &&
                flag[idx(i, j)] != flag[idx(i, j + 1)]) {
                mids.emplace_back(static_cast<double>(i) / n, (j + 0.5) / n);
            }
        }
    }
    // order the crossing points into a polyline by greedy nearest neighbor
    if (!mids.empty()) {
        std::vector<bool> used(mids.size(), false);
        size_t cur = 0;
        used[0] = true;
        out.boundary.push_back(mids[0]);
        for (size_t step = 1; step < mids.size(); ++step) {
            double best = 1e300;
            size_t bi = mids.size();
            for (size_t k = 0; k < mids.size(); ++k) {
                if (used[k]) continue;
                const double d = std::hypot(mids[k].first - mids[cur].first,
                                            mids[k].second - mids[cur].second);
                if (d < best) {
                    best = d;
                    bi = k;
                }
            }
            used[bi] = true;
            cur = bi;
            out.boundary.push_back(mids[bi]);
        }
    }
    return out;
}

}  // namespace wiro
