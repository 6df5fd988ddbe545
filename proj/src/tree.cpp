#include "wiro/tree.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace wiro {

namespace {

double lse3(double a, double b, double c) {
    const double m = std::max(a, std::max(b, c));
    return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

// recursion in log coordinates (ll_minus, ll_plus)
std::array<double, 2> log_step(const std::array<double, 2>& ll, const TreeParams& p) {
    const double beta = p.beta;
    const double den = lse3(ll[0], 0.0, ll[1]);
    const double num_m = lse3(ll[0], 0.0, ll[1] - beta);
    const double num_p = lse3(ll[0] - beta, 0.0, ll[1]);
    return {std::log(p.alpha.p_minus / p.alpha.p_zero) + p.k * (num_m - den),
            std::log(p.alpha.p_plus / p.alpha.p_zero) + p.k * (num_p - den)};
}

void check_params(const TreeParams& p) {
    if (p.k < 1) throw std::invalid_argument("tree: k >= 1 required");
    if (p.alpha.p_minus <= 0.0 || p.alpha.p_zero <= 0.0 || p.alpha.p_plus <= 0.0) {
        throw std::domain_error("tree: alpha must be strictly positive");
    }
}

}  // namespace

BoundaryLaw recursion_step(const BoundaryLaw& l, const TreeParams& params) {
    check_params(params);
    if (!l.valid()) throw std::invalid_argument("recursion_step: invalid boundary law");
    const std::array<double, 2> out = log_step({std::log(l.l_minus), std::log(l.l_plus)}, params);
    return {std::exp(out[0]), std::exp(out[1])};
}

std::vector<BoundaryLaw> find_fixed_points(const TreeParams& params) {
    check_params(params);
    std::vector<std::array<double, 2>> found;
    auto residual = [&](const std::array<double, 2>& ll) {
        const std::array<double, 2> s = log_step(ll, params);
        return std::array<double, 2>{s[0] - ll[0], s[1] - ll[1]};
    };
    auto polish = [&](std::array<double, 2> ll) {
        for (int it = 0; it < 60; ++it) {
            const std::array<double, 2> f = residual(ll);
            if (std::fabs(f[0]) < 1e-14 && std::fabs(f[1]) < 1e-14) break;
            const double h = 1e-7;
            double J[2][2];
            for (int j = 0; j < 2; ++j) {
                std::array<double, 2> lp = ll, lm = ll;
                lp[j] += h;
                lm[j] -= h;
                const std::array<double, 2> fp = residual(lp), fm = residual(lm);
                J[0][j] = (fp[0] - fm[0]) / (2.0 * h);
                J[1][j] = (fp[1] - fm[1]) / (2.0 * h);
            }
            const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
            if (std::fabs(det) < 1e-14) break;
            ll[0] -= (J[1][1] * f[0] - J[0][1] * f[1]) / det;
            ll[1] -= (J[0][0] * f[1] - J[1][0] * f[0]) / det;
        }
        return ll;
    };
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            std::array<double, 2> ll = {-8.0 + 16.0 * i / 7.0, -8.0 + 16.0 * j / 7.0};
            // damped iteration; symmetric starts stay exactly symmetric, so
            // the unstable symmetric point is reachable from the diagonal
            for (int it = 0; it < 4000; ++it) {
                const std::array<double, 2> s = log_step(ll, params);
                const std::array<double, 2> nx = {0.5 * (ll[0] + s[0]), 0.5 * (ll[1] + s[1])};
                const double d = std::fabs(nx[0] - ll[0]) + std::fabs(nx[1] - ll[1]);
                ll = nx;
                if (d < 1e-13) break;
            }
            ll = polish(ll);
            const std::array<double, 2> f = residual(ll);
            if (!std::isfinite(ll[0]) || !std::isfinite(ll[1])) continue;
            if (std::fabs(f[0]) > 1e-10 || std::fabs(f[1]) > 1e-10) continue;
            bool dup = false;
            for (const std::array<double, 2>& g : found) {
                dup = dup || (std::fabs(g[0] - ll[0]) < 1e-8 && std::fabs(g[1] - ll[1]) < 1e-8);
            }
            if (!dup) found.push_back(ll);
        }
    }
    std::sort(found.begin(), found.end());
    std::vector<BoundaryLaw> out;
    out.reserve(found.size());
    for (const std::array<double, 2>& ll : found) {
        out.push_back({std::exp(ll[0]), std::exp(ll[1])});
    }
    return out;
}

double hole_density(const BoundaryLaw& l, const TreeParams& params) {
    check_params(params);
    if (!l.valid()) throw std::invalid_argument("hole_density: invalid boundary law");
    const std::array<double, 2> ll = {std::log(l.l_minus), std::log(l.l_plus)};
    const double beta = params.beta;
    const int kk = params.k + 1;  // root degree
    const double wm = std::log(params.alpha.p_minus) + kk * lse3(ll[0], 0.0, ll[1] - beta);
    const double w0 = std::log(params.alpha.p_zero) + kk * lse3(ll[0], 0.0, ll[1]);
    const double wp = std::log(params.alpha.p_plus) + kk * lse3(ll[0] - beta, 0.0, ll[1]);
    return std::exp(w0 - lse3(wm, w0, wp));
}

std::vector<CriticalRow> critical_scan(int k, const std::vector<double>& alpha0_grid,
                                       double beta_lo, double beta_hi) {
    std::vector<CriticalRow> rows;
    for (double a0 : alpha0_grid) {
        TreeParams p{k, 0.0, SpinMeasure::symmetric(a0)};
        auto multiple = [&](double beta) {
            p.beta = beta;
            return find_fixed_points(p).size() > 1;
        };
        if (multiple(beta_lo) || !multiple(beta_hi)) continue;  // no bracket
        double lo = beta_lo, hi = beta_hi;
        while (hi - lo > 1e-4) {
            const double mid = 0.5 * (lo + hi);
            (multiple(mid) ? hi : lo) = mid;
        }
        rows.push_back({a0, 0.5 * (lo + hi), k});
    }
    return rows;
}

}  // namespace wiro
