#include "wiro/two_layer.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>

namespace wiro {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double kl_term(double q, double r) {
    if (q <= 0.0) return 0.0;
    if (r <= 0.0) return kInf;
    return q * std::log(q / r);
}

// pressure enters joint_rate as its additive normalization; cache per (beta, alpha)
double pressure_cached(const ModelParams& params) {
    static std::map<std::array<double, 4>, double> cache;
    const std::array<double, 4> key{params.beta, params.alpha.p_minus,
                                    params.alpha.p_zero, params.alpha.p_plus};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const double v = pressure(params);
    cache.emplace(key, v);
    return v;
}

// Inner coupling of the occupied block, solved in closed form: among
// couplings with given row/column occupied marginals, relative entropy
// against a product reference is minimized at the coupling matching the
// reference odds ratio, a quadratic in the (+,+) entry.
double optimal_pp_entry(double total, double rp, double cp, double rho) {
    const double lo = std::max(0.0, rp + cp - total);
    const double hi = std::min(rp, cp);
    const double A = 1.0 - rho;
    const double B = total - rp - cp + rho * (rp + cp);
    const double C = -rho * rp * cp;
    double w;
    if (std::fabs(A) < 1e-14) {
        w = (std::fabs(B) < 1e-300) ? 0.5 * (lo + hi) : -C / B;
    } else {
        const double disc = std::sqrt(std::max(0.0, B * B - 4.0 * A * C));
        const double qf = -0.5 * (B + (B >= 0.0 ? disc : -disc));
        const double w1 = qf / A;
        const double w2 = (qf != 0.0) ? C / qf : w1;
        w = (w1 >= lo - 1e-12 && w1 <= hi + 1e-12) ? w1 : w2;
    }
    return std::clamp(w, lo, hi);
}

// Constrained rate of one simplex column: conditioning with occupation x and
// occupied magnetization b, candidate first-layer occupied magnetization a.
// The hole block is frozen by the constraint; the occupied 2x2 coupling is
// optimized in closed form. Additive pressure normalization omitted (only
// gaps matter here).
struct ColumnRate {
    double beta, x, b;
    double rpp, rpm, rmp, rmm;  // reference alpha(s0) p_t(s0, st)
    double rho;
    double hole;

    ColumnRate(const ModelParams& params, const FlipKernel& k, double x_, double b_)
        : beta(params.beta), x(x_), b(b_) {
        const double pd = k(1, 1), po = k(1, -1);
        rpp = params.alpha.p_plus * pd;
        rpm = params.alpha.p_plus * po;
        rmp = params.alpha.p_minus * po;
        rmm = params.alpha.p_minus * pd;
        rho = (rpp * rmm) / (rpm * rmp);
        hole = kl_term(1.0 - x, params.alpha.p_zero);
    }

    double operator()(double a) const {
        const double rp = 0.5 * x * (1.0 + a), rm = 0.5 * x * (1.0 - a);
        const double cp = 0.5 * x * (1.0 + b), cm = 0.5 * x * (1.0 - b);
        const double w = optimal_pp_entry(x, rp, cp, rho);
        return beta * rp * rm + kl_term(w, rpp) + kl_term(rp - w, rpm) +
               kl_term(cp - w, rmp) + kl_term(rm - (cp - w), rmm) + hole;
    }
};

// Ising first-layer rate: two-point alphabet, uniform a-priori, interaction
// -beta_I a^2/2. Same machinery as ColumnRate on the occupied block alone.
struct IsingRate {
    double beta_I, b;
    double rd, ro;  // reference (1/2) p_t(same), (1/2) p_t(flip)
    double rho;

    IsingRate(double beta_I_, const FlipKernel& k, double b_)
        : beta_I(beta_I_), b(b_), rd(0.5 * k(1, 1)), ro(0.5 * k(1, -1)),
          rho((rd * rd) / (ro * ro)) {}

    double operator()(double a) const {
        const double rp = 0.5 * (1.0 + a), rm = 0.5 * (1.0 - a);
        const double cp = 0.5 * (1.0 + b), cm = 0.5 * (1.0 - b);
        const double w = optimal_pp_entry(1.0, rp, cp, rho);
        return -0.5 * beta_I * a * a + kl_term(w, rd) + kl_term(rp - w, ro) +
               kl_term(cp - w, ro) + kl_term(rm - (cp - w), rd);
    }
};

struct Minimum {
    double a = 0.0;
    double value = kInf;
};

template <class F>
Minimum golden_refine(const F& f, double lo, double hi) {
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = lo, b = hi;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = f(c), fd = f(d);
    for (int i = 0; i < 80; ++i) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a); fc = f(c);
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a); fd = f(d);
        }
    }
    const double mid = 0.5 * (a + b);
    return {mid, f(mid)};
}

// All local minima of f over [-1,1], refined; sorted by value.
template <class F>
std::vector<Minimum> scan_minima(const F& f, int n, double sep) {
    std::vector<double> v(n + 1);
    for (int i = 0; i <= n; ++i) v[i] = f(-1.0 + 2.0 * i / n);
    std::vector<Minimum> out;
    const double step = 2.0 / n;
    for (int i = 0; i <= n; ++i) {
        const bool left_up = (i == 0) || v[i - 1] >= v[i];
        const bool right_up = (i == n) || v[i + 1] >= v[i];
        if (left_up && right_up) {
            const double ai = -1.0 + 2.0 * i / n;
            out.push_back(golden_refine(f, std::max(-1.0, ai - step),
                                        std::min(1.0, ai + step)));
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Minimum& p, const Minimum& q) { return p.value < q.value; });
    std::vector<Minimum> dedup;
    for (const Minimum& m : out) {
        bool close = false;
        for (const Minimum& k : dedup) close = close || std::fabs(k.a - m.a) <= sep;
        if (!close) dedup.push_back(m);
    }
    return dedup;
}

// Global argmin only (cheap path for branch tracking).
template <class F>
Minimum global_min(const F& f, int n) {
    double best = kInf;
    int bi = 0;
    for (int i = 0; i <= n; ++i) {
        const double v = f(-1.0 + 2.0 * i / n);
        if (v < best) {
            best = v;
            bi = i;
        }
    }
    const double step = 2.0 / n, ai = -1.0 + 2.0 * bi / n;
    return golden_refine(f, std::max(-1.0, ai - step), std::min(1.0, ai + step));
}

// Crossing scan over the conditioning magnetization b: track the global
// minimizer, bisect where it jumps, and keep only genuine degeneracies
// (two global minima within eps_gap, separated by more than delta_sep).
// The jump trigger scales with the grid step so that smooth drift of the
// minimizer does not masquerade as a crossing; drift that still triggers is
// cut short once the bracketing argmins collapse onto each other.
template <class RateAt>
std::vector<BadPoint> crossing_scan(const RateAt& rate_at, int grid,
                                    double eps_gap, double delta_sep, int n_a) {
    std::vector<BadPoint> out;
    const double jump_min = std::max(delta_sep, 6.0 / grid);
    double prev_b = 0.0, prev_a = 0.0;
    bool have_prev = false;
    for (int j = 0; j <= grid; ++j) {
        const double b = -1.0 + 2.0 * j / grid;
        auto f = rate_at(b);
        const Minimum g = global_min(f, n_a);
        if (have_prev && std::fabs(g.a - prev_a) > jump_min) {
            double bl = prev_b, bh = b, al = prev_a, ah = g.a;
            bool genuine = true;
            for (int it = 0; it < 50; ++it) {
                const double bm = 0.5 * (bl + bh);
                const Minimum gm = global_min(rate_at(bm), n_a);
                if (std::fabs(gm.a - al) < std::fabs(gm.a - ah)) {
                    bl = bm;
                    al = gm.a;
                } else {
                    bh = bm;
                    ah = gm.a;
                }
                if (std::fabs(ah - al) <= delta_sep) {  // smooth drift, not a crossing
                    genuine = false;
                    break;
                }
            }
            if (!genuine) {
                prev_b = b;
                prev_a = g.a;
                continue;
            }
            const double bstar = 0.5 * (bl + bh);
            auto fs = rate_at(bstar);
            const std::vector<Minimum> mins = scan_minima(fs, n_a, delta_sep);
            if (mins.size() >= 2 && std::fabs(mins[1].a - mins[0].a) > delta_sep) {
                // The argmin bisection ties the basins only up to the
                // a-sampling error, so the refined values at bstar can still
                // differ by ~1e-5; polish b by bisecting on the sign of the
                // refined basin-value difference instead.
                Minimum m1 = mins[0], m2 = mins[1];
                double bty = bstar;
                const double w = 2.0 / n_a;
                auto track = [&](double bb, Minimum& u, Minimum& v) {
                    auto fb = rate_at(bb);
                    u = golden_refine(fb, std::max(-1.0, u.a - w), std::min(1.0, u.a + w));
                    v = golden_refine(fb, std::max(-1.0, v.a - w), std::min(1.0, v.a + w));
                };
                const double d0 = m1.value - m2.value;
                if (d0 != 0.0) {
                    double bfar = bstar;
                    bool bracketed = false;
                    for (double r = 1e-4; r <= 2.5 / grid && !bracketed; r *= 2.0) {
                        for (int sgn : {-1, 1}) {
                            Minimum u = m1, v = m2;
                            const double bb = bstar + sgn * r;
                            track(bb, u, v);
                            if ((u.value - v.value) * d0 <= 0.0) {
                                bfar = bb;
                                bracketed = true;
                                break;
                            }
                        }
                    }
                    if (bracketed) {
                        double bnear = bstar;
                        Minimum n1 = m1, n2 = m2;
                        for (int it = 0; it < 60; ++it) {
                            const double bm2 = 0.5 * (bnear + bfar);
                            Minimum u = n1, v = n2;
                            track(bm2, u, v);
                            if ((u.value - v.value) * d0 > 0.0) {
                                bnear = bm2;
                            } else {
                                bfar = bm2;
                            }
                            n1 = u;
                            n2 = v;
                        }
                        bty = 0.5 * (bnear + bfar);
                        track(bty, n1, n2);
                        m1 = n1;
                        m2 = n2;
                        if (m2.value < m1.value) std::swap(m1, m2);
                    }
                }
                if (m2.value - m1.value < eps_gap && std::fabs(m2.a - m1.a) > delta_sep) {
                    BadPoint p;
                    p.b = bty;
                    p.gap = m2.value - m1.value;
                    p.separation = std::fabs(m2.a - m1.a);
                    p.a_lo = std::min(m1.a, m2.a);
                    p.a_hi = std::max(m1.a, m2.a);
                    out.push_back(p);
                }
            }
        }
        prev_b = b;
        prev_a = g.a;
        have_prev = true;
    }
    return out;
}

bool contiguous_in_x(std::vector<double> xs, double step) {
    std::sort(xs.begin(), xs.end());
    for (size_t i = 1; i < xs.size(); ++i) {
        if (xs[i] - xs[i - 1] > 2.5 * step) return false;
    }
    return true;
}

std::string classify_wiro(const std::vector<BadPoint>& pts, int grid) {
    if (pts.empty()) return "empty";
    const double step = 1.0 / grid;
    std::vector<double> stem_x, arm_x;
    for (const BadPoint& p : pts) {
        (p.branch_id == 0 ? stem_x : arm_x).push_back(p.x);
    }
    if (arm_x.empty()) {
        return contiguous_in_x(stem_x, step) ? "segment" : "other";
    }
    if (stem_x.empty()) return "other";
    if (!contiguous_in_x(stem_x, step) || !contiguous_in_x(arm_x, step)) return "other";
    const double stem_lo = *std::min_element(stem_x.begin(), stem_x.end());
    const double arm_hi = *std::max_element(arm_x.begin(), arm_x.end());
    if (stem_lo - arm_hi > 3.0 * step) return "other";  // arms detached from stem
    return "y_shape";
}

}  // namespace

FlipKernel flip_kernel(double t) {
    if (!(t >= 0.0)) throw std::domain_error("flip_kernel: t must be >= 0");
    const double po = 0.5 * (1.0 - std::exp(-2.0 * t));
    const double pd = 1.0 - po;
    FlipKernel k;
    k.t = t;
    k.m[0][0] = pd; k.m[0][1] = 0.0; k.m[0][2] = po;  // row -1
    k.m[1][0] = 0.0; k.m[1][1] = 1.0; k.m[1][2] = 0.0;  // row 0
    k.m[2][0] = po; k.m[2][1] = 0.0; k.m[2][2] = pd;  // row +1
    return k;
}

SpinMeasure JointMeasure::marginal0() const {
    return {q[0][0] + q[0][1] + q[0][2], q[1][0] + q[1][1] + q[1][2],
            q[2][0] + q[2][1] + q[2][2]};
}

SpinMeasure JointMeasure::marginal_t() const {
    return {q[0][0] + q[1][0] + q[2][0], q[0][1] + q[1][1] + q[2][1],
            q[0][2] + q[1][2] + q[2][2]};
}

bool JointMeasure::valid(double tol) const {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (q[i][j] < 0.0) return false;
            s += q[i][j];
        }
    }
    return std::fabs(s - 1.0) <= tol;
}

JointMeasure product_coupling(const SpinMeasure& nu0, const FlipKernel& kernel) {
    JointMeasure q;
    for (int s0 = -1; s0 <= 1; ++s0) {
        for (int st = -1; st <= 1; ++st) {
            q.at(s0, st) = nu0[s0] * kernel(s0, st);
        }
    }
    return q;
}

double joint_rate(const JointMeasure& q, const ModelParams& params, double t) {
    if (!q.valid(1e-9)) throw std::invalid_argument("joint_rate: q is not a probability matrix");
    const FlipKernel k = flip_kernel(t);
    double h = 0.0;
    for (int s0 = -1; s0 <= 1; ++s0) {
        for (int st = -1; st <= 1; ++st) {
            const double r = params.alpha[s0] * k(s0, st);
            if (q.at(s0, st) > 0.0 && r <= 0.0) {
                throw std::domain_error("joint_rate: q not supported in supp(alpha x p_t)");
            }
            h += kl_term(q.at(s0, st), r);
        }
    }
    const SpinMeasure q0 = q.marginal0();
    return params.beta * q0.p_plus * q0.p_minus + h + pressure_cached(params);
}

MaximizerSet constrained_min(const SpinMeasure& nu_t, const ModelParams& params,
                             double t, const ConstrainedOptions& opt) {
    if (!nu_t.valid(1e-9)) throw std::invalid_argument("constrained_min: invalid nu_t");
    const double press = pressure_cached(params);
    const double cp = nu_t.p_plus, cm = nu_t.p_minus, c0 = nu_t.p_zero;

    MaximizerSet out;
    if (t == 0.0 || cp + cm <= 0.0) {
        // identity kernel or pure-hole conditioning: the coupling is frozen
        const double st = params.beta * cp * cm + relative_entropy(nu_t, params.alpha);
        out.points.push_back(to_occ_coords(nu_t));
        out.value = st + press;
        out.gap_to_next = kInf;
        return out;
    }

    const FlipKernel k = flip_kernel(t);
    const double rpp = params.alpha.p_plus * k(1, 1);
    const double rpm = params.alpha.p_plus * k(1, -1);
    const double rmp = params.alpha.p_minus * k(-1, 1);
    const double rmm = params.alpha.p_minus * k(-1, -1);
    if ((cp > 0.0 && rpp + rmp <= 0.0) || (cm > 0.0 && rpm + rmm <= 0.0)) {
        throw std::domain_error("constrained_min: nu_t not reachable through alpha x p_t");
    }
    const double hole = kl_term(c0, params.alpha.p_zero) + press;

    // free coordinates: u = q(+,+) in [0,cp], v = q(-,-) in [0,cm]
    auto rate = [&](double u, double v) {
        const double q0p = u + (cm - v), q0m = v + (cp - u);
        return params.beta * q0p * q0m + kl_term(u, rpp) + kl_term(cp - u, rmp) +
               kl_term(cm - v, rpm) + kl_term(v, rmm) + hole;
    };
    auto newton = [&](double u, double v) {
        const double ul = 1e-14 * cp, vl = 1e-14 * cm;
        double fu = rate(u, v);
        for (int it = 0; it < 200; ++it) {
            u = std::clamp(u, ul, cp - ul);
            v = std::clamp(v, vl, cm - vl);
            const double q0p = u + (cm - v), q0m = v + (cp - u);
            const double beta = params.beta;
            const double gu = beta * (q0m - q0p) + std::log(u / rpp) - std::log((cp - u) / rmp);
            const double gv = beta * (q0p - q0m) + std::log(v / rmm) - std::log((cm - v) / rpm);
            const double huu = -2.0 * beta + 1.0 / u + 1.0 / (cp - u);
            const double hvv = -2.0 * beta + 1.0 / v + 1.0 / (cm - v);
            const double huv = 2.0 * beta;
            const double det = huu * hvv - huv * huv;
            double su, sv;
            if (huu > 0.0 && det > 0.0) {  // positive definite: Newton
                su = -(hvv * gu - huv * gv) / det;
                sv = -(huu * gv - huv * gu) / det;
            } else {
                su = -0.05 * std::min(cp, cm) * gu;
                sv = -0.05 * std::min(cp, cm) * gv;
            }
            double step = 1.0;
            bool moved = false;
            for (int bt = 0; bt < 60; ++bt) {
                const double nu = std::clamp(u + step * su, ul, cp - ul);
                const double nv = std::clamp(v + step * sv, vl, cm - vl);
                const double fn = rate(nu, nv);
                if (fn <= fu) {
                    if (std::fabs(nu - u) < opt.refine_tol && std::fabs(nv - v) < opt.refine_tol) {
                        return std::array<double, 3>{nu, nv, fn};
                    }
                    u = nu;
                    v = nv;
                    fu = fn;
                    moved = true;
                    break;
                }
                step *= 0.5;
            }
            if (!moved) break;
        }
        return std::array<double, 3>{u, v, fu};
    };

    struct Cand { double u, v, value; };
    std::vector<Cand> cands;
    if (cp <= 0.0 || cm <= 0.0) {
        // one coordinate frozen at 0: 1-d problem
        const double span = std::max(cp, cm);
        auto f1 = [&](double s) { return cp > 0.0 ? rate(s, 0.0) : rate(0.0, s); };
        double best = kInf, barg = 0.0;
        const int n = opt.grid * opt.grid;
        for (int i = 0; i <= n; ++i) {
            const double s = span * i / n;
            const double fv = f1(s);
            if (fv < best) { best = fv; barg = s; }
        }
        Minimum g = golden_refine(f1, std::max(0.0, barg - span / n),
                                  std::min(span, barg + span / n));
        cands.push_back(cp > 0.0 ? Cand{g.a, 0.0, g.value} : Cand{0.0, g.a, g.value});
    } else {
        const int g = opt.grid;
        std::vector<double> grid_vals(static_cast<size_t>(g) * g);
        for (int i = 0; i < g; ++i) {
            const double u = cp * (i + 0.5) / g;
            for (int j = 0; j < g; ++j) {
                grid_vals[static_cast<size_t>(i) * g + j] = rate(u, cm * (j + 0.5) / g);
            }
        }
        auto gv = [&](int i, int j) { return grid_vals[static_cast<size_t>(i) * g + j]; };
        for (int i = 0; i < g; ++i) {
            for (int j = 0; j < g; ++j) {
                const double v = gv(i, j);
                const bool low = (i == 0 || gv(i - 1, j) >= v) && (i == g - 1 || gv(i + 1, j) >= v) &&
                                 (j == 0 || gv(i, j - 1) >= v) && (j == g - 1 || gv(i, j + 1) >= v);
                if (low) {
                    auto res = newton(cp * (i + 0.5) / g, cm * (j + 0.5) / g);
                    cands.push_back({res[0], res[1], res[2]});
                }
            }
        }
    }
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.value < b.value; });
    auto mag = [&](const Cand& c) {
        const double q0p = c.u + (cm - c.v), q0m = c.v + (cp - c.u);
        return (q0p - q0m) / (q0p + q0m);
    };
    std::vector<Cand> kept;
    for (const Cand& c : cands) {
        bool dup = false;
        for (const Cand& kc : kept) dup = dup || std::fabs(mag(c) - mag(kc)) <= opt.delta_sep;
        if (!dup) kept.push_back(c);
    }
    out.value = kept.front().value;
    double next = -kInf;
    for (const Cand& c : kept) {
        if (c.value - out.value <= opt.eps_gap) {
            out.points.push_back(OccCoords{cp + cm, mag(c), false});
        } else {
            next = std::max(next, c.value);
        }
    }
    out.gap_to_next = (next == -kInf) ? kInf : next - out.value;
    return out;
}

BadSet ising_bad_set(double beta_I, double t, const BadSetOptions& opt) {
    if (beta_I < 0.0 || t < 0.0) {
        throw std::domain_error("ising_bad_set: requires beta_I >= 0 and t >= 0");
    }
    BadSet out;
    if (t == 0.0) {
        out.shape = "empty";
        return out;
    }
    const FlipKernel k = flip_kernel(t);
    auto rate_at = [&](double b) { return IsingRate(beta_I, k, b); };
    out.points = crossing_scan(rate_at, opt.grid, opt.eps_gap, opt.delta_sep, 120);
    for (BadPoint& p : out.points) {
        p.x = 1.0;
        p.branch_id = std::fabs(p.b) < 1e-6 ? 0 : (p.b > 0.0 ? 1 : 2);
    }
    if (out.points.empty()) {
        out.shape = "empty";
    } else if (out.points.size() == 1 && out.points[0].branch_id == 0) {
        out.shape = "origin";
    } else if (out.points.size() == 2 &&
               std::fabs(out.points[0].b + out.points[1].b) < 1e-5 &&
               out.points[0].branch_id != 0) {
        out.shape = "symmetric_pair";
    } else {
        out.shape = "other";
    }
    return out;
}

BadSet wiro_bad_set(const ModelParams& params, double t, const BadSetOptions& opt) {
    if (!params.alpha.symmetric_spins(1e-12)) {
        throw std::domain_error("wiro_bad_set: stated for symmetric alpha only");
    }
    if (t < 0.0) throw std::domain_error("wiro_bad_set: t must be >= 0");
    BadSet out;
    if (t == 0.0) {
        out.shape = "empty";
        return out;
    }
    const FlipKernel k = flip_kernel(t);
    for (int i = 1; i <= opt.grid; ++i) {
        const double x = static_cast<double>(i) / opt.grid;
        auto rate_at = [&](double b) { return ColumnRate(params, k, x, b); };
        std::vector<BadPoint> col =
            crossing_scan(rate_at, opt.grid, opt.eps_gap, opt.delta_sep, 120);
        for (BadPoint& p : col) {
            p.x = x;
            p.branch_id = std::fabs(p.b) < 2.0 / opt.grid ? 0 : (p.b > 0.0 ? 1 : 2);
            out.points.push_back(p);
        }
    }
    out.shape = classify_wiro(out.points, opt.grid);
    return out;
}

std::vector<SpinMeasure> typical_evolution(const ModelParams& params, double t,
                                           const MfOptions& opt) {
    const MaximizerSet ms = maximizers(params, opt);
    const double shrink = std::exp(-2.0 * t);
    std::vector<SpinMeasure> out;
    out.reserve(ms.points.size());
    for (const OccCoords& p : ms.points) {
        out.push_back(from_occ_coords({p.x, p.m * shrink, p.degenerate}));
    }
    return out;
}

AtypicalityReport atypicality_check(const ModelParams& params, double t,
                                    const BadSetOptions& opt) {
    const BadSet bad = wiro_bad_set(params, t, opt);
    AtypicalityReport rep;
    if (bad.empty()) {
        rep.atypical = true;
        rep.min_distance = kInf;
        return rep;
    }
    const std::vector<SpinMeasure> typ = typical_evolution(params, t);
    double dmin = kInf;
    for (const SpinMeasure& nu : typ) {
        const OccCoords c = to_occ_coords(nu);
        for (const BadPoint& p : bad.points) {
            dmin = std::min(dmin, std::hypot(c.x - p.x, c.m - p.b));
        }
    }
    rep.min_distance = dmin;
    rep.atypical = dmin > opt.delta_sep;
    return rep;
}

}  // namespace wiro
