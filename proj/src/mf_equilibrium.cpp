#include "wiro/mf_equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wiro {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct AlphaCache {
    double log_am, log_a0, log_ap;
    bool positive;
    double h = 0.0, l = 0.0, log2ch = 0.0;
    explicit AlphaCache(const SpinMeasure& a) {
        positive = a.p_minus > 0.0 && a.p_zero > 0.0 && a.p_plus > 0.0;
        log_am = a.p_minus > 0.0 ? std::log(a.p_minus) : kNegInf;
        log_a0 = a.p_zero > 0.0 ? std::log(a.p_zero) : kNegInf;
        log_ap = a.p_plus > 0.0 ? std::log(a.p_plus) : kNegInf;
        if (positive) {
            h = 0.5 * (log_ap - log_am);
            l = std::log((1.0 - a.p_zero) / a.p_zero);
            log2ch = std::log(2.0 * std::cosh(h));
        }
    }
};

double objective_cached(double x, double m, double beta, const AlphaCache& ac) {
    const double nm = 0.5 * x * (1.0 - m);
    const double n0 = 1.0 - x;
    const double np = 0.5 * x * (1.0 + m);
    double f = -beta * np * nm;
    if (nm > 0.0) {
        if (ac.log_am == kNegInf) return kNegInf;
        f -= nm * (std::log(nm) - ac.log_am);
    }
    if (n0 > 0.0) {
        if (ac.log_a0 == kNegInf) return kNegInf;
        f -= n0 * (std::log(n0) - ac.log_a0);
    }
    if (np > 0.0) {
        if (ac.log_ap == kNegInf) return kNegInf;
        f -= np * (std::log(np) - ac.log_ap);
    }
    return f;
}

// Gradient and Hessian of the objective in (x,m), valid on the open
// domain with strictly positive alpha. The decomposed integrand has the
// same derivatives (the two differ by a constant).
void grad_hess(double x, double m, double beta, const AlphaCache& ac,
               double g[2], double hmat[3]) {
    const double Im = spin_entropy(m);
    const double Ipm = std::atanh(m);
    const double Jp = std::log(x / (2.0 * (1.0 - x)));
    g[0] = -0.5 * beta * x * (1.0 - m * m) + (ac.l - ac.log2ch) + m * ac.h -
           Jp - std::log(2.0) - Im;
    g[1] = 0.5 * beta * x * x * m + x * ac.h - x * Ipm;
    hmat[0] = -0.5 * beta * (1.0 - m * m) - 1.0 / (x * (1.0 - x));  // xx
    hmat[1] = beta * x * m + ac.h - Ipm;                            // xm
    hmat[2] = 0.5 * beta * x * x - x / (1.0 - m * m);               // mm
}

struct Candidate {
    double x, m, value;
};

// Newton ascent with steepest-ascent fallback, confined to the open box.
Candidate refine_newton(double x, double m, double beta, const AlphaCache& ac,
                        double tol) {
    constexpr double eps = 1e-12;
    auto val = [&](double xx, double mm) { return objective_cached(xx, mm, beta, ac); };
    double fx = val(x, m);
    for (int it = 0; it < 200; ++it) {
        x = std::clamp(x, eps, 1.0 - eps);
        m = std::clamp(m, -1.0 + eps, 1.0 - eps);
        double g[2], H[3];
        grad_hess(x, m, beta, ac, g, H);
        double sx, sm;
        const double det = H[0] * H[2] - H[1] * H[1];
        if (H[0] < 0.0 && det > 0.0) {  // negative definite: Newton step
            sx = -(H[2] * g[0] - H[1] * g[1]) / det;
            sm = -(H[0] * g[1] - H[1] * g[0]) / det;
        } else {  // ascend along the gradient
            sx = 0.1 * g[0];
            sm = 0.1 * g[1];
        }
        double step = 1.0;
        bool moved = false;
        for (int bt = 0; bt < 60; ++bt) {
            const double nx = std::clamp(x + step * sx, eps, 1.0 - eps);
            const double nm = std::clamp(m + step * sm, -1.0 + eps, 1.0 - eps);
            const double fn = val(nx, nm);
            if (fn >= fx) {
                if (std::fabs(nx - x) < tol && std::fabs(nm - m) < tol &&
                    fn - fx < 1e-15) {
                    return {nx, nm, fn};
                }
                x = nx;
                m = nm;
                fx = fn;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) break;
    }
    return {x, m, fx};
}

// Coordinate-wise golden refinement; used when alpha has zero components.
Candidate refine_golden(double x, double m, double beta, const AlphaCache& ac,
                        double span) {
    auto val = [&](double xx, double mm) { return objective_cached(xx, mm, beta, ac); };
    auto golden1d = [&](double lo, double hi, auto f) {
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double a = lo, b = hi;
        double c = b - gr * (b - a), d = a + gr * (b - a);
        double fc = f(c), fd = f(d);
        for (int i = 0; i < 120; ++i) {
            if (fc > fd) {
                b = d; d = c; fd = fc;
                c = b - gr * (b - a); fc = f(c);
            } else {
                a = c; c = d; fc = fd;
                d = a + gr * (b - a); fd = f(d);
            }
        }
        return 0.5 * (a + b);
    };
    for (int round = 0; round < 40; ++round) {
        const double xl = std::max(0.0, x - span), xh = std::min(1.0, x + span);
        x = golden1d(xl, xh, [&](double xx) { return val(xx, m); });
        const double ml = std::max(-1.0, m - span), mh = std::min(1.0, m + span);
        m = golden1d(ml, mh, [&](double mm) { return val(x, mm); });
        span *= 0.5;
    }
    return {x, m, val(x, m)};
}

std::vector<Candidate> local_maxima_scan(double beta, const AlphaCache& ac,
                                         const MfOptions& opt) {
    const int gx = opt.grid, gm = 2 * opt.grid;
    std::vector<double> vals(static_cast<size_t>(gx + 1) * (gm + 1));
    auto at = [&](int i, int j) -> double& {
        return vals[static_cast<size_t>(i) * (gm + 1) + j];
    };
    for (int i = 0; i <= gx; ++i) {
        const double x = static_cast<double>(i) / gx;
        for (int j = 0; j <= gm; ++j) {
            const double m = -1.0 + 2.0 * static_cast<double>(j) / gm;
            at(i, j) = objective_cached(x, m, beta, ac);
        }
    }
    std::vector<Candidate> cands;
    for (int i = 0; i <= gx; ++i) {
        for (int j = 0; j <= gm; ++j) {
            const double v = at(i, j);
            if (v == kNegInf) continue;
            if (i == 0 && j != opt.grid) continue;  // x=0 plateau: keep one point
            const bool up = (i > 0 && at(i - 1, j) > v) || (i < gx && at(i + 1, j) > v) ||
                            (j > 0 && at(i, j - 1) > v) || (j < gm && at(i, j + 1) > v);
            if (!up) {
                cands.push_back({static_cast<double>(i) / gx,
                                 -1.0 + 2.0 * static_cast<double>(j) / gm, v});
            }
        }
    }
    return cands;
}

MaximizerSet maximize(double beta, const AlphaCache& ac, const MfOptions& opt) {
    std::vector<Candidate> cands = local_maxima_scan(beta, ac, opt);
    const double cell = 1.0 / opt.grid;
    std::vector<Candidate> refined;
    refined.reserve(cands.size());
    for (const Candidate& c : cands) {
        if (ac.positive && c.x > 0.5 * cell && c.x < 1.0 - 0.5 * cell) {
            refined.push_back(refine_newton(c.x, c.m, beta, ac, opt.refine_tol));
        } else {
            refined.push_back(refine_golden(c.x, c.m, beta, ac, 2.0 * cell));
        }
    }
    std::sort(refined.begin(), refined.end(),
              [](const Candidate& a, const Candidate& b) { return a.value > b.value; });
    // deduplicate at sep_min, keeping the better value
    std::vector<Candidate> kept;
    for (const Candidate& c : refined) {
        bool dup = false;
        for (const Candidate& k : kept) {
            const double dx = c.x - k.x, dm = c.m - k.m;
            if (std::sqrt(dx * dx + dm * dm) <= opt.sep_min) {
                dup = true;
                break;
            }
        }
        if (!dup) kept.push_back(c);
    }
    MaximizerSet out;
    out.value = kept.front().value;
    double next = kNegInf;
    for (const Candidate& k : kept) {
        if (out.value - k.value <= opt.tol_deg) {
            OccCoords oc{k.x, k.m, false};
            if (k.x <= opt.refine_tol) {
                oc.x = 0.0;
                oc.m = 0.0;
                oc.degenerate = true;
            }
            out.points.push_back(oc);
        } else {
            next = std::max(next, k.value);
        }
    }
    out.gap_to_next = (next == kNegInf) ? std::numeric_limits<double>::infinity()
                                        : out.value - next;
    return out;
}

}  // namespace

double mf_objective(double x, double m, const ModelParams& params) {
    return objective_cached(x, m, params.beta, AlphaCache(params.alpha));
}

double pressure(const ModelParams& params, const MfOptions& opt) {
    AlphaCache ac(params.alpha);
    return maximize(params.beta, ac, opt).value;
}

double pressure_decomposed(const ModelParams& params, const MfOptions& opt) {
    const SpinMeasure& a = params.alpha;
    if (a.p_minus <= 0.0 || a.p_zero <= 0.0 || a.p_plus <= 0.0) {
        throw std::domain_error("pressure_decomposed: alpha must be strictly positive");
    }
    const FieldCoords fc = field_coords(a);
    const double beta = params.beta;
    const double log2ch = std::log(2.0 * std::cosh(fc.h));
    auto integrand = [&](double x, double m) {
        return -0.25 * beta * x * x + x * (fc.l - log2ch) - occ_entropy(x) +
               x * (0.25 * beta * x * m * m + fc.h * m - spin_entropy(m) - std::log(2.0));
    };
    const int gx = opt.grid, gm = 2 * opt.grid;
    double best = kNegInf;
    double bx = 0.5, bm = 0.0;
    for (int i = 0; i <= gx; ++i) {
        const double x = static_cast<double>(i) / gx;
        for (int j = 0; j <= gm; ++j) {
            const double m = -1.0 + 2.0 * static_cast<double>(j) / gm;
            const double v = integrand(x, m);
            if (v > best) {
                best = v;
                bx = x;
                bm = m;
            }
        }
    }
    // Same derivatives as the raw objective; refine through it and read the
    // decomposed integrand back at the refined point.
    AlphaCache ac(a);
    if (bx > 0.0 && bx < 1.0) {
        Candidate c = refine_newton(bx, bm, beta, ac, opt.refine_tol);
        best = std::max(best, integrand(c.x, c.m));
    }
    // The occupation part contributes log alpha(0); the entropies J and I
    // carry reference constants log 3 and log 2, leaving a flat +log 3.
    return std::log(a.p_zero) + std::log(3.0) + best;
}

MaximizerSet maximizers(const ModelParams& params, const MfOptions& opt) {
    AlphaCache ac(params.alpha);
    return maximize(params.beta, ac, opt);
}

SpinMeasure limiting_kernel(const SpinMeasure& nu, const ModelParams& params) {
    const SpinMeasure& a = params.alpha;
    const double wm = a.p_minus * std::exp(-params.beta * nu.p_plus);
    const double w0 = a.p_zero;
    const double wp = a.p_plus * std::exp(-params.beta * nu.p_minus);
    const double z = wm + w0 + wp;
    return {wm / z, w0 / z, wp / z};
}

double beta_critical(const SpinMeasure& alpha) {
    if (std::fabs(alpha.p_plus - alpha.p_minus) > 1e-12 || alpha.p_plus <= 0.0) {
        throw std::domain_error("beta_critical: requires symmetric alpha with alpha(1) > 0");
    }
    return 2.0 + std::exp(1.0) * alpha.p_zero / alpha.p_plus;
}

Parametrization parametrize(double m, const SpinMeasure& alpha) {
    const double am = std::fabs(m);
    if (am <= 0.0 || am >= 1.0) {
        throw std::domain_error("parametrize: requires 0 < |m| < 1");
    }
    const FieldCoords fc = field_coords(alpha);
    const double Ip = std::atanh(m);
    const double E = std::exp(-fc.l + std::log(2.0 * std::cosh(fc.h)) +
                              (Ip - fc.h) / m - m * Ip + spin_entropy(m));
    Parametrization p;
    p.x = 1.0 / (1.0 + E);
    p.beta = (2.0 / m) * (Ip - fc.h) * (1.0 + E);
    return p;
}

double magnetization(double beta, double h, double alpha0, const MfOptions& opt) {
    SpinMeasure alpha;
    if (h == 0.0) {
        alpha = SpinMeasure::symmetric(alpha0);
        // invert the closed-form parametrization: beta(m) = beta on (0,1)
        auto beta_of = [&](double m) { return parametrize(m, alpha).beta; };
        double lo = 1e-9, hi = 1.0 - 1e-12;
        if (beta_of(lo) >= beta) return 0.0;
        if (beta_of(hi) >= beta) {
            for (int i = 0; i < 200; ++i) {
                const double mid = 0.5 * (lo + hi);
                (beta_of(mid) < beta ? lo : hi) = mid;
            }
            return 0.5 * (lo + hi);
        }
        // non-monotone tail: fall back to the grid maximizer below
    } else {
        const double s = (1.0 - alpha0) / (2.0 * std::cosh(h));
        alpha = {s * std::exp(-h), alpha0, s * std::exp(h)};
    }
    MaximizerSet ms = maximizers({beta, alpha}, opt);
    double m = 0.0;
    for (const OccCoords& p : ms.points) m = std::max(m, p.m);
    return m;
}

std::pair<double, double> critical_exponents(const SpinMeasure& alpha) {
    if (std::fabs(alpha.p_plus - alpha.p_minus) > 1e-12) {
        throw std::domain_error("critical_exponents: requires symmetric alpha");
    }
    const double a0 = alpha.p_zero;
    const double bc = beta_critical(alpha);
    auto fit_slope = [](const std::vector<double>& lx, const std::vector<double>& ly) {
        const size_t n = lx.size();
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (size_t i = 0; i < n; ++i) {
            sx += lx[i];
            sy += ly[i];
            sxx += lx[i] * lx[i];
            sxy += lx[i] * ly[i];
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    std::vector<double> lx, ly;
    for (int k = 0; k < 10; ++k) {
        const double eps = std::pow(10.0, -3.0 + 2.0 * k / 9.0);  // up to 0.1
        const double m = magnetization(bc + eps, 0.0, a0);
        lx.push_back(std::log(eps));
        ly.push_back(std::log(m));
    }
    const double exp_beta = fit_slope(lx, ly);
    lx.clear();
    ly.clear();
    for (int k = 0; k < 10; ++k) {
        const double h = std::pow(10.0, -4.0 + 2.0 * k / 9.0);  // up to 0.01
        const double m = magnetization(bc, h, a0);
        lx.push_back(std::log(h));
        ly.push_back(std::log(m));
    }
    const double exp_h = fit_slope(lx, ly);
    return {exp_beta, exp_h};
}

std::vector<AntiferroRow> antiferro_scan(const std::vector<double>& alpha0_grid,
                                         const std::vector<double>& beta_grid,
                                         double x_jump_min, const MfOptions& opt) {
    std::vector<AntiferroRow> rows;
    for (double a0 : alpha0_grid) {
        const SpinMeasure alpha = SpinMeasure::symmetric(a0);
        auto x_star = [&](double beta) {
            MaximizerSet ms = maximizers({beta, alpha}, opt);
            return ms.points.front().x;
        };
        double prev_beta = 0.0, prev_x = 0.0;
        bool have_prev = false;
        for (double beta : beta_grid) {
            if (beta >= 0.0) {
                throw std::invalid_argument("antiferro_scan: beta grid must be negative");
            }
            const double x = x_star(beta);
            if (have_prev && std::fabs(x - prev_x) > x_jump_min) {
                double lo = std::min(prev_beta, beta), hi = std::max(prev_beta, beta);
                const double x_at_lo = x_star(lo);
                for (int i = 0; i < 40; ++i) {
                    const double mid = 0.5 * (lo + hi);
                    const double xm = x_star(mid);
                    (std::fabs(xm - x_at_lo) < 0.5 * x_jump_min ? lo : hi) = mid;
                }
                AntiferroRow r;
                r.alpha0 = a0;
                r.beta_line = 0.5 * (lo + hi);
                r.x_low = std::min(prev_x, x);
                r.x_high = std::max(prev_x, x);
                rows.push_back(r);
            }
            prev_beta = beta;
            prev_x = x;
            have_prev = true;
        }
    }
    return rows;
}

}  // namespace wiro
