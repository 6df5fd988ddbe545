#include "wiro/cli.hpp"

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wiro/continuum.hpp"
#include "wiro/dobrushin.hpp"
#include "wiro/io.hpp"
#include "wiro/lattice_mc.hpp"
#include "wiro/mf_equilibrium.hpp"
#include "wiro/rng.hpp"
#include "wiro/tree.hpp"
#include "wiro/two_layer.hpp"

namespace wiro {

namespace {

using nlohmann::json;

struct InvariantError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string out_dir;
    std::uint64_t seed = 12345;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    Common() {
        const char* env = std::getenv("WIRO_OUT_DIR");
        out_dir = env ? env : ".";
    }

    std::string path(const std::string& name) const { return out_dir + "/" + name; }

    double walltime_s() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }

    // metadata header lines common to all CSV outputs; config is echoed as
    // key=value pairs in flag order
    std::vector<std::string> header(const std::string& command, const std::string& config) const {
        return {std::string("version: ") + kVersion, "command: " + command,
                "config: " + config, "seed: " + std::to_string(seed),
                "walltime_s: " + io::format_double(walltime_s())};
    }
};

std::string kv(const std::string& key, double v) { return key + "=" + io::format_double(v); }
std::string kv(const std::string& key, long long v) { return key + "=" + std::to_string(v); }

SpinMeasure make_alpha(double alpha0, double h) {
    if (h == 0.0) return SpinMeasure::symmetric(alpha0);
    const double s = (1.0 - alpha0) / (2.0 * std::cosh(h));
    return {s * std::exp(-h), alpha0, s * std::exp(h)};
}

void write_json_file(const std::string& path, const json& meta, const json& data) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open " + path);
    json doc;
    doc["meta"] = meta;
    doc["data"] = data;
    os << doc.dump(2) << "\n";
}

// ---- subcommand bodies ----------------------------------------------------

int cmd_pressure(const Common& c, double beta, double alpha0, double h, int grid) {
    ModelParams params{beta, make_alpha(alpha0, h)};
    MfOptions opt;
    opt.grid = grid;
    const double p = pressure(params, opt);
    const double pd = pressure_decomposed(params, opt);
    if (std::fabs(p - pd) > 1e-8) {
        throw InvariantError("pressure mismatch between the two formulas: " +
                             io::format_double(p) + " vs " + io::format_double(pd));
    }
    const MaximizerSet ms = maximizers(params, opt);
    json data;
    data["pressure"] = p;
    data["pressure_decomposed"] = pd;
    data["maximizers"] = json::array();
    for (const OccCoords& pt : ms.points) {
        data["maximizers"].push_back({{"x", pt.x}, {"m", pt.m}});
    }
    json meta;
    meta["version"] = kVersion;
    meta["command"] = "pressure";
    meta["config"] = {{"beta", beta}, {"alpha0", alpha0}, {"h", h}, {"grid", grid}};
    meta["seed"] = c.seed;
    meta["walltime_s"] = c.walltime_s();
    write_json_file(c.path("pressure.json"), meta, data);
    std::cout << data.dump(2) << "\n";
    return 0;
}

int cmd_phase_diagram(const Common& c, double alpha0, double h, double beta_min,
                      double beta_max, int beta_steps, int grid) {
    MfOptions opt;
    opt.grid = grid;
    std::vector<std::vector<double>> rows;
    for (int i = 0; i < beta_steps; ++i) {
        const double beta =
            beta_steps == 1 ? beta_min
                            : beta_min + (beta_max - beta_min) * i / (beta_steps - 1.0);
        ModelParams params{beta, make_alpha(alpha0, h)};
        const MaximizerSet ms = maximizers(params, opt);
        OccCoords best = ms.points.front();
        for (const OccCoords& pt : ms.points) {
            if (pt.m > best.m) best = pt;
        }
        rows.push_back({beta, alpha0, h, best.x, best.m, ms.value});
    }
    std::string cfg = kv("alpha0", alpha0) + " " + kv("h", h) + " " + kv("beta_min", beta_min) +
                      " " + kv("beta_max", beta_max) + " " +
                      kv("beta_steps", (long long)beta_steps) + " " + kv("grid", (long long)grid);
    std::vector<std::string> hdr = c.header("phase-diagram", cfg);
    if (h == 0.0) {
        hdr.push_back(kv("beta_critical", beta_critical(make_alpha(alpha0, 0.0))));
    }
    io::write_csv_file(c.path("phase_diagram.csv"), hdr,
                       {"beta", "alpha0", "h", "x_star", "m_star", "pressure"}, rows);
    return 0;
}

int cmd_bad_set(const Common& c, double beta, double alpha0, double t, int grid) {
    BadSetOptions opt;
    opt.grid = grid;
    const BadSet bs = wiro_bad_set({beta, SpinMeasure::symmetric(alpha0)}, t, opt);
    std::vector<std::vector<double>> rows;
    for (const BadPoint& p : bs.points) {
        rows.push_back({p.x, p.b, 1.0, p.gap, static_cast<double>(p.branch_id)});
    }
    std::string cfg = kv("beta", beta) + " " + kv("alpha0", alpha0) + " " + kv("t", t) + " " +
                      kv("grid", (long long)grid);
    std::vector<std::string> hdr = c.header("bad-set", cfg);
    hdr.push_back("shape: " + bs.shape);
    io::write_csv_file(c.path("bad_set.csv"), hdr, {"x", "m", "bad_flag", "gap", "branch_id"},
                       rows);
    std::cout << "bad points: " << bs.points.size() << ", shape: " << bs.shape << "\n";
    return 0;
}

int cmd_typical_vs_bad(const Common& c, double beta, double alpha0, double t, int grid) {
    BadSetOptions opt;
    opt.grid = grid;
    ModelParams params{beta, SpinMeasure::symmetric(alpha0)};
    const BadSet bs = wiro_bad_set(params, t, opt);
    const std::vector<SpinMeasure> typ = typical_evolution(params, t);
    const AtypicalityReport rep = atypicality_check(params, t, opt);
    std::vector<std::vector<double>> rows;
    for (const SpinMeasure& nu : typ) {
        const OccCoords o = to_occ_coords(nu);
        rows.push_back({o.x, o.m, 0.0, 0.0, -1.0});
    }
    for (const BadPoint& p : bs.points) {
        rows.push_back({p.x, p.b, 1.0, p.gap, static_cast<double>(p.branch_id)});
    }
    std::string cfg = kv("beta", beta) + " " + kv("alpha0", alpha0) + " " + kv("t", t) + " " +
                      kv("grid", (long long)grid);
    std::vector<std::string> hdr = c.header("typical-vs-bad", cfg);
    hdr.push_back("shape: " + bs.shape);
    hdr.push_back(kv("min_distance", rep.min_distance));
    hdr.push_back(std::string("atypical: ") + (rep.atypical ? "true" : "false"));
    io::write_csv_file(c.path("typical_vs_bad.csv"), hdr,
                       {"x", "m", "bad_flag", "gap", "branch_id"}, rows);
    return 0;
}

int cmd_dobrushin_region(const Common& c, double beta, int d, int grid) {
    const DobrushinRegion reg = dobrushin_region(beta, 2 * d, grid);
    std::vector<std::vector<double>> rows;
    for (const RegionPoint& p : reg.points) {
        rows.push_back({p.alpha_plus, p.alpha_minus, p.c_value, p.satisfied ? 1.0 : 0.0});
    }
    std::string cfg = kv("beta", beta) + " " + kv("d", (long long)d) + " " +
                      kv("grid", (long long)grid);
    io::write_csv_file(c.path("dobrushin_region.csv"), c.header("dobrushin-region", cfg),
                       {"alpha1", "alpha_minus1", "c_value", "satisfied"}, rows);
    std::vector<std::vector<double>> brows;
    for (const auto& [ap, am] : reg.boundary) brows.push_back({ap, am});
    io::write_csv_file(c.path("dobrushin_boundary.csv"), c.header("dobrushin-region", cfg),
                       {"alpha1", "alpha_minus1"}, brows);
    return 0;
}

struct CheckerboardConfig {
    double beta = 5.0, alpha0 = 1.0 / 3.0, t = 1.0;
    int L = 11, radius = 3, n_samples = 2000, burn_in = 1000, thin = 10;
};

void merge_json_config(const std::string& file, CheckerboardConfig& cfg, std::uint64_t& seed) {
    std::ifstream is(file);
    if (!is) throw CLI::ValidationError("--config", "cannot open " + file);
    json j;
    try {
        is >> j;
    } catch (const json::exception& e) {
        throw CLI::ValidationError("--config", e.what());
    }
    for (const auto& [key, val] : j.items()) {
        if (key == "beta") cfg.beta = val.get<double>();
        else if (key == "alpha0") cfg.alpha0 = val.get<double>();
        else if (key == "t") cfg.t = val.get<double>();
        else if (key == "L") cfg.L = val.get<int>();
        else if (key == "radius") cfg.radius = val.get<int>();
        else if (key == "n_samples") cfg.n_samples = val.get<int>();
        else if (key == "burn_in") cfg.burn_in = val.get<int>();
        else if (key == "thin") cfg.thin = val.get<int>();
        else if (key == "seed") seed = val.get<std::uint64_t>();
        else throw CLI::ValidationError("--config", "unknown key '" + key + "'");
    }
}

int cmd_checkerboard(const Common& c, const CheckerboardConfig& cfg) {
    ModelParams params{cfg.beta, SpinMeasure::symmetric(cfg.alpha0)};
    ChainOptions chain;
    chain.burn_in = cfg.burn_in;
    chain.thin = cfg.thin;
    std::vector<std::vector<double>> rows;
    CondEstimate est[2];
    for (int k = 0; k < 2; ++k) {
        const int sign = k == 0 ? 1 : -1;
        const LatticeConfig eta = checkerboard_eta(cfg.L, cfg.radius, sign);
        est[k] = conditional_estimate(params, cfg.t, eta, false, cfg.n_samples,
                                      derive_seed(c.seed, k), chain);
        rows.push_back({static_cast<double>(sign), est[k].probabilities.p_minus,
                        est[k].probabilities.p_zero, est[k].probabilities.p_plus,
                        est[k].stderr_minus, est[k].stderr_zero, est[k].stderr_plus,
                        static_cast<double>(est[k].n_samples)});
    }
    const double diff = est[0].probabilities.p_plus - est[1].probabilities.p_plus;
    const double se = std::sqrt(est[0].stderr_plus * est[0].stderr_plus +
                                est[1].stderr_plus * est[1].stderr_plus);
    std::string config_line = kv("beta", cfg.beta) + " " + kv("alpha0", cfg.alpha0) + " " +
                              kv("t", cfg.t) + " " + kv("L", (long long)cfg.L) + " " +
                              kv("radius", (long long)cfg.radius) + " " +
                              kv("n_samples", (long long)cfg.n_samples) + " " +
                              kv("burn_in", (long long)cfg.burn_in) + " " +
                              kv("thin", (long long)cfg.thin);
    std::vector<std::string> hdr = c.header("lattice-checkerboard", config_line);
    hdr.push_back(kv("plus_minus_diff", diff));
    hdr.push_back(kv("diff_sigma", se > 0.0 ? diff / se : 0.0));
    io::write_csv_file(c.path("checkerboard.csv"), hdr,
                       {"far_sign", "p_minus", "p_zero", "p_plus", "se_minus", "se_zero",
                        "se_plus", "n_samples"},
                       rows);
    std::cout << "far-ring sensitivity: " << io::format_double(diff) << " ("
              << io::format_double(se > 0.0 ? diff / se : 0.0) << " sigma)\n";
    return 0;
}

int cmd_continuum(const Common& c, double lp, double lm, double a, double S, long steps,
                  int replicas) {
    std::vector<std::vector<double>> rows;
    int n_span = 0;
    MarkedCloud last;
    ClusterDecomposition last_dec;
    for (int r = 0; r < replicas; ++r) {
        const MarkedCloud cloud = wr_mcmc(lp, lm, a, S, steps, derive_seed(c.seed, r));
        const ClusterDecomposition dec = percolation(cloud);
        const bool rigid = sign_rigidity_check(cloud);
        if (!rigid) throw InvariantError("bichromatic cluster in a valid cloud");
        n_span += dec.spanning ? 1 : 0;
        rows.push_back({static_cast<double>(r), static_cast<double>(cloud.points.size()),
                        static_cast<double>(dec.sizes.size()), dec.spanning ? 1.0 : 0.0,
                        1.0});
        if (r == replicas - 1) {
            last = cloud;
            last_dec = dec;
        }
    }
    std::string cfg = kv("lambda_plus", lp) + " " + kv("lambda_minus", lm) + " " + kv("a", a) +
                      " " + kv("S", S) + " " + kv("steps", (long long)steps) + " " +
                      kv("replicas", (long long)replicas);
    std::vector<std::string> hdr = c.header("continuum-percolation", cfg);
    hdr.push_back(kv("crossing_prob", replicas > 0 ? static_cast<double>(n_span) / replicas : 0.0));
    if (lp > lm) hdr.push_back(kv("t_G", reentrance_time(lp, lm)));
    io::write_csv_file(c.path("percolation.csv"), hdr,
                       {"replica", "n_points", "n_clusters", "spanning", "rigid"}, rows);
    std::vector<std::vector<double>> cloud_rows;
    for (size_t i = 0; i < last.points.size(); ++i) {
        cloud_rows.push_back({last.points[i].x, last.points[i].y,
                              static_cast<double>(last.points[i].mark),
                              static_cast<double>(last_dec.cluster_id[i])});
    }
    io::write_csv_file(c.path("cloud.csv"), c.header("continuum-percolation", cfg),
                       {"x", "y", "mark", "cluster_id"}, cloud_rows);
    return 0;
}

int cmd_tree_critical(const Common& c, int k, double a0_min, double a0_max, int a0_steps,
                      double beta_lo, double beta_hi) {
    std::vector<double> ladder;
    for (int i = 0; i < a0_steps; ++i) {
        ladder.push_back(a0_steps == 1 ? a0_min
                                       : a0_min + (a0_max - a0_min) * i / (a0_steps - 1.0));
    }
    const std::vector<CriticalRow> rows = critical_scan(k, ladder, beta_lo, beta_hi);
    std::vector<std::vector<double>> out;
    for (const CriticalRow& r : rows) {
        out.push_back({r.alpha0, r.beta_crit, static_cast<double>(r.k)});
    }
    std::string cfg = kv("k", (long long)k) + " " + kv("alpha0_min", a0_min) + " " +
                      kv("alpha0_max", a0_max) + " " + kv("alpha0_steps", (long long)a0_steps) +
                      " " + kv("beta_lo", beta_lo) + " " + kv("beta_hi", beta_hi);
    io::write_csv_file(c.path("tree_critical.csv"), c.header("tree-critical", cfg),
                       {"alpha0", "beta_crit", "k"}, out);
    return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
    CLI::App app{"Widom-Rowlinson model workbench"};
    app.require_subcommand(1);
    // long-only help so that "--h" stays available as the field flag
    app.set_help_flag("--help", "print help");
    Common common;
    app.add_option("--out", common.out_dir, "output directory (default: $WIRO_OUT_DIR or .)");
    app.add_option("--seed", common.seed, "master seed; replicas use derived seeds");

    // pressure
    double beta = 0.0, alpha0 = 1.0 / 3.0, h = 0.0, t = 0.5;
    int grid = 400;
    CLI::App* p_press = app.add_subcommand("pressure", "mean-field pressure and maximizers");
    p_press->set_help_flag("--help", "print help");
    p_press->add_option("--beta", beta)->required();
    p_press->add_option("--alpha0", alpha0);
    p_press->add_option("--h", h);
    p_press->add_option("--grid", grid);

    double beta_min = 3.0, beta_max = 7.0;
    int beta_steps = 41;
    CLI::App* p_phase = app.add_subcommand("phase-diagram", "maximizer scan over beta");
    p_phase->set_help_flag("--help", "print help");
    p_phase->add_option("--alpha0", alpha0);
    p_phase->add_option("--h", h);
    p_phase->add_option("--beta-min", beta_min);
    p_phase->add_option("--beta-max", beta_max);
    p_phase->add_option("--beta-steps", beta_steps);
    p_phase->add_option("--grid", grid);

    CLI::App* p_bad = app.add_subcommand("bad-set", "bad empirical measures of the evolved model");
    p_bad->add_option("--beta", beta)->required();
    p_bad->add_option("--alpha0", alpha0);
    p_bad->add_option("--t", t)->required();
    p_bad->add_option("--grid", grid);

    CLI::App* p_tvb = app.add_subcommand("typical-vs-bad", "typical trajectories against the bad set");
    p_tvb->add_option("--beta", beta)->required();
    p_tvb->add_option("--alpha0", alpha0);
    p_tvb->add_option("--t", t)->required();
    p_tvb->add_option("--grid", grid);

    int dim = 2, region_grid = 80;
    CLI::App* p_dob = app.add_subcommand("dobrushin-region", "Dobrushin region scan and boundary");
    p_dob->add_option("--beta", beta)->required();
    p_dob->add_option("--d", dim);
    p_dob->add_option("--grid", region_grid);

    CheckerboardConfig cb;
    std::string config_file;
    CLI::App* p_check = app.add_subcommand("lattice-checkerboard", "far-ring sensitivity experiment");
    p_check->add_option("--beta", cb.beta);
    p_check->add_option("--alpha0", cb.alpha0);
    p_check->add_option("--t", cb.t);
    p_check->add_option("--L", cb.L);
    p_check->add_option("--radius", cb.radius);
    p_check->add_option("--n-samples", cb.n_samples);
    p_check->add_option("--burn-in", cb.burn_in);
    p_check->add_option("--thin", cb.thin);
    p_check->add_option("--config", config_file, "JSON config; flags override nothing here");

    double lp = 1.5, lm = 1.5, disc_a = 0.5, S = 10.0;
    long steps = 20000;
    int replicas = 20;
    CLI::App* p_cont = app.add_subcommand("continuum-percolation", "hard-core clouds, clusters, rigidity");
    p_cont->add_option("--lambda-plus", lp)->required();
    p_cont->add_option("--lambda-minus", lm);
    p_cont->add_option("--a", disc_a);
    p_cont->add_option("--S", S);
    p_cont->add_option("--steps", steps);
    p_cont->add_option("--replicas", replicas);

    int k = 2, a0_steps = 8;
    double a0_min = 0.02, a0_max = 0.15, beta_lo = 0.0, beta_hi = 12.0;
    CLI::App* p_tree = app.add_subcommand("tree-critical", "boundary-law multiplicity onset");
    p_tree->add_option("--k", k);
    p_tree->add_option("--alpha0-min", a0_min);
    p_tree->add_option("--alpha0-max", a0_max);
    p_tree->add_option("--alpha0-steps", a0_steps);
    p_tree->add_option("--beta-lo", beta_lo);
    p_tree->add_option("--beta-hi", beta_hi);

    try {
        app.parse(argc, argv);
        if (p_press->parsed()) return cmd_pressure(common, beta, alpha0, h, grid);
        if (p_phase->parsed()) {
            return cmd_phase_diagram(common, alpha0, h, beta_min, beta_max, beta_steps, grid);
        }
        if (p_bad->parsed()) return cmd_bad_set(common, beta, alpha0, t, grid);
        if (p_tvb->parsed()) return cmd_typical_vs_bad(common, beta, alpha0, t, grid);
        if (p_dob->parsed()) return cmd_dobrushin_region(common, beta, dim, region_grid);
        if (p_check->parsed()) {
            if (!config_file.empty()) merge_json_config(config_file, cb, common.seed);
            return cmd_checkerboard(common, cb);
        }
        if (p_cont->parsed()) return cmd_continuum(common, lp, lm, disc_a, S, steps, replicas);
        if (p_tree->parsed()) {
            return cmd_tree_critical(common, k, a0_min, a0_max, a0_steps, beta_lo, beta_hi);
        }
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InvariantError& e) {
        std::cerr << "invariant failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace wiro
