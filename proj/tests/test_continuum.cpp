#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "wiro/continuum.hpp"

using namespace wiro;

namespace {

MarkedCloud cloud_of(std::vector<MarkedPoint> pts, double a, double S) {
    MarkedCloud c;
    c.points = std::move(pts);
    c.radius = a;
    c.box_side = S;
    return c;
}

}  // namespace

TEST_CASE("Poisson sampling") {
    const MarkedCloud a = sample_poisson(2.0, 1.0, 0.3, 4.0, 7);
    const MarkedCloud b = sample_poisson(2.0, 1.0, 0.3, 4.0, 7);
    REQUIRE(a.points.size() == b.points.size());
    for (size_t i = 0; i < a.points.size(); ++i) {
        CHECK(a.points[i].x == b.points[i].x);
        CHECK(a.points[i].mark == b.points[i].mark);
        CHECK(a.points[i].x >= 0.0);
        CHECK(a.points[i].x <= 4.0);
        CHECK(a.points[i].y >= 0.0);
        CHECK(a.points[i].y <= 4.0);
        CHECK(std::abs(a.points[i].mark) == 1);
    }
    CHECK(sample_poisson(0.0, 0.0, 0.3, 4.0, 7).points.empty());

    // counts are Poisson(lambda S^2) per mark
    const int reps = 300;
    const double area = 16.0;
    std::vector<double> np, nm;
    for (int s = 0; s < reps; ++s) {
        const MarkedCloud c = sample_poisson(2.0, 1.0, 0.3, 4.0, 1000 + s);
        double cp = 0, cm = 0;
        for (const MarkedPoint& p : c.points) (p.mark > 0 ? cp : cm) += 1.0;
        np.push_back(cp);
        nm.push_back(cm);
    }
    auto mean = [](const std::vector<double>& v) {
        double s = 0;
        for (double x : v) s += x;
        return s / v.size();
    };
    auto variance = [&](const std::vector<double>& v) {
        const double m = mean(v);
        double s = 0;
        for (double x : v) s += (x - m) * (x - m);
        return s / (v.size() - 1);
    };
    CHECK(std::fabs(mean(np) - 2.0 * area) < 4.0 * std::sqrt(2.0 * area / reps));
    CHECK(std::fabs(mean(nm) - 1.0 * area) < 4.0 * std::sqrt(1.0 * area / reps));
    CHECK(std::fabs(variance(np) / (2.0 * area) - 1.0) < 0.35);
    CHECK(std::fabs(variance(nm) / (1.0 * area) - 1.0) < 0.35);
}

TEST_CASE("hard-core MCMC states") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const MarkedCloud c = wr_mcmc(2.0, 2.0, 0.3, 4.0, 2000, seed);
        CHECK(c.hardcore_valid());
        CHECK(sign_rigidity_check(c));
    }

    // box smaller than the exclusion diameter: all marks must agree
    int mixed = 0, multi = 0;
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        const MarkedCloud c = wr_mcmc(4.0, 4.0, 0.5, 0.6, 3000, seed);
        CHECK(c.hardcore_valid());
        if (c.points.size() >= 2) {
            ++multi;
            for (const MarkedPoint& p : c.points) {
                if (p.mark != c.points[0].mark) ++mixed;
            }
        }
    }
    CHECK(multi > 0);
    CHECK(mixed == 0);

    // lambda_minus = 0: only plus marks survive
    const MarkedCloud mono = wr_mcmc(3.0, 0.0, 0.2, 3.0, 4000, 9);
    CHECK_FALSE(mono.points.empty());
    for (const MarkedPoint& p : mono.points) CHECK(p.mark == 1);
}

TEST_CASE("single-color chain reduces to Poisson") {
    // lambda_minus = 0 makes the constraint vacuous
    const double lam = 1.0, S = 2.0;
    const double mean = lam * S * S;
    const int reps = 300;
    std::vector<long> hist(8, 0);  // 0..6 and >= 7
    for (int r = 0; r < reps; ++r) {
        const MarkedCloud c = wr_mcmc(lam, 0.0, 0.25, S, 3000, 500 + r);
        hist[std::min<size_t>(c.points.size(), 7)] += 1;
    }
    double chi2 = 0.0;
    double logp = -mean;
    double tail = 1.0;
    for (int n = 0; n < 7; ++n) {
        const double p = std::exp(logp);
        tail -= p;
        const double expect = reps * p;
        chi2 += (hist[n] - expect) * (hist[n] - expect) / expect;
        logp += std::log(mean / (n + 1));
    }
    chi2 += (hist[7] - reps * tail) * (hist[7] - reps * tail) / (reps * tail);
    CHECK(chi2 < 20.1);  // chi^2(7 dof) at the 0.01 level
}

TEST_CASE("small box matches the truncated partition function") {
    // at most two points contribute noticeably; Z truncated at n = 2
    const double a = 0.5, S = 1.5, lp = 0.1, lm = 0.1;
    const double area = S * S;

    // P(|x - y| < 2a) for independent uniform points, by fixed-seed
    // quasi-integration
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> U(0.0, S);
    const long n_int = 2000000;
    long inside = 0;
    for (long i = 0; i < n_int; ++i) {
        const double dx = U(rng) - U(rng), dy = U(rng) - U(rng);
        inside += dx * dx + dy * dy < 4.0 * a * a;
    }
    const double p_close = inside / static_cast<double>(n_int);

    const double w0 = 1.0;
    const double w1 = (lp + lm) * area;
    const double w2 = 0.5 * (lp * lp + lm * lm) * area * area +
                      lp * lm * area * area * (1.0 - p_close);
    const double z = w0 + w1 + w2;

    const int reps = 600;
    long count[3] = {};
    for (int r = 0; r < reps; ++r) {
        const MarkedCloud c = wr_mcmc(lp, lm, a, S, 2000, 9000 + r);
        if (c.points.size() <= 2) ++count[c.points.size()];
    }
    CHECK(std::fabs(count[0] / static_cast<double>(reps) - w0 / z) < 0.02);
    CHECK(std::fabs(count[1] / static_cast<double>(reps) - w1 / z) < 0.02);
    CHECK(std::fabs(count[2] / static_cast<double>(reps) - w2 / z) < 0.02);
}

TEST_CASE("cluster decomposition") {
    const double a = 0.5, S = 10.0;
    const ClusterDecomposition close = percolation(
        cloud_of({{3.0, 3.0, 1}, {3.95, 3.0, 1}}, a, S));
    CHECK(close.sizes.size() == 1);
    CHECK(close.sizes[0] == 2);

    const ClusterDecomposition apart = percolation(
        cloud_of({{3.0, 3.0, 1}, {4.05, 3.0, 1}}, a, S));
    CHECK(apart.sizes.size() == 2);
    CHECK_FALSE(apart.spanning);

    // chain across the box
    std::vector<MarkedPoint> chain;
    for (double x = 0.01; x <= S; x += 0.9) chain.push_back({x, 5.0, 1});
    chain.back().x = S - 0.01;
    const ClusterDecomposition span = percolation(cloud_of(chain, a, S));
    CHECK(span.sizes.size() == 1);
    CHECK(span.spanning);

    // permutation invariance of the partition
    std::vector<MarkedPoint> pts = chain;
    pts.push_back({5.0, 8.0, -1});
    pts.push_back({5.3, 8.0, -1});
    const ClusterDecomposition before = percolation(cloud_of(pts, a, S));
    std::reverse(pts.begin(), pts.end());
    const ClusterDecomposition after = percolation(cloud_of(pts, a, S));
    std::vector<int> sa = before.sizes, sb = after.sizes;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    CHECK(sa == sb);
    CHECK(before.spanning == after.spanning);

    // a bridging point merges clusters
    std::vector<MarkedPoint> two = {{2.0, 2.0, 1}, {3.6, 2.0, 1}};
    CHECK(percolation(cloud_of(two, a, S)).sizes.size() == 2);
    two.push_back({2.8, 2.0, 1});
    CHECK(percolation(cloud_of(two, a, S)).sizes.size() == 1);
}

TEST_CASE("sign rigidity") {
    const double a = 0.5, S = 10.0;
    CHECK(sign_rigidity_check(cloud_of({{1.0, 1.0, 1}, {1.5, 1.0, 1}, {8.0, 8.0, -1}}, a, S)));
    CHECK_THROWS_AS(sign_rigidity_check(cloud_of({{1.0, 1.0, 1}, {1.5, 1.0, -1}}, a, S)),
                    std::domain_error);
}

TEST_CASE("reentrance time") {
    CHECK(reentrance_time(3.0, 1.0) == doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));
    CHECK(reentrance_time(2.0, 0.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(std::isinf(reentrance_time(1.5, 1.5)));
    CHECK(reentrance_time(3.0, 1.0) > reentrance_time(5.0, 1.0));  // decreasing in l+
    CHECK_THROWS_AS(reentrance_time(1.0, 2.0), std::domain_error);
    CHECK_THROWS_AS(reentrance_time(1.0, -0.5), std::domain_error);
}

TEST_CASE("mark evolution") {
    const MarkedCloud c = sample_poisson(3.0, 3.0, 0.2, 6.0, 13);
    const MarkedCloud same = evolve_cloud(c, 0.0, 4);
    REQUIRE(same.points.size() == c.points.size());
    long flips = 0;
    const MarkedCloud moved = evolve_cloud(c, 0.5, 4);
    for (size_t i = 0; i < c.points.size(); ++i) {
        CHECK(same.points[i].mark == c.points[i].mark);
        CHECK(moved.points[i].x == c.points[i].x);  // positions fixed
        CHECK(moved.points[i].y == c.points[i].y);
        flips += moved.points[i].mark != c.points[i].mark;
    }
    const double q = 0.5 * (1.0 - std::exp(-1.0));
    const double n = static_cast<double>(c.points.size());
    CHECK(std::fabs(flips / n - q) < 4.0 * std::sqrt(q * (1.0 - q) / n));
    CHECK_THROWS_AS(evolve_cloud(c, -0.1, 4), std::domain_error);
}
