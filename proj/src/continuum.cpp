#include "wiro/continuum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wiro/rng.hpp"

namespace wiro {

namespace {

bool conflicts(const MarkedCloud& c, const MarkedPoint& p, int skip = -1) {
    const double r2 = 4.0 * c.radius * c.radius;
    for (size_t i = 0; i < c.points.size(); ++i) {
        if (static_cast<int>(i) == skip) continue;
        const MarkedPoint& q = c.points[i];
        if (q.mark == p.mark) continue;
        const double dx = q.x - p.x, dy = q.y - p.y;
        if (dx * dx + dy * dy < r2) return true;
    }
    return false;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

bool MarkedCloud::hardcore_valid() const {
    for (size_t i = 0; i < points.size(); ++i) {
        if (conflicts(*this, points[i], static_cast<int>(i))) return false;
    }
    return true;
}

MarkedCloud sample_poisson(double lambda_plus, double lambda_minus, double a,
                           double box_side, std::uint64_t seed) {
    if (lambda_plus < 0.0 || lambda_minus < 0.0 || a <= 0.0 || box_side <= 0.0) {
        throw std::invalid_argument("sample_poisson: bad parameters");
    }
    MarkedCloud c;
    c.radius = a;
    c.box_side = box_side;
    std::mt19937_64 rng = make_rng(seed);
    std::uniform_real_distribution<double> unif(0.0, box_side);
    const double area = box_side * box_side;
    for (int mark : {+1, -1}) {
        const double lambda = mark == 1 ? lambda_plus : lambda_minus;
        const long n = lambda > 0.0 ? std::poisson_distribution<long>(lambda * area)(rng) : 0;
        for (long i = 0; i < n; ++i) {
            c.points.push_back({unif(rng), unif(rng), mark});
        }
    }
    return c;
}

MarkedCloud wr_mcmc(double lambda_plus, double lambda_minus, double a, double box_side,
                    long steps, std::uint64_t seed, const McmcOptions& opt) {
    if (a <= 0.0 || box_side <= 0.0 || lambda_plus < 0.0 || lambda_minus < 0.0) {
        throw std::invalid_argument("wr_mcmc: bad parameters");
    }
    MarkedCloud c;
    c.radius = a;
    c.box_side = box_side;
    std::mt19937_64 rng = make_rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    std::uniform_real_distribution<double> upos(0.0, box_side);
    const double lambda = lambda_plus + lambda_minus;
    const double area = box_side * box_side;
    for (long s = 0; s < steps; ++s) {
        const double move = u01(rng);
        const size_t n = c.points.size();
        if (move < opt.p_birth) {
            if (lambda <= 0.0) continue;
            MarkedPoint p{upos(rng), upos(rng),
                          u01(rng) < lambda_plus / lambda ? 1 : -1};
            if (conflicts(c, p)) continue;  // chi = 0
            if (u01(rng) < lambda * area / static_cast<double>(n + 1)) c.points.push_back(p);
        } else if (move < opt.p_birth + opt.p_death) {
            if (n == 0) continue;
            const size_t i = static_cast<size_t>(u01(rng) * n) % n;
            if (u01(rng) < static_cast<double>(n) / (lambda * area)) {
                c.points[i] = c.points.back();
                c.points.pop_back();
            }
        } else {
            if (n == 0) continue;
            const size_t i = static_cast<size_t>(u01(rng) * n) % n;
            MarkedPoint p = c.points[i];
            p.mark = -p.mark;
            if (conflicts(c, p, static_cast<int>(i))) continue;
            const double ratio = p.mark == 1 ? (lambda_minus > 0.0 ? lambda_plus / lambda_minus
                                                                   : std::numeric_limits<double>::infinity())
                                             : (lambda_plus > 0.0 ? lambda_minus / lambda_plus : 0.0);
            if (u01(rng) < ratio) c.points[i] = p;
        }
    }
    return c;
}

ClusterDecomposition percolation(const MarkedCloud& cloud) {
    const size_t n = cloud.points.size();
    ClusterDecomposition out;
    out.cluster_id.assign(n, -1);
    if (n == 0) return out;
    const double cell = 2.0 * cloud.radius;
    const int ncell = std::max(1, static_cast<int>(std::floor(cloud.box_side / cell)));
    auto bucket_of = [&](const MarkedPoint& p) {
        const int bx = std::min(ncell - 1, std::max(0, static_cast<int>(p.x / cell)));
        const int by = std::min(ncell - 1, std::max(0, static_cast<int>(p.y / cell)));
        return bx * ncell + by;
    };
    std::vector<std::vector<int>> buckets(static_cast<size_t>(ncell) * ncell);
    for (size_t i = 0; i < n; ++i) buckets[bucket_of(cloud.points[i])].push_back(static_cast<int>(i));

    UnionFind uf(n);
    const double r2 = cell * cell;
    for (size_t i = 0; i < n; ++i) {
        const MarkedPoint& p = cloud.points[i];
        const int bx = std::min(ncell - 1, std::max(0, static_cast<int>(p.x / cell)));
        const int by = std::min(ncell - 1, std::max(0, static_cast<int>(p.y / cell)));
        for (int dx = -1; dx <= 1; ++dx) {
            for (int dy = -1; dy <= 1; ++dy) {
                const int cx = bx + dx, cy = by + dy;
                if (cx < 0 || cy < 0 || cx >= ncell || cy >= ncell) continue;
                for (int j : buckets[static_cast<size_t>(cx) * ncell + cy]) {
                    if (j <= static_cast<int>(i)) continue;
                    const MarkedPoint& q = cloud.points[j];
                    const double ddx = q.x - p.x, ddy = q.y - p.y;
                    if (ddx * ddx + ddy * ddy < r2) uf.unite(static_cast<int>(i), j);
                }
            }
        }
    }
    // consecutive ids, sizes, wall contact per cluster
    std::vector<int> remap(n, -1);
    int next = 0;
    std::vector<bool> left, right;
    for (size_t i = 0; i < n; ++i) {
        const int root = uf.find(static_cast<int>(i));
        if (remap[root] < 0) {
            remap[root] = next++;
            out.sizes.push_back(0);
            left.push_back(false);
            right.push_back(false);
        }
        const int id = remap[root];
        out.cluster_id[i] = id;
        ++out.sizes[id];
        if (cloud.points[i].x <= cloud.radius) left[id] = true;
        if (cloud.points[i].x >= cloud.box_side - cloud.radius) right[id] = true;
    }
    for (int id = 0; id < next; ++id) out.spanning = out.spanning || (left[id] && right[id]);
    return out;
}

bool sign_rigidity_check(const MarkedCloud& cloud) {
    if (!cloud.hardcore_valid()) {
        throw std::domain_error("sign_rigidity_check: cloud violates the hard-core constraint");
    }
    const ClusterDecomposition dec = percolation(cloud);
    std::vector<int> mark_of(dec.sizes.size(), 0);
    for (size_t i = 0; i < cloud.points.size(); ++i) {
        int& m = mark_of[dec.cluster_id[i]];
        if (m == 0) {
            m = cloud.points[i].mark;
        } else if (m != cloud.points[i].mark) {
            return false;
        }
    }
    return true;
}

double reentrance_time(double lambda_plus, double lambda_minus) {
    if (lambda_minus < 0.0 || lambda_plus < lambda_minus) {
        throw std::domain_error("reentrance_time: requires lambda_plus >= lambda_minus >= 0");
    }
    if (lambda_plus == lambda_minus) return std::numeric_limits<double>::infinity();
    return 0.5 * std::log((lambda_plus + lambda_minus) / (lambda_plus - lambda_minus));
}

MarkedCloud evolve_cloud(const MarkedCloud& cloud, double t, std::uint64_t seed) {
    if (!(t >= 0.0)) throw std::domain_error("evolve_cloud: t must be >= 0");
    const double po = 0.5 * (1.0 - std::exp(-2.0 * t));
    MarkedCloud out = cloud;
    std::mt19937_64 rng = make_rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (MarkedPoint& p : out.points) {
        if (u01(rng) < po) p.mark = -p.mark;
    }
    return out;
}

}  // namespace wiro
