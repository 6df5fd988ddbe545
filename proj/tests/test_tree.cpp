#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "wiro/tree.hpp"

using namespace wiro;

TEST_CASE("recursion step closed forms") {
    const SpinMeasure a{0.2, 0.3, 0.5};

    // beta = 0: one step lands on the a-priori ratios from anywhere
    for (const BoundaryLaw l : {BoundaryLaw{1.0, 1.0}, BoundaryLaw{0.1, 7.0}}) {
        const BoundaryLaw out = recursion_step(l, {3, 0.0, a});
        CHECK(out.l_minus == doctest::Approx(0.2 / 0.3).epsilon(1e-13));
        CHECK(out.l_plus == doctest::Approx(0.5 / 0.3).epsilon(1e-13));
    }

    // uniform alpha, k = 2, beta = 1, start (1,1)
    const BoundaryLaw step = recursion_step({1.0, 1.0}, {2, 1.0, SpinMeasure::uniform()});
    const double expect = std::pow((2.0 + std::exp(-1.0)) / 3.0, 2);
    CHECK(step.l_minus == doctest::Approx(expect).epsilon(1e-12));
    CHECK(step.l_plus == doctest::Approx(expect).epsilon(1e-12));

    // equivariance under the spin swap
    const TreeParams p{2, 2.5, a};
    const TreeParams ps{2, 2.5, SpinMeasure{0.5, 0.3, 0.2}};
    const BoundaryLaw l{0.4, 1.7};
    const BoundaryLaw o = recursion_step(l, p);
    const BoundaryLaw os = recursion_step({l.l_plus, l.l_minus}, ps);
    CHECK(o.l_minus == doctest::Approx(os.l_plus).epsilon(1e-12));
    CHECK(o.l_plus == doctest::Approx(os.l_minus).epsilon(1e-12));

    CHECK_THROWS_AS(recursion_step({-1.0, 1.0}, p), std::invalid_argument);
    CHECK_THROWS_AS(recursion_step({1.0, 1.0}, TreeParams{0, 1.0, a}), std::invalid_argument);
    CHECK_THROWS_AS(recursion_step({1.0, 1.0}, TreeParams{2, 1.0, {0.5, 0.0, 0.5}}),
                    std::domain_error);
}

TEST_CASE("fixed points") {
    const SpinMeasure a{0.2, 0.3, 0.5};
    const std::vector<BoundaryLaw> unique = find_fixed_points({2, 0.0, a});
    REQUIRE(unique.size() == 1);
    CHECK(unique[0].l_minus == doctest::Approx(0.2 / 0.3).epsilon(1e-10));
    CHECK(unique[0].l_plus == doctest::Approx(0.5 / 0.3).epsilon(1e-10));

    const TreeParams deep{2, 3.0, SpinMeasure::symmetric(0.05)};
    const std::vector<BoundaryLaw> multi = find_fixed_points(deep);
    CHECK(multi.size() >= 3);
    bool symmetric_found = false;
    for (const BoundaryLaw& l : multi) {
        const BoundaryLaw s = recursion_step(l, deep);
        CHECK(std::fabs(s.l_minus - l.l_minus) < 1e-8 * std::max(1.0, l.l_minus));
        CHECK(std::fabs(s.l_plus - l.l_plus) < 1e-8 * std::max(1.0, l.l_plus));
        symmetric_found = symmetric_found || std::fabs(l.l_minus - l.l_plus) < 1e-8;
    }
    CHECK(symmetric_found);
}

TEST_CASE("hole density") {
    // beta = 0: the root marginal is just alpha
    const SpinMeasure a{0.2, 0.3, 0.5};
    CHECK(hole_density({0.7, 1.9}, {3, 0.0, a}) == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(hole_density({1.0, 1.0}, {2, 0.0, SpinMeasure::uniform()}) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK_THROWS_AS(hole_density({0.0, 1.0}, TreeParams{2, 1.0, a}), std::invalid_argument);
}

TEST_CASE("critical onset scan") {
    const std::vector<double> ladder = {0.05, 0.1};
    const std::vector<CriticalRow> k2 = critical_scan(2, ladder, 0.0, 12.0);
    REQUIRE(k2.size() == 2);
    CHECK(k2[0].alpha0 == doctest::Approx(0.05));
    CHECK(k2[1].beta_crit > k2[0].beta_crit);  // more holes need stronger repulsion

    // bracket: multiplicity really switches at the reported beta
    for (const CriticalRow& row : k2) {
        TreeParams p{row.k, row.beta_crit - 0.02, SpinMeasure::symmetric(row.alpha0)};
        CHECK(find_fixed_points(p).size() == 1);
        p.beta = row.beta_crit + 0.02;
        CHECK(find_fixed_points(p).size() > 1);
    }

    // stable under a different initial bracket
    const std::vector<CriticalRow> k2b = critical_scan(2, ladder, 0.0, 11.0);
    REQUIRE(k2b.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(std::fabs(k2b[i].beta_crit - k2[i].beta_crit) < 2e-4);
    }

    // higher branching orders onset earlier
    const std::vector<CriticalRow> k3 = critical_scan(3, ladder, 0.0, 12.0);
    REQUIRE(k3.size() == 2);
    for (size_t i = 0; i < 2; ++i) {
        CHECK(k3[i].beta_crit < k2[i].beta_crit);
    }
}
