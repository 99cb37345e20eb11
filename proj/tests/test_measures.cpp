#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetabound/measures.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

using namespace zetabound;

TEST_CASE("five-atom optimum reproduces the published solution") {
    const DeltaMeasure m = solve_five_delta();
    REQUIRE(m.centers.size() == 3);
    CHECK(m.centers[0] == 0.0);
    CHECK(m.centers[1] >= 0.355);
    CHECK(m.centers[1] <= 0.356);
    CHECK(m.centers[2] >= 0.875);
    CHECK(m.centers[2] <= 0.876);

    // weight multiset to three decimals, reported by ascending center
    std::vector<double> w = m.weights;
    std::sort(w.begin(), w.end());
    CHECK(std::fabs(w[0] - 0.0200) < 5e-4);
    CHECK(std::fabs(w[1] - 0.0491) < 5e-4);
    CHECK(std::fabs(w[2] - 0.0651) < 5e-4);
    for (double x : m.weights) CHECK(x >= 0.0);

    CHECK(m.cost() <= 0.5);
    CHECK(m.cost() > 0.49);  // the optimum sits just under 1/2
}

TEST_CASE("five-atom interpolation equalities hold tightly") {
    const DeltaMeasure m = solve_five_delta();
    for (double g : {0.0, 0.6, 1.0, -0.6, -1.0})
        CHECK(std::fabs(m.kernel_sum(g) - 1.0) < 1e-10);
}

TEST_CASE("five-atom covering certificate") {
    const DeltaMeasure m = solve_five_delta();
    const CoveringReport rep = covering_slack(m);
    CHECK(rep.holds);
    CHECK(rep.min_slack >= -1e-12);
    CHECK(rep.poly_degree == 10);
    CHECK(rep.roots_accounted == 10);
    // 0 with multiplicity 4, +-3/5 with multiplicity 2, +-1 simple
    CHECK(rep.root_certificate.find("node 0 x4") != std::string::npos);
    CHECK(rep.root_certificate.find("node 0.6 x2") != std::string::npos);
    CHECK(rep.root_certificate.find("node 1 x1") != std::string::npos);
    CHECK(rep.root_certificate.find("residual deg 0") != std::string::npos);
}

TEST_CASE("three-atom closed forms at the reference point") {
    const DeltaMeasure m = three_delta(1.0, 0.25, 1.0 / std::sqrt(2.0));
    CHECK(m.weights[0] == doctest::Approx(0.03206).epsilon(1e-3));
    CHECK(m.weights[1] == doctest::Approx(0.13699).epsilon(1e-3));
    CHECK(m.cost() == doctest::Approx(0.61207).epsilon(1e-4));

    // cost display at b^2 = a^2/2 agrees with the weight-based cost to 1e-12
    auto closed_cost = [](double a, double alpha) {
        const double a2 = a * a, al2 = alpha * alpha;
        return (24.0 * al2 * al2 + 18.0 * a2 * al2 + a2 * a2) /
               (4.0 * (10.0 * al2 + 3.0 * a2) * alpha);
    };
    CHECK(std::fabs(m.cost() - closed_cost(1.0, 0.25)) < 1e-12);
    for (double a : {0.3, 0.9, 1.7}) {
        for (double alpha : {0.1, 0.25, 0.6}) {
            const DeltaMeasure mm = three_delta(a, alpha, a / std::sqrt(2.0));
            CHECK(std::fabs(mm.cost() - closed_cost(a, alpha)) < 1e-12);
        }
    }

    CHECK_THROWS_AS(three_delta(1.0, 0.25, 0.0), DegenerateDenominator);
    CHECK_THROWS_AS(three_delta(-1.0, 0.25, 0.5), DomainError);
}

TEST_CASE("three-atom kernel equals 1 exactly at the construction nodes") {
    std::mt19937 rng(13);
    std::uniform_real_distribution<double> dist(0.05, 2.0);
    for (int i = 0; i < 100; ++i) {
        const double a = dist(rng), alpha = dist(rng) * 0.5, b = dist(rng);
        const DeltaMeasure m = three_delta(a, alpha, b);
        for (double g : {0.0, a, -a}) CHECK(std::fabs(m.kernel_sum(g) - 1.0) < 1e-9);
        CHECK(m.weights[1] > 0.0);  // outer weight always positive
    }
}

TEST_CASE("three-atom extra roots match the closed formula") {
    // residual quadratic roots: g^2 = (a^4 - 36 alpha^4) / (20 alpha^2 + 6 a^2)
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> dist(0.05, 1.5);
    for (int i = 0; i < 100; ++i) {
        const double a = dist(rng), alpha = 0.5 * dist(rng);
        const DeltaMeasure m = three_delta(a, alpha, a / std::sqrt(2.0));
        const double expected_g2 =
            (std::pow(a, 4) - 36.0 * std::pow(alpha, 4)) /
            (20.0 * alpha * alpha + 6.0 * a * a);

        // recover the residual quadratic numerically: kernel numerator over
        // the full product, deflated at 0 (twice) and +-a
        // D(g) = N(g) - P(g); roots beyond the nodes solve the residual.
        // Verify by direct evaluation: D(g*) ~ 0 for real g*, or certificate
        // says the residual has no window roots for complex ones.
        const CoveringReport rep = covering_slack(m);
        if (expected_g2 > 0.0) {
            const double gstar = std::sqrt(expected_g2);
            // D vanishes at the extra roots: check via kernel_sum(g*) = 1
            CHECK(std::fabs(m.kernel_sum(gstar) - 1.0) < 1e-10);
            CHECK(std::fabs(m.kernel_sum(-gstar) - 1.0) < 1e-10);
            if (gstar < a) CHECK(!rep.holds);
        } else {
            // complex pair: covering holds iff a^2 < 6 alpha^2
            CHECK(rep.holds == (a * a < 6.0 * alpha * alpha));
        }
    }
}

TEST_CASE("three-atom covering validity threshold") {
    const auto good = covering_slack(three_delta(0.5, 0.25, 0.5 / std::sqrt(2.0)));
    CHECK(good.holds);  // a^2 = 0.25 < 6 alpha^2 = 0.375

    const auto bad = covering_slack(three_delta(1.0, 0.25, 1.0 / std::sqrt(2.0)));
    CHECK(!bad.holds);  // real extra roots at +-0.3443 inside the window
    const double g2 = (1.0 - 36.0 * std::pow(0.25, 4)) / (20.0 * 0.0625 + 6.0);
    CHECK(std::sqrt(g2) == doctest::Approx(0.3443).epsilon(1e-3));
}

TEST_CASE("cost limit as the window shrinks") {
    // cost(a) -> 0.6 alpha with the b^2 = a^2/2 closure
    const double alpha = 0.25;
    const double c1 = three_delta(4e-3, alpha, 4e-3 / std::sqrt(2.0)).cost();
    const double c2 = three_delta(2e-3, alpha, 2e-3 / std::sqrt(2.0)).cost();
    const double c3 = three_delta(1e-3, alpha, 1e-3 / std::sqrt(2.0)).cost();
    CHECK(std::fabs(c3 - 0.6 * alpha) < 1e-4);
    // Richardson in a^2 sharpens the limit estimate
    const double extrap = c3 + (c3 - c2) / 3.0;
    CHECK(std::fabs(extrap - 0.6 * alpha) < 1e-7);
    CHECK(c1 > c2);
    CHECK(c2 > c3);  // increasing in a

    // monotone increasing on a coarser grid too
    double prev = 0.0;
    for (double a : {0.1, 0.4, 0.8, 1.2}) {
        const double c = three_delta(a, alpha, a / std::sqrt(2.0)).cost();
        CHECK(c > prev);
        prev = c;
    }
}

TEST_CASE("difference polynomial has negative leading coefficient") {
    // D(g) = sum_j c_j prod_{k!=j} q_k - prod_k q_k with monic quadratics:
    // the degree-10 coefficient is -1, so D -> -inf and the covering can
    // only hold between the outermost roots.
    const DeltaMeasure m = solve_five_delta();
    // reconstruct the leading behavior numerically: D(g)/g^10 -> -1
    auto D = [&m](double g) {
        const double a2 = m.alpha * m.alpha;
        double prod = 1.0, sum = 0.0;
        std::vector<double> pos{0.0, m.centers[1], -m.centers[1], m.centers[2], -m.centers[2]};
        std::vector<double> w{m.weights[0], m.weights[1], m.weights[1], m.weights[2],
                              m.weights[2]};
        for (double b : pos) prod *= a2 + (g - b) * (g - b);
        for (std::size_t j = 0; j < pos.size(); ++j) {
            double pj = w[j];
            for (std::size_t k = 0; k < pos.size(); ++k)
                if (k != j) pj *= a2 + (g - pos[k]) * (g - pos[k]);
            sum += pj;
        }
        return sum - prod;
    };
    const double g = 1.0e3;
    CHECK(D(g) / std::pow(g, 10) == doctest::Approx(-1.0).epsilon(1e-2));
    CHECK(D(g) < 0.0);
    CHECK(D(-g) < 0.0);
}

TEST_CASE("asymptotic multiplicity weight is close to one") {
    // at the five-atom optimum, sum_j c_j / (alpha^2 + b_j^2) = kernel_sum(0)
    const DeltaMeasure m = solve_five_delta();
    CHECK(m.kernel_sum(0.0) <= 1.0 + 1e-9);
    CHECK(m.kernel_sum(0.0) >= 1.0 - 1e-9);
}

TEST_CASE("rescaling law") {
    const DeltaMeasure m = solve_five_delta();

    const auto same = cost_and_rescale(m, 1.0);
    CHECK(same.rescaled.alpha == doctest::Approx(m.alpha).epsilon(1e-15));
    CHECK(same.rescaled.centers[1] == doctest::Approx(m.centers[1]).epsilon(1e-15));
    CHECK(same.cost == doctest::Approx(m.cost()).epsilon(1e-15));

    const auto doubled = cost_and_rescale(m, 2.0);
    CHECK(doubled.rescaled.window_a == 2.0);
    CHECK(doubled.rescaled.cost() == doctest::Approx(2.0 * m.cost()).epsilon(1e-12));
    CHECK(doubled.rescaled.cost() <= 1.0 + 1e-12);
    CHECK(covering_slack(doubled.rescaled).holds);

    // covering validity is scale invariant
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> dist(0.2, 1.5);
    for (int i = 0; i < 10; ++i) {
        const double a = dist(rng), alpha = 0.4 * dist(rng);
        const DeltaMeasure t = three_delta(a, alpha, a / std::sqrt(2.0));
        const bool before = covering_slack(t).holds;
        const auto scaled = cost_and_rescale(t, dist(rng));
        CHECK(covering_slack(scaled.rescaled).holds == before);
    }

    CHECK_THROWS_AS(cost_and_rescale(m, 0.0), DomainError);
}

TEST_CASE("covering rejects malformed measures") {
    DeltaMeasure bad = three_delta(1.0, 0.25, 0.5);
    bad.weights[0] = std::nan("");
    CHECK_THROWS_AS(covering_slack(bad), MalformedMeasure);
    bad = three_delta(1.0, 0.25, 0.5);
    bad.weights.pop_back();
    CHECK_THROWS_AS(covering_slack(bad), MalformedMeasure);
}

TEST_CASE("csv export shape") {
    const DeltaMeasure m = three_delta(1.0, 0.25, 0.5);
    std::ostringstream out;
    write_measure_csv(out, m);
    const std::string s = out.str();
    CHECK(s.find("alpha,0.25\n") != std::string::npos);
    CHECK(s.find("window_a,1\n") != std::string::npos);
    CHECK(s.find("center,weight\n") != std::string::npos);
    CHECK(std::count(s.begin(), s.end(), '\n') == 5);  // 3 header + 2 atoms
}
