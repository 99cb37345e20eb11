#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zetabound/bounds.hpp"
#include "zetabound/riemann.hpp"
#include "zetabound/zerodata.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace zetabound;

namespace {
constexpr double kPi = std::numbers::pi;
const FieldInvariants kQ = FieldInvariants::rationals();

FieldInvariants sqrt5_field() { return build_field(2, 2, 0, std::log(5.0)); }

const ZeroTable& load_table() {
    static ZeroTable t = load_zeros(std::string(ZETABOUND_DATA_DIR) + "/zeta_zeros_100k.txt",
                                    FieldInvariants::rationals());
    return t;
}
}  // namespace

TEST_CASE("trudgian constants satisfy their defining inequality") {
    CHECK(TrudgianConstants::d2 >= 6.333 + 0.317 * std::log(2.0 * kPi));
}

TEST_CASE("trudgian_count reference values") {
    const auto b100 = trudgian_count(kQ, 100.0);
    CHECK(b100.main == doctest::Approx(56.26).epsilon(1e-3));
    CHECK(b100.remainder_bound == doctest::Approx(11.27).epsilon(1e-3));
    // 29 zeros of zeta below height 100, both signs counted
    CHECK(b100.main - b100.remainder_bound <= 58.0);
    CHECK(58.0 <= b100.main + b100.remainder_bound);

    CHECK(trudgian_count(kQ, 2.0 * kPi * std::numbers::e).main ==
          doctest::Approx(0.0).epsilon(1e-12));

    const auto s5 = sqrt5_field();
    const auto b50 = trudgian_count(s5, 50.0);
    CHECK(b50.main ==
          doctest::Approx((50.0 / kPi) *
                          (2.0 * std::log(50.0 / (2.0 * kPi * std::numbers::e)) +
                           std::log(5.0)))
              .epsilon(1e-12));

    CHECK_THROWS_AS(trudgian_count(kQ, 0.5), DomainError);
}

TEST_CASE("unit window count bound") {
    CHECK(unit_window_count_bound(kQ, 100.0) == doctest::Approx(12.17).epsilon(1e-3));
    CHECK(unit_window_count_bound(kQ, 0.5) == doctest::Approx(8.68).epsilon(1e-3));
    CHECK(unit_window_count_bound(kQ, -100.0) ==
          unit_window_count_bound(kQ, 100.0));  // even in t

    // dominates the empirical unit-window count (which here is 0)
    const auto& table = load_table();
    CHECK(empirical_count(table, 100.0, 1.0) == 0);
}

TEST_CASE("zero_sum_bound reference values and dominance") {
    CHECK(zero_sum_bound(kQ, 2.0, 100.0, 0.25) == doctest::Approx(47.55).epsilon(1e-3));
    const double expect =
        (std::asinh(1.0) / kPi + 0.317) * w_term(kQ, 50.0) + (6.9157 + 3.482);
    CHECK(zero_sum_bound(kQ, 1.0, 50.0, 1.0) == doctest::Approx(expect).epsilon(1e-12));

    // empirical dominance at heights with zeros nearby (98.831 and 101.318
    // fall inside the +-2 window around 100)
    const auto& table = load_table();
    for (double t0 : {50.0, 100.0, 500.0, 1000.0}) {
        double s = 0.0;
        for (double g : table.ordinates)
            if (std::fabs(g - t0) <= 2.0) s += 1.0 / std::hypot(0.25, g - t0);
        CHECK(zero_sum_bound(kQ, 2.0, t0, 0.25) >= s);
    }

    CHECK_THROWS_AS(zero_sum_bound(kQ, 2.0, 2.5, 0.25), DomainError);
    CHECK_THROWS_AS(zero_sum_bound(kQ, -1.0, 100.0, 0.25), DomainError);
    CHECK_THROWS_AS(zero_sum_bound(kQ, 2.0, 100.0, 0.0), DomainError);
}

TEST_CASE("contour term bounds") {
    // exponential suppression of the pole term
    const double t2 = contour_term_bound(ContourTerm::II, kQ, {0.75, 100.0, 1e-3});
    CHECK(t2 < 1e-60);

    const double t1 = contour_term_bound(ContourTerm::I, kQ, {0.75, 0.0, 0.01});
    CHECK(t1 == doctest::Approx(16.79).epsilon(1e-3));

    const double Q = 35.60517;  // rational field at t = 100
    const double t4 = contour_term_bound(ContourTerm::IV, kQ, {0.75, 100.0, 1.0 / (Q * Q)});
    CHECK(t4 == doctest::Approx(1.947).epsilon(1e-3));

    CHECK_THROWS_AS(contour_term_bound(ContourTerm::I, kQ, {0.4, 0.0, 0.01}), DomainError);
    CHECK_THROWS_AS(contour_term_bound(ContourTerm::III, kQ, {0.75, 5.0, 0.01}), DomainError);
    CHECK_THROWS_AS(contour_term_bound(ContourTerm::I, kQ, {0.75, 0.0, 1.5}), DomainError);
}

TEST_CASE("sharp zero-sum contour form is dominated by the displayed one") {
    // the degree >= 1 slack in the displayed constants absorbs the asinh
    // simplification and the d3 rounding
    for (double sigma : {0.51, 0.6, 0.75, 0.9, 0.99}) {
        for (double t : {10.0, 50.0, 1000.0}) {
            for (double delta : {1e-6, 1e-3, 0.5}) {
                const ContourParams p{sigma, t, delta};
                CHECK(contour_zero_sum_sharp(kQ, p) <=
                      contour_term_bound(ContourTerm::III, kQ, p) * (1.0 + 1e-12));
                const auto s5 = sqrt5_field();
                CHECK(contour_zero_sum_sharp(s5, p) <=
                      contour_term_bound(ContourTerm::III, s5, p) * (1.0 + 1e-12));
            }
        }
    }
}

TEST_CASE("zeta_logderiv_bound reference values") {
    const auto b = zeta_logderiv_bound(kQ, 0.75, 100.0);
    CHECK(b.total == doctest::Approx(45.14).epsilon(1e-3));
    CHECK(b.middle_term == doctest::Approx(41.00).epsilon(1e-3));
    CHECK(b.degree_term == doctest::Approx(4.14).epsilon(1e-3));
    CHECK(b.main_term == 0.0);

    const auto b2 = zeta_logderiv_bound(kQ, 0.6, 10.0);
    // middle coefficient uses log(1/0.2)/pi = 0.5123
    CHECK(std::log(5.0) / kPi == doctest::Approx(0.5123).epsilon(1e-3));
    const double coeff = 1.0 / 0.4 + std::log(5.0) / kPi + 0.64 / 0.2 + 1.37;
    CHECK(b2.middle_term == doctest::Approx(coeff * std::pow(b2.Q, 0.8)).epsilon(1e-12));

    CHECK_THROWS_AS(zeta_logderiv_bound(kQ, 0.75, 5.0), DomainError);
    CHECK_THROWS_AS(zeta_logderiv_bound(kQ, 1.0, 100.0), DomainError);
}

TEST_CASE("zeta_logderiv_bound dominates the direct oracle") {
    for (double sigma : {0.6, 0.75, 0.9}) {
        for (double t : {10.0, 20.0, 50.0, 100.0, 500.0}) {
            const auto ze = zeta_em(sigma, t, true);
            const CertValue mod = (ze.derivative / ze.value).abs();
            CHECK(mod.upper() <= zeta_logderiv_bound(kQ, sigma, t).total);
        }
    }
}

TEST_CASE("f_tilde reference values") {
    const auto f1 = f_tilde(kQ, 0.75, 10.0);
    CHECK(f1.Q == doctest::Approx(33.3026).epsilon(1e-5));
    CHECK(f1.total == doctest::Approx(92.88).epsilon(1e-3));
    CHECK(f1.degree_term == doctest::Approx(-19.72).epsilon(1e-10));

    // synthetic Q = 100 via T = e^69 exactly: Q = 69 + 31
    const auto f2 = f_tilde(kQ, 0.75, std::exp(69.0));
    CHECK(f2.Q == doctest::Approx(100.0).epsilon(1e-12));
    CHECK(f2.total == doctest::Approx(100.0 + 137.41 - 19.72).epsilon(1e-3));

    CHECK_THROWS_AS(f_tilde(kQ, 0.75, 9.9), DomainError);
}

TEST_CASE("f_tilde dominates the assembled explicit-representation bound") {
    // 2 |zeta'/zeta| bound + log(1/pi) + Re(2/s + 2/(s-1)) + digamma log bound
    const double sigma = 0.75, t = 100.0;
    const auto strip = zeta_logderiv_bound(kQ, sigma, t);
    const double pole_part =
        2.0 * sigma / (sigma * sigma + t * t) +
        2.0 * (sigma - 1.0) / ((sigma - 1.0) * (sigma - 1.0) + t * t);
    const double digamma_part = std::log(std::hypot(sigma / 2.0 - 0.5, t / 2.0));
    const double assembled =
        2.0 * strip.total + std::log(1.0 / kPi) + pole_part + digamma_part;
    CHECK(f_tilde(kQ, sigma, t).total >= assembled);
}

TEST_CASE("bound_window reference values and displayed corollary forms") {
    const auto b = bound_window(kQ, 11.0, 1.0);
    CHECK(b.total == doctest::Approx(46.545).epsilon(1e-3));
    const double Q = conductor_q(kQ, 11.0);
    CHECK(b.total <= 0.5 * Q + 6.9 * std::sqrt(Q) - 9.0);
    CHECK(0.5 * Q + 6.9 * std::sqrt(Q) - 9.0 == doctest::Approx(47.58).epsilon(1e-3));

    const auto bh = bound_window(kQ, 10.5, 0.5);
    const double Qh = conductor_q(kQ, 10.5);
    CHECK(bh.total <= 0.25 * Qh + (1.4 + 2.2) * std::pow(Qh, 0.75) - 4.0);

    CHECK_THROWS_AS(bound_window(kQ, 9.0, 1.0), DomainError);
    CHECK_THROWS_AS(bound_window(kQ, 11.9, 2.0), DomainError);
    CHECK_THROWS_AS(bound_window(kQ, 100.0, 0.0), DomainError);
}

TEST_CASE("bound_multiplicity reference values") {
    const auto m = bound_multiplicity(kQ, 10.0, 0.75);
    CHECK(m.total == doctest::Approx(13.93).epsilon(1e-3));
    const double Q = conductor_q(kQ, 10.0);
    const double displayed = 0.15 * Q + 2.1 * std::sqrt(Q) - 2.9;
    CHECK(displayed == doctest::Approx(14.21).epsilon(1e-3));
    CHECK(m.total <= displayed);

    // finite positive just inside the strip
    const auto edge = bound_multiplicity(kQ, 10.0, 0.51);
    CHECK(edge.total > 0.0);
    CHECK(std::isfinite(edge.total));

    // the minimum over sigma is attained strictly inside (1/2, 1)
    double best = 1e300, best_sigma = 0.0;
    for (int i = 51; i <= 99; ++i) {
        const double s = i / 100.0;
        const double v = bound_multiplicity(kQ, 10.0, s).total;
        if (v < best) {
            best = v;
            best_sigma = s;
        }
    }
    CHECK(best_sigma > 0.51);
    CHECK(best_sigma < 0.99);
}

TEST_CASE("corollary1_bound value and relaxation property") {
    CHECK(corollary1_bound(kQ, 10.0) == doctest::Approx(17.74).epsilon(1e-3));

    // at sigma = (1 + log L / log Q)/2 the corollary relaxes the multiplicity
    // bound, so it must dominate it
    for (double T : {10.0, 100.0, 1e6}) {
        const double Q = conductor_q(kQ, T);
        const double L = std::log(Q);
        const double eps = std::log(L) / L;
        const double sigma = (1.0 + eps) / 2.0;
        CHECK(corollary1_bound(kQ, T) >= bound_multiplicity(kQ, T, sigma).total);
    }
    const auto s5 = sqrt5_field();
    CHECK(std::isfinite(corollary1_bound(s5, 100.0)));
    CHECK(corollary1_bound(s5, 100.0) > corollary1_bound(kQ, 100.0));

    CHECK_THROWS_AS(corollary1_bound(kQ, 9.0), DomainError);
}

TEST_CASE("corollary2 subchecks at the range ends") {
    const auto low = corollary2_margin(23.0);
    CHECK(low.subcheck1);
    CHECK(low.subcheck2);
    CHECK(low.bound_ratio <= 1.0);

    const auto high = corollary2_margin(1e55);
    CHECK(high.subcheck1);
    CHECK(high.subcheck2);

    CHECK_THROWS_AS(corollary2_margin(20.0), DomainError);
}

TEST_CASE("corollary2 L-threshold location by bisection") {
    CHECK(cor2_l_threshold_ok(162546.6));
    CHECK(!cor2_l_threshold_ok(162547.0));
    double lo = 1e5, hi = 2e5;
    REQUIRE(cor2_l_threshold_ok(lo));
    REQUIRE(!cor2_l_threshold_ok(hi));
    while (hi - lo > 1e-4) {
        const double mid = 0.5 * (lo + hi);
        (cor2_l_threshold_ok(mid) ? lo : hi) = mid;
    }
    CHECK(std::fabs(0.5 * (lo + hi) - 162546.6) <= 0.1);
}

TEST_CASE("subcheck1 truth boundary brackets the published range") {
    // increasing branch: the expression rises through 2 somewhere past the
    // interior minimum near L ~ 21
    double lo = 21.0, hi = 1000.0;
    REQUIRE(cor2_subcheck1(lo));
    REQUIRE(!cor2_subcheck1(hi));
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        (cor2_subcheck1(mid) ? lo : hi) = mid;
    }
    const double L_star = 0.5 * (lo + hi);
    // the published range endpoint log T = 1e55 corresponds to L ~ 126.6,
    // safely below the true boundary
    CHECK(L_star > std::log(1e55 + 31.0));
    CHECK(L_star == doctest::Approx(128.87).epsilon(1e-3));

    // the expression's interior maximum near L ~ 5 stays below 2 as well
    for (double L = 3.0; L < 21.0; L += 0.01) CHECK(cor2_l_expression(L) < 2.0);
}

TEST_CASE("all bound outputs increase with log_disc") {
    std::mt19937 rng(41);
    std::uniform_real_distribution<double> d_dist(0.0, 30.0);
    std::uniform_real_distribution<double> t_dist(12.0, 500.0);
    std::uniform_real_distribution<double> s_dist(0.55, 0.95);
    for (int i = 0; i < 100; ++i) {
        const double d = d_dist(rng), T = t_dist(rng), s = s_dist(rng);
        const auto f_lo = build_field(2, 0, 1, d);
        const auto f_hi = build_field(2, 0, 1, d + 0.7);
        CHECK(trudgian_count(f_hi, T).main > trudgian_count(f_lo, T).main);
        CHECK(unit_window_count_bound(f_hi, T) > unit_window_count_bound(f_lo, T));
        CHECK(zero_sum_bound(f_hi, 2.0, T, 0.25) > zero_sum_bound(f_lo, 2.0, T, 0.25));
        CHECK(zeta_logderiv_bound(f_hi, s, T).total > zeta_logderiv_bound(f_lo, s, T).total);
        CHECK(f_tilde(f_hi, s, T).total > f_tilde(f_lo, s, T).total);
        CHECK(bound_window(f_hi, T, 1.0).total > bound_window(f_lo, T, 1.0).total);
        CHECK(bound_multiplicity(f_hi, T, s).total > bound_multiplicity(f_lo, T, s).total);
        CHECK(corollary1_bound(f_hi, T) > corollary1_bound(f_lo, T));
    }
}

TEST_CASE("window bound main term dominates as Q grows, fixed a") {
    // With log_disc pushed far up, 2 bound_window / (a Q) -> 1; the
    // subleading Q^{1-a/2} block decays like Q^{-a/2}.
    for (double a : {0.2, 0.1, 0.05}) {
        const double T = 11.0;
        double prev_gap = 1e300;
        for (double logd : {1e100, 1e200, 1e300}) {
            const auto f = build_field(1, 1, 0, logd);
            const auto b = bound_window(f, T, a);
            const double gap = std::fabs(2.0 * b.total / (a * b.Q) - 1.0);
            CHECK(gap < prev_gap * 0.9 + 1e-14);
            prev_gap = gap;
        }
        const auto f = build_field(1, 1, 0, 1e300);
        const double r = 2.0 * bound_window(f, T, a).total / (a * conductor_q(f, T));
        CHECK(r == doctest::Approx(1.0).epsilon(1e-3));
    }
}
