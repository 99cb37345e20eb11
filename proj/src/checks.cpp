#include "zetabound/checks.hpp"

#include "zetabound/bounds.hpp"
#include "zetabound/measures.hpp"
#include "zetabound/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace zetabound {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

CheckResult make(const std::string& name, bool pass, const std::string& detail) {
    return {name, pass, false, detail};
}

}  // namespace

// ---------------------------------------------------------------------------
// specfun suite
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_suite_specfun() {
    std::vector<CheckResult> out;

    {  // reflection |Gamma(s) Gamma(1-s)| = pi / |sin pi s|
        std::mt19937 rng(101);
        std::uniform_real_distribution<double> re(-8.0, 8.0), im(0.05, 8.0);
        bool ok = true;
        double worst = 0.0;
        for (int i = 0; i < 200; ++i) {
            const double x = re(rng), y = im(rng);
            const CertValue lhs = eval_gamma(GammaKind::AbsGamma, x, y) *
                                  eval_gamma(GammaKind::AbsGamma, 1.0 - x, -y);
            const double rhs =
                kPi / std::sqrt(std::sin(kPi * x) * std::sin(kPi * x) +
                                std::sinh(kPi * y) * std::sinh(kPi * y));
            const double err = std::fabs(lhs.mid - rhs);
            worst = std::max(worst, err / std::max(rhs, 1e-300));
            ok = ok && err <= lhs.rad + 1e-10 * rhs;
        }
        out.push_back(make("reflection-identity", ok, fmt("worst rel dev %.2e", worst)));
    }

    {  // recurrence |Gamma(s+1)| = |s| |Gamma(s)|
        std::mt19937 rng(102);
        std::uniform_real_distribution<double> re(-8.0, 8.0), im(0.05, 8.0);
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            const double x = re(rng), y = im(rng);
            const CertValue a = eval_gamma(GammaKind::AbsGamma, x + 1.0, y);
            const CertValue b = eval_gamma(GammaKind::AbsGamma, x, y) * std::hypot(x, y);
            ok = ok && std::fabs(a.mid - b.mid) <= a.rad + b.rad + 1e-12;
        }
        out.push_back(make("recurrence-identity", ok, "200 random points"));
    }

    {  // vertical line integrals against their constants
        const CertValue q = kernel_integral(KernelKind::AbsLine, -0.25, 0.0);
        const CertValue h = kernel_integral(KernelKind::AbsLine, -0.75, 0.0);
        bool ok = q.upper() <= 4.73 && h.upper() <= 4.43;
        for (int i = 0; i <= 10 && ok; ++i)
            ok = kernel_integral(KernelKind::AbsLine, -0.75 + 0.05 * i, 0.0).upper() <= 4.73;
        out.push_back(make("line-integral-constants", ok,
                           fmt("at -1/4: %.6f <= 4.73, at -3/4: %.6f <= 4.43", q.mid, h.mid)));
    }

    {  // envelope kernel values at t = 10
        const CertValue F = envelope_kernel_integral(KernelKind::QuarterPole, 10.0);
        const CertValue F1 = envelope_kernel_integral(KernelKind::Lorentz, 10.0, 1);
        const CertValue F2 = envelope_kernel_integral(KernelKind::Lorentz, 10.0, 2);
        const bool ok = F.lower() >= 0.0315 && F.upper() <= 0.0325 && F1.lower() >= 0.0125 &&
                        F1.upper() <= 0.0131 && F2.lower() >= 0.0063 && F2.upper() <= 0.0067;
        out.push_back(make("envelope-kernel-values", ok,
                           fmt("F(10)=%.6f F1(10)=%.6f F2(10)=%.6f", F.mid, F1.mid, F2.mid)));
    }

    {  // kernel values at t = 10 dominate later t
        bool ok = true;
        const double q10 = kernel_integral(KernelKind::QuarterPole, -0.25, 10.0).upper();
        const double l10 = kernel_integral(KernelKind::Lorentz, -0.25, 10.0, 1).upper();
        const double l20 = kernel_integral(KernelKind::Lorentz, -0.25, 10.0, 2).upper();
        for (double t : {15.0, 20.0, 50.0}) {
            ok = ok && kernel_integral(KernelKind::QuarterPole, -0.25, t).upper() <= q10;
            ok = ok && kernel_integral(KernelKind::Lorentz, -0.25, t, 1).upper() <= l10;
            ok = ok && kernel_integral(KernelKind::Lorentz, -0.25, t, 2).upper() <= l20;
        }
        out.push_back(make("kernel-max-at-t10", ok, "sampled t in {15, 20, 50}"));
    }

    {  // |Gamma| > 0.4 on the boundary of [-3/4,-1/4] x [0,1]
        bool ok = true;
        double lowest = 1e300;
        for (int i = 0; i <= 50; ++i) {
            const double u = -0.75 + 0.01 * i;
            lowest = std::min({lowest, eval_gamma(GammaKind::AbsGamma, u, 0.0).lower(),
                               eval_gamma(GammaKind::AbsGamma, u, 1.0).lower()});
        }
        for (int i = 0; i <= 100; ++i) {
            const double v = 0.01 * i;
            lowest = std::min({lowest, eval_gamma(GammaKind::AbsGamma, -0.75, v).lower(),
                               eval_gamma(GammaKind::AbsGamma, -0.25, v).lower()});
        }
        ok = lowest > 0.4;
        out.push_back(make("gamma-min-on-unit-box", ok, fmt("boundary min %.4f > 0.4", lowest)));
    }

    {  // Stirling envelope dominates |Gamma| on the kernel strip
        std::mt19937 rng(103);
        std::uniform_real_distribution<double> u_dist(-0.75, -0.25), v_dist(0.5, 40.0);
        bool ok = true;
        for (int i = 0; i < 100; ++i) {
            const double u = u_dist(rng), v = v_dist(rng);
            ok = ok && stirling_envelope(u, v).upper() >=
                           eval_gamma(GammaKind::AbsGamma, u, v).lower();
        }
        out.push_back(make("stirling-envelope-dominates", ok, "100 random (u, v)"));
    }

    {  // log-weight reduction inequality
        bool ok = true;
        for (double u : {-0.75, -0.5, -0.25})
            for (double t : {10.0, 20.0, 40.0}) ok = ok && log_weight_reduction(u, t).holds;
        out.push_back(make("log-weight-reduction", ok, "u grid x t in {10, 20, 40}"));
    }

    return out;
}

// ---------------------------------------------------------------------------
// lemmas suite
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_suite_lemmas() {
    std::vector<CheckResult> out;

    {  // digamma log bound over the whole stated region
        bool ok = true;
        long count = 0;
        double min_margin = 1e300;
        for (int si = 0; si <= 20; ++si) {
            const double sigma = 0.25 * si;
            for (double t = sigma + 2.0; t <= 50.0 + 1e-9; t += 0.25) {
                const auto r = check_digamma_log_bound(sigma, t);
                ok = ok && r.holds;
                min_margin = std::min(min_margin, r.margin.lower());
                ++count;
            }
        }
        out.push_back(make("digamma-log-bound-grid", ok,
                           fmt("%.0f points, min margin %.3e", double(count), min_margin)));
    }

    {  // |Gamma(s) e^{pi s / 2}| <= sqrt(2 pi) on the boundary of
       // {Re in [0, 1/2], Im >= 10}: stride 0.05 to Im = 200, coarser beyond
        const double cap = std::sqrt(2.0 * kPi);
        bool ok = true;
        double worst = 0.0;
        auto probe = [&](double sig, double t) {
            const double v =
                (eval_gamma(GammaKind::AbsGamma, sig, t) * std::exp(kPi * sig / 2.0)).upper();
            worst = std::max(worst, v);
            ok = ok && v <= cap;
        };
        for (int i = 0; i <= 10; ++i) probe(0.05 * i, 10.0);
        for (int i = 0; 10.0 + 0.05 * i <= 200.0; ++i) {
            probe(0.0, 10.0 + 0.05 * i);
            probe(0.5, 10.0 + 0.05 * i);
        }
        for (double t : {250.0, 400.0, 700.0, 1000.0})  // decays like e^{-pi t/2}
            for (int i = 0; i <= 10; ++i) probe(0.05 * i, t);
        out.push_back(
            make("weighted-gamma-strip-boundary", ok, fmt("max %.4f <= %.4f", worst, cap)));
    }

    {  // Gamma_K log-derivative difference, random fields and heights
        std::mt19937 rng(104);
        std::uniform_real_distribution<double> t_dist(-80.0, 80.0);
        std::uniform_int_distribution<int> emb(0, 5);
        std::uniform_real_distribution<double> d_dist(0.0, 60.0);
        bool ok = true;
        for (int i = 0; i < 1000; ++i) {
            const int r1 = emb(rng), r2 = emb(rng);
            if (r1 + 2 * r2 == 0) continue;
            const auto f = build_field(r1 + 2 * r2, r1, r2, d_dist(rng));
            ok = ok && gammaK_logderiv_diff(f, t_dist(rng)).holds;
        }
        out.push_back(make("gammaK-logderiv-difference", ok, "1000 random (field, t)"));
    }

    {  // smoothed Chebyshev bound for every integer x <= 1e5
        const PrimeTable pt(100000);
        bool ok = true;
        double psi = 0.0, psi1 = 0.0;
        double worst_ratio = 0.0;
        for (int x = 1; x <= 100000; ++x) {
            psi += pt.mangoldt(static_cast<std::size_t>(x));
            const double lhs = std::fabs(psi1 - 0.5 * static_cast<double>(x) * x);
            const double rhs = 0.0462 * std::pow(static_cast<double>(x), 1.5) + 1.838 * x;
            worst_ratio = std::max(worst_ratio, lhs / rhs);
            ok = ok && lhs <= rhs;
            psi1 += psi;
        }
        out.push_back(
            make("chebyshev-psi1-bound", ok, fmt("x <= 1e5, worst ratio %.4f", worst_ratio)));
    }

    {  // weighted prime power sum on a 5 x 5 grid
        const PrimeTable pt(30000);
        bool ok = true;
        double worst_ratio = 0.0;
        for (double sigma : {0.55, 0.65, 0.75, 0.85, 0.95}) {
            for (double delta : {0.002, 0.005, 0.01, 0.02, 0.05}) {
                const auto r = prime_exp_sum(sigma, delta, pt);
                worst_ratio = std::max(worst_ratio, r.lhs.upper() / r.rhs);
                ok = ok && r.holds;
            }
        }
        out.push_back(
            make("prime-exp-sum-grid", ok, fmt("5x5 grid, worst ratio %.4f", worst_ratio)));
    }

    {  // sharp contour zero-sum form dominated by the displayed one
        bool ok = true;
        const auto q = FieldInvariants::rationals();
        for (double sigma : {0.51, 0.6, 0.75, 0.9, 0.99})
            for (double t : {10.0, 50.0, 1000.0})
                for (double delta : {1e-6, 1e-3, 0.5}) {
                    const ContourParams p{sigma, t, delta};
                    ok = ok && contour_zero_sum_sharp(q, p) <=
                                   contour_term_bound(ContourTerm::III, q, p) * (1.0 + 1e-12);
                }
        out.push_back(make("contour-sharp-vs-displayed", ok, "45 parameter triples"));
    }

    return out;
}

// ---------------------------------------------------------------------------
// measures suite
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_suite_measures() {
    std::vector<CheckResult> out;

    DeltaMeasure m;
    try {
        m = solve_five_delta();
    } catch (const Error& e) {
        out.push_back(make("five-delta-solve", false, e.what()));
        return out;
    }
    {
        const bool ok = m.centers[1] >= 0.355 && m.centers[1] <= 0.356 &&
                        m.centers[2] >= 0.875 && m.centers[2] <= 0.876 && m.cost() <= 0.5;
        out.push_back(make("five-delta-solve", ok,
                           fmt("b1=%.6f b2=%.6f cost=%.6f", m.centers[1], m.centers[2],
                               m.cost())));
    }
    {
        std::vector<double> w = m.weights;
        std::sort(w.begin(), w.end());
        const bool ok = std::fabs(w[0] - 0.0200) < 5e-4 && std::fabs(w[1] - 0.0491) < 5e-4 &&
                        std::fabs(w[2] - 0.0651) < 5e-4;
        out.push_back(
            make("five-delta-weights", ok, fmt("{%.4f, %.4f, %.4f}", w[0], w[1], w[2])));
    }
    {
        const auto rep = covering_slack(m);
        out.push_back(make("five-delta-covering", rep.holds,
                           fmt("min slack %.2e, %.0f of %.0f roots accounted", rep.min_slack,
                               double(rep.roots_accounted), double(rep.poly_degree)) +
                               " | " + rep.root_certificate));
    }
    {
        bool ok = true;
        std::mt19937 rng(105);
        std::uniform_real_distribution<double> dist(0.05, 1.5);
        for (int i = 0; i < 100; ++i) {
            const double a = dist(rng), alpha = 0.5 * dist(rng);
            const auto t = three_delta(a, alpha, a / std::sqrt(2.0));
            const double closed = (24.0 * std::pow(alpha, 4) + 18.0 * a * a * alpha * alpha +
                                   std::pow(a, 4)) /
                                  (4.0 * (10.0 * alpha * alpha + 3.0 * a * a) * alpha);
            ok = ok && std::fabs(t.cost() - closed) < 1e-12;
            for (double g : {0.0, a, -a}) ok = ok && std::fabs(t.kernel_sum(g) - 1.0) < 1e-9;
        }
        out.push_back(make("three-delta-identities", ok, "100 random (a, alpha)"));
    }
    {
        const double alpha = 0.25;
        const double c = three_delta(1e-3, alpha, 1e-3 / std::sqrt(2.0)).cost();
        const bool ok = std::fabs(c - 0.6 * alpha) < 1e-4;
        out.push_back(make("three-delta-cost-limit", ok,
                           fmt("cost(a=1e-3) = %.8f vs 0.6 alpha = %.8f", c, 0.6 * alpha)));
    }
    {
        bool ok = true;
        std::mt19937 rng(106);
        std::uniform_real_distribution<double> dist(0.2, 1.5);
        for (int i = 0; i < 10; ++i) {
            const double a = dist(rng), alpha = 0.4 * dist(rng);
            const auto t = three_delta(a, alpha, a / std::sqrt(2.0));
            const bool before = covering_slack(t).holds;
            const auto scaled = cost_and_rescale(t, dist(rng));
            ok = ok && covering_slack(scaled.rescaled).holds == before;
        }
        out.push_back(make("rescale-invariance", ok, "10 random measures"));
    }

    return out;
}

// ---------------------------------------------------------------------------
// riemann suite
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_suite_riemann(const ZeroTable* table) {
    std::vector<CheckResult> out;
    const auto q = FieldInvariants::rationals();

    {
        const auto z2 = zeta_em(2.0, 0.0, true);
        const bool ok = z2.value.re.contains(kPi * kPi / 6.0) &&
                        z2.derivative.re.contains(-0.93754825431584);
        out.push_back(make("zeta-special-values", ok,
                           fmt("zeta(2)=%.10f zeta'(2)=%.10f", z2.value.re.mid,
                               z2.derivative.re.mid)));
    }
    {
        std::mt19937 rng(107);
        std::uniform_real_distribution<double> s_dist(0.1, 0.9), t_dist(0.5, 30.0);
        bool ok = true;
        for (int i = 0; i < 10; ++i) {
            const double sigma = s_dist(rng), t = t_dist(rng);
            const CertComplex a = xi_completed(sigma, t);
            const CertComplex b = xi_completed(1.0 - sigma, -t);
            const double scale = a.abs().mid + 1e-30;
            ok = ok && std::fabs(a.re.mid - b.re.mid) <= a.re.rad + b.re.rad + 1e-9 * scale &&
                 std::fabs(a.im.mid - b.im.mid) <= a.im.rad + b.im.rad + 1e-9 * scale;
        }
        out.push_back(make("functional-equation", ok, "10 random points"));
    }
    {
        std::mt19937 rng(108);
        std::uniform_real_distribution<double> t_dist(-800.0, 800.0);
        bool ok = true;
        for (double sigma : {1.1, 1.5, 2.0}) {
            const auto axis = zeta_em(sigma, 0.0, true);
            const double cap = -(axis.derivative / axis.value).re.lower();
            for (int i = 0; i < 10; ++i) {
                const auto ze = zeta_em(sigma, t_dist(rng), true);
                ok = ok && (ze.derivative / ze.value).abs().upper() <= cap * (1.0 + 1e-9);
            }
        }
        out.push_back(make("logderiv-axis-domination", ok, "sigma in {1.1, 1.5, 2}"));
    }
    {
        std::mt19937 rng(109);
        std::uniform_real_distribution<double> s_dist(0.51, 0.99), t_dist(0.0, 900.0);
        bool ok = true;
        for (int i = 0; i < 50; ++i) ok = ok && f_explicit(q, s_dist(rng), t_dist(rng)).mid > 0.0;
        out.push_back(make("f-positive-right-of-line", ok, "50 random points"));
    }
    {
        bool ok = true;
        double worst = 0.0;
        for (double sigma : {0.6, 0.75, 0.9})
            for (double t : {10.0, 20.0, 50.0, 100.0, 500.0}) {
                const double f = f_explicit(q, sigma, t).upper();
                const double cap = f_tilde(q, sigma, t).total;
                worst = std::max(worst, f / cap);
                ok = ok && f <= cap;
            }
        out.push_back(
            make("f-below-majorant", ok, fmt("15 grid points, worst ratio %.4f", worst)));
    }

    if (table == nullptr) {
        CheckResult skip = make("dual-oracle-agreement", false, "no zero table supplied");
        skip.skipped = true;
        out.push_back(skip);
        return out;
    }

    {
        bool ok = true;
        double worst = 0.0;
        for (double sigma : {0.6, 0.75, 0.9})
            for (double t : {10.0, 20.0, 50.0, 100.0, 500.0}) {
                const CertValue a = f_from_zeros(*table, sigma, t, 1000.0);
                const CertValue b = f_explicit(q, sigma, t);
                const double gap = std::fabs(a.mid - b.mid);
                worst = std::max(worst, gap / (a.rad + b.rad));
                ok = ok && gap <= a.rad + b.rad;
            }
        out.push_back(make("dual-oracle-agreement", ok,
                           fmt("15 grid points, worst gap/radii %.3f", worst)));
    }
    {
        bool ok = true;
        int rows = 0;
        for (double T = 11.0; T <= 300.0; T += 0.5) {
            for (double a : {0.5, 1.0, 1.9}) {
                if (T < 10.0 + a) continue;
                ok = ok && empirical_count(*table, T, a) <= bound_window(q, T, a).total;
                ++rows;
            }
        }
        out.push_back(make("window-bound-sweep", ok, fmt("%.0f rows checked", double(rows))));
    }
    {
        bool ok = true;
        for (double T = 15.0; T <= 1000.0; T += 5.0) {
            const auto it =
                std::upper_bound(table->ordinates.begin(), table->ordinates.end(), T);
            const double twoN = 2.0 * static_cast<double>(it - table->ordinates.begin());
            const auto br = trudgian_count(q, T);
            ok = ok && std::fabs(twoN - br.main) <= br.remainder_bound;
        }
        out.push_back(make("unconditional-count-bracket", ok, "T <= 1000 stride 5"));
    }

    return out;
}

}  // namespace zetabound
