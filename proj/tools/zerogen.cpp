// zerogen.cpp
//
// Generates a table of the first K ordinates of Riemann zeta zeros on the
// critical line, in the zero-table text format this project consumes.
//
// Method: Gram points via Newton on the theta asymptotic; Gram blocks with
// Rosser's rule (no exceptions remotely near this range) guarantee the zero
// count per block, sign changes of Z(t) inside each block are located by
// progressive subdivision and refined by bracketed secant/bisection.
//
//   Z(t) for t < 3000:  Euler-Maclaurin zeta(1/2+it), N ~ 6 t / 2 pi terms,
//                       error well below 1e-8
//   Z(t) for t >= 3000: Riemann-Siegel main sum plus the leading correction
//                       term, error <= ~0.13 (t/2 pi)^{-3/4}  (< 7e-5 here)
//
// The two evaluators are cross-checked on an overlap band at startup, and
// the finished table is checked against the unconditional counting bracket.
//
// Ordinate accuracy: ~1e-10 below t = 3000 (all heights the test suites use
// quantitatively), ~1e-5 or better above (used only for counting).
//
// Usage: zeta-zerogen [--count K] [--out FILE]

#include "zetabound/bounds.hpp"
#include "zetabound/core.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEmSwitch = 3000.0;

// ---------------------------------------------------------------------------
// theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi, asymptotic form.
// Remainder after the t^-5 term is ~3e-11 already at t = 10.
// ---------------------------------------------------------------------------
double theta(double t) {
    return 0.5 * t * std::log(t / kTwoPi) - 0.5 * t - kPi / 8.0 + 1.0 / (48.0 * t) +
           7.0 / (5760.0 * t * t * t) + 31.0 / (80640.0 * std::pow(t, 5));
}
double theta_deriv(double t) { return 0.5 * std::log(t / kTwoPi); }

// ---------------------------------------------------------------------------
// Euler-Maclaurin Z(t)
// ---------------------------------------------------------------------------
struct EmTables {
    std::vector<double> logn, rsqrtn;
    void ensure(std::size_t n) {
        while (logn.size() <= n) {
            const std::size_t k = logn.size();
            logn.push_back(k > 0 ? std::log(static_cast<double>(k)) : 0.0);
            rsqrtn.push_back(k > 0 ? 1.0 / std::sqrt(static_cast<double>(k)) : 0.0);
        }
    }
};
EmTables em_tables;

double z_euler_maclaurin(double t, double n_factor = 6.0) {
    using cplx = std::complex<double>;
    const std::size_t N =
        static_cast<std::size_t>(std::ceil(n_factor * t / kTwoPi)) + 50;
    em_tables.ensure(N);

    const cplx s(0.5, t);
    cplx sum(0.0, 0.0);
    for (std::size_t n = 1; n < N; ++n) {
        const double arg = t * em_tables.logn[n];
        sum += em_tables.rsqrtn[n] * cplx(std::cos(arg), -std::sin(arg));
    }
    const double Nd = static_cast<double>(N);
    const double lnN = std::log(Nd);
    const cplx NmS = std::exp(cplx(-0.5 * lnN, -t * lnN));
    const cplx sm1 = s - 1.0;
    cplx z = sum + 0.5 * NmS + NmS * Nd / sm1;
    // B2..B8 corrections
    static const double b2k[4] = {1.0 / 12.0, -1.0 / 720.0, 1.0 / 30240.0, -1.0 / 1209600.0};
    cplx A = s;
    cplx Npow = NmS / Nd;
    for (int k = 1; k <= 4; ++k) {
        if (k > 1) {
            A *= (s + cplx(2.0 * k - 3.0)) * (s + cplx(2.0 * k - 2.0));
            Npow /= Nd * Nd;
        }
        z += b2k[k - 1] * A * Npow;
    }
    const double th = theta(t);
    const cplx rot(std::cos(th), std::sin(th));
    return (rot * z).real();
}

// ---------------------------------------------------------------------------
// Riemann-Siegel Z(t) with the leading correction term
// ---------------------------------------------------------------------------
double rs_psi(double p) {
    // cos(2 pi (p^2 - p - 1/16)) / cos(2 pi p), removable poles at 1/4, 3/4
    const double den = std::cos(kTwoPi * p);
    if (std::fabs(den) < 1e-4) {
        const double h = 2e-3;
        return 0.5 * (rs_psi(p - h) + rs_psi(p + h));
    }
    return std::cos(kTwoPi * (p * p - p - 0.0625)) / den;
}

double z_riemann_siegel(double t) {
    const double tau = std::sqrt(t / kTwoPi);
    const std::size_t N = static_cast<std::size_t>(tau);
    const double p = tau - static_cast<double>(N);
    em_tables.ensure(N);
    const double th = theta(t);
    double sum = 0.0;
    for (std::size_t n = 1; n <= N; ++n)
        sum += em_tables.rsqrtn[n] * std::cos(th - t * em_tables.logn[n]);
    const double corr = ((N % 2 == 1) ? 1.0 : -1.0) * std::pow(t / kTwoPi, -0.25) * rs_psi(p);
    return 2.0 * sum + corr;
}

double z_error_bound(double t, bool high_accuracy) {
    if (high_accuracy || t < kEmSwitch) return 1e-8;
    return 0.13 * std::pow(t / kTwoPi, -0.75);
}

double z_value(double t, bool high_accuracy = false) {
    if (t < kEmSwitch) return z_euler_maclaurin(t);
    if (high_accuracy) return z_euler_maclaurin(t, 2.5);
    return z_riemann_siegel(t);
}

// Refine one sign change of Z inside [lo, hi] by bracketed secant/bisection.
double refine_zero(double lo, double hi, double flo, double fhi, bool high_accuracy) {
    for (int it = 0; it < 80 && hi - lo > 1e-11; ++it) {
        double mid;
        const double denom = fhi - flo;
        if (std::fabs(denom) > 1e-300) {
            mid = lo - flo * (hi - lo) / denom;  // secant step
            const double margin = 0.01 * (hi - lo);
            if (!(mid > lo + margin && mid < hi - margin)) mid = 0.5 * (lo + hi);
        } else {
            mid = 0.5 * (lo + hi);
        }
        const double fmid = z_value(mid, high_accuracy);
        if ((fmid < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

// ---------------------------------------------------------------------------
// Gram points
// ---------------------------------------------------------------------------
double gram_point(long n, double guess) {
    double g = guess;
    const double target = static_cast<double>(n) * kPi;
    for (int it = 0; it < 60; ++it) {
        const double dg = (theta(g) - target) / theta_deriv(g);
        g -= dg;
        if (std::fabs(dg) < 1e-12 * g) break;
    }
    return g;
}

struct Options {
    std::size_t count = 100000;
    std::string out = "zeta_zeros.txt";
};

[[noreturn]] void usage_exit() {
    std::fprintf(stderr, "usage: zeta-zerogen [--count K] [--out FILE]\n");
    std::exit(2);
}

}  // namespace

int main(int argc, char** argv) {
    Options opt;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--count") && i + 1 < argc)
            opt.count = static_cast<std::size_t>(std::stoull(argv[++i]));
        else if (!std::strcmp(argv[i], "--out") && i + 1 < argc)
            opt.out = argv[++i];
        else
            usage_exit();
    }

    const auto t_start = std::chrono::steady_clock::now();

    // Cross-check the two evaluators on an overlap band.
    {
        double worst = 0.0;
        for (int i = 0; i <= 200; ++i) {
            const double t = 2900.0 + i * 1.0;
            worst = std::max(worst, std::fabs(z_euler_maclaurin(t) - z_riemann_siegel(t)));
        }
        std::printf("evaluator overlap check: max |Z_em - Z_rs| = %.3e\n", worst);
        if (worst > 1e-3) {
            std::fprintf(stderr, "zerogen: evaluator mismatch, aborting\n");
            return 1;
        }
    }

    std::vector<double> zeros;
    zeros.reserve(opt.count);

    // Walk Gram points; resolve each Gram block.
    long n = -1;
    double g0 = gram_point(n, 9.6);
    double z0 = z_value(g0);
    if (!(((n % 2 == 0) ? z0 : -z0) > 0.0)) {
        std::fprintf(stderr, "zerogen: starting Gram point is not good\n");
        return 1;
    }
    long good_idx = n;
    std::vector<double> block_g{g0};  // Gram points of the open block
    long em_fallback_blocks = 0;
    std::size_t next_progress = 20000;

    while (zeros.size() < opt.count) {
        ++n;
        const double g = gram_point(n, block_g.back() + kTwoPi / std::log(block_g.back()));
        const double z = z_value(g);
        block_g.push_back(g);
        const bool parity_pos = ((n % 2) == 0);
        const double zerr = z_error_bound(g, false);
        const bool is_good = ((parity_pos ? z : -z) > 3.0 * zerr);
        if (!is_good) continue;

        // Block [g_{good_idx} .. g_n] must contain exactly k = n - good_idx
        // zeros (Rosser's rule; first exception is far beyond this range).
        const std::size_t k = static_cast<std::size_t>(n - good_idx);
        bool high_acc = false;
        bool resolved = false;
        for (int attempt = 0; attempt < 2 && !resolved; ++attempt) {
            std::vector<std::pair<double, double>> brackets;
            for (std::size_t sub = 2; sub <= (1u << 15); sub *= 2) {
                brackets.clear();
                for (std::size_t gi = 0; gi + 1 < block_g.size(); ++gi) {
                    const double lo = block_g[gi], hi = block_g[gi + 1];
                    double x0 = lo, f0 = z_value(x0, high_acc);
                    for (std::size_t j = 1; j <= sub; ++j) {
                        const double x1 = lo + (hi - lo) * static_cast<double>(j) / sub;
                        const double f1 = z_value(x1, high_acc);
                        if ((f0 < 0.0) != (f1 < 0.0)) brackets.emplace_back(x0, x1);
                        x0 = x1;
                        f0 = f1;
                    }
                }
                if (brackets.size() >= k) break;
            }
            if (brackets.size() == k) {
                for (const auto& [lo, hi] : brackets) {
                    const double flo = z_value(lo, high_acc), fhi = z_value(hi, high_acc);
                    zeros.push_back(refine_zero(lo, hi, flo, fhi, high_acc));
                }
                resolved = true;
            } else if (attempt == 0) {
                high_acc = true;  // retry the block with the slow evaluator
                ++em_fallback_blocks;
            } else {
                std::fprintf(stderr,
                             "zerogen: block ending at Gram index %ld: expected %zu sign "
                             "changes, found %zu\n",
                             n, k, brackets.size());
                return 1;
            }
        }

        good_idx = n;
        block_g.assign(1, g);

        if (zeros.size() >= next_progress) {
            next_progress += 20000;
            const auto now = std::chrono::steady_clock::now();
            std::printf("  ... %zu zeros (t = %.1f, %.1f s)\n", zeros.size(), zeros.back(),
                        std::chrono::duration<double>(now - t_start).count());
            std::fflush(stdout);
        }
    }
    zeros.resize(opt.count);

    // --- validation ---------------------------------------------------------
    for (std::size_t i = 1; i < zeros.size(); ++i)
        if (zeros[i] <= zeros[i - 1]) {
            std::fprintf(stderr, "zerogen: ordinates not strictly ascending at %zu\n", i);
            return 1;
        }
    const double known[3] = {14.134725142, 21.022039639, 25.010857580};
    for (int i = 0; i < 3 && static_cast<std::size_t>(i) < zeros.size(); ++i) {
        if (std::fabs(zeros[i] - known[i]) > 1e-6) {
            std::fprintf(stderr, "zerogen: zero %d = %.9f differs from reference %.9f\n",
                         i + 1, zeros[i], known[i]);
            return 1;
        }
    }
    // Counting consistency against the unconditional bracket.
    {
        const auto field = zetabound::FieldInvariants::rationals();
        for (double T : {100.0, 1000.0, 5000.0, 20000.0, zeros.back() - 1.0}) {
            if (T >= zeros.back()) continue;
            const auto it = std::upper_bound(zeros.begin(), zeros.end(), T);
            const double twoN = 2.0 * static_cast<double>(it - zeros.begin());
            const auto br = zetabound::trudgian_count(field, T);
            if (std::fabs(twoN - br.main) > br.remainder_bound) {
                std::fprintf(stderr,
                             "zerogen: count at T=%.1f (2N=%g) violates bracket %g +/- %g\n",
                             T, twoN, br.main, br.remainder_bound);
                return 1;
            }
        }
    }

    std::ofstream out(opt.out, std::ios::binary);
    if (!out) {
        std::fprintf(stderr, "zerogen: cannot open %s\n", opt.out.c_str());
        return 1;
    }
    char line[64];
    out << "# Riemann zeta zero ordinates (critical line), generated by zeta-zerogen\n";
    std::snprintf(line, sizeof(line), "# count = %zu\n", zeros.size());
    out << line;
    std::snprintf(line, sizeof(line), "height = %.9f\n", zeros.back());
    out << line;
    for (double g : zeros) {
        std::snprintf(line, sizeof(line), "%.9f\n", g);
        out << line;
    }
    out.close();

    const auto t_end = std::chrono::steady_clock::now();
    std::printf("wrote %zu zeros to %s (height %.6f, %ld slow-path blocks, %.1f s)\n",
                zeros.size(), opt.out.c_str(), zeros.back(), em_fallback_blocks,
                std::chrono::duration<double>(t_end - t_start).count());
    return 0;
}
