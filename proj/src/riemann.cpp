#include "zetabound/riemann.hpp"

#include "zetabound/bounds.hpp"
#include "zetabound/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace zetabound {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEps = 2.220446049250313e-16;
}  // namespace

// ---------------------------------------------------------------------------
// PrimeTable
// ---------------------------------------------------------------------------

PrimeTable::PrimeTable(std::size_t limit) : limit_(limit), mangoldt_(limit + 1, 0.0) {
    if (limit < 1) throw DomainError("PrimeTable: limit >= 1 required");
    if (limit > 10'000'000) throw RangeError("PrimeTable: limit capped at 1e7");
    std::vector<bool> composite(limit + 1, false);
    for (std::size_t p = 2; p <= limit; ++p) {
        if (composite[p]) continue;
        const double lp = std::log(static_cast<double>(p));
        for (std::size_t q = p; q <= limit; q *= p) {
            mangoldt_[q] = lp;
            if (q > limit / p) break;
        }
        if (p <= limit / p)
            for (std::size_t q = p * p; q <= limit; q += p) composite[q] = true;
    }
}

// ---------------------------------------------------------------------------
// Euler-Maclaurin zeta / zeta'
//
//   zeta(s) = sum_{n<N} n^-s + N^-s/2 + N^{1-s}/(s-1)
//           + sum_{k=1}^{4} (B_2k/(2k)!) s(s+1)...(s+2k-2) N^{-s-2k+1} + R
//
// with Backlund's remainder bound
//   |R| <= |s+9|/(sigma+9) * (B_10/10!) * |s(s+1)...(s+8)| * N^{-sigma-9}
//
// and, for the derivative, the periodic-Bernoulli integral form of R giving
//   |R'| <= (0.0477/9!) [ |A'| N^{-sigma-8}/(sigma+8)
//                        + |A| N^{-sigma-8} (log N/(sigma+8) + 1/(sigma+8)^2) ],
// where A = s(s+1)...(s+8) and 0.0477 bounds |B~9({x})|.
// ---------------------------------------------------------------------------

namespace {

const double kB2k_over_fact[4] = {
    1.0 / 12.0,        // B2/2!
    -1.0 / 720.0,      // B4/4!
    1.0 / 30240.0,     // B6/6!
    -1.0 / 1209600.0,  // B8/8!
};
constexpr double kB10_over_10fact = 2.0876756987868098e-8;
constexpr double kB9tilde_max = 0.0477;
constexpr double kFact9 = 362880.0;

// n^{-s} as a certified complex value, s = sigma + it.
CertComplex npow_minus_s(double n, double sigma, double t) {
    const CertValue ln(std::log(n), kEps * std::fabs(std::log(n)));
    const CertValue mod = cert_exp(ln * (-sigma));
    const CertValue arg = ln * t;
    return {mod * cert_cos(arg), mod * (-1.0) * cert_sin(arg)};
}

}  // namespace

ZetaEval zeta_em(double sigma, double t, bool want_derivative) {
    if (!(sigma >= -1.0)) throw RangeError("zeta_em: sigma >= -1 required");
    if (!(std::fabs(t) <= 1000.0)) throw RangeError("zeta_em: |t| <= 1000 required");
    if (sigma == 1.0 && t == 0.0) throw PoleError("zeta_em: pole at s = 1");

    const CertComplex s(sigma, t);
    std::size_t N = static_cast<std::size_t>(std::max(50.0, 2.0 * std::fabs(t)));

    // Enlarge N until the remainder bound is comfortable.
    double rem_bound = 0.0;
    for (;;) {
        double absA = 1.0;
        for (int j = 0; j <= 8; ++j) absA *= std::hypot(sigma + j, t);
        rem_bound = std::hypot(sigma + 9.0, t) / (sigma + 9.0) * kB10_over_10fact * absA *
                    std::pow(static_cast<double>(N), -sigma - 9.0);
        if (rem_bound <= 1e-9 || N >= 1u << 20) break;
        N *= 2;
    }
    if (rem_bound > 1e-6) throw PrecisionError("zeta_em: remainder bound will not converge");

    ZetaEval out;
    out.has_derivative = want_derivative;

    CertComplex sum(0.0, 0.0), dsum(0.0, 0.0);
    for (std::size_t n = 1; n < N; ++n) {
        const CertComplex term = npow_minus_s(static_cast<double>(n), sigma, t);
        sum = sum + term;
        if (want_derivative && n >= 2)
            dsum = dsum - term * std::log(static_cast<double>(n));
    }

    const double Nd = static_cast<double>(N);
    const double lnN = std::log(Nd);
    const CertComplex NmS = npow_minus_s(Nd, sigma, t);       // N^-s
    const CertComplex Nm1S = NmS * Nd;                        // N^{1-s}
    const CertComplex sm1 = s - CertComplex(1.0, 0.0);
    const CertComplex inv_sm1 = CertComplex(1.0, 0.0) / sm1;

    CertComplex z = sum + NmS * 0.5 + Nm1S * inv_sm1;
    CertComplex dz = dsum - NmS * (0.5 * lnN) -
                     Nm1S * inv_sm1 * (CertComplex(lnN, 0.0) + inv_sm1);

    // Bernoulli corrections.
    CertComplex A(1.0, 0.0);          // rising product s(s+1)...(s+j)
    CertComplex Ainv_sum(0.0, 0.0);   // sum of 1/(s+j) over included factors
    int j = -1;
    for (int k = 1; k <= 4; ++k) {
        // extend product to s(s+1)...(s+2k-2)
        while (j < 2 * k - 2) {
            ++j;
            const CertComplex f(sigma + j, t);
            A = A * f;
            Ainv_sum = Ainv_sum + CertComplex(1.0, 0.0) / f;
        }
        // N^{-s-2k+1} = N^-s * N^{-(2k-1)}
        const CertComplex Npow = NmS * std::pow(Nd, -(2.0 * k - 1.0));
        const CertComplex term = A * Npow * kB2k_over_fact[k - 1];
        z = z + term;
        if (want_derivative)
            dz = dz + (A * Ainv_sum - A * lnN) * Npow * kB2k_over_fact[k - 1];
    }

    z.re.rad += rem_bound;
    z.im.rad += rem_bound;

    if (want_derivative) {
        while (j < 8) {  // complete A = s...(s+8) for the derivative remainder
            ++j;
            const CertComplex f(sigma + j, t);
            A = A * f;
            Ainv_sum = Ainv_sum + CertComplex(1.0, 0.0) / f;
        }
        double absA = 1.0;
        for (int i = 0; i <= 8; ++i) absA *= std::hypot(sigma + i, t);
        const double absAp = absA * Ainv_sum.abs().upper();
        const double Npow8 = std::pow(Nd, -sigma - 8.0);
        const double drem = (kB9tilde_max / kFact9) *
                            (absAp * Npow8 / (sigma + 8.0) +
                             absA * Npow8 * (lnN / (sigma + 8.0) +
                                             1.0 / ((sigma + 8.0) * (sigma + 8.0))));
        dz.re.rad += drem;
        dz.im.rad += drem;
        out.derivative = dz;
    }
    out.value = z;
    return out;
}

// ---------------------------------------------------------------------------
// f(s) oracles
// ---------------------------------------------------------------------------

CertValue f_explicit(const FieldInvariants& field, double sigma, double t) {
    if (field.degree != 1)
        throw UnsupportedField("f_explicit: oracle implemented for the rational field only");
    if (!(sigma > 0.0 && sigma <= 2.0)) throw DomainError("f_explicit: sigma in (0, 2] required");

    const ZetaEval ze = zeta_em(sigma, t, /*want_derivative=*/true);
    CertComplex logderiv;
    try {
        logderiv = ze.derivative / ze.value;
    } catch (const DomainError&) {
        throw PoleError("f_explicit: s is numerically at a zero of zeta");
    }

    const CertComplex s(sigma, t);
    const CertComplex sm1 = s - CertComplex(1.0, 0.0);
    if (s.abs().lower() <= 0.0 || sm1.abs().lower() <= 0.0)
        throw PoleError("f_explicit: s at 0 or 1");

    const CertValue pole_part =
        (CertComplex(2.0, 0.0) / s).re + (CertComplex(2.0, 0.0) / sm1).re;
    const CertValue psi_half = digamma_complex(sigma / 2.0, t / 2.0).re;
    const CertValue psi_half1 = digamma_complex((sigma + 1.0) / 2.0, t / 2.0).re;

    return logderiv.re * 2.0 + (field.log_disc - field.degree * std::log(kPi)) + pole_part +
           static_cast<double>(field.r1 + field.r2) * psi_half +
           static_cast<double>(field.r2) * psi_half1;
}

CertValue f_from_zeros(const ZeroTable& table, double sigma, double t, double cutoff_G) {
    if (!(sigma > 0.5)) throw DomainError("f_from_zeros: sigma > 1/2 required");
    if (!(cutoff_G >= 2.0)) throw DomainError("f_from_zeros: cutoff_G >= 2 required");
    t = std::fabs(t);  // f is even in t
    if (t + cutoff_G > table.height)
        throw InsufficientTable("f_from_zeros: table coverage is shorter than |t| + cutoff_G");

    const double alpha = sigma - 0.5;
    const double a2 = alpha * alpha;

    // Listed zeros within the window, plus each one's conjugate.
    const auto lo =
        std::lower_bound(table.ordinates.begin(), table.ordinates.end(), t - cutoff_G);
    const auto hi =
        std::upper_bound(table.ordinates.begin(), table.ordinates.end(), t + cutoff_G);
    double sum = 0.0;
    for (auto it = lo; it != hi; ++it) {
        const double d1 = t - *it;
        const double d2 = t + *it;
        sum += 2.0 * alpha / (a2 + d1 * d1) + 2.0 * alpha / (a2 + d2 * d2);
    }

    // Tail: cover |v - t| > G by unit boxes and bound each box's population
    // with the unit-window count bound.
    const int k0 = static_cast<int>(std::floor(cutoff_G));
    const int k_max = 200000;
    double tail = 0.0;
    for (int k = k0; k < k_max; ++k) {
        const double w = 2.0 * alpha / (a2 + (k - 1.0) * (k - 1.0));
        tail += w * (unit_window_count_bound(table.field, t + k + 0.5) +
                     unit_window_count_bound(table.field, t - k - 0.5));
    }
    {
        // Analytic remainder past k_max: terms are below
        // 4 alpha (A + B log(x + t + 2)) / x^2 at x = k - 1.
        const double n = table.field.degree;
        const double A = 0.636 * table.field.log_disc + 6.92 * n + 3.49 -
                         0.636 * n * std::log(2.0 * kPi);
        const double B = 0.636 * n;
        const double M = k_max - 1.0;
        const double C = t + 2.0;
        const double intlog = std::log(M + C) / M + std::log1p(C / M) / C;
        tail += 4.0 * alpha * (std::max(A, 0.0) / M + B * intlog);
    }

    CertValue out(sum + tail / 2.0, tail / 2.0);
    out.rad += 1e-10 * (1.0 + std::fabs(sum));  // summation rounding
    return out;
}

// ---------------------------------------------------------------------------
// Chebyshev psi1 and the weighted prime power sum
// ---------------------------------------------------------------------------

Psi1Result chebyshev_psi1(double x, const PrimeTable& table) {
    if (!(x >= 1.0)) throw DomainError("chebyshev_psi1: x >= 1 required");
    if (x > static_cast<double>(table.limit()))
        throw RangeError("chebyshev_psi1: x exceeds the sieve limit");
    const std::size_t nx = static_cast<std::size_t>(std::floor(x));
    double value = 0.0;
    for (std::size_t n = 2; n <= nx; ++n) {
        const double l = table.mangoldt(n);
        if (l != 0.0) value += l * (x - static_cast<double>(n));
    }
    const bool holds =
        std::fabs(value - x * x / 2.0) <= 0.0462 * std::pow(x, 1.5) + 1.838 * x;
    return {value, holds};
}

PrimeExpSum prime_exp_sum(double sigma, double delta, const PrimeTable& table) {
    if (!(sigma > 0.5 && sigma < 1.0)) throw DomainError("prime_exp_sum: sigma in (1/2, 1)");
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("prime_exp_sum: delta in (0, 1)");
    if (static_cast<double>(table.limit()) < 50.0 / delta)
        throw RangeError("prime_exp_sum: table limit below 50/delta truncation point");

    const std::size_t cut =
        std::min(table.limit(), static_cast<std::size_t>(std::ceil(60.0 / delta)));
    double sum = 0.0;
    for (std::size_t n = 2; n <= cut; ++n) {
        const double l = table.mangoldt(n);
        if (l != 0.0) sum += l * std::pow(static_cast<double>(n), -sigma) *
                             std::exp(-delta * static_cast<double>(n));
    }
    // Tail past the truncation: Lambda(n) n^-sigma <= log n, and
    // sum_{n>M} log(n) e^{-delta n} has the closed upper bound below.
    const double M = static_cast<double>(cut);
    const double tail =
        std::exp(-delta * M) *
        (std::log(M + 1.0) * (1.0 + 1.0 / delta) + 1.0 / (delta * delta * (M + 1.0)));

    CertValue lhs(sum + tail / 2.0, tail / 2.0 + 1e-11 * (1.0 + sum));
    const double rhs =
        std::pow(delta, sigma - 1.0) / (1.0 - sigma) + 0.07 / (2.0 * sigma - 1.0) + 4.0;
    return {lhs, rhs, lhs.upper() <= rhs};
}

// ---------------------------------------------------------------------------
// Completed zeta
// ---------------------------------------------------------------------------

CertComplex xi_completed(double sigma, double t) {
    if (!(sigma > 0.0)) throw DomainError("xi_completed: sigma > 0 required");
    const CertComplex s(sigma, t);
    const CertComplex sm1 = s - CertComplex(1.0, 0.0);
    const CertComplex zeta = zeta_em(sigma, t).value;
    const CertComplex lg = log_gamma_complex(sigma / 2.0, t / 2.0);
    const CertComplex pi_pow =
        cert_cexp(s * (-0.5 * std::log(kPi)));
    return s * sm1 * pi_pow * cert_cexp(lg) * zeta;
}

}  // namespace zetabound
