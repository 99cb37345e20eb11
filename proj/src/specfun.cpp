#include "zetabound/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace zetabound {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kHalfLog2Pi = 0.91893853320467274178;  // log(2 pi) / 2
constexpr double kEps = 2.220446049250313e-16;

// --------------------------------------------------------------------------
// Euler-Maclaurin log Gamma / digamma in the Stirling zone.
//
// With the B2/B4 terms retained, the remainders carry the explicit integral
// bounds
//   |R_loggamma| <= (1/120) int_0^inf du / |z+u|^4
//   |R_digamma|  <= (1/30)  int_0^inf du / |z+u|^5
// (|B4({u})| <= 1/30).  The integrals are bounded in closed form below.
// --------------------------------------------------------------------------

// Upper bound for int_x^inf dv / (v^2 + y^2)^2, x > 0.
double j4_bound(double x, double y) {
    const double on_axis = 1.0 / (3.0 * x * x * x);
    const double Y = std::fabs(y);
    if (Y < 0.125 * x) return on_axis;
    const double exact =
        std::atan(Y / x) / (2.0 * Y * Y * Y) - x / (2.0 * Y * Y * (x * x + Y * Y));
    return std::min(on_axis, std::max(exact, 0.0) * 1.01 + 1e-300);
}

// Upper bound for int_x^inf dv / (v^2 + y^2)^{5/2}, x > 0.
double j5_bound(double x, double y) {
    const double on_axis = 1.0 / (4.0 * x * x * x * x);
    const double Y = std::fabs(y);
    if (Y < 0.125 * x) return on_axis;
    const double S = x / std::hypot(x, Y);
    const double exact = (2.0 / 3.0 - S + S * S * S / 3.0) / (Y * Y * Y * Y);
    return std::min(on_axis, std::max(exact, 0.0) * 1.01 + 1e-300);
}

CertComplex log_principal(const CertComplex& z) {
    // Requires Re z > 0.
    const CertValue norm2 = z.re * z.re + z.im * z.im;
    return {cert_log(norm2) * 0.5, cert_atan(z.im / z.re)};
}

CertComplex inv(const CertComplex& z) { return CertComplex(1.0, 0.0) / z; }

void check_not_pole(double x, double y) {
    if (y == 0.0 && x <= 0.5 && x == std::floor(x))
        throw PoleError("gamma evaluation at a non-positive integer");
}

// Kahan-compensated partial sums of the recurrence chain, with an explicit
// rounding bound: |error| <= per-term bounds + 2 eps sum|terms|.
struct CompensatedSum {
    double sum = 0.0, c = 0.0, abs_sum = 0.0, term_err = 0.0;
    void add(double x, double x_err) {
        abs_sum += std::fabs(x);
        term_err += x_err;
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            c += (sum - t) + x;
        else
            c += (x - t) + sum;
        sum = t;
    }
    CertValue value() const { return {sum + c, term_err + 2.0 * kEps * abs_sum + 1e-300}; }
};

// z + shift lands in the Stirling zone; shift chosen so the B4 remainder
// meets rem_target (never less than Re >= 8).
int shift_for(double x, double y, double rem_target, bool for_loggamma) {
    const double budget = for_loggamma ? 120.0 * rem_target : 30.0 * rem_target;
    int m = (x >= 8.0) ? 0 : static_cast<int>(std::ceil(8.0 - x));
    const double bound0 = for_loggamma ? j4_bound(x + m, y) : j5_bound(x + m, y);
    if (bound0 > budget) {
        const double x_need = for_loggamma ? std::cbrt(1.0 / (3.0 * budget))
                                           : std::pow(1.0 / (4.0 * budget), 0.25);
        m = std::max(m, static_cast<int>(std::ceil(x_need - x)));
    }
    return m;
}

CertComplex log_gamma_stirling(const CertComplex& z, double rem_target, double x, double y) {
    const CertComplex L = log_principal(z);
    const CertComplex z3 = z * z * z;
    CertComplex r = (z - CertComplex(0.5, 0.0)) * L - z + CertComplex(kHalfLog2Pi, 0.0) +
                    inv(z * 12.0) - inv(z3 * 360.0);
    const double rem = j4_bound(x, y) / 120.0;
    (void)rem_target;
    r.re.rad += rem;
    r.im.rad += rem;
    return r;
}

CertComplex digamma_stirling(const CertComplex& z, double x, double y) {
    const CertComplex z2 = z * z;
    CertComplex r = log_principal(z) - inv(z * 2.0) - inv(z2 * 12.0) + inv(z2 * z2 * 120.0);
    const double rem = j5_bound(x, y) / 30.0;
    r.re.rad += rem;
    r.im.rad += rem;
    return r;
}

}  // namespace

CertComplex log_gamma_complex(double re, double im, double rem_target) {
    check_not_pole(re, im);
    const int m = shift_for(re, im, rem_target, /*for_loggamma=*/true);
    const double xs = re + m;
    CertComplex base = log_gamma_stirling(CertComplex(xs, im), rem_target, xs, im);
    if (m == 0) return base;

    CompensatedSum s_re, s_im;
    for (int j = 0; j < m; ++j) {
        const double xr = re + j;
        const double n2 = xr * xr + im * im;
        if (!(n2 > 1e-24)) throw PoleError("gamma recurrence hit a pole");
        const double lr = 0.5 * std::log(n2);
        const double ai = std::atan2(im, xr);
        s_re.add(lr, kEps * (3.0 * std::fabs(lr) + 2.0));
        s_im.add(ai, kEps * (3.0 * std::fabs(ai) + 2.0));
    }
    return {base.re - s_re.value(), base.im - s_im.value()};
}

CertComplex digamma_complex(double re, double im, double rem_target) {
    check_not_pole(re, im);
    const int m = shift_for(re, im, rem_target, /*for_loggamma=*/false);
    const double xs = re + m;
    CertComplex base = digamma_stirling(CertComplex(xs, im), xs, im);
    if (m == 0) return base;

    CompensatedSum s_re, s_im;
    for (int j = 0; j < m; ++j) {
        const double xr = re + j;
        const double n2 = xr * xr + im * im;
        if (!(n2 > 1e-24)) throw PoleError("gamma recurrence hit a pole");
        const double tr = xr / n2;
        const double ti = -im / n2;
        s_re.add(tr, kEps * (3.0 * std::fabs(tr) + 1e-18));
        s_im.add(ti, kEps * (3.0 * std::fabs(ti) + 1e-18));
    }
    return {base.re - s_re.value(), base.im - s_im.value()};
}

CertValue eval_gamma(GammaKind kind, double sigma, double t) {
    // Contract: absolute radius <= 1e-10 (relative for |Gamma|) whenever
    // |s| <= 100; the shift machinery makes that unreachable only if the
    // rounding model breaks down, which deserves a loud failure.
    const bool in_contract = std::hypot(sigma, t) <= 100.0;
    auto guard = [in_contract](const CertValue& v, double scale) {
        if (in_contract && !(v.rad <= 1e-10 * scale))
            throw PrecisionError("eval_gamma: requested radius not reached");
        return v;
    };
    switch (kind) {
        case GammaKind::LogGamma:
            return guard(log_gamma_complex(sigma, t, 2e-11).re, 1.0);
        case GammaKind::Digamma:
            return guard(digamma_complex(sigma, t, 2e-11).re, 1.0);
        case GammaKind::AbsGamma: {
            const CertValue g = cert_exp(log_gamma_complex(sigma, t, 2e-11).re);
            return guard(g, 1.0 + std::fabs(g.mid));
        }
    }
    throw DomainError("eval_gamma: bad kind");
}

// --------------------------------------------------------------------------
// Stirling envelope
// --------------------------------------------------------------------------

CertValue stirling_envelope(double u, double v) {
    const bool crude_ok = (u >= -0.75 && u <= -0.25);
    CertValue crude{0.0, 0.0};
    if (crude_ok) crude = 5.3 * cert_exp(CertValue(-kPi * std::fabs(v) / 2.0));

    if (!(v > 0.0)) {
        if (crude_ok) return crude;
        throw DomainError("stirling_envelope: effective form requires v > 0");
    }
    if (!(u < 0.0)) throw DomainError("stirling_envelope: effective form requires u < 0");

    // sqrt(2 pi) |z|^{u-1/2} e^{-pi v/2} e^{-u + v atan(u/v)} e^{|R|},
    // |R| <= (1/(8v)) (pi/2 - atan(u/v)).
    const CertValue cu(u), cv(v);
    const CertValue mod = cert_hypot(cu, cv);
    const CertValue at = cert_atan(cu / cv);
    const CertValue r_bound = (CertValue(kPi / 2.0) - at) / (8.0 * v);
    CertValue eff = cert_sqrt(CertValue(2.0 * kPi)) * cert_pow(mod, u - 0.5) *
                    cert_exp(CertValue(-kPi * v / 2.0)) * cert_exp(cv * at - cu) *
                    cert_exp(r_bound);
    if (crude_ok && crude.upper() < eff.upper()) return crude;
    return eff;
}

// --------------------------------------------------------------------------
// Adaptive Gauss-Legendre quadrature of CertValue-valued integrands.
// 15-point rule with a 7-point embedded difference as the error estimate;
// the estimate enters the radius inflated by 10.
// --------------------------------------------------------------------------

namespace {

struct GaussRule {
    std::vector<double> nodes, weights;  // on [-1, 1]
};

GaussRule make_rule(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double p0 = 0, p1 = 0;
        for (int it = 0; it < 100; ++it) {
            p0 = 1.0;
            p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            const double dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
            const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        r.nodes[i] = x;
        r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return r;
}

const GaussRule& gl15() {
    static const GaussRule r = make_rule(15);
    return r;
}
const GaussRule& gl7() {
    static const GaussRule r = make_rule(7);
    return r;
}

template <typename F>
CertValue apply_rule(const GaussRule& rule, const F& f, double lo, double hi) {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    CertValue acc(0.0);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        acc = acc + f(c + h * rule.nodes[i]) * rule.weights[i];
    return acc * h;
}

struct Panel {
    double lo, hi;
    int depth;
};

// Integrate f over the union of the seed panels.  tol is an absolute target
// for the accumulated rule-error estimate.
template <typename F>
CertValue integrate_adaptive(const F& f, std::vector<Panel> seeds, double tol) {
    double total_len = 0.0;
    for (const auto& p : seeds) total_len += p.hi - p.lo;
    const double tol_per_len = tol / std::max(total_len, 1e-30);

    CertValue result(0.0);
    std::vector<Panel> stack(std::move(seeds));
    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const CertValue i15 = apply_rule(gl15(), f, p.lo, p.hi);
        const CertValue i7 = apply_rule(gl7(), f, p.lo, p.hi);
        const double err = std::fabs(i15.mid - i7.mid);
        if (err <= tol_per_len * (p.hi - p.lo) || p.depth >= 28) {
            result = result + i15;
            result.rad += 10.0 * err;
        } else {
            const double mid = 0.5 * (p.lo + p.hi);
            stack.push_back({mid, p.hi, p.depth + 1});
            stack.push_back({p.lo, mid, p.depth + 1});
        }
    }
    return result;
}

// |Gamma(u + iy)| with a relative remainder target suited to quadrature.
CertValue abs_gamma_line(double u, double y) {
    return cert_exp(log_gamma_complex(u, y, 1e-9).re);
}

constexpr double kTailCut = 16.0;  // exp(-pi*16/2) ~ 1.2e-11

// exp(-pi v / 2) tail mass of the 5.3-envelope beyond the cut.
double gamma_tail_mass() { return 5.3 * (4.0 / kPi) * std::exp(-kPi * kTailCut / 2.0); }

// int_Y^inf exp(-c v) log(A + v) dv <= exp(-cY) (log(A+Y)/c + 1/(c^2 (A+Y))).
double log_weight_tail(double A, double Y) {
    const double c = kPi / 2.0;
    return std::exp(-c * Y) * (std::log(A + Y) / c + 1.0 / (c * c * (A + Y)));
}

void add_positive_tail(CertValue& v, double tail) {
    v = v + CertValue(tail / 2.0, tail / 2.0);
}

void require_kernel_domain(double u) {
    if (!(u >= -0.75 && u <= -0.25))
        throw DomainError("kernel_integral: u must lie in [-3/4, -1/4]");
}

}  // namespace

CertValue kernel_integral(KernelKind kind, double u, double t, int lorentz_alpha) {
    require_kernel_domain(u);
    if (kind == KernelKind::Lorentz && lorentz_alpha != 1 && lorentz_alpha != 2)
        throw DomainError("kernel_integral: Lorentz weight needs alpha in {1, 2}");
    if (kind != KernelKind::AbsLine && !(std::fabs(t) >= 10.0))
        throw DomainError("kernel_integral: this kernel requires |t| >= 10");
    t = std::fabs(t);

    const double quad_tol = 1e-8;

    if (kind == KernelKind::AbsLine) {
        auto f = [u](double y) { return abs_gamma_line(u, y); };
        CertValue v = integrate_adaptive(
            f, {{-kTailCut, 0.0, 0}, {0.0, kTailCut, 0}}, quad_tol);
        add_positive_tail(v, gamma_tail_mass());
        return v;
    }

    auto weight = [kind, lorentz_alpha](double y) -> CertValue {
        switch (kind) {
            case KernelKind::LogWeight:
                return cert_log(CertValue(1.0 + std::fabs(y)));
            case KernelKind::QuarterPole:
                return 1.0 / cert_sqrt(CertValue(1.0) + 16.0 * CertValue(y) * CertValue(y));
            default:  // Lorentz
                return 1.0 / (CertValue(1.0) +
                              static_cast<double>(lorentz_alpha) * CertValue(y) * CertValue(y));
        }
    };
    auto f = [u, t, &weight](double y) { return abs_gamma_line(u, t - y) * weight(y); };

    // Gamma mass sits at y = t; the weight features live near y = 0.
    std::vector<Panel> seeds;
    const double lo = std::min(-4.0, t - kTailCut);
    if (lo < 0.0 && t - kTailCut < 0.0) {
        seeds.push_back({lo, 0.0, 0});
        seeds.push_back({0.0, t, 0});
    } else {
        seeds.push_back({lo, t, 0});
    }
    seeds.push_back({t, t + kTailCut, 0});

    CertValue v = integrate_adaptive(f, std::move(seeds), quad_tol);
    double tail;
    if (kind == KernelKind::LogWeight)
        tail = 2.0 * 5.3 * log_weight_tail(1.0 + t, kTailCut);
    else
        tail = gamma_tail_mass();  // weights are <= 1
    // Left of the seed region the envelope contributes below a tail mass too.
    tail += 5.3 * (2.0 / kPi) * std::exp(-kPi * (t - lo) / 2.0) *
            (kind == KernelKind::LogWeight ? std::log(1.0 - lo + 1.0) + 1.0 : 1.0);
    add_positive_tail(v, tail);
    return v;
}

CertValue envelope_kernel_integral(KernelKind kind, double t, int lorentz_alpha) {
    if (kind != KernelKind::QuarterPole && kind != KernelKind::Lorentz)
        throw DomainError("envelope_kernel_integral: QuarterPole or Lorentz only");
    if (kind == KernelKind::Lorentz && lorentz_alpha != 1 && lorentz_alpha != 2)
        throw DomainError("envelope_kernel_integral: alpha in {1, 2}");
    if (!(t > 0.0)) throw DomainError("envelope_kernel_integral: t > 0 required");

    auto weight = [kind, lorentz_alpha](double y) -> CertValue {
        if (kind == KernelKind::QuarterPole)
            return 1.0 / cert_sqrt(CertValue(1.0) + 16.0 * CertValue(y) * CertValue(y));
        return 1.0 /
               (CertValue(1.0) + static_cast<double>(lorentz_alpha) * CertValue(y) * CertValue(y));
    };
    auto f = [t, &weight](double y) {
        return cert_exp(CertValue(-kPi * std::fabs(t - y) / 2.0)) * weight(y);
    };

    std::vector<Panel> seeds;
    const double lo = std::min(-kTailCut, t - kTailCut);
    if (t > 0.0) {
        seeds.push_back({lo, 0.0, 0});
        seeds.push_back({0.0, t, 0});
    } else {
        seeds.push_back({lo, t, 0});
    }
    seeds.push_back({t, t + kTailCut, 0});

    CertValue v = integrate_adaptive(f, std::move(seeds), 1e-9);
    add_positive_tail(v, (4.0 / kPi) * std::exp(-kPi * kTailCut / 2.0));
    return v;
}

CertValue gamma_tail_moment(double u, double v, int order) {
    require_kernel_domain(u);
    if (!(v >= 0.0)) throw DomainError("gamma_tail_moment: v >= 0 required");
    if (order != 0 && order != 1) throw DomainError("gamma_tail_moment: order in {0, 1}");

    auto f = [u, v, order](double w) {
        CertValue g = abs_gamma_line(u, w);
        return order == 0 ? g : g * (w - v);
    };
    CertValue r = integrate_adaptive(f, {{v, v + kTailCut, 0}}, 1e-10);
    // Envelope tail beyond the cut.
    const double c = kPi / 2.0;
    const double Y = kTailCut;
    double tail = 5.3 * std::exp(-c * (v + Y));
    tail *= (order == 0) ? (1.0 / c) : (Y / c + 1.0 / (c * c));
    add_positive_tail(r, tail);
    return r;
}

LogWeightReduction log_weight_reduction(double u, double t) {
    require_kernel_domain(u);
    if (!(t >= 10.0)) throw DomainError("log_weight_reduction: t >= 10 required");

    const CertValue m1 = gamma_tail_moment(u, t, 1);
    const CertValue lhs = 2.0 * CertValue(1.0 + t) * CertValue(1.0 + t) * m1;

    // int_0^t M1(u, y) dy >= (1/2) int_0^min(t, cut) w^2 |Gamma(u+iw)| dw.
    auto f = [u](double w) { return abs_gamma_line(u, w) * (w * w); };
    const double hi = std::min(t, kTailCut);
    CertValue rhs = integrate_adaptive(f, {{0.0, hi, 0}}, 1e-9) * 0.5;

    return {lhs, rhs, lhs.upper() <= rhs.lower()};
}

DigammaLogBound check_digamma_log_bound(double sigma, double t) {
    if (!(sigma >= 0.0) || !(std::fabs(t) >= sigma + 2.0))
        throw DomainError("check_digamma_log_bound: needs sigma >= 0 and |t| >= sigma + 2");
    const CertValue lhs = cert_log(cert_hypot(CertValue(sigma - 0.5), CertValue(t)));
    const CertValue psi_re = digamma_complex(sigma, t).re;
    const CertValue margin = lhs - psi_re;
    return {margin.lower() > 0.0, margin};
}

GammaKLogderivDiff gammaK_logderiv_diff(const FieldInvariants& field, double t) {
    const double th = t / 2.0;
    // Gamma_K'(s)/Gamma_K(s) = r2 [ -log(pi)/2 + psi((s+1)/2)/2 ]
    //                        + (r1+r2) [ -log(pi)/2 + psi(s/2)/2 ];
    // the log(pi) blocks cancel in the difference.
    const CertComplex d_odd =
        digamma_complex(0.625, th) - digamma_complex(1.5, th);  // (s+1)/2 block
    const CertComplex d_even =
        digamma_complex(0.125, th) - digamma_complex(1.0, th);  // s/2 block
    const CertComplex sum =
        (d_odd * static_cast<double>(field.r2) +
         d_even * static_cast<double>(field.r1 + field.r2)) *
        0.5;
    const CertValue lhs = sum.abs();
    const double rhs = 10.0 * field.degree / std::hypot(1.0, 4.0 * t);
    return {lhs, rhs, lhs.upper() <= rhs};
}

}  // namespace zetabound
