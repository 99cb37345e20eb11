#include "zetabound/bounds.hpp"

#include <cmath>
#include <numbers>

namespace zetabound {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_strip(double sigma) {
    if (!(sigma > 0.5 && sigma < 1.0))
        throw DomainError("sigma must lie in (1/2, 1)");
}
void require_delta(double delta) {
    if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
}
}  // namespace

CountBracket trudgian_count(const FieldInvariants& field, double T) {
    if (!(T >= 1.0)) throw DomainError("trudgian_count: requires T >= 1");
    const double main =
        (T / kPi) * (field.degree * std::log(T / (kTwoPi * std::numbers::e)) + field.log_disc);
    const double rem = TrudgianConstants::d1 * w_term(field, T) +
                       TrudgianConstants::d2 * field.degree + TrudgianConstants::d3;
    return {main, rem};
}

double unit_window_count_bound(const FieldInvariants& field, double t) {
    const double at = std::fabs(t);
    if (at > 1.0)
        return 0.636 * w_term(field, at) + 6.92 * field.degree + 3.49;
    return 0.954 * field.log_disc + 5.19 * field.degree + 3.49;
}

double zero_sum_bound(const FieldInvariants& field, double c, double t, double u) {
    if (!(c > 0.0)) throw DomainError("zero_sum_bound: c > 0 required");
    if (!(std::fabs(t) > c + 1.0)) throw DomainError("zero_sum_bound: |t| > c + 1 required");
    if (!(u > 0.0)) throw DomainError("zero_sum_bound: u > 0 required");
    return (std::asinh(c / u) / kPi + TrudgianConstants::d1 / u) * w_term(field, std::fabs(t)) +
           (TrudgianConstants::d2 * field.degree + TrudgianConstants::d3) / u;
}

double contour_term_bound(ContourTerm term, const FieldInvariants& field,
                          const ContourParams& p) {
    const double sigma = p.sigma, t = p.t, delta = p.delta;
    const double n = field.degree;
    const double at = std::fabs(t);
    require_strip(sigma);
    require_delta(delta);
    switch (term) {
        case ContourTerm::I:
            return (std::pow(delta, sigma - 1.0) / (1.0 - sigma) + 0.07 / (2.0 * sigma - 1.0) +
                    4.0) *
                   n;
        case ContourTerm::II:
            if (!(at >= 2.0)) throw DomainError("contour term II requires |t| >= 2");
            return std::sqrt(kTwoPi) * std::exp(-kPi * at / 2.0) * std::pow(delta, sigma - 1.0);
        case ContourTerm::III: {
            if (!(at >= 10.0)) throw DomainError("contour term III requires |t| >= 10");
            const double e = 2.0 * sigma - 1.0;
            return std::pow(delta, sigma - 0.5) *
                   ((std::log(1.0 / e) / kPi + 0.64 / e + 0.82) * w_term(field, at) +
                    (13.9 / e + 1.6) * n + 6.9 / e + 0.8);
        }
        case ContourTerm::IVa:
            if (!(at >= 10.0)) throw DomainError("contour term IVa requires |t| >= 10");
            return (std::pow(delta, sigma - 0.25) / kTwoPi) *
                   (9.16 * field.log_disc + (9.16 * std::log(at + 1.0) + 114.03) * n + 65.88);
        case ContourTerm::IV:
            if (!(at >= 10.0)) throw DomainError("contour term IV requires |t| >= 10");
            return (3.11 * field.log_disc + (3.11 * std::log(at) + 35.0) * n + 20.0) *
                   std::pow(delta, sigma - 0.25);
    }
    throw DomainError("contour_term_bound: bad term");
}

double contour_zero_sum_sharp(const FieldInvariants& field, const ContourParams& p) {
    require_strip(p.sigma);
    require_delta(p.delta);
    if (!(std::fabs(p.t) >= 10.0)) throw DomainError("contour_zero_sum_sharp: |t| >= 10");
    const double e = 2.0 * p.sigma - 1.0;
    return std::pow(p.delta, p.sigma - 0.5) *
           ((std::asinh(4.0 / e) / kPi + 2.0 * TrudgianConstants::d1 / e + 0.15) *
                w_term(field, std::fabs(p.t)) +
            (2.0 * TrudgianConstants::d2 * field.degree + 2.0 * TrudgianConstants::d3) / e +
            1.6 * field.degree + 0.8);
}

namespace {

// Shared coefficient of the Q^{2-2 sigma} block.
double middle_coefficient(const FieldInvariants& field, double sigma) {
    const double e = 2.0 * sigma - 1.0;
    return field.degree / (1.0 - sigma) + std::log(1.0 / e) / kPi + 0.64 / e + 1.37;
}

}  // namespace

BoundBreakdown zeta_logderiv_bound(const FieldInvariants& field, double sigma, double t) {
    require_strip(sigma);
    if (!(std::fabs(t) >= 10.0)) throw DomainError("zeta_logderiv_bound: |t| >= 10 required");
    const double Q = field.log_disc + (std::log(std::fabs(t)) + 20.0) * field.degree + 11.0;
    BoundBreakdown b;
    b.sigma = sigma;
    b.T = t;
    b.Q = Q;
    b.main_term = 0.0;
    b.middle_term = middle_coefficient(field, sigma) * std::pow(Q, 2.0 - 2.0 * sigma);
    b.degree_term = (0.07 / (2.0 * sigma - 1.0) + 4.0) * field.degree;
    b.total = b.middle_term + b.degree_term;
    return b;
}

BoundBreakdown f_tilde(const FieldInvariants& field, double sigma, double T) {
    require_strip(sigma);
    if (!(T >= 10.0)) throw DomainError("f_tilde: T >= 10 required");
    const double Q = conductor_q(field, T);
    BoundBreakdown b;
    b.sigma = sigma;
    b.T = T;
    b.Q = Q;
    b.main_term = Q;
    b.middle_term = 2.0 * middle_coefficient(field, sigma) * std::pow(Q, 2.0 - 2.0 * sigma);
    b.degree_term = (0.14 / (2.0 * sigma - 1.0) - 20.0) * field.degree;
    b.total = b.main_term + b.middle_term + b.degree_term;
    return b;
}

BoundBreakdown bound_window(const FieldInvariants& field, double T, double a) {
    if (!(a > 0.0 && a < 2.0)) throw DomainError("bound_window: a must lie in (0, 2)");
    if (!(T >= 10.0 + a)) throw DomainError("bound_window: T >= 10 + a required");
    BoundBreakdown b = f_tilde(field, 0.5 + a / 4.0, T);
    const double s = a / 2.0;
    b.total *= s;
    b.main_term *= s;
    b.middle_term *= s;
    b.degree_term *= s;
    b.a = a;
    b.T = T;
    return b;
}

BoundBreakdown bound_multiplicity(const FieldInvariants& field, double T, double sigma) {
    BoundBreakdown b = f_tilde(field, sigma, T);
    const double s = 0.3 * (2.0 * sigma - 1.0);
    b.total *= s;
    b.main_term *= s;
    b.middle_term *= s;
    b.degree_term *= s;
    return b;
}

double corollary1_bound(const FieldInvariants& field, double T) {
    if (!(T >= 10.0)) throw DomainError("corollary1_bound: T >= 10 required");
    const double Q = conductor_q(field, T);
    const double L = std::log(Q);
    const double logL = std::log(L);
    // The substitution step needs eps = log L / log Q <= 0.36, which holds
    // for every Q >= 33; T >= 10 gives Q >= 33.30.
    if (!(logL / L <= 0.36))
        throw PrecisionError("corollary1_bound: eps = log L / log Q exceeded 0.36");
    return (0.3 * logL + 0.4 + 0.2 * logL * logL / L +
            (logL / L) * (1.9 * field.degree + 0.9)) *
           Q / L;
}

double cor2_l_expression(double L) {
    const double logL = std::log(L);
    return 0.3 * logL + 2.8 * logL / L + 0.2 * logL * logL / L + 0.4;
}

bool cor2_subcheck1(double L) { return cor2_l_expression(L) <= 2.0; }

bool cor2_l_threshold_ok(double L) { return cor2_l_expression(L) <= 4.0 * (1.0 - 1e-10); }

Corollary2Report corollary2_margin(double logT) {
    if (!(logT >= 23.0)) throw DomainError("corollary2_margin: log T >= 23 required");
    const double Q = logT + 31.0;
    const double L = std::log(Q);
    const double loglogT = std::log(logT);

    Corollary2Report r;
    r.subcheck1 = cor2_subcheck1(L);
    // Q / log Q <= 2 log T / log log T, arranged overflow-safe.
    r.subcheck2 = (Q / logT) * (loglogT / L) <= 2.0;
    r.l_threshold_ok = cor2_l_threshold_ok(L);
    const double lhs_over_logT = cor2_l_expression(L) * (Q / logT) / L;
    const double rhs_over_logT = 4.0 / loglogT;
    r.bound_ratio = lhs_over_logT / rhs_over_logT;
    return r;
}

}  // namespace zetabound
