// core.hpp
//
// Shared domain types for the zero-count bound library:
//   - FieldInvariants: degree / signature / log-discriminant of a number field
//   - CertValue:       midpoint-radius enclosure used by all certified numerics
//   - CertComplex:     rectangular enclosure of a complex value
//   - the two scalar quantities Q(T) and W(T) that drive every bound
//
// All types are immutable values, all operations pure.

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetabound {

// ---------------------------------------------------------------------------
// Error taxonomy.  Every throwing operation names one of these.
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DomainError : Error {
    using Error::Error;
};
struct SignatureMismatch : DomainError {
    using DomainError::DomainError;
};
struct NegativeDiscriminant : DomainError {
    using DomainError::DomainError;
};
struct PoleError : DomainError {
    using DomainError::DomainError;
};
struct PrecisionError : Error {
    using Error::Error;
};
struct RangeError : DomainError {
    using DomainError::DomainError;
};
struct CoverageError : DomainError {
    using DomainError::DomainError;
};
struct InsufficientTable : DomainError {
    using DomainError::DomainError;
};
struct UnsupportedField : DomainError {
    using DomainError::DomainError;
};
struct NoSolution : Error {
    using Error::Error;
};
struct MultipleSolutions : Error {
    using Error::Error;
};
struct DegenerateDenominator : DomainError {
    using DomainError::DomainError;
};
struct MalformedMeasure : DomainError {
    using DomainError::DomainError;
};

// Parse errors carry the 1-based line number of the offending line.
struct ParseError : Error {
    ParseError(const std::string& msg, std::size_t line_no)
        : Error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
    std::size_t line;
};
struct OrderError : ParseError {
    using ParseError::ParseError;
};
struct MetaError : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// CertValue: midpoint-radius interval [mid - rad, mid + rad].
//
// Arithmetic produces enclosures.  Outward rounding is simulated by inflating
// the radius by one ulp of the midpoint per elementary operation; the bounds
// this library certifies have tolerances >= 1e-6, so hardware rounding modes
// are not needed.
// ---------------------------------------------------------------------------

struct CertValue {
    double mid = 0.0;
    double rad = 0.0;

    CertValue() = default;
    explicit CertValue(double m) : mid(m), rad(0.0) {}
    CertValue(double m, double r) : mid(m), rad(r) {
        if (!(r >= 0.0) || !std::isfinite(m) || !std::isfinite(r))
            throw DomainError("CertValue: non-finite midpoint or negative radius");
    }

    double lower() const { return mid - rad; }
    double upper() const { return mid + rad; }
    bool contains(double x) const { return lower() <= x && x <= upper(); }
    bool contains(const CertValue& o) const {
        return lower() <= o.lower() && o.upper() <= upper();
    }
};

namespace detail {
// One-ulp-per-operation outward rounding, plus a sub-denormal floor so that
// exact zeros do not produce zero-width results of inexact operations.
inline double inflate(double mid, double rad) {
    constexpr double kEps = 2.220446049250313e-16;  // 2^-52
    constexpr double kTiny = 1e-300;
    return rad + std::fabs(mid) * kEps + kTiny;
}
}  // namespace detail

inline CertValue operator-(const CertValue& a) { return {-a.mid, a.rad}; }

inline CertValue operator+(const CertValue& a, const CertValue& b) {
    const double m = a.mid + b.mid;
    return {m, detail::inflate(m, a.rad + b.rad)};
}
inline CertValue operator-(const CertValue& a, const CertValue& b) {
    const double m = a.mid - b.mid;
    return {m, detail::inflate(m, a.rad + b.rad)};
}
inline CertValue operator*(const CertValue& a, const CertValue& b) {
    const double m = a.mid * b.mid;
    const double r = std::fabs(a.mid) * b.rad + std::fabs(b.mid) * a.rad + a.rad * b.rad;
    return {m, detail::inflate(m, r)};
}
inline CertValue operator/(const CertValue& a, const CertValue& b) {
    const double den = std::fabs(b.mid) - b.rad;
    if (!(den > 0.0)) throw DomainError("CertValue division: denominator interval contains 0");
    const double m = a.mid / b.mid;
    const double r = (a.rad + std::fabs(m) * b.rad) / den;
    return {m, detail::inflate(m, r)};
}

inline CertValue operator+(const CertValue& a, double b) { return a + CertValue(b); }
inline CertValue operator+(double a, const CertValue& b) { return CertValue(a) + b; }
inline CertValue operator-(const CertValue& a, double b) { return a - CertValue(b); }
inline CertValue operator-(double a, const CertValue& b) { return CertValue(a) - b; }
inline CertValue operator*(const CertValue& a, double b) { return a * CertValue(b); }
inline CertValue operator*(double a, const CertValue& b) { return CertValue(a) * b; }
inline CertValue operator/(const CertValue& a, double b) { return a / CertValue(b); }
inline CertValue operator/(double a, const CertValue& b) { return CertValue(a) / b; }

CertValue cert_exp(const CertValue& x);
CertValue cert_log(const CertValue& x);   // requires x.lower() > 0
CertValue cert_sqrt(const CertValue& x);  // requires x.lower() >= 0
CertValue cert_sin(const CertValue& x);
CertValue cert_cos(const CertValue& x);
CertValue cert_atan(const CertValue& x);
CertValue cert_abs(const CertValue& x);
CertValue cert_pow(const CertValue& base, double expo);  // base.lower() > 0
// |x + iy| as an enclosure.
CertValue cert_hypot(const CertValue& x, const CertValue& y);

// ---------------------------------------------------------------------------
// CertComplex: rectangular complex enclosure.
// ---------------------------------------------------------------------------

struct CertComplex {
    CertValue re, im;

    CertComplex() = default;
    CertComplex(CertValue r, CertValue i) : re(r), im(i) {}
    CertComplex(double r, double i) : re(r), im(i) {}

    CertValue abs() const { return cert_hypot(re, im); }
    CertComplex conj() const { return {re, -im}; }
};

inline CertComplex operator+(const CertComplex& a, const CertComplex& b) {
    return {a.re + b.re, a.im + b.im};
}
inline CertComplex operator-(const CertComplex& a, const CertComplex& b) {
    return {a.re - b.re, a.im - b.im};
}
inline CertComplex operator*(const CertComplex& a, const CertComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline CertComplex operator*(const CertComplex& a, double s) {
    return {a.re * s, a.im * s};
}
inline CertComplex operator*(double s, const CertComplex& a) { return a * s; }
inline CertComplex operator/(const CertComplex& a, const CertComplex& b) {
    const CertValue den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}
inline CertComplex cert_cexp(const CertComplex& z) {
    const CertValue m = cert_exp(z.re);
    return {m * cert_cos(z.im), m * cert_sin(z.im)};
}

// ---------------------------------------------------------------------------
// Number-field invariants.
// ---------------------------------------------------------------------------

struct FieldInvariants {
    int degree = 1;        // n_K
    int r1 = 1;            // real embeddings
    int r2 = 0;            // complex embedding pairs
    double log_disc = 0.0; // log |disc|, natural log

    static FieldInvariants rationals() { return {1, 1, 0, 0.0}; }
};

// Validates the signature relation r1 + 2 r2 = degree and log_disc >= 0.
FieldInvariants build_field(int degree, int r1, int r2, double log_disc);

// Q(T) = log_disc + (log T + 20) n + 11.  Requires T > 1.
double conductor_q(const FieldInvariants& field, double T);

// W(T) = log_disc + n log(T / 2pi).  Requires T > 0.
double w_term(const FieldInvariants& field, double T);

// ---------------------------------------------------------------------------
// Evaluation points and window queries.
// ---------------------------------------------------------------------------

struct EvalPoint {
    double sigma = 0.0;  // Re s
    double t = 0.0;      // Im s
    double alpha() const { return sigma - 0.5; }
};

struct WindowQuery {
    double T = 0.0;  // window center ordinate
    double a = 0.0;  // half-width

    WindowQuery(double T_, double a_) : T(T_), a(a_) {
        if (!std::isfinite(T_) || !(a_ >= 0.0))
            throw DomainError("WindowQuery: T must be finite, a >= 0");
    }
};

// A bound value with its additive term decomposition, for reporting.
struct BoundBreakdown {
    double total = 0.0;
    double main_term = 0.0;    // coefficient * Q
    double middle_term = 0.0;  // coefficient * Q^(2-2 sigma)
    double degree_term = 0.0;  // coefficient * n
    // parameter echo
    double sigma = 0.0;
    double T = 0.0;
    double a = 0.0;
    double Q = 0.0;
};

// ---------------------------------------------------------------------------
// Field descriptor text format: lines "key = value" with keys degree, r1, r2,
// log_disc; '#' starts a comment; unknown keys are rejected.
// ---------------------------------------------------------------------------

FieldInvariants parse_field_descriptor(const std::string& text);
FieldInvariants load_field_file(const std::string& path);

}  // namespace zetabound
