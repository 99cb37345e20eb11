#include "zetabound/core.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numbers>
#include <sstream>

namespace zetabound {

// ---------------------------------------------------------------------------
// CertValue elementary functions
// ---------------------------------------------------------------------------

CertValue cert_exp(const CertValue& x) {
    if (x.upper() > 700.0) throw RangeError("cert_exp: overflow");
    const double m = std::exp(x.mid);
    // exp(mid + rad) - exp(mid) = exp(mid) * expm1(rad) dominates the downside.
    const double r = m * std::expm1(x.rad);
    return {m, detail::inflate(m, r) * (1.0 + 4e-16)};
}

CertValue cert_log(const CertValue& x) {
    if (!(x.lower() > 0.0)) throw DomainError("cert_log: interval touches (-inf, 0]");
    const double m = std::log(x.mid);
    // Max deviation is at the lower endpoint: log(mid) - log(mid - rad).
    const double r = -std::log1p(-x.rad / x.mid);
    return {m, detail::inflate(m, r)};
}

CertValue cert_sqrt(const CertValue& x) {
    if (x.lower() < 0.0) {
        if (x.upper() < 0.0) throw DomainError("cert_sqrt: negative interval");
        const double hi = std::sqrt(x.upper());
        return {hi / 2.0, detail::inflate(hi, hi / 2.0)};
    }
    const double m = std::sqrt(x.mid);
    const double r = (m > 0.0) ? x.rad / (std::sqrt(x.lower()) + m) : std::sqrt(x.rad);
    return {m, detail::inflate(m, r)};
}

CertValue cert_sin(const CertValue& x) {
    const double m = std::sin(x.mid);
    return {m, detail::inflate(1.0, x.rad)};  // Lipschitz constant 1
}

CertValue cert_cos(const CertValue& x) {
    const double m = std::cos(x.mid);
    return {m, detail::inflate(1.0, x.rad)};
}

CertValue cert_atan(const CertValue& x) {
    const double m = std::atan(x.mid);
    return {m, detail::inflate(1.0, x.rad)};
}

CertValue cert_abs(const CertValue& x) {
    if (x.lower() >= 0.0) return x;
    if (x.upper() <= 0.0) return -x;
    const double hi = std::max(-x.lower(), x.upper());
    return {hi / 2.0, hi / 2.0};
}

CertValue cert_pow(const CertValue& base, double expo) {
    if (expo == 0.0) return CertValue(1.0);
    return cert_exp(cert_log(base) * expo);
}

CertValue cert_hypot(const CertValue& x, const CertValue& y) {
    const double m = std::hypot(x.mid, y.mid);
    // |.| is 1-Lipschitz in each rectangular coordinate.
    return {m, detail::inflate(m, x.rad + y.rad)};
}

// ---------------------------------------------------------------------------
// Field invariants
// ---------------------------------------------------------------------------

FieldInvariants build_field(int degree, int r1, int r2, double log_disc) {
    if (degree < 1 || r1 < 0 || r2 < 0 || !std::isfinite(log_disc))
        throw DomainError("build_field: degree >= 1, r1 >= 0, r2 >= 0, finite log_disc required");
    if (r1 + 2 * r2 != degree)
        throw SignatureMismatch("build_field: r1 + 2 r2 != degree");
    if (log_disc < 0.0)
        throw NegativeDiscriminant("build_field: log_disc < 0");
    return FieldInvariants{degree, r1, r2, log_disc};
}

double conductor_q(const FieldInvariants& field, double T) {
    if (!(T > 1.0)) throw DomainError("conductor_q: requires T > 1");
    return field.log_disc + (std::log(T) + 20.0) * field.degree + 11.0;
}

double w_term(const FieldInvariants& field, double T) {
    if (!(T > 0.0)) throw DomainError("w_term: requires T > 0");
    return field.log_disc + field.degree * std::log(T / (2.0 * std::numbers::pi));
}

// ---------------------------------------------------------------------------
// Field descriptor parsing
// ---------------------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

}  // namespace

FieldInvariants parse_field_descriptor(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_degree = false, have_r1 = false, have_r2 = false, have_logd = false;
    int degree = 0, r1 = 0, r2 = 0;
    double log_disc = 0.0;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("field descriptor: expected 'key = value'", line_no);
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        try {
            std::size_t used = 0;
            if (key == "degree") {
                degree = std::stoi(val, &used);
                have_degree = true;
            } else if (key == "r1") {
                r1 = std::stoi(val, &used);
                have_r1 = true;
            } else if (key == "r2") {
                r2 = std::stoi(val, &used);
                have_r2 = true;
            } else if (key == "log_disc") {
                log_disc = std::stod(val, &used);
                have_logd = true;
            } else {
                throw ParseError("field descriptor: unknown key '" + key + "'", line_no);
            }
            if (used != val.size())
                throw ParseError("field descriptor: trailing characters after value", line_no);
        } catch (const std::invalid_argument&) {
            throw ParseError("field descriptor: malformed value for '" + key + "'", line_no);
        } catch (const std::out_of_range&) {
            throw ParseError("field descriptor: value out of range for '" + key + "'", line_no);
        }
    }
    if (!(have_degree && have_r1 && have_r2 && have_logd))
        throw MetaError("field descriptor: keys degree, r1, r2, log_disc are all required");
    return build_field(degree, r1, r2, log_disc);
}

FieldInvariants load_field_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open field descriptor: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_field_descriptor(buf.str());
}

}  // namespace zetabound
