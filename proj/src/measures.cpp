#include "zetabound/measures.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <set>

namespace zetabound {

// ---------------------------------------------------------------------------
// DeltaMeasure basics
// ---------------------------------------------------------------------------

double DeltaMeasure::total_mass() const {
    double m = 0.0;
    for (std::size_t i = 0; i < centers.size(); ++i)
        m += (centers[i] == 0.0) ? weights[i] : 2.0 * weights[i];
    return m;
}

double DeltaMeasure::cost() const { return total_mass() / (2.0 * alpha); }

double DeltaMeasure::kernel_sum(double gamma) const {
    const double a2 = alpha * alpha;
    double s = 0.0;
    for (std::size_t i = 0; i < centers.size(); ++i) {
        const double b = centers[i];
        const double d1 = gamma - b;
        s += weights[i] / (a2 + d1 * d1);
        if (b != 0.0) {
            const double d2 = gamma + b;
            s += weights[i] / (a2 + d2 * d2);
        }
    }
    return s;
}

// ---------------------------------------------------------------------------
// Five-atom solver.
//
// For given 0 < b1 < b2 the weights (c0, c1, c2) come from the linear system
// pinning the kernel sum to 1 at g = 0, 3/5, 1.  The two remaining tangency
// conditions (double contact at 3/5, fourth-order contact at 0) are
//
//   E1 = sum_j c_j (3/5 - b_j)   / (1/16 + (3/5 - b_j)^2)^2 = 0
//   E2 = sum_j c_j (1/16 - 3 b_j^2) / (1/16 + b_j^2)^3       = 0
//
// with j running over the atoms at -b2, -b1, 0, b1, b2.
// ---------------------------------------------------------------------------

namespace {

constexpr double kAlpha5 = 0.25;
constexpr double kA2 = kAlpha5 * kAlpha5;  // 1/16

bool solve3x3(double A[3][3], double rhs[3], double out[3]) {
    int idx[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 3; ++r)
            if (std::fabs(A[idx[r]][col]) > std::fabs(A[idx[pivot]][col])) pivot = r;
        std::swap(idx[col], idx[pivot]);
        const double p = A[idx[col]][col];
        if (std::fabs(p) < 1e-11) return false;
        for (int r = col + 1; r < 3; ++r) {
            const double f = A[idx[r]][col] / p;
            for (int c = col; c < 3; ++c) A[idx[r]][c] -= f * A[idx[col]][c];
            rhs[idx[r]] -= f * rhs[idx[col]];
        }
    }
    for (int col = 2; col >= 0; --col) {
        double v = rhs[idx[col]];
        for (int c = col + 1; c < 3; ++c) v -= A[idx[col]][c] * out[c];
        const double p = A[idx[col]][col];
        if (std::fabs(p) < 1e-11) return false;
        out[col] = v / p;
    }
    return true;
}

double pair_kernel(double g, double b) {
    // kernel of the symmetric atom pair at +/- b (single atom when b = 0)
    const double d1 = g - b;
    double v = 1.0 / (kA2 + d1 * d1);
    if (b != 0.0) {
        const double d2 = g + b;
        v += 1.0 / (kA2 + d2 * d2);
    }
    return v;
}

bool weights_for(double b1, double b2, double c[3]) {
    double A[3][3];
    double rhs[3] = {1.0, 1.0, 1.0};
    const double nodes[3] = {0.0, 0.6, 1.0};
    for (int r = 0; r < 3; ++r) {
        A[r][0] = pair_kernel(nodes[r], 0.0);
        A[r][1] = pair_kernel(nodes[r], b1);
        A[r][2] = pair_kernel(nodes[r], b2);
    }
    return solve3x3(A, rhs, c);
}

void tangency_residual(double b1, double b2, const double c[3], double out[2]) {
    const double bs[5] = {-b2, -b1, 0.0, b1, b2};
    const double cs[5] = {c[2], c[1], c[0], c[1], c[2]};
    double e1 = 0.0, e2 = 0.0;
    for (int j = 0; j < 5; ++j) {
        const double d = 0.6 - bs[j];
        const double q = kA2 + d * d;
        e1 += cs[j] * d / (q * q);
        const double p = kA2 + bs[j] * bs[j];
        e2 += cs[j] * (kA2 - 3.0 * bs[j] * bs[j]) / (p * p * p);
    }
    out[0] = e1;
    out[1] = e2;
}

bool eval_system(double b1, double b2, double out[2]) {
    double c[3];
    if (!weights_for(b1, b2, c)) return false;
    // The interpolation matrix has a zero-determinant curve inside (0,1)^2;
    // across it the weights blow up and both residuals flip sign, which a
    // plain sign scan would misread as a solution basin.  Genuine covering
    // weights are O(0.1), so a magnitude cut removes the pole curve.
    if (std::max({std::fabs(c[0]), std::fabs(c[1]), std::fabs(c[2])}) > 5.0) return false;
    tangency_residual(b1, b2, c, out);
    return true;
}

}  // namespace

DeltaMeasure solve_five_delta() {
    constexpr double kStride = 1e-3;
    const int n = static_cast<int>(1.0 / kStride);  // grid over (0,1)^2

    // Row-by-row scan for cells where both residual components change sign.
    std::vector<double> prev_e1(n + 1), prev_e2(n + 1);
    std::vector<char> prev_ok(n + 1, 0);
    std::vector<std::pair<int, int>> hits;

    for (int i = 0; i <= n; ++i) {
        const double b1 = i * kStride;
        std::vector<double> cur_e1(n + 1), cur_e2(n + 1);
        std::vector<char> cur_ok(n + 1, 0);
        for (int j = i + 2; j <= n; ++j) {  // keep off the singular diagonal
            const double b2 = j * kStride;
            if (b1 < kStride / 2 || b2 >= 1.0) continue;
            double e[2];
            if (eval_system(b1, b2, e)) {
                cur_e1[j] = e[0];
                cur_e2[j] = e[1];
                cur_ok[j] = 1;
            }
        }
        if (i > 0) {
            for (int j = i + 2; j < n; ++j) {
                if (!(prev_ok[j] && prev_ok[j + 1] && cur_ok[j] && cur_ok[j + 1])) continue;
                const double e1s[4] = {prev_e1[j], prev_e1[j + 1], cur_e1[j], cur_e1[j + 1]};
                const double e2s[4] = {prev_e2[j], prev_e2[j + 1], cur_e2[j], cur_e2[j + 1]};
                auto mixed = [](const double* v) {
                    double lo = v[0], hi = v[0];
                    for (int k = 1; k < 4; ++k) {
                        lo = std::min(lo, v[k]);
                        hi = std::max(hi, v[k]);
                    }
                    return lo <= 0.0 && hi >= 0.0;
                };
                if (mixed(e1s) && mixed(e2s)) hits.emplace_back(i - 1, j);
            }
        }
        prev_e1.swap(cur_e1);
        prev_e2.swap(cur_e2);
        prev_ok.swap(cur_ok);
    }

    if (hits.empty()) throw NoSolution("five-delta scan: no sign-change basin found");

    // Cluster adjacent hit cells; distinct clusters mean distinct basins.
    std::set<std::pair<int, int>> unvisited(hits.begin(), hits.end());
    int basins = 0;
    double seed_b1 = 0.0, seed_b2 = 0.0;
    while (!unvisited.empty()) {
        ++basins;
        std::vector<std::pair<int, int>> queue{*unvisited.begin()};
        unvisited.erase(unvisited.begin());
        double sum1 = 0.0, sum2 = 0.0;
        int count = 0;
        while (!queue.empty()) {
            const auto [ci, cj] = queue.back();
            queue.pop_back();
            sum1 += (ci + 0.5) * kStride;
            sum2 += (cj + 0.5) * kStride;
            ++count;
            for (int di = -1; di <= 1; ++di)
                for (int dj = -1; dj <= 1; ++dj) {
                    const auto it = unvisited.find({ci + di, cj + dj});
                    if (it != unvisited.end()) {
                        queue.push_back(*it);
                        unvisited.erase(it);
                    }
                }
        }
        if (basins == 1) {
            seed_b1 = sum1 / count;
            seed_b2 = sum2 / count;
        }
    }
    if (basins != 1)
        throw MultipleSolutions("five-delta scan: found " + std::to_string(basins) +
                                " sign-change basins, expected exactly 1");

    // Newton refinement with a finite-difference Jacobian.
    double b1 = seed_b1, b2 = seed_b2;
    const double h = 1e-7;
    double e[2];
    for (int it = 0; it < 60; ++it) {
        if (!eval_system(b1, b2, e))
            throw NoSolution("five-delta refinement: singular interpolation system");
        if (std::max(std::fabs(e[0]), std::fabs(e[1])) < 1e-13) break;
        double e10[2], e01[2];
        if (!eval_system(b1 + h, b2, e10) || !eval_system(b1, b2 + h, e01))
            throw NoSolution("five-delta refinement: singular interpolation system");
        const double j11 = (e10[0] - e[0]) / h, j12 = (e01[0] - e[0]) / h;
        const double j21 = (e10[1] - e[1]) / h, j22 = (e01[1] - e[1]) / h;
        const double det = j11 * j22 - j12 * j21;
        if (std::fabs(det) < 1e-14) throw NoSolution("five-delta refinement: singular Jacobian");
        const double db1 = (e[0] * j22 - e[1] * j12) / det;
        const double db2 = (e[1] * j11 - e[0] * j21) / det;
        b1 -= db1;
        b2 -= db2;
    }
    eval_system(b1, b2, e);
    if (std::max(std::fabs(e[0]), std::fabs(e[1])) > 1e-12)
        throw PrecisionError("five-delta refinement: residual did not reach 1e-12");

    double c[3];
    if (!weights_for(b1, b2, c))
        throw NoSolution("five-delta: interpolation system singular at the solution");

    DeltaMeasure m;
    m.alpha = kAlpha5;
    m.window_a = 1.0;
    m.centers = {0.0, b1, b2};
    m.weights = {c[0], c[1], c[2]};
    m.equality_nodes = {0.0, 0.6, 1.0};

    for (double w : m.weights)
        if (!(w >= 0.0)) throw PrecisionError("five-delta: a weight came out negative");
    if (!(m.cost() <= 0.5 + 1e-12))
        throw PrecisionError("five-delta: cost exceeded 1/2");
    return m;
}

// ---------------------------------------------------------------------------
// Three-atom closed forms
// ---------------------------------------------------------------------------

DeltaMeasure three_delta(double a, double alpha, double b) {
    if (!(a > 0.0) || !(alpha > 0.0)) throw DomainError("three_delta: a > 0, alpha > 0 required");
    if (!(b > 0.0)) throw DegenerateDenominator("three_delta: b = 0 degenerates the formulas");
    const double a2 = a * a, b2 = b * b;
    const double al2 = alpha * alpha, al4 = al2 * al2, al6 = al4 * al2;
    const double den = b2 * (5.0 * al2 + a2 + b2);
    const double c0 = (-al6 + (3.0 * b2 - 2.0 * a2) * al4 + (3.0 * b2 - a2) * a2 * al2) / den;
    const double c1 = (al6 + (2.0 * a2 + 3.0 * b2) * al4 + (a2 * a2 + 3.0 * b2 * b2) * al2 +
                       (a2 - b2) * (a2 - b2) * b2) /
                      (2.0 * den);
    DeltaMeasure m;
    m.alpha = alpha;
    m.window_a = a;
    m.centers = {0.0, b};
    m.weights = {c0, c1};
    m.equality_nodes = {0.0, a};
    return m;
}

// ---------------------------------------------------------------------------
// Polynomial utilities (coefficients descending by degree)
// ---------------------------------------------------------------------------

namespace {

using Poly = std::vector<double>;

Poly poly_mul(const Poly& p, const Poly& q) {
    Poly r(p.size() + q.size() - 1, 0.0);
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    return r;
}

double poly_eval(const Poly& p, double x) {
    double v = 0.0;
    for (double c : p) v = v * x + c;
    return v;
}

double poly_inf_norm(const Poly& p) {
    double m = 0.0;
    for (double c : p) m = std::max(m, std::fabs(c));
    return m;
}

// Synthetic division by (x - r); returns remainder, quotient in q.
double poly_deflate(const Poly& p, double r, Poly& q) {
    q.assign(p.size() - 1, 0.0);
    double acc = p[0];
    for (std::size_t i = 1; i < p.size(); ++i) {
        q[i - 1] = acc;
        acc = acc * r + p[i];
    }
    return acc;
}

Poly poly_deriv(const Poly& p) {
    if (p.size() <= 1) return {0.0};
    Poly d(p.size() - 1);
    const int n = static_cast<int>(p.size()) - 1;
    for (int i = 0; i < n; ++i) d[i] = p[i] * (n - i);
    return d;
}

Poly poly_trim(Poly p, double tol) {
    std::size_t k = 0;
    while (k + 1 < p.size() && std::fabs(p[k]) <= tol) ++k;
    p.erase(p.begin(), p.begin() + k);
    return p;
}

// Remainder of p divided by d (degrees: |p| >= |d|).
Poly poly_mod(Poly p, const Poly& d) {
    const std::size_t nd = d.size();
    while (p.size() >= nd && p.size() > 1) {
        const double f = p[0] / d[0];
        for (std::size_t i = 0; i < nd; ++i) p[i] -= f * d[i];
        p.erase(p.begin());
        // guard against stray leading dust
        while (p.size() >= nd && p.size() > 1 && std::fabs(p[0]) < 1e-300) p.erase(p.begin());
    }
    return p;
}

int sign_of(double x, double tol) { return x > tol ? 1 : (x < -tol ? -1 : 0); }

// Number of distinct real roots of p in (lo, hi] by a Sturm chain.
int sturm_count(const Poly& p, double lo, double hi) {
    const double scale = poly_inf_norm(p);
    const double tol = 1e-13 * std::max(1.0, scale);
    std::vector<Poly> chain;
    chain.push_back(poly_trim(p, tol));
    if (chain[0].size() <= 1) return 0;
    chain.push_back(poly_trim(poly_deriv(chain[0]), 0.0));
    while (chain.back().size() > 1) {
        Poly r = poly_mod(chain[chain.size() - 2], chain.back());
        r = poly_trim(r, 1e-12 * std::max(1.0, poly_inf_norm(r)));
        for (double& c : r) c = -c;
        if (r.size() == 1 && std::fabs(r[0]) <= 1e-10 * std::max(1.0, scale)) break;
        chain.push_back(r);
    }
    auto variations = [&chain](double x) {
        int v = 0, prev = 0;
        for (const auto& q : chain) {
            const int s = sign_of(poly_eval(q, x), 0.0);
            if (s != 0) {
                if (prev != 0 && s != prev) ++v;
                prev = s;
            }
        }
        return v;
    };
    return variations(lo) - variations(hi);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

}  // namespace

CoveringReport covering_slack(const DeltaMeasure& m) {
    if (m.centers.size() != m.weights.size() || m.centers.empty())
        throw MalformedMeasure("covering_slack: centers/weights mismatch");
    for (std::size_t i = 0; i < m.centers.size(); ++i)
        if (!std::isfinite(m.centers[i]) || !std::isfinite(m.weights[i]) ||
            !std::isfinite(m.alpha) || !std::isfinite(m.window_a))
            throw MalformedMeasure("covering_slack: non-finite measure data");

    const double a = m.window_a;
    const double al2 = m.alpha * m.alpha;

    // Expand the symmetric atoms into explicit positions.
    std::vector<double> pos, wts;
    for (std::size_t i = 0; i < m.centers.size(); ++i) {
        pos.push_back(m.centers[i]);
        wts.push_back(m.weights[i]);
        if (m.centers[i] != 0.0) {
            pos.push_back(-m.centers[i]);
            wts.push_back(m.weights[i]);
        }
    }

    // D = sum_j w_j prod_{k != j} q_k - prod_k q_k, q_k = (g - pos_k)^2 + al2.
    std::vector<Poly> quads;
    for (double b : pos) quads.push_back(Poly{1.0, -2.0 * b, b * b + al2});
    Poly prod{1.0};
    for (const auto& q : quads) prod = poly_mul(prod, q);
    Poly D(prod.size(), 0.0);
    for (std::size_t j = 0; j < quads.size(); ++j) {
        Poly pj{wts[j]};
        for (std::size_t k = 0; k < quads.size(); ++k)
            if (k != j) pj = poly_mul(pj, quads[k]);
        // align degrees
        const std::size_t off = D.size() - pj.size();
        for (std::size_t i = 0; i < pj.size(); ++i) D[off + i] += pj[i];
    }
    for (std::size_t i = 0; i < prod.size(); ++i) D[i] -= prod[i];
    const int degree = static_cast<int>(D.size()) - 1;

    // Deflate construction roots (each node r > 0 also appears as -r).
    const double tol_def = 1e-8 * std::max(1.0, poly_inf_norm(D));
    Poly cur = D;
    std::string cert = "deg " + std::to_string(degree) + ":";
    int accounted = 0;
    for (double r : m.equality_nodes) {
        for (double root : (r == 0.0 ? std::vector<double>{0.0} : std::vector<double>{r, -r})) {
            int mult = 0;
            while (cur.size() > 1) {
                Poly q;
                const double rem = poly_deflate(cur, root, q);
                if (std::fabs(rem) > tol_def) break;
                cur = q;
                ++mult;
            }
            accounted += mult;
            cert += " node " + fmt(root) + " x" + std::to_string(mult) + ";";
        }
    }

    // Residual: no further real roots may lie inside the open window.
    Poly resid = poly_trim(cur, 1e-10 * std::max(1.0, poly_inf_norm(cur)));
    const int resid_deg = static_cast<int>(resid.size()) - 1;
    int window_roots = 0;
    if (resid_deg == 1) {
        const double root = -resid[1] / resid[0];
        window_roots = (std::fabs(root) < a) ? 1 : 0;
    } else if (resid_deg == 2) {
        const double disc = resid[1] * resid[1] - 4.0 * resid[0] * resid[2];
        if (disc >= 0.0) {
            const double sq = std::sqrt(disc);
            for (double root : {(-resid[1] + sq) / (2.0 * resid[0]),
                                (-resid[1] - sq) / (2.0 * resid[0])})
                if (std::fabs(root) < a) ++window_roots;
        }
    } else if (resid_deg > 2) {
        window_roots = sturm_count(resid, -a, a);
    }
    accounted += resid_deg;
    cert += " residual deg " + std::to_string(resid_deg) + " with " +
            std::to_string(window_roots) + " window root(s)";

    // Dense-grid floor check over the window (backstop for the algebra).
    double min_slack = std::numeric_limits<double>::infinity();
    const int steps = static_cast<int>(std::ceil(2.0 * a / 1e-3));
    for (int i = 0; i <= steps; ++i) {
        const double g = -a + 2.0 * a * i / steps;
        min_slack = std::min(min_slack, m.kernel_sum(g) - 1.0);
    }

    // Outside the window the kernel sum must stay non-negative.  With
    // non-negative weights that is automatic; otherwise check that the
    // numerator polynomial N = D + prod has no roots beyond the window.
    bool outside_ok = true;
    bool has_negative = false;
    for (double w : m.weights) has_negative |= (w < 0.0);
    if (has_negative) {
        Poly N = D;
        for (std::size_t i = 0; i < prod.size(); ++i) N[i] += prod[i];
        N = poly_trim(N, 1e-12 * std::max(1.0, poly_inf_norm(N)));
        const double cauchy =
            1.0 + poly_inf_norm(N) / std::max(std::fabs(N[0]), 1e-30);
        outside_ok = N[0] > 0.0 && sturm_count(N, a, cauchy + 1.0) == 0 &&
                     sturm_count(N, -cauchy - 1.0, -a) == 0 && poly_eval(N, a) >= -1e-9;
    }

    CoveringReport rep;
    rep.poly_degree = degree;
    rep.roots_accounted = accounted;
    rep.min_slack = min_slack;
    rep.root_certificate = cert;
    rep.holds = (min_slack >= -1e-12) && (window_roots == 0) && (accounted == degree) &&
                outside_ok;
    return rep;
}

RescaleResult cost_and_rescale(const DeltaMeasure& m, double new_a) {
    if (!(new_a > 0.0)) throw DomainError("cost_and_rescale: new_a > 0 required");
    const double s = new_a / m.window_a;
    DeltaMeasure r;
    r.alpha = m.alpha * s;
    r.window_a = new_a;
    for (double b : m.centers) r.centers.push_back(b * s);
    for (double w : m.weights) r.weights.push_back(w * s * s);
    for (double x : m.equality_nodes) r.equality_nodes.push_back(x * s);
    return {m.cost(), std::move(r)};
}

void write_measure_csv(std::ostream& out, const DeltaMeasure& m) {
    char line[128];
    std::snprintf(line, sizeof(line), "alpha,%.10g\n", m.alpha);
    out << line;
    std::snprintf(line, sizeof(line), "window_a,%.10g\n", m.window_a);
    out << line;
    out << "center,weight\n";
    for (std::size_t i = 0; i < m.centers.size(); ++i) {
        std::snprintf(line, sizeof(line), "%.10g,%.10g\n", m.centers[i], m.weights[i]);
        out << line;
    }
}

}  // namespace zetabound
