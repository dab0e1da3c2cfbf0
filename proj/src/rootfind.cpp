#include "polydisc/rootfind.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polydisc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex horner(std::span<const Complex> c, Complex z) {
    Complex acc = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
    return acc;
}

double horner_abs(std::span<const double> c, double x) {
    double acc = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) acc = acc * x + c[k];
    return acc;
}

// Working copy of the input with zero-root bookkeeping done. q holds the
// reversed coefficients, so P(z) = z^m Q(1/z); evaluating through Q keeps
// iterates with |z| > 1 away from overflow.
struct Solver {
    std::vector<Complex> c;    // stripped, c[0] != 0, c[m] != 0
    std::vector<Complex> dc;   // derivative of c
    std::vector<Complex> q;    // reversed c
    std::vector<Complex> dq;   // derivative of q
    std::vector<double> abs_c;
    std::vector<double> abs_q;
    double sum_abs_c = 0.0;
    int m = 0;

    explicit Solver(std::span<const Complex> stripped) {
        c.assign(stripped.begin(), stripped.end());
        m = static_cast<int>(c.size()) - 1;
        q.assign(c.rbegin(), c.rend());
        dc.resize(std::max<size_t>(1, c.size() - 1));
        dq.resize(std::max<size_t>(1, q.size() - 1));
        if (m == 0) dc[0] = dq[0] = 0.0;
        for (int k = 1; k <= m; ++k) {
            dc[static_cast<size_t>(k - 1)] = double(k) * c[static_cast<size_t>(k)];
            dq[static_cast<size_t>(k - 1)] = double(k) * q[static_cast<size_t>(k)];
        }
        abs_c.resize(c.size());
        abs_q.resize(q.size());
        for (size_t k = 0; k < c.size(); ++k) {
            abs_c[k] = std::abs(c[k]);
            abs_q[k] = std::abs(q[k]);
            sum_abs_c += abs_c[k];
        }
    }

    // P(z)/P'(z), through Q when |z| > 1.
    Complex newton_ratio(Complex z) const {
        if (std::abs(z) <= 1.0) {
            const Complex p = horner(c, z);
            if (p == Complex(0.0)) return 0.0;
            const Complex dp = horner(dc, z);
            return p / dp;
        }
        const Complex w = 1.0 / z;
        const Complex qv = horner(q, w);
        if (qv == Complex(0.0)) return 0.0;
        const Complex qd = horner(dq, w);
        return z * qv / (double(m) * qv - w * qd);
    }

    // |P(z)| / sum_j |c_j| max(1,|z|)^j without forming |z|^m.
    double rel_residual(Complex z) const {
        const double a = std::abs(z);
        if (a <= 1.0) {
            return std::abs(horner(c, z)) / sum_abs_c;
        }
        const Complex w = 1.0 / z;
        return std::abs(horner(q, w)) / horner_abs(abs_q, std::abs(w));
    }
};

std::vector<Complex> guesses_for(const Solver& s) {
    const int m = s.m;
    double max_ratio = 0.0;
    const double lead = s.abs_c[static_cast<size_t>(m)];
    for (int k = 0; k < m; ++k)
        max_ratio = std::max(max_ratio, s.abs_c[static_cast<size_t>(k)] / lead);
    double radius = 1.0 + max_ratio;
    if (radius > 2.0) radius *= 0.5;
    std::vector<Complex> z(static_cast<size_t>(m));
    for (int k = 0; k < m; ++k)
        z[static_cast<size_t>(k)] = std::polar(radius, kTwoPi * k / m + 0.4);
    return z;
}

// Per-slot starting radii from the upper convex hull of (k, log|c_k|):
// slots between consecutive hull vertices i < j start at
// (|c_i|/|c_j|)^(1/(j-i)), the Newton polygon estimate of the root
// moduli. Keeps the iteration count flat in the degree, where a single
// start circle needs O(n) sweeps just to drift onto the root annulus.
std::vector<Complex> hull_starts(const Solver& s) {
    const int m = s.m;
    std::vector<double> lg(static_cast<size_t>(m) + 1);
    for (int k = 0; k <= m; ++k) {
        const double a = s.abs_c[static_cast<size_t>(k)];
        lg[static_cast<size_t>(k)] = a > 0.0 ? std::log(a) : -1e300;
    }
    std::vector<int> hull;
    for (int k = 0; k <= m; ++k) {
        while (hull.size() >= 2) {
            const int i = hull[hull.size() - 2];
            const int j = hull[hull.size() - 1];
            if ((lg[static_cast<size_t>(j)] - lg[static_cast<size_t>(i)]) * (k - j) <=
                (lg[static_cast<size_t>(k)] - lg[static_cast<size_t>(j)]) * (j - i))
                hull.pop_back();
            else
                break;
        }
        hull.push_back(k);
    }
    std::vector<Complex> z(static_cast<size_t>(m));
    for (size_t e = 0; e + 1 < hull.size(); ++e) {
        const int i = hull[e];
        const int j = hull[e + 1];
        double radius = std::exp((lg[static_cast<size_t>(i)] -
                                  lg[static_cast<size_t>(j)]) /
                                 (j - i));
        radius = std::clamp(radius, 1e-9, 1e9);
        for (int k = i; k < j; ++k)
            z[static_cast<size_t>(k)] = std::polar(radius, kTwoPi * k / m + 0.4);
    }
    return z;
}

// Index of the first nonzero coefficient from the top; -1 if all zero.
int top_nonzero(std::span<const Complex> c) {
    for (int k = static_cast<int>(c.size()) - 1; k >= 0; --k)
        if (c[static_cast<size_t>(k)] != Complex(0.0)) return k;
    return -1;
}

}  // namespace

std::vector<Complex> initial_guesses(const ComplexPolynomial& p) {
    const int top = top_nonzero(p.coeffs());
    if (top < 0) throw std::invalid_argument("initial_guesses: zero polynomial");
    if (top == 0) return {};
    Solver s(p.coeffs().subspan(0, static_cast<size_t>(top) + 1));
    return guesses_for(s);
}

namespace {

RootMultiset solve(const ComplexPolynomial& p, const std::vector<Complex>* starts,
                   double tol, int max_iter) {
    if (!(tol > 0.0)) throw std::invalid_argument("find_roots: tol must be positive");
    if (max_iter < 1) throw std::invalid_argument("find_roots: max_iter must be >= 1");
    auto full = p.coeffs();
    const int top = top_nonzero(full);
    if (top < 0) throw std::invalid_argument("find_roots: zero polynomial");

    int bottom = 0;
    while (full[static_cast<size_t>(bottom)] == Complex(0.0)) ++bottom;

    RootMultiset out;
    out.roots.assign(static_cast<size_t>(bottom), Complex(0.0));  // exact zero roots

    Solver s(full.subspan(static_cast<size_t>(bottom),
                          static_cast<size_t>(top - bottom) + 1));
    const int m = s.m;
    if (starts && static_cast<int>(starts->size()) != m)
        throw std::invalid_argument("find_roots_from: wrong number of starting points");

    if (m > 0) {
        std::vector<Complex> z = starts ? *starts : hull_starts(s);
        std::vector<char> locked(static_cast<size_t>(m), 0);
        const double lock_tol = 0.25 * tol;

        int sweeps = 0;
        for (; sweeps < max_iter; ++sweeps) {
            bool all_locked = true;
            for (int k = 0; k < m; ++k) {
                if (locked[static_cast<size_t>(k)]) continue;
                Complex zk = z[static_cast<size_t>(k)];
                Complex ratio = s.newton_ratio(zk);
                if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) {
                    // stationary point of P; nudge deterministically
                    z[static_cast<size_t>(k)] =
                        zk + (1.0 + std::abs(zk)) * Complex(1e-3, 2e-3);
                    all_locked = false;
                    continue;
                }
                Complex repulsion = 0.0;
                for (int j = 0; j < m; ++j) {
                    if (j == k) continue;
                    Complex d = zk - z[static_cast<size_t>(j)];
                    if (d == Complex(0.0)) d = Complex(1e-14, 1e-14) * (1.0 + std::abs(zk));
                    repulsion += 1.0 / d;
                }
                const Complex denom = 1.0 - ratio * repulsion;
                Complex step = ratio;
                if (denom != Complex(0.0) && std::isfinite(denom.real()) &&
                    std::isfinite(denom.imag()))
                    step = ratio / denom;
                Complex znew = zk - step;
                if (!std::isfinite(znew.real()) || !std::isfinite(znew.imag()))
                    znew = zk + (1.0 + std::abs(zk)) * Complex(1e-3, 2e-3);
                z[static_cast<size_t>(k)] = znew;
                if (std::abs(step) <= lock_tol * (1.0 + std::abs(znew)))
                    locked[static_cast<size_t>(k)] = 1;
                else
                    all_locked = false;
            }
            if (all_locked) {
                ++sweeps;
                break;
            }
        }
        out.iterations = sweeps;

        // Two Newton polishing steps per root.
        for (int k = 0; k < m; ++k) {
            Complex zk = z[static_cast<size_t>(k)];
            for (int step = 0; step < 2; ++step) {
                const Complex ratio = s.newton_ratio(zk);
                if (!std::isfinite(ratio.real()) || !std::isfinite(ratio.imag())) break;
                if (std::abs(ratio) > 0.5 * (1.0 + std::abs(zk))) break;
                zk -= ratio;
            }
            out.roots.push_back(zk);
        }
    }

    // Residual certificates against the original coefficient list.
    Solver orig(full.subspan(0, static_cast<size_t>(top) + 1));
    out.residuals.reserve(out.roots.size());
    out.worst_residual = 0.0;
    for (const Complex& z : out.roots) {
        const double r = orig.rel_residual(z);
        out.residuals.push_back(r);
        out.worst_residual = std::max(out.worst_residual, r);
    }
    out.converged = out.worst_residual <= tol;
    return out;
}

}  // namespace

RootMultiset find_roots(const ComplexPolynomial& p, double tol, int max_iter) {
    return solve(p, nullptr, tol, max_iter);
}

RootMultiset find_roots_from(const ComplexPolynomial& p, std::vector<Complex> starts,
                             double tol, int max_iter) {
    return solve(p, &starts, tol, max_iter);
}

}  // namespace polydisc
