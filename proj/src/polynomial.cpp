#include "polydisc/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polydisc {

namespace {

constexpr double kClampAbs = 1e-300;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

void require_log_grid(const ComplexPolynomial& p, const CircleGrid& grid) {
    if (p.is_zero())
        throw std::invalid_argument("log-integral of the zero polynomial");
    if (grid.node_count() < 64 * (p.degree() + 1))
        throw std::invalid_argument("grid too coarse for a log-integral of this degree");
}

}  // namespace

ComplexPolynomial::ComplexPolynomial(std::vector<Complex> coeffs)
    : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("polynomial needs at least one coefficient");
}

bool ComplexPolynomial::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Complex& c) { return c == Complex(0.0); });
}

bool ComplexPolynomial::is_admissible() const {
    return constant_coeff() != Complex(0.0) && leading_coeff() != Complex(0.0);
}

CircleGrid::CircleGrid(int node_count) {
    if (node_count < 8 || !is_pow2(node_count))
        throw std::invalid_argument("node count must be a power of two >= 8");
    nodes_.resize(static_cast<size_t>(node_count));
    for (int j = 0; j < node_count; ++j)
        nodes_[static_cast<size_t>(j)] =
            std::polar(1.0, kTwoPi * (j + 0.5) / node_count);
}

CircleGrid CircleGrid::for_degree(int degree) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    long need = std::max(8192L, 64L * (degree + 1));
    int n = 8192;
    while (n < need) n *= 2;
    return CircleGrid(n);
}

Complex eval(const ComplexPolynomial& p, Complex z) {
    auto c = p.coeffs();
    Complex acc = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
    return acc;
}

double l2_norm(const ComplexPolynomial& p) {
    double s = 0.0;
    for (const Complex& c : p.coeffs()) s += std::norm(c);
    return std::sqrt(s);
}

CircleSamples sample_abs_on_circle(const ComplexPolynomial& p, const CircleGrid& grid) {
    CircleSamples out;
    out.grid = &grid;
    out.abs_values.resize(static_cast<size_t>(grid.node_count()));
    auto c = p.coeffs();
    const size_t n = c.size();
    const Complex* nodes = grid.nodes().data();
    for (size_t j = 0; j < out.abs_values.size(); ++j) {
        const Complex z = nodes[j];
        Complex acc = c[n - 1];
        for (size_t k = n - 1; k-- > 0;) acc = acc * z + c[k];
        out.abs_values[j] = std::abs(acc);
    }
    return out;
}

double lp_norm(const CircleSamples& samples, double ord) {
    if (!(ord > 0.0)) throw std::invalid_argument("lp_norm requires p > 0");
    double acc = 0.0;
    if (ord == 2.0) {
        for (double v : samples.abs_values) acc += v * v;
    } else if (ord == 1.0) {
        for (double v : samples.abs_values) acc += v;
    } else {
        for (double v : samples.abs_values) acc += std::pow(v, ord);
    }
    acc /= static_cast<double>(samples.abs_values.size());
    return std::pow(acc, 1.0 / ord);
}

double lp_norm(const ComplexPolynomial& p, double ord, const CircleGrid& grid) {
    if (!(ord > 0.0)) throw std::invalid_argument("lp_norm requires p > 0");
    return lp_norm(sample_abs_on_circle(p, grid), ord);
}

namespace {

// Golden-section maximization of |P(e^{i theta})| on [lo, hi].
double refine_circle_peak(const ComplexPolynomial& p, double lo, double hi) {
    constexpr double inv_phi = 0.6180339887498949;
    auto f = [&](double t) { return std::abs(eval(p, std::polar(1.0, t))); };
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 60; ++it) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return std::max(f1, f2);
}

}  // namespace

double sup_norm(const ComplexPolynomial& p, const CircleSamples& samples) {
    const auto& v = samples.abs_values;
    size_t best = 0;
    for (size_t j = 1; j < v.size(); ++j)
        if (v[j] > v[best]) best = j;
    const int n = samples.grid->node_count();
    const double spacing = kTwoPi / n;
    const double theta = spacing * (static_cast<double>(best) + 0.5);
    const double refined = refine_circle_peak(p, theta - spacing, theta + spacing);
    return std::max(v[best], refined);
}

double sup_norm(const ComplexPolynomial& p, const CircleGrid& grid) {
    return sup_norm(p, sample_abs_on_circle(p, grid));
}

double mean_log(const CircleSamples& samples, double scale) {
    double acc = 0.0;
    for (double v : samples.abs_values)
        acc += std::log(std::max(v / scale, kClampAbs));
    return acc / static_cast<double>(samples.abs_values.size());
}

double mean_log_plus(const CircleSamples& samples, double scale) {
    double acc = 0.0;
    for (double v : samples.abs_values)
        acc += std::max(0.0, std::log(std::max(v / scale, kClampAbs)));
    return acc / static_cast<double>(samples.abs_values.size());
}

double log_mahler(const ComplexPolynomial& p, const CircleGrid& grid) {
    require_log_grid(p, grid);
    return mean_log(sample_abs_on_circle(p, grid));
}

double log_mahler_plus(const ComplexPolynomial& p, const CircleGrid& grid) {
    require_log_grid(p, grid);
    return mean_log_plus(sample_abs_on_circle(p, grid));
}

double log_mahler_from_roots(Complex leading, std::span<const Complex> roots) {
    if (leading == Complex(0.0))
        throw std::invalid_argument("mahler_from_roots: zero leading coefficient");
    double acc = std::log(std::abs(leading));
    for (const Complex& z : roots) {
        const double a = std::abs(z);
        if (a > 1.0) acc += std::log(a);
    }
    return acc;
}

double mahler_from_roots(Complex leading, std::span<const Complex> roots) {
    return std::exp(log_mahler_from_roots(leading, roots));
}

ComplexPolynomial normalize(const ComplexPolynomial& p) {
    if (!p.is_admissible())
        throw NotAdmissibleError("normalize requires c_0 != 0 and c_n != 0");
    const double scale =
        std::sqrt(std::abs(p.constant_coeff()) * std::abs(p.leading_coeff()));
    std::vector<Complex> out(p.coeffs().begin(), p.coeffs().end());
    for (Complex& c : out) c /= scale;
    return ComplexPolynomial(std::move(out));
}

ComplexPolynomial reciprocal(const ComplexPolynomial& p) {
    auto c = p.coeffs();
    std::vector<Complex> out(c.size());
    for (size_t k = 0; k < c.size(); ++k)
        out[k] = std::conj(c[c.size() - 1 - k]);
    return ComplexPolynomial(std::move(out));
}

}  // namespace polydisc
