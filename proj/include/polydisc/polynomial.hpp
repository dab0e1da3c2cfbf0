#pragma once

#include <complex>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polydisc {

using Complex = std::complex<double>;

/// Raised when an operation requires c_0 != 0 and c_n != 0 and the
/// polynomial does not satisfy it.
struct NotAdmissibleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Dense polynomial over the complex numbers, c_0 + c_1 z + ... + c_n z^n.
/// The degree is the index of the last stored coefficient, which may be
/// zero; the coefficient list is never empty.
class ComplexPolynomial {
  public:
    ComplexPolynomial() : coeffs_{Complex(0.0)} {}
    explicit ComplexPolynomial(std::vector<Complex> coeffs);
    ComplexPolynomial(std::initializer_list<Complex> coeffs)
        : ComplexPolynomial(std::vector<Complex>(coeffs)) {}

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::span<const Complex> coeffs() const { return coeffs_; }
    const Complex& coeff(int k) const { return coeffs_.at(static_cast<size_t>(k)); }
    const Complex& constant_coeff() const { return coeffs_.front(); }
    const Complex& leading_coeff() const { return coeffs_.back(); }

    bool is_zero() const;
    /// c_0 != 0 and c_n != 0; the hypothesis of every discrepancy bound.
    bool is_admissible() const;

  private:
    std::vector<Complex> coeffs_;
};

/// Uniform angular grid on the unit circle used by the circle-mean
/// functionals. Nodes sit at the cell midpoints theta_j = 2*pi*(j+1/2)/N
/// so that common test polynomials (roots of unity) never place a root
/// exactly on a node. N is a power of two, N >= 8.
class CircleGrid {
  public:
    explicit CircleGrid(int node_count);

    /// Default grid for integrating polynomials of the given degree:
    /// the smallest power of two >= max(8192, 64*(degree+1)).
    static CircleGrid for_degree(int degree);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    std::span<const Complex> nodes() const { return nodes_; }

  private:
    std::vector<Complex> nodes_;
};

/// |P| sampled at the nodes of a grid; the shared input of the batch
/// variants below, so one evaluation pass can feed several functionals.
struct CircleSamples {
    const CircleGrid* grid = nullptr;
    std::vector<double> abs_values;
};

/// Horner evaluation of P at z.
Complex eval(const ComplexPolynomial& p, Complex z);

/// sqrt(sum |c_k|^2), from the coefficients alone.
double l2_norm(const ComplexPolynomial& p);

/// One evaluation sweep over the grid.
CircleSamples sample_abs_on_circle(const ComplexPolynomial& p, const CircleGrid& grid);

/// ((1/2pi) integral |P(e^it)|^p dt)^(1/p) by the grid rule. p > 0.
double lp_norm(const ComplexPolynomial& p, double ord, const CircleGrid& grid);
double lp_norm(const CircleSamples& samples, double ord);

/// Max of |P| over the grid followed by one golden-section refinement
/// around the best node. Always a lower bound of the true sup; within
/// 1e-6 relative of it at the default grid density.
double sup_norm(const ComplexPolynomial& p, const CircleGrid& grid);
double sup_norm(const ComplexPolynomial& p, const CircleSamples& samples);

/// Circle means of log|P| and log+|P| (trapezoid rule on the uniform
/// grid; exact mean of the node values). Node values below 1e-300 are
/// clamped to 1e-300 before taking logs, so a root landing on a node
/// contributes log(1e-300) rather than -inf. Requires a grid with at
/// least 64*(degree+1) nodes; rejects the zero polynomial.
double log_mahler(const ComplexPolynomial& p, const CircleGrid& grid);
double log_mahler_plus(const ComplexPolynomial& p, const CircleGrid& grid);

/// Batch variants: means of log(|P|/scale) and log+(|P|/scale) computed
/// from an existing sample sweep, i.e. the m and m+ of P/scale.
double mean_log(const CircleSamples& samples, double scale = 1.0);
double mean_log_plus(const CircleSamples& samples, double scale = 1.0);

/// |leading| * prod max(1, |z_k|): the Mahler measure assembled from the
/// root multiset via Jensen's formula. Exact up to rounding; the
/// reference value for M whenever roots are available.
double mahler_from_roots(Complex leading, std::span<const Complex> roots);
/// log of the above, safe against overflow of the product.
double log_mahler_from_roots(Complex leading, std::span<const Complex> roots);

/// P / sqrt(|c_0 c_n|); the scaling used by the discrepancy bounds.
/// Throws NotAdmissibleError when c_0 c_n == 0.
ComplexPolynomial normalize(const ComplexPolynomial& p);

/// Coefficient list reversed and conjugated: z^n conj(P(1/conj z)).
/// |P*(z)| = |P(z)| on the unit circle; roots map to 1/conj(z_k).
ComplexPolynomial reciprocal(const ComplexPolynomial& p);

}  // namespace polydisc
