#pragma once

#include <vector>

#include "polydisc/polynomial.hpp"

namespace polydisc {

/// All complex roots of a polynomial, with multiplicity, plus the
/// residual certificate for each: |P(z_k)| / sum_j |c_j| max(1,|z_k|)^j.
/// converged is true iff every relative residual is <= the solver
/// tolerance after polishing.
struct RootMultiset {
    std::vector<Complex> roots;
    std::vector<double> residuals;
    bool converged = false;
    int iterations = 0;
    double worst_residual = 0.0;
};

/// Starting points for the simultaneous iteration: n points on the
/// circle of radius R0 = 1 + max_k |c_k/c_n| (halved when R0 > 2, since
/// the roots of interest cluster near the unit circle), at angles
/// 2*pi*k/n + 0.4. The offset keeps real-coefficient inputs from
/// starting in a conjugation-symmetric configuration.
std::vector<Complex> initial_guesses(const ComplexPolynomial& p);

/// Aberth-Ehrlich simultaneous iteration. Leading zero coefficients are
/// stripped (reducing the degree); trailing zero coefficients become
/// exact zero roots. Starts are placed per root slot at the Newton
/// polygon radii of the coefficient moduli (a single start circle stalls
/// for degrees in the hundreds), with the same angular pattern as
/// initial_guesses. Each nonzero root gets two Newton polishing steps.
/// Deterministic: a fixed input always produces bit-identical output.
/// Non-convergence within max_iter is reported through converged=false
/// and worst_residual; the roots found so far are still returned.
RootMultiset find_roots(const ComplexPolynomial& p, double tol = 1e-12,
                        int max_iter = 200);

/// Same iteration from caller-provided starting points; starts.size()
/// must equal the stripped degree minus the number of trailing zero
/// coefficients.
RootMultiset find_roots_from(const ComplexPolynomial& p,
                             std::vector<Complex> starts, double tol = 1e-12,
                             int max_iter = 200);

}  // namespace polydisc
