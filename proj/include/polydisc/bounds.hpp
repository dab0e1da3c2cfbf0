#pragma once

#include <cstdint>
#include <utility>

#include "polydisc/polynomial.hpp"

namespace polydisc {

/// Raised when a bound's hypothesis on a norm fails (e.g. ||P||_p < 1).
struct NormHypothesisError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Ensemble-level inputs of the expected-value bounds.
struct BoundInputs {
    int n = 0;             // degree, >= 1
    double r = 0.5;        // annulus parameter, in (0,1)
    double t = 2.0;        // moment order, > 0
    double mu_t = 1.0;     // E|C_0|^t
    double e_log_c0 = 0.0; // E log|C_0|
    double e_log_cn = 0.0; // E log|C_n| (non-iid case)
    double mu_abs = 0.0;   // E|C_0|     (non-iid case)
    double sigma_abs = 0.0;// Std|C_0|   (non-iid case)
    double d = 0.5;        // dist(E, unit circle), > 0
};

/// Catalan's constant (see constants::get for the certifying oracle).
double catalan_constant();

/// Erdos-Turan-Ganelius sector bound:
/// sqrt(2pi/k) * sqrt(log(||P||_inf / sqrt|c_0 c_n|) / n).
/// Holds for every admissible P and every sector.
double et_ganelius_bound(const ComplexPolynomial& p, const CircleGrid& grid);
double et_ganelius_bound(const ComplexPolynomial& p, const CircleSamples& samples);

/// Annular-sector bound: sqrt(2pi/k) sqrt(m+(Q)/n) + 2 m(Q)/(n(1-r))
/// with Q = P/sqrt|c_0 c_n|. The m term is floored at zero when grid
/// noise drives it slightly negative; mignotte_m_floor_count() reports
/// how often that happened.
double mignotte_annular_bound(const ComplexPolynomial& p, double r,
                              const CircleGrid& grid);
double mignotte_annular_bound(const ComplexPolynomial& p, double r,
                              const CircleSamples& samples);
uint64_t mignotte_m_floor_count();

/// m+(P) <= log||P||_p + 1/(e p), valid when ||P||_p >= 1; throws
/// NormHypothesisError otherwise. A drop-in upper estimate for m+.
double mplus_upper_from_lp(const ComplexPolynomial& p, double ord,
                           const CircleGrid& grid);

/// Jensen radial bounds: the pair
///   ( (m - log|c_0|) / (n(1-r)),  (m - log|c_n|) / (n(1-r)) )
/// dominating tau(closed D_r) and tau({|z| >= 1/r}) respectively.
std::pair<double, double> jensen_disk_bounds(const ComplexPolynomial& p, double r,
                                             const CircleGrid& grid);
std::pair<double, double> jensen_disk_bounds(const ComplexPolynomial& p, double r,
                                             const CircleSamples& samples);

/// Expected annular discrepancy bound for iid coefficients:
/// (sqrt(2pi/k) + 2/(1-r)) * sqrt(bracket/n) with
/// bracket = (t+2)/(2t) log(n+1) + log(mu_t)/t + 1/(2e) - E log|C_0|.
double expected_discrepancy_bound(const BoundInputs& in);

/// Expected number of zeros in a compact set at distance d from the
/// circle: (d+1)/d * ((t+2)/t log(n+1) + 2/t log(mu_t) - 2 E log|C_0|).
double compact_zero_count_bound(const BoundInputs& in);

/// Leading term of the expected zero count in a disk of radius r_disk
/// centered on the unit circle: 2 arcsin(r_disk/2)/pi * n.
double disk_count_main_term(int n, double r_disk);

/// Discrepancy bound for identically-moded but possibly dependent
/// coefficients, with the order-statistic step made explicit through
/// log(mu + sigma sqrt(n)):
/// (sqrt(2pi/k) + 2/(1-r)) * sqrt(bracket/n), bracket =
/// log(n+1)/2 + log(mu + sigma sqrt n) + 1/(2e) - (Elog|C_0|+Elog|C_n|)/2.
double noniid_discrepancy_bound(const BoundInputs& in);

}  // namespace polydisc
