#pragma once

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "polydisc/bounds.hpp"
#include "polydisc/ensembles.hpp"
#include "polydisc/region.hpp"

namespace polydisc {

/// One Monte Carlo experiment: which ensemble, which degrees, how many
/// trials, the seed, and the parameters the bounds need. Trials are
/// independent tasks; each one derives its randomness purely from
/// (seed, trial index), results are collected per trial index and
/// reduced sequentially in trial order, so the output is identical for
/// any worker count.
struct ExperimentConfig {
    CoefficientEnsemble ensemble = CoefficientEnsemble::gaussian();
    std::vector<int> degrees;
    int trials = 100;
    uint64_t seed = 1;
    double t = 2.0;        // moment order used by the bounds
    double r = 0.5;        // annulus parameter
    double alpha = 0.0;    // sector angles, radians
    double beta = std::numbers::pi / 2;
    double tol = 1e-12;    // root solver
    int max_iter = 200;
    int threads = 1;
};

/// One output row: empirical mean and standard error of the measured
/// statistic at degree n against the matching theoretical value.
struct ExperimentRecord {
    std::string experiment;
    std::string ensemble;
    int n = 0;
    int trials = 0;
    int trials_used = 0;
    int discarded = 0;
    double mean = 0.0;
    double stderr_ = 0.0;
    double bound = 0.0;
    double ratio = 0.0;
    uint64_t seed = 0;
    bool flagged = false;  // discarded/trials above 0.1%; not serialized
};

/// CSV with the fixed header
/// experiment,ensemble,n,trials,trials_used,discarded,mean,stderr,bound,ratio,seed
/// and floating-point fields at 17 significant digits.
void write_csv(std::ostream& os, const std::vector<ExperimentRecord>& records);
std::string to_csv(const std::vector<ExperimentRecord>& records);

struct DiscrepancyResult {
    std::vector<ExperimentRecord> records;
    long deterministic_checks = 0;      // annular bound evaluations
    long deterministic_violations = 0;  // must be zero
};

/// Mean annular discrepancy |tau(A_r(alpha,beta)) - (beta-alpha)/2pi|
/// per degree, against the iid expected-discrepancy bound (or the
/// non-iid one for the exchangeable ensemble). Every realization is
/// also checked against its own deterministic annular bound.
DiscrepancyResult run_discrepancy(const ExperimentConfig& config);

/// Mean zero count n*tau(region) per degree. The bound column holds the
/// compact-set bound for the origin disk, the disk main term for a point
/// disk, and pi*sqrt(n log n) as the reference scale for an inscribed
/// polygon (reported, not asserted).
std::vector<ExperimentRecord> run_zero_count(const ExperimentConfig& config,
                                             const Region& region);

/// Mean of log max_k |C_k| per degree versus the moment bound
/// (1/t)(log(n+1)+log mu_t); no root finding. Where the ensemble has an
/// exact expectation (gaussian, pareto) a second row per degree carries
/// it, labeled "orderstats_exact".
std::vector<ExperimentRecord> run_order_stats(const ExperimentConfig& config);

/// Mean of log M(P_n) for unimodular coefficients versus the reference
/// value log(n+1)/2 - gamma/2.
ExperimentRecord run_fielding_check(int n, int trials, uint64_t seed,
                                    double tol = 1e-12, int max_iter = 200,
                                    int threads = 1);

/// Scaled-mean table over a degree grid: mean * sqrt(n/log(n+1)) should
/// be flat when the discrepancy decays like sqrt(log n / n).
struct DecaySummary {
    std::vector<int> degrees;
    std::vector<double> scaled_means;
    double max_min_ratio = 0.0;
};
DecaySummary decay_rate_summary(const std::vector<ExperimentRecord>& records);
std::string to_string(const DecaySummary& summary);

/// Deterministic-inequality census: for each sampled polynomial check
/// the sector bound, the annular bound at every radius, the lp route to
/// m+ at every exponent, and both Jensen radial bounds, all with 1e-6
/// additive slack for quadrature.
struct CensusConfig {
    int trials = 1000;
    int n = 50;
    uint64_t seed = 20120818;
    std::vector<std::pair<double, double>> sectors = {
        {0.0, std::numbers::pi / 2}, {1.0, 4.0}};
    std::vector<double> radii = {0.5, 0.9};
    std::vector<double> ps = {1.0, 2.0};
    CoefficientEnsemble ensemble = CoefficientEnsemble::gaussian();
    double tol = 1e-12;
    int max_iter = 200;
    int threads = 1;
};

struct CensusResult {
    long trials = 0;
    long used = 0;
    long discarded = 0;
    long checks = 0;
    long violations = 0;
    long lp_hypothesis_skips = 0;  // realizations with ||P||_p < 1
};
CensusResult run_inequality_census(const CensusConfig& config);

}  // namespace polydisc
