#pragma once

#include <string>
#include <utility>

#include "polydisc/polynomial.hpp"
#include "polydisc/random.hpp"

namespace polydisc {

/// A coefficient law: sampler plus closed-form (or cached numerical)
/// moment functionals of the modulus |C|.
///
/// gaussian      standard complex Gaussian; |C|^2 is Exp(1), modulus CDF
///               1 - exp(-r^2).
/// pareto        modulus CDF 1 - r^(1-alpha) on r >= 1, alpha > 1;
///               uniform phase.
/// unimodular    uniform on the unit circle.
/// disk_uniform  uniform on {|z| <= K}.
/// exchangeable  C_k = s*A + G_k with A, G_k independent standard
///               complex Gaussians and A shared across k: dependent
///               coefficients whose moduli are identically distributed.
class CoefficientEnsemble {
  public:
    enum class Kind { gaussian, pareto, unimodular, disk_uniform, exchangeable };

    static CoefficientEnsemble gaussian() { return {Kind::gaussian, 0.0}; }
    static CoefficientEnsemble pareto(double alpha);
    static CoefficientEnsemble unimodular() { return {Kind::unimodular, 0.0}; }
    static CoefficientEnsemble disk_uniform(double K);
    static CoefficientEnsemble exchangeable(double s);

    /// Parse "gaussian", "pareto:alpha=<v>", "unimodular", "disk:K=<v>",
    /// "exchangeable:s=<v>".
    static CoefficientEnsemble parse(const std::string& spec);
    std::string name() const;

    Kind kind() const { return kind_; }
    double param() const { return param_; }  // alpha, K or s

  private:
    CoefficientEnsemble(Kind k, double p) : kind_(k), param_(p) {}
    Kind kind_;
    double param_;
};

/// Draw the n+1 coefficients of a degree-n polynomial. The coefficient
/// with index k consumes only the substream (trial_stream, k), so the
/// same (seed, trial) pair yields the same coefficients regardless of
/// degree, experiment type or execution order.
ComplexPolynomial sample_polynomial(const CoefficientEnsemble& ens, int n,
                                    const RandomStream& trial_stream);

/// E|C|^t for t > 0; +infinity where the moment diverges (pareto with
/// t >= alpha-1).
double moment_t(const CoefficientEnsemble& ens, double t);

/// E log|C|.
double expected_log_modulus(const CoefficientEnsemble& ens);

/// CDF of the modulus, R_C(r) = P(|C| <= r).
double modulus_cdf(const CoefficientEnsemble& ens, double r);

/// Density of Y_n = max_{k=0..n} |C_k|: (n+1) rho_C(r) R_C(r)^n.
/// Defined only when the moduli are independent with a density, so the
/// exchangeable ensemble (dependent) and the unimodular one (modulus has
/// no density) are rejected.
double max_density(const CoefficientEnsemble& ens, int n, double r);

/// (1/t)(log(n+1) + log E|C|^t), an upper bound for E log Y_n.
double expected_log_max_bound(const CoefficientEnsemble& ens, int n, double t);

/// E log Y_n for the gaussian ensemble, exact: alternating binomial sum
/// for n <= 25 (long double accumulation), quadrature beyond. Both
/// routes are exposed so they can be checked against each other.
double gaussian_log_max_exact(int n);
double gaussian_log_max_sum(int n);         // n <= 25
double gaussian_log_max_quadrature(int n);  // any n >= 0

/// E log Y_n for the pareto ensemble: H_{n+1}/(alpha-1).
double pareto_log_max_exact(int n, double alpha);

/// H_n = sum_{k<=n} 1/k by direct summation.
double harmonic(long n);

/// (E|C_0|, Std|C_0|) for the exchangeable ensemble, by numerical
/// integration over the law of s*A + G_0 (cached per s).
std::pair<double, double> noniid_moments(const CoefficientEnsemble& ens);

}  // namespace polydisc
