#include "polydisc/bounds.hpp"

#include <atomic>
#include <cmath>
#include <numbers>

#include "polydisc/constants.hpp"

namespace polydisc {

namespace {

std::atomic<uint64_t> g_m_floor_count{0};

void require_admissible_degree(const ComplexPolynomial& p) {
    if (!p.is_admissible())
        throw NotAdmissibleError("bound requires c_0 != 0 and c_n != 0");
    if (p.degree() < 1)
        throw std::invalid_argument("discrepancy bounds need degree >= 1");
}

void check_annulus(double r) {
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("annulus parameter must lie in (0,1)");
}

double half_log_c0cn(const ComplexPolynomial& p) {
    return 0.5 * (std::log(std::abs(p.constant_coeff())) +
                  std::log(std::abs(p.leading_coeff())));
}

}  // namespace

double catalan_constant() { return constants::catalan; }

double et_ganelius_bound(const ComplexPolynomial& p, const CircleSamples& samples) {
    require_admissible_degree(p);
    double log_arg = std::log(sup_norm(p, samples)) - half_log_c0cn(p);
    // ||P||_inf >= ||P||_2 >= sqrt|c_0 c_n| makes this nonnegative; only
    // rounding can push it below zero.
    if (log_arg < -1e-9)
        throw std::domain_error("et_ganelius_bound: sup norm below sqrt|c_0 c_n|");
    log_arg = std::max(0.0, log_arg);
    return constants::ganelius_factor * std::sqrt(log_arg / p.degree());
}

double et_ganelius_bound(const ComplexPolynomial& p, const CircleGrid& grid) {
    return et_ganelius_bound(p, sample_abs_on_circle(p, grid));
}

double mignotte_annular_bound(const ComplexPolynomial& p, double r,
                              const CircleSamples& samples) {
    require_admissible_degree(p);
    check_annulus(r);
    const double n = p.degree();
    const double scale = std::exp(half_log_c0cn(p));  // sqrt|c_0 c_n|
    const double m_plus = mean_log_plus(samples, scale);
    double m = mean_log(samples, scale);
    if (m < 0.0) {
        ++g_m_floor_count;
        m = 0.0;
    }
    return constants::ganelius_factor * std::sqrt(m_plus / n) +
           2.0 * m / (n * (1.0 - r));
}

double mignotte_annular_bound(const ComplexPolynomial& p, double r,
                              const CircleGrid& grid) {
    return mignotte_annular_bound(p, r, sample_abs_on_circle(p, grid));
}

uint64_t mignotte_m_floor_count() { return g_m_floor_count.load(); }

double mplus_upper_from_lp(const ComplexPolynomial& p, double ord,
                           const CircleGrid& grid) {
    const double norm = lp_norm(p, ord, grid);
    if (norm < 1.0)
        throw NormHypothesisError("mplus_upper_from_lp requires ||P||_p >= 1");
    return std::log(norm) + 1.0 / (std::numbers::e * ord);
}

std::pair<double, double> jensen_disk_bounds(const ComplexPolynomial& p, double r,
                                             const CircleSamples& samples) {
    require_admissible_degree(p);
    check_annulus(r);
    const double m = mean_log(samples);
    const double denom = p.degree() * (1.0 - r);
    return {(m - std::log(std::abs(p.constant_coeff()))) / denom,
            (m - std::log(std::abs(p.leading_coeff()))) / denom};
}

std::pair<double, double> jensen_disk_bounds(const ComplexPolynomial& p, double r,
                                             const CircleGrid& grid) {
    return jensen_disk_bounds(p, r, sample_abs_on_circle(p, grid));
}

double expected_discrepancy_bound(const BoundInputs& in) {
    if (in.n < 1) throw std::invalid_argument("bound needs n >= 1");
    check_annulus(in.r);
    if (!(in.t > 0.0)) throw std::invalid_argument("bound needs t > 0");
    if (!(in.mu_t > 0.0) || !std::isfinite(in.mu_t))
        throw std::invalid_argument("bound needs a finite positive moment");
    const double bracket = (in.t + 2.0) / (2.0 * in.t) * std::log(in.n + 1.0) +
                           std::log(in.mu_t) / in.t +
                           1.0 / (2.0 * std::numbers::e) - in.e_log_c0;
    if (bracket < 0.0)
        throw std::domain_error("expected_discrepancy_bound: negative bracket");
    return (constants::ganelius_factor + 2.0 / (1.0 - in.r)) *
           std::sqrt(bracket / in.n);
}

double compact_zero_count_bound(const BoundInputs& in) {
    if (in.n < 1) throw std::invalid_argument("bound needs n >= 1");
    if (!(in.d > 0.0)) throw std::invalid_argument("bound needs d > 0");
    if (!(in.t > 0.0)) throw std::invalid_argument("bound needs t > 0");
    if (!(in.mu_t > 0.0) || !std::isfinite(in.mu_t))
        throw std::invalid_argument("bound needs a finite positive moment");
    return (in.d + 1.0) / in.d *
           ((in.t + 2.0) / in.t * std::log(in.n + 1.0) +
            2.0 / in.t * std::log(in.mu_t) - 2.0 * in.e_log_c0);
}

double disk_count_main_term(int n, double r_disk) {
    if (n < 1) throw std::invalid_argument("disk_count_main_term needs n >= 1");
    if (!(r_disk > 0.0 && r_disk < 2.0))
        throw std::invalid_argument("disk radius must lie in (0,2)");
    return 2.0 * std::asin(r_disk / 2.0) / std::numbers::pi * n;
}

double noniid_discrepancy_bound(const BoundInputs& in) {
    if (in.n < 1) throw std::invalid_argument("bound needs n >= 1");
    check_annulus(in.r);
    if (!(in.mu_abs >= 0.0) || !(in.sigma_abs >= 0.0) ||
        !std::isfinite(in.mu_abs) || !std::isfinite(in.sigma_abs))
        throw std::invalid_argument("bound needs finite nonnegative mu, sigma");
    const double bracket = 0.5 * std::log(in.n + 1.0) +
                           std::log(in.mu_abs + in.sigma_abs * std::sqrt(in.n)) +
                           1.0 / (2.0 * std::numbers::e) -
                           0.5 * (in.e_log_c0 + in.e_log_cn);
    if (bracket < 0.0)
        throw std::domain_error("noniid_discrepancy_bound: negative bracket");
    return (constants::ganelius_factor + 2.0 / (1.0 - in.r)) *
           std::sqrt(bracket / in.n);
}

}  // namespace polydisc
