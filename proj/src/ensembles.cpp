#include "polydisc/ensembles.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "polydisc/constants.hpp"

namespace polydisc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Reserved substream index for the shared summand A of the exchangeable
// ensemble; coefficient indices can never collide with it.
constexpr uint64_t kSharedDrawLane = 0xFFFFFFFFFFFFFFFFull;

double num(const std::string& s) {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad number: " + s);
    return v;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// Standard complex Gaussian scaled so that |C|^2 ~ Exp(1): modulus
// sqrt(-log U), uniform phase.
Complex standard_complex_gaussian(RandomStream& stream) {
    const double r = std::sqrt(-std::log(stream.next_open_unit()));
    return std::polar(r, kTwoPi * stream.next_unit());
}

// ---- moments of the exchangeable modulus |s*A + G| ---------------------
//
// Rotation invariance reduces the 4-dim expectation to
//   E f(|C|) = int 2a e^{-a^2} int 2g e^{-g^2} (1/pi) int_0^pi
//              f(sqrt(s^2 a^2 + g^2 + 2 s a g cos t)) dt dg da,
// evaluated with composite Simpson on the radial axes and a trapezoid
// rule in the angle.

struct ExchBaseMoments {
    double mu1 = 0.0;   // E|C|
    double mu2 = 0.0;   // E|C|^2
    double elog = 0.0;  // E log|C|
};

constexpr int kExchRadialPanels = 512;
constexpr int kExchAnglePanels = 128;
constexpr double kExchRadialCut = 6.5;

std::vector<std::pair<double, double>> exch_radial_rule() {
    // node, weight * 2 r e^{-r^2}
    const int n = kExchRadialPanels;
    const double h = kExchRadialCut / n;
    std::vector<std::pair<double, double>> out;
    out.reserve(static_cast<size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) {
        const double r = h * j;
        double w = (j == 0 || j == n) ? 1.0 : (j % 2 ? 4.0 : 2.0);
        w *= h / 3.0;
        out.emplace_back(r, w * 2.0 * r * std::exp(-r * r));
    }
    return out;
}

template <class F>
void exch_integrate(double s, F&& accumulate) {
    static const std::vector<std::pair<double, double>> radial = exch_radial_rule();
    const int nt = kExchAnglePanels;
    std::vector<double> cos_t(static_cast<size_t>(nt) + 1), wt(static_cast<size_t>(nt) + 1);
    for (int j = 0; j <= nt; ++j) {
        cos_t[static_cast<size_t>(j)] = std::cos(std::numbers::pi * j / nt);
        wt[static_cast<size_t>(j)] = (j == 0 || j == nt) ? 0.5 / nt : 1.0 / nt;
    }
    for (const auto& [a, wa] : radial) {
        const double m = s * a;
        for (const auto& [g, wg] : radial) {
            const double base = m * m + g * g;
            const double cross = 2.0 * m * g;
            const double w_ag = wa * wg;
            for (int j = 0; j <= nt; ++j) {
                const double x2 = base + cross * cos_t[static_cast<size_t>(j)];
                accumulate(std::sqrt(std::max(x2, 0.0)),
                           w_ag * wt[static_cast<size_t>(j)]);
            }
        }
    }
}

// E log|s*A + G|. The circle mean of log|c + g e^{it}| is log max(|c|, g)
// exactly, so the angular integral drops out and a 2-d midpoint rule in
// the substituted variables u = e^{-a^2}, v = e^{-g^2} (which make both
// radial measures uniform on (0,1)) is enough.
double exch_elog(double s) {
    if (s == 0.0) return -constants::euler_gamma / 2.0;
    const int n = 4096;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double a = std::sqrt(-std::log((i + 0.5) / n));
        const double sa = s * a;
        for (int j = 0; j < n; ++j) {
            const double g = std::sqrt(-std::log((j + 0.5) / n));
            acc += std::log(std::max(sa, g));
        }
    }
    return acc / (static_cast<double>(n) * n);
}

const ExchBaseMoments& exch_base_moments(double s) {
    static std::map<double, ExchBaseMoments> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(s);
    if (it != cache.end()) return it->second;
    ExchBaseMoments acc;
    exch_integrate(s, [&](double x, double w) {
        acc.mu1 += w * x;
        acc.mu2 += w * x * x;
    });
    acc.elog = exch_elog(s);
    return cache.emplace(s, acc).first->second;
}

double exch_moment_t(double s, double t) {
    static std::map<std::pair<double, double>, double> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(s, t);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    double acc = 0.0;
    exch_integrate(s, [&](double x, double w) { acc += w * std::pow(x, t); });
    cache.emplace(key, acc);
    return acc;
}

double modulus_density(const CoefficientEnsemble& ens, double r) {
    switch (ens.kind()) {
        case CoefficientEnsemble::Kind::gaussian:
            return r < 0.0 ? 0.0 : 2.0 * r * std::exp(-r * r);
        case CoefficientEnsemble::Kind::pareto: {
            const double a = ens.param();
            return r < 1.0 ? 0.0 : (a - 1.0) * std::pow(r, -a);
        }
        case CoefficientEnsemble::Kind::disk_uniform: {
            const double K = ens.param();
            return (r < 0.0 || r > K) ? 0.0 : 2.0 * r / (K * K);
        }
        case CoefficientEnsemble::Kind::unimodular:
            throw std::domain_error(
                "max_density: the unimodular modulus is deterministic and has no density");
        case CoefficientEnsemble::Kind::exchangeable:
            throw std::domain_error(
                "max_density: exchangeable moduli are not independent");
    }
    throw std::logic_error("unreachable");
}

}  // namespace

CoefficientEnsemble CoefficientEnsemble::pareto(double alpha) {
    if (!(alpha > 1.0)) throw std::invalid_argument("pareto requires alpha > 1");
    return {Kind::pareto, alpha};
}

CoefficientEnsemble CoefficientEnsemble::disk_uniform(double K) {
    if (!(K > 0.0)) throw std::invalid_argument("disk ensemble requires K > 0");
    return {Kind::disk_uniform, K};
}

CoefficientEnsemble CoefficientEnsemble::exchangeable(double s) {
    if (!(s >= 0.0)) throw std::invalid_argument("exchangeable requires s >= 0");
    return {Kind::exchangeable, s};
}

CoefficientEnsemble CoefficientEnsemble::parse(const std::string& spec) {
    const size_t colon = spec.find(':');
    const std::string head = spec.substr(0, colon);
    const std::string body = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto keyed = [&](const std::string& key) {
        const std::string prefix = key + "=";
        if (body.rfind(prefix, 0) != 0)
            throw std::invalid_argument("expected " + prefix + "<value> in: " + spec);
        return num(body.substr(prefix.size()));
    };
    if (head == "gaussian") return gaussian();
    if (head == "unimodular") return unimodular();
    if (head == "pareto") return pareto(keyed("alpha"));
    if (head == "disk") return disk_uniform(keyed("K"));
    if (head == "exchangeable") return exchangeable(keyed("s"));
    throw std::invalid_argument("unknown ensemble spec: " + spec);
}

std::string CoefficientEnsemble::name() const {
    switch (kind_) {
        case Kind::gaussian: return "gaussian";
        case Kind::unimodular: return "unimodular";
        case Kind::pareto: return "pareto:alpha=" + fmt(param_);
        case Kind::disk_uniform: return "disk:K=" + fmt(param_);
        case Kind::exchangeable: return "exchangeable:s=" + fmt(param_);
    }
    throw std::logic_error("unreachable");
}

ComplexPolynomial sample_polynomial(const CoefficientEnsemble& ens, int n,
                                    const RandomStream& trial_stream) {
    if (n < 1) throw std::invalid_argument("sample_polynomial requires n >= 1");
    Complex shared = 0.0;
    if (ens.kind() == CoefficientEnsemble::Kind::exchangeable) {
        RandomStream a_stream = trial_stream.substream(kSharedDrawLane);
        shared = ens.param() * standard_complex_gaussian(a_stream);
    }
    std::vector<Complex> c(static_cast<size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        RandomStream cs = trial_stream.substream(static_cast<uint64_t>(k));
        switch (ens.kind()) {
            case CoefficientEnsemble::Kind::gaussian:
                c[static_cast<size_t>(k)] = standard_complex_gaussian(cs);
                break;
            case CoefficientEnsemble::Kind::pareto: {
                const double r =
                    std::pow(1.0 - cs.next_unit(), -1.0 / (ens.param() - 1.0));
                c[static_cast<size_t>(k)] = std::polar(r, kTwoPi * cs.next_unit());
                break;
            }
            case CoefficientEnsemble::Kind::unimodular:
                c[static_cast<size_t>(k)] = std::polar(1.0, kTwoPi * cs.next_unit());
                break;
            case CoefficientEnsemble::Kind::disk_uniform: {
                const double r = ens.param() * std::sqrt(cs.next_unit());
                c[static_cast<size_t>(k)] = std::polar(r, kTwoPi * cs.next_unit());
                break;
            }
            case CoefficientEnsemble::Kind::exchangeable:
                c[static_cast<size_t>(k)] = shared + standard_complex_gaussian(cs);
                break;
        }
    }
    return ComplexPolynomial(std::move(c));
}

double moment_t(const CoefficientEnsemble& ens, double t) {
    if (!(t > 0.0)) throw std::invalid_argument("moment_t requires t > 0");
    switch (ens.kind()) {
        case CoefficientEnsemble::Kind::gaussian:
            return std::tgamma(t / 2.0 + 1.0);
        case CoefficientEnsemble::Kind::pareto: {
            const double a = ens.param();
            return t < a - 1.0 ? (a - 1.0) / (a - 1.0 - t) : kInf;
        }
        case CoefficientEnsemble::Kind::unimodular:
            return 1.0;
        case CoefficientEnsemble::Kind::disk_uniform:
            return 2.0 * std::pow(ens.param(), t) / (t + 2.0);
        case CoefficientEnsemble::Kind::exchangeable:
            return exch_moment_t(ens.param(), t);
    }
    throw std::logic_error("unreachable");
}

double expected_log_modulus(const CoefficientEnsemble& ens) {
    switch (ens.kind()) {
        case CoefficientEnsemble::Kind::gaussian:
            return -constants::euler_gamma / 2.0;
        case CoefficientEnsemble::Kind::pareto:
            return 1.0 / (ens.param() - 1.0);
        case CoefficientEnsemble::Kind::unimodular:
            return 0.0;
        case CoefficientEnsemble::Kind::disk_uniform:
            return std::log(ens.param()) - 0.5;
        case CoefficientEnsemble::Kind::exchangeable:
            return exch_base_moments(ens.param()).elog;
    }
    throw std::logic_error("unreachable");
}

double modulus_cdf(const CoefficientEnsemble& ens, double r) {
    if (r <= 0.0) return 0.0;
    switch (ens.kind()) {
        case CoefficientEnsemble::Kind::gaussian:
            return 1.0 - std::exp(-r * r);
        case CoefficientEnsemble::Kind::pareto:
            return r < 1.0 ? 0.0 : 1.0 - std::pow(r, 1.0 - ens.param());
        case CoefficientEnsemble::Kind::unimodular:
            return r < 1.0 ? 0.0 : 1.0;
        case CoefficientEnsemble::Kind::disk_uniform: {
            const double q = r / ens.param();
            return q >= 1.0 ? 1.0 : q * q;
        }
        case CoefficientEnsemble::Kind::exchangeable:
            throw std::domain_error("modulus_cdf: not provided for the exchangeable law");
    }
    throw std::logic_error("unreachable");
}

double max_density(const CoefficientEnsemble& ens, int n, double r) {
    if (n < 1) throw std::invalid_argument("max_density requires n >= 1");
    const double rho = modulus_density(ens, r);  // rejects unsupported kinds
    if (rho == 0.0) return 0.0;
    return (n + 1.0) * rho * std::pow(modulus_cdf(ens, r), n);
}

double expected_log_max_bound(const CoefficientEnsemble& ens, int n, double t) {
    if (n < 0) throw std::invalid_argument("expected_log_max_bound requires n >= 0");
    const double mt = moment_t(ens, t);
    if (!std::isfinite(mt))
        throw std::domain_error("expected_log_max_bound: E|C|^t is infinite");
    return (std::log(n + 1.0) + std::log(mt)) / t;
}

double gaussian_log_max_sum(int n) {
    if (n < 0) throw std::invalid_argument("gaussian_log_max_sum requires n >= 0");
    if (n > 25)
        throw std::invalid_argument(
            "gaussian_log_max_sum: alternating sum cancels catastrophically beyond n=25");
    long double acc = 0.0L;
    long double binom = static_cast<long double>(n) + 1.0L;  // C(n+1, 1)
    for (int k = 2; k <= n + 1; ++k) {
        binom *= static_cast<long double>(n + 2 - k);
        binom /= static_cast<long double>(k);
        const long double term = binom * std::log(static_cast<long double>(k));
        acc += (k % 2 == 0) ? term : -term;
    }
    return static_cast<double>(-constants::euler_gamma / 2.0L + 0.5L * acc);
}

double gaussian_log_max_quadrature(int n) {
    if (n < 1) throw std::invalid_argument("gaussian_log_max_quadrature requires n >= 1");
    // E log Y_n = (n+1)/2 * int_0^inf log(s) e^{-s} (1 - e^{-s})^n ds,
    // the substitution u = e^{-x^2} of the modulus integral written in
    // s = log(1/u); the grading in s is what keeps both endpoints tame.
    const int panels = 10000;
    const double smax = std::log(n + 1.0) + 45.0;
    const double h = smax / panels;
    auto f = [&](double s) {
        if (s <= 0.0) return 0.0;
        const double e = std::exp(-s);
        return std::log(s) * e * std::exp(n * std::log1p(-e));
    };
    double acc = f(0.0) + f(smax);
    for (int j = 1; j < panels; ++j) acc += (j % 2 ? 4.0 : 2.0) * f(h * j);
    return (n + 1.0) / 2.0 * acc * h / 3.0;
}

double gaussian_log_max_exact(int n) {
    if (n < 0) throw std::invalid_argument("gaussian_log_max_exact requires n >= 0");
    return n <= 25 ? gaussian_log_max_sum(n) : gaussian_log_max_quadrature(n);
}

double pareto_log_max_exact(int n, double alpha) {
    if (!(alpha > 1.0))
        throw std::invalid_argument("pareto_log_max_exact requires alpha > 1");
    if (n < 0) throw std::invalid_argument("pareto_log_max_exact requires n >= 0");
    return harmonic(n + 1) / (alpha - 1.0);
}

double harmonic(long n) {
    if (n < 1) throw std::invalid_argument("harmonic requires n >= 1");
    double acc = 0.0;
    for (long k = n; k >= 1; --k) acc += 1.0 / static_cast<double>(k);
    return acc;
}

std::pair<double, double> noniid_moments(const CoefficientEnsemble& ens) {
    if (ens.kind() != CoefficientEnsemble::Kind::exchangeable)
        throw std::invalid_argument("noniid_moments is defined for the exchangeable ensemble");
    const auto& m = exch_base_moments(ens.param());
    return {m.mu1, std::sqrt(std::max(0.0, m.mu2 - m.mu1 * m.mu1))};
}

}  // namespace polydisc
