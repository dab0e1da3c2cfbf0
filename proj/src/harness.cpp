#include "polydisc/harness.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <thread>

#include "polydisc/constants.hpp"

namespace polydisc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kSlack = 1e-6;  // quadrature slack for deterministic checks
constexpr double kFlagRate = 0.001;

void for_each_trial(int trials, int threads, const std::function<void(int)>& body) {
    if (threads <= 1 || trials <= 1) {
        for (int i = 0; i < trials; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&]() {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= trials) return;
            body(i);
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min(threads, trials);
    pool.reserve(static_cast<size_t>(count));
    for (int w = 0; w < count; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
}

// Fixed-order reduction over the per-trial statistics.
ExperimentRecord reduce(const std::string& experiment, const std::string& ensemble,
                        int n, uint64_t seed, const std::vector<double>& stats,
                        const std::vector<char>& usable, double bound) {
    ExperimentRecord rec;
    rec.experiment = experiment;
    rec.ensemble = ensemble;
    rec.n = n;
    rec.seed = seed;
    rec.trials = static_cast<int>(stats.size());
    double sum = 0.0;
    for (size_t i = 0; i < stats.size(); ++i) {
        if (!usable[i]) continue;
        ++rec.trials_used;
        sum += stats[i];
    }
    rec.discarded = rec.trials - rec.trials_used;
    rec.flagged = rec.discarded > kFlagRate * rec.trials;
    rec.mean = rec.trials_used > 0 ? sum / rec.trials_used : 0.0;
    double ss = 0.0;
    for (size_t i = 0; i < stats.size(); ++i) {
        if (!usable[i]) continue;
        const double d = stats[i] - rec.mean;
        ss += d * d;
    }
    if (rec.trials_used > 1)
        rec.stderr_ = std::sqrt(ss / (rec.trials_used - 1)) /
                      std::sqrt(static_cast<double>(rec.trials_used));
    rec.bound = bound;
    rec.ratio = bound != 0.0 ? rec.mean / bound : 0.0;
    return rec;
}

void validate_common(const ExperimentConfig& cfg, bool needs_degrees = true) {
    if (needs_degrees) {
        if (cfg.degrees.empty())
            throw std::invalid_argument("config needs at least one degree");
        for (int n : cfg.degrees)
            if (n < 2) throw std::invalid_argument("degrees must be >= 2");
    }
    if (cfg.trials < 1) throw std::invalid_argument("config needs trials >= 1");
    if (!(cfg.t > 0.0)) throw std::invalid_argument("config needs t > 0");
}

// Bound on the expected annular discrepancy at degree n for the
// configured ensemble: the iid form, or the explicit non-iid form for
// the exchangeable law.
double discrepancy_bound_for(const ExperimentConfig& cfg, int n) {
    BoundInputs in;
    in.n = n;
    in.r = cfg.r;
    in.t = cfg.t;
    if (cfg.ensemble.kind() == CoefficientEnsemble::Kind::exchangeable) {
        const auto [mu, sigma] = noniid_moments(cfg.ensemble);
        in.mu_abs = mu;
        in.sigma_abs = sigma;
        in.e_log_c0 = in.e_log_cn = expected_log_modulus(cfg.ensemble);
        return noniid_discrepancy_bound(in);
    }
    in.mu_t = moment_t(cfg.ensemble, cfg.t);
    if (!std::isfinite(in.mu_t))
        throw std::invalid_argument("E|C|^t is infinite for the configured t");
    in.e_log_c0 = expected_log_modulus(cfg.ensemble);
    return expected_discrepancy_bound(in);
}

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void write_csv(std::ostream& os, const std::vector<ExperimentRecord>& records) {
    os << "experiment,ensemble,n,trials,trials_used,discarded,mean,stderr,bound,"
          "ratio,seed\n";
    for (const auto& r : records) {
        os << r.experiment << ',' << r.ensemble << ',' << r.n << ',' << r.trials
           << ',' << r.trials_used << ',' << r.discarded << ',' << fmt17(r.mean)
           << ',' << fmt17(r.stderr_) << ',' << fmt17(r.bound) << ','
           << fmt17(r.ratio) << ',' << r.seed << '\n';
    }
}

std::string to_csv(const std::vector<ExperimentRecord>& records) {
    std::ostringstream os;
    write_csv(os, records);
    return os.str();
}

DiscrepancyResult run_discrepancy(const ExperimentConfig& cfg) {
    validate_common(cfg);
    if (!(cfg.r > 0.0 && cfg.r < 1.0))
        throw std::invalid_argument("config needs r in (0,1)");
    if (!(cfg.alpha >= 0.0 && cfg.alpha < cfg.beta && cfg.beta <= kTwoPi))
        throw std::invalid_argument("config needs 0 <= alpha < beta <= 2pi");

    DiscrepancyResult out;
    const RandomStream root = RandomStream::from_seed(cfg.seed);
    const double arc = (cfg.beta - cfg.alpha) / kTwoPi;
    for (int n : cfg.degrees) {
        const double bound = discrepancy_bound_for(cfg, n);
        const CircleGrid grid = CircleGrid::for_degree(n);
        std::vector<double> stats(static_cast<size_t>(cfg.trials), 0.0);
        std::vector<char> usable(static_cast<size_t>(cfg.trials), 0);
        std::vector<char> violated(static_cast<size_t>(cfg.trials), 0);
        for_each_trial(cfg.trials, cfg.threads, [&](int trial) {
            const ComplexPolynomial p = sample_polynomial(
                cfg.ensemble, n, root.substream(static_cast<uint64_t>(trial)));
            if (!p.is_admissible()) return;
            const RootMultiset roots = find_roots(p, cfg.tol, cfg.max_iter);
            if (!roots.converged) return;
            const double disc =
                std::abs(tau(roots, Region::annular_sector(cfg.r, cfg.alpha,
                                                           cfg.beta)) -
                         arc);
            const CircleSamples samples = sample_abs_on_circle(p, grid);
            const double det_bound = mignotte_annular_bound(p, cfg.r, samples);
            stats[static_cast<size_t>(trial)] = disc;
            usable[static_cast<size_t>(trial)] = 1;
            violated[static_cast<size_t>(trial)] = disc > det_bound + kSlack;
        });
        auto rec = reduce("discrepancy", cfg.ensemble.name(), n, cfg.seed, stats,
                          usable, bound);
        for (size_t i = 0; i < usable.size(); ++i) {
            if (!usable[i]) continue;
            ++out.deterministic_checks;
            if (violated[i]) ++out.deterministic_violations;
        }
        out.records.push_back(std::move(rec));
    }
    return out;
}

std::vector<ExperimentRecord> run_zero_count(const ExperimentConfig& cfg,
                                             const Region& region) {
    validate_common(cfg);
    const bool origin = region.as<Region::OriginDisk>() != nullptr;
    const bool point = region.as<Region::PointDisk>() != nullptr;
    const bool polygon = region.as<Region::InscribedPolygon>() != nullptr;
    if (!origin && !point && !polygon)
        throw std::invalid_argument(
            "zero-count regions: origin disk, point disk or inscribed polygon");
    if (origin && !(region.as<Region::OriginDisk>()->r < 1.0))
        throw std::invalid_argument("origin disk must be strictly inside the circle");

    std::vector<ExperimentRecord> out;
    const RandomStream root = RandomStream::from_seed(cfg.seed);
    for (int n : cfg.degrees) {
        double bound = 0.0;
        if (origin) {
            BoundInputs in;
            in.n = n;
            in.t = cfg.t;
            in.mu_t = moment_t(cfg.ensemble, cfg.t);
            if (!std::isfinite(in.mu_t))
                throw std::invalid_argument("E|C|^t is infinite for the configured t");
            in.e_log_c0 = expected_log_modulus(cfg.ensemble);
            in.d = 1.0 - region.as<Region::OriginDisk>()->r;
            bound = compact_zero_count_bound(in);
        } else if (point) {
            bound = disk_count_main_term(n, region.as<Region::PointDisk>()->r);
        } else {
            // reference scale for polygon counts; the constant is not a
            // claim, only a yardstick
            bound = std::numbers::pi * std::sqrt(n * std::log(static_cast<double>(n)));
        }
        std::vector<double> stats(static_cast<size_t>(cfg.trials), 0.0);
        std::vector<char> usable(static_cast<size_t>(cfg.trials), 0);
        for_each_trial(cfg.trials, cfg.threads, [&](int trial) {
            const ComplexPolynomial p = sample_polynomial(
                cfg.ensemble, n, root.substream(static_cast<uint64_t>(trial)));
            if (!p.is_admissible()) return;
            const RootMultiset roots = find_roots(p, cfg.tol, cfg.max_iter);
            if (!roots.converged) return;
            stats[static_cast<size_t>(trial)] = n * tau(roots, region);
            usable[static_cast<size_t>(trial)] = 1;
        });
        out.push_back(
            reduce("count", cfg.ensemble.name(), n, cfg.seed, stats, usable, bound));
    }
    return out;
}

std::vector<ExperimentRecord> run_order_stats(const ExperimentConfig& cfg) {
    validate_common(cfg);
    const double mt = moment_t(cfg.ensemble, cfg.t);
    if (!std::isfinite(mt))
        throw std::invalid_argument("E|C|^t is infinite for the configured t");

    std::vector<ExperimentRecord> out;
    const RandomStream root = RandomStream::from_seed(cfg.seed);
    for (int n : cfg.degrees) {
        const double bound = expected_log_max_bound(cfg.ensemble, n, cfg.t);
        std::vector<double> stats(static_cast<size_t>(cfg.trials), 0.0);
        std::vector<char> usable(static_cast<size_t>(cfg.trials), 1);
        for_each_trial(cfg.trials, cfg.threads, [&](int trial) {
            const ComplexPolynomial p = sample_polynomial(
                cfg.ensemble, n, root.substream(static_cast<uint64_t>(trial)));
            double max_mod = 0.0;
            for (const Complex& c : p.coeffs())
                max_mod = std::max(max_mod, std::abs(c));
            stats[static_cast<size_t>(trial)] = std::log(max_mod);
        });
        out.push_back(reduce("orderstats", cfg.ensemble.name(), n, cfg.seed, stats,
                             usable, bound));
        // exact expectation where the ensemble admits one
        double exact = 0.0;
        bool have_exact = false;
        if (cfg.ensemble.kind() == CoefficientEnsemble::Kind::gaussian) {
            exact = gaussian_log_max_exact(n);
            have_exact = true;
        } else if (cfg.ensemble.kind() == CoefficientEnsemble::Kind::pareto) {
            exact = pareto_log_max_exact(n, cfg.ensemble.param());
            have_exact = true;
        }
        if (have_exact)
            out.push_back(reduce("orderstats_exact", cfg.ensemble.name(), n,
                                 cfg.seed, stats, usable, exact));
    }
    return out;
}

ExperimentRecord run_fielding_check(int n, int trials, uint64_t seed, double tol,
                                    int max_iter, int threads) {
    if (n < 16) throw std::invalid_argument("fielding check needs n >= 16");
    if (trials < 1) throw std::invalid_argument("fielding check needs trials >= 1");
    const CoefficientEnsemble ens = CoefficientEnsemble::unimodular();
    const RandomStream root = RandomStream::from_seed(seed);
    std::vector<double> stats(static_cast<size_t>(trials), 0.0);
    std::vector<char> usable(static_cast<size_t>(trials), 0);
    for_each_trial(trials, threads, [&](int trial) {
        const ComplexPolynomial p =
            sample_polynomial(ens, n, root.substream(static_cast<uint64_t>(trial)));
        const RootMultiset roots = find_roots(p, tol, max_iter);
        if (!roots.converged) return;
        stats[static_cast<size_t>(trial)] =
            log_mahler_from_roots(p.leading_coeff(), roots.roots);
        usable[static_cast<size_t>(trial)] = 1;
    });
    const double reference =
        0.5 * std::log(n + 1.0) - constants::euler_gamma / 2.0;
    return reduce("fielding", ens.name(), n, seed, stats, usable, reference);
}

DecaySummary decay_rate_summary(const std::vector<ExperimentRecord>& records) {
    if (records.size() < 3)
        throw std::invalid_argument("decay summary needs at least 3 degrees");
    DecaySummary s;
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& r : records) {
        const double scaled = r.mean * std::sqrt(r.n / std::log(r.n + 1.0));
        s.degrees.push_back(r.n);
        s.scaled_means.push_back(scaled);
        lo = std::min(lo, scaled);
        hi = std::max(hi, scaled);
    }
    s.max_min_ratio = lo > 0.0 ? hi / lo : std::numeric_limits<double>::infinity();
    return s;
}

std::string to_string(const DecaySummary& s) {
    std::ostringstream os;
    os << "n,mean*sqrt(n/log(n+1))\n";
    for (size_t i = 0; i < s.degrees.size(); ++i) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.6g", s.scaled_means[i]);
        os << s.degrees[i] << ',' << buf << '\n';
    }
    os << "max/min," << s.max_min_ratio << '\n';
    return os.str();
}

CensusResult run_inequality_census(const CensusConfig& cfg) {
    if (cfg.trials < 1 || cfg.n < 2)
        throw std::invalid_argument("census needs trials >= 1 and n >= 2");
    for (const auto& [a, b] : cfg.sectors)
        if (!(a >= 0.0 && a < b && b <= kTwoPi))
            throw std::invalid_argument("census sector out of range");
    for (double r : cfg.radii)
        if (!(r > 0.0 && r < 1.0))
            throw std::invalid_argument("census radius out of range");

    const RandomStream root = RandomStream::from_seed(cfg.seed);
    const CircleGrid grid = CircleGrid::for_degree(cfg.n);
    struct TrialOutcome {
        char used = 0;
        long checks = 0;
        long violations = 0;
        long skips = 0;
    };
    std::vector<TrialOutcome> outcomes(static_cast<size_t>(cfg.trials));

    for_each_trial(cfg.trials, cfg.threads, [&](int trial) {
        TrialOutcome& o = outcomes[static_cast<size_t>(trial)];
        const ComplexPolynomial p = sample_polynomial(
            cfg.ensemble, cfg.n, root.substream(static_cast<uint64_t>(trial)));
        if (!p.is_admissible()) return;
        const RootMultiset roots = find_roots(p, cfg.tol, cfg.max_iter);
        if (!roots.converged) return;
        o.used = 1;

        const CircleSamples samples = sample_abs_on_circle(p, grid);
        const double et = et_ganelius_bound(p, samples);
        for (const auto& [a, b] : cfg.sectors) {
            ++o.checks;
            if (sector_discrepancy(roots, a, b) > et + kSlack) ++o.violations;
        }
        for (double r : cfg.radii) {
            const double annular = mignotte_annular_bound(p, r, samples);
            for (const auto& [a, b] : cfg.sectors) {
                ++o.checks;
                if (annular_discrepancy(roots, r, a, b) > annular + kSlack)
                    ++o.violations;
            }
            const auto [inner, outer] = jensen_disk_bounds(p, r, samples);
            size_t in_disk = 0, out_disk = 0;
            for (const Complex& z : roots.roots) {
                const double m = std::abs(z);
                if (m <= r) ++in_disk;
                if (m >= 1.0 / r) ++out_disk;
            }
            const double nn = static_cast<double>(roots.roots.size());
            ++o.checks;
            if (in_disk / nn > inner + kSlack) ++o.violations;
            ++o.checks;
            if (out_disk / nn > outer + kSlack) ++o.violations;
        }
        const double m_plus = mean_log_plus(samples);
        for (double ord : cfg.ps) {
            const double norm = lp_norm(samples, ord);
            if (norm < 1.0) {
                ++o.skips;
                continue;
            }
            ++o.checks;
            if (m_plus > std::log(norm) + 1.0 / (std::numbers::e * ord) + kSlack)
                ++o.violations;
        }
    });

    CensusResult res;
    res.trials = cfg.trials;
    for (const auto& o : outcomes) {
        if (o.used) {
            ++res.used;
            res.checks += o.checks;
            res.violations += o.violations;
            res.lp_hypothesis_skips += o.skips;
        }
    }
    res.discarded = res.trials - res.used;
    return res;
}

}  // namespace polydisc
