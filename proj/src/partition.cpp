#include "ifsad/partition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ifsad/errors.hpp"
#include "ifsad/rng.hpp"

namespace ifsad {

namespace {

void validate(std::span<const double> series, std::size_t m, const ClusterConfig& cfg) {
    if (series.empty()) throw config_error("ifcm: series is empty");
    if (m < 1) throw config_error("ifcm: cluster count must be >= 1");
    if (cfg.fuzzifier_exponent <= 1.0)
        throw config_error("ifcm: fuzzifier exponent must be > 1");
    if (cfg.beta <= 0.0 || cfg.beta > 1.0)
        throw config_error("ifcm: beta must be in (0, 1]");
    if (cfg.tol <= 0.0 || cfg.max_iters < 1 || cfg.restarts < 1)
        throw config_error("ifcm: bad convergence settings");
    for (double x : series)
        if (!std::isfinite(x)) throw input_error("ifcm: non-finite value in series");
}

// Quantile (linear interpolation) of an already sorted series.
double sorted_quantile(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

std::vector<double> quantile_init(const std::vector<double>& sorted,
                                  const std::vector<double>& uniq, std::size_t m) {
    std::vector<double> centers(m);
    for (std::size_t i = 0; i < m; ++i)
        centers[i] = sorted_quantile(sorted, (static_cast<double>(i) + 0.5) / m);
    // Quantiles of a skewed series can coincide; fall back to evenly spaced
    // distinct values, which are guaranteed separated.
    std::sort(centers.begin(), centers.end());
    bool collided = false;
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (centers[i + 1] - centers[i] < 1e-12) collided = true;
    if (collided)
        for (std::size_t i = 0; i < m; ++i)
            centers[i] = uniq[i * uniq.size() / m];
    return centers;
}

std::vector<double> random_init(const std::vector<double>& uniq, std::size_t m, Rng& rng) {
    std::vector<double> pool = uniq;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<double> centers(pool.begin(), pool.begin() + static_cast<long>(m));
    std::sort(centers.begin(), centers.end());
    return centers;
}

// Greedy max-min spread over the distinct values. Quantile init places every
// centre inside the bulk when a rare cluster sits far out; this candidate
// always reaches it, and the final objective decides which init wins.
std::vector<double> farthest_point_init(const std::vector<double>& uniq, std::size_t m) {
    std::vector<double> centers{uniq.front()};
    while (centers.size() < m) {
        double best_gap = -1.0;
        double best_value = uniq.front();
        for (double x : uniq) {
            double nearest = std::abs(x - centers.front());
            for (double c : centers) nearest = std::min(nearest, std::abs(x - c));
            if (nearest > best_gap) {
                best_gap = nearest;
                best_value = x;
            }
        }
        centers.push_back(best_value);
    }
    std::sort(centers.begin(), centers.end());
    return centers;
}

// Modified membership u* = u + pi where pi is the Yager hesitation of u.
double modified_membership(double u, double beta) {
    return 1.0 - std::pow(1.0 - std::pow(u, beta), 1.0 / beta);
}

struct RunOutcome {
    std::vector<double> centers;
    std::vector<double> trace;
    int iterations = 0;
    double final_objective = 0.0;
};

RunOutcome run_fcm(std::span<const double> series, std::vector<double> centers,
                   const ClusterConfig& cfg) {
    const std::size_t m = centers.size();
    const std::size_t n = series.size();
    const double ratio_exp = 1.0 / (cfg.fuzzifier_exponent - 1.0);

    RunOutcome out;
    std::vector<double> memb(m), num(m), den(m), next(m), d2(m);

    // One pass: memberships against the current centres, objective, and the
    // accumulators for the centre update.
    auto sweep = [&](bool accumulate) {
        double objective = 0.0;
        if (accumulate) {
            std::fill(num.begin(), num.end(), 0.0);
            std::fill(den.begin(), den.end(), 0.0);
        }
        for (std::size_t i = 0; i < n; ++i) {
            const double x = series[i];
            std::size_t zero_at = m;
            for (std::size_t k = 0; k < m; ++k) {
                const double d = x - centers[k];
                d2[k] = d * d;
                if (d2[k] == 0.0 && zero_at == m) zero_at = k;
            }
            if (zero_at < m) {
                std::fill(memb.begin(), memb.end(), 0.0);
                memb[zero_at] = 1.0;
            } else {
                for (std::size_t k = 0; k < m; ++k) {
                    double s = 0.0;
                    for (std::size_t j = 0; j < m; ++j)
                        s += std::pow(d2[k] / d2[j], ratio_exp);
                    memb[k] = 1.0 / s;
                }
            }
            for (std::size_t k = 0; k < m; ++k) {
                double u = memb[k];
                if (!cfg.exact_fcm) u = modified_membership(u, cfg.beta);
                const double uw = std::pow(u, cfg.fuzzifier_exponent);
                objective += uw * d2[k];
                if (accumulate) {
                    num[k] += uw * x;
                    den[k] += uw;
                }
            }
        }
        return objective;
    };

    for (int iter = 0; iter < cfg.max_iters; ++iter) {
        out.trace.push_back(sweep(true));
        out.iterations = iter + 1;
        double shift = 0.0;
        for (std::size_t k = 0; k < m; ++k) {
            next[k] = den[k] > 0.0 ? num[k] / den[k] : centers[k];
            shift = std::max(shift, std::abs(next[k] - centers[k]));
        }
        centers = next;
        if (shift < cfg.tol) break;
    }
    out.final_objective = sweep(false);
    std::sort(centers.begin(), centers.end());
    out.centers = std::move(centers);
    return out;
}

} // namespace

FcmResult ifcm_cluster(std::span<const double> series, std::size_t m,
                       const ClusterConfig& cfg) {
    validate(series, m, cfg);

    std::vector<double> sorted(series.begin(), series.end());
    std::sort(sorted.begin(), sorted.end());
    std::vector<double> uniq = sorted;
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    if (uniq.size() < m)
        throw infeasible_partition_error(
            "ifcm: series has " + std::to_string(uniq.size()) +
            " distinct values, cannot fit " + std::to_string(m) + " clusters");

    RunOutcome best = run_fcm(series, quantile_init(sorted, uniq, m), cfg);
    if (m > 1) {
        RunOutcome spread = run_fcm(series, farthest_point_init(uniq, m), cfg);
        if (spread.final_objective < best.final_objective) best = std::move(spread);
    }
    Rng rng(cfg.seed);
    for (int r = 1; r < cfg.restarts; ++r) {
        RunOutcome cand = run_fcm(series, random_init(uniq, m, rng), cfg);
        if (cand.final_objective < best.final_objective) best = std::move(cand);
    }

    FcmResult result;
    result.centers = std::move(best.centers);
    result.objective_trace = std::move(best.trace);
    result.iterations = best.iterations;
    return result;
}

Partition fit_partition(std::span<const double> series, std::size_t m,
                        const ClusterConfig& cfg) {
    FcmResult fit = ifcm_cluster(series, m, cfg);
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (fit.centers[i + 1] - fit.centers[i] < 1e-9)
            throw infeasible_partition_error("ifcm: fitted centres collided");

    const auto [lo_it, hi_it] = std::minmax_element(series.begin(), series.end());
    const double x_min = *lo_it;
    const double x_max = *hi_it;
    const double eps = std::max(0.05 * (x_max - x_min), 1e-9);

    Partition p;
    p.domain_lo = x_min - eps;
    p.domain_hi = x_max + eps;
    p.centers = std::move(fit.centers);
    p.boundaries.resize(m + 1);
    p.boundaries.front() = p.domain_lo;
    p.boundaries.back() = p.domain_hi;
    for (std::size_t i = 1; i < m; ++i)
        p.boundaries[i] = 0.5 * (p.centers[i - 1] + p.centers[i]);
    return p;
}

std::size_t interval_of(const Partition& p, double x) {
    const auto& b = p.boundaries;
    const auto it = std::upper_bound(b.begin(), b.end(), x);
    const long idx = (it - b.begin()) - 1;
    const long last = static_cast<long>(p.size()) - 1;
    return static_cast<std::size_t>(std::clamp(idx, 0L, last));
}

} // namespace ifsad
