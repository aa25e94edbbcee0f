#ifndef IFSAD_PARTITION_HPP
#define IFSAD_PARTITION_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ifsad {

struct ClusterConfig {
    double fuzzifier_exponent = 2.0; // FCM weighting exponent, > 1
    double beta = 0.5;               // Yager parameter for the hesitation step
    // Plain FCM is the default: folding the Yager hesitation into the centre
    // update flattens the membership contrast so far (u*(0.5) = 0.91 at
    // beta = 0.5) that centres sharing one data mode collapse onto each
    // other, which makes the fitted intervals unusable. The modified update
    // stays available for ablation.
    bool exact_fcm = true;
    double tol = 1e-6;               // stop when max centre displacement < tol
    int max_iters = 300;
    int restarts = 1;                // extra seeded random inits beyond the deterministic ones
    std::uint64_t seed = 0;
};

// Sorted cluster centres of one characteristic's domain of discourse plus the
// interval boundaries derived from them. boundaries.front()/back() are the
// padded domain ends, interior boundaries are adjacent-centre midpoints.
struct Partition {
    std::vector<double> centers;    // m values, strictly ascending
    std::vector<double> boundaries; // m + 1 values, strictly ascending
    double domain_lo = 0.0;
    double domain_hi = 0.0;

    std::size_t size() const { return centers.size(); }
};

// Raw clustering output, exposed separately so the iteration behaviour is
// testable: objective_trace[t] is the weighted within-cluster distance sum at
// iteration t and must be non-increasing.
struct FcmResult {
    std::vector<double> centers; // ascending
    std::vector<double> objective_trace;
    int iterations = 0;
};

// Fuzzy C-means on a 1-D series with the intuitionistic modification: after
// each membership update the Yager hesitation is folded back into the
// memberships before the centres move. Deterministic for a fixed cfg.seed.
FcmResult ifcm_cluster(std::span<const double> series, std::size_t m,
                       const ClusterConfig& cfg = {});

// Fits m cluster centres on the series and derives the interval boundaries.
// Throws config_error for m < 1 or an empty series, infeasible_partition_error
// when the series has fewer than m distinct values or fitted centres collide.
Partition fit_partition(std::span<const double> series, std::size_t m,
                        const ClusterConfig& cfg = {});

// Index of the interval containing x, in 0..m-1. Intervals are half-open
// [boundaries[i], boundaries[i+1]); out-of-domain x clamps to the first or
// last interval.
std::size_t interval_of(const Partition& p, double x);

} // namespace ifsad

#endif
