// Acceptance suite: one line per criterion, non-zero exit when any fails.
// Run with no arguments for the full suite, or name criteria to filter.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "ifsad/errors.hpp"
#include "ifsad/fusion.hpp"
#include "ifsad/fuzzifier.hpp"
#include "ifsad/graph.hpp"
#include "ifsad/io.hpp"
#include "ifsad/partition.hpp"
#include "ifsad/pipeline.hpp"
#include "ifsad/rng.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace ifsad;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Check {
    std::string name;
    std::function<Outcome()> fn;
};

Partition random_partition(Rng& rng, std::size_t m) {
    Partition p;
    double x = rng.uniform(-100.0, 100.0);
    for (std::size_t i = 0; i < m; ++i) {
        p.centers.push_back(x);
        x += rng.uniform(0.1, 25.0);
    }
    p.domain_lo = p.centers.front() - rng.uniform(0.1, 10.0);
    p.domain_hi = p.centers.back() + rng.uniform(0.1, 10.0);
    p.boundaries.push_back(p.domain_lo);
    for (std::size_t i = 1; i < m; ++i)
        p.boundaries.push_back(0.5 * (p.centers[i - 1] + p.centers[i]));
    p.boundaries.push_back(p.domain_hi);
    return p;
}

IfsTriple random_triple(Rng& rng) {
    const double mu = rng.uniform();
    const double gamma = rng.uniform() * (1.0 - mu);
    return {mu, gamma, 1.0 - mu - gamma};
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
}

Outcome ifs_validity() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(1001);
    const int draws = 120000;
    double worst = 0.0;
    for (int i = 0; i < draws; ++i) {
        const std::size_t m = 1 + rng.below(6);
        const double alpha = rng.uniform(0.0, 0.9);
        const double beta = 0.001 + rng.uniform() * 0.999;
        const Fuzzifier f = make_fuzzifier(random_partition(rng, m), alpha, beta);
        const double x = rng.uniform(-400.0, 400.0);
        for (const IfsTriple& a : fuzzify(f, x)) {
            if (!(a.mu >= 0.0) || !(a.gamma >= 0.0))
                return {false, "negative mu/gamma at draw " + std::to_string(i)};
            worst = std::max(worst, a.mu + a.gamma - 1.0);
            if (a.mu + a.gamma > 1.0 + 1e-12)
                return {false, "mu+gamma = " + std::to_string(a.mu + a.gamma)};
        }
    }
    if (seconds_since(start) > 10.0)
        return {false, "exceeded the 10 s budget"};
    std::ostringstream ss;
    ss << draws << " draws, worst mu+gamma-1 = " << worst;
    return {true, ss.str()};
}

Outcome membership_rules() {
    Rng rng(1002);
    double worst = 0.0;
    for (int trial = 0; trial < 5000; ++trial) {
        const std::size_t m = 2 + rng.below(5);
        const double alpha = rng.uniform(0.0, 0.9);
        const Fuzzifier f = make_fuzzifier(random_partition(rng, m), alpha, 0.5);
        const auto& v = f.partition.centers;
        for (std::size_t i = 0; i < m; ++i) {
            if (membership(f, v[i], i) != 1.0)
                return {false, "mu(v_i) != 1 at trial " + std::to_string(trial)};
            // Midpoint toward the nearest adjacent centre.
            const double left = i > 0 ? v[i] - v[i - 1] : 1e300;
            const double right = i + 1 < m ? v[i + 1] - v[i] : 1e300;
            const double mid =
                left <= right ? v[i] - left / 2.0 : v[i] + right / 2.0;
            const double err =
                std::abs(membership(f, mid, i) - (1.0 - alpha) / 2.0);
            worst = std::max(worst, err);
            if (err > 1e-12)
                return {false, "rule-2 error " + std::to_string(err)};
        }
    }
    std::ostringstream ss;
    ss << "5000 partitions, worst rule-2 error = " << worst;
    return {true, ss.str()};
}

Outcome ifwg_oracle() {
    Rng rng(1003);
    double worst = 0.0;
    for (int trial = 0; trial < 20000; ++trial) {
        const std::size_t p = 1 + rng.below(4);
        std::vector<IfsTriple> col;
        std::vector<double> w(p);
        double sum = 0.0;
        for (std::size_t j = 0; j < p; ++j) {
            col.push_back(random_triple(rng));
            w[j] = rng.uniform(0.0, 1.0);
            sum += w[j];
        }
        for (double& x : w) x /= sum;
        const IfsTriple fused = ifwg_fuse(col, make_weights(w));
        const IfsTriple direct = oracle::ifwg_log_domain(col, w);
        worst = std::max({worst, std::abs(fused.mu - direct.mu),
                          std::abs(fused.gamma - direct.gamma)});
        if (worst > 1e-12)
            return {false, "oracle deviation " + std::to_string(worst)};
    }
    // p=1 identity, exact.
    for (int i = 0; i < 1000; ++i) {
        const IfsTriple a = random_triple(rng);
        const IfsTriple f = ifwg_fuse(std::vector<IfsTriple>{a}, make_weights({1.0}));
        if (f.mu != a.mu || f.gamma != a.gamma || f.pi != a.pi)
            return {false, "p=1 identity not exact"};
    }
    // Idempotency, exact on a fixture where every power is representable:
    // mu = 0.5^4, 1 - gamma = 0.75^4.
    {
        const IfsTriple a{0.0625, 0.68359375, 0.25390625};
        const IfsTriple f2 =
            ifwg_fuse(std::vector<IfsTriple>{a, a}, make_weights({0.5, 0.5}));
        const IfsTriple f4 = ifwg_fuse(std::vector<IfsTriple>{a, a, a, a},
                                       make_weights({0.25, 0.25, 0.25, 0.25}));
        if (f2.mu != a.mu || f2.gamma != a.gamma)
            return {false, "idempotency not exact on dyadic fixture (p=2)"};
        if (f4.mu != a.mu || f4.gamma != a.gamma)
            return {false, "idempotency not exact on dyadic fixture (p=4)"};
    }
    // Idempotency on random triples, within floating-point rounding.
    for (int i = 0; i < 2000; ++i) {
        const IfsTriple a = random_triple(rng);
        const std::vector<IfsTriple> col(3, a);
        const IfsTriple f = ifwg_fuse(col, make_weights({0.25, 0.5, 0.25}));
        if (std::abs(f.mu - a.mu) > 1e-14 || std::abs(f.gamma - a.gamma) > 1e-14)
            return {false, "idempotency drift beyond 1e-14"};
    }
    std::ostringstream ss;
    ss << "20000 fusions, worst oracle deviation = " << worst;
    return {true, ss.str()};
}

Outcome ranking_oracle() {
    // Five fixtures covering distinct scores, a score tie resolved by
    // precision, and a full tie.
    const std::vector<IfsTriple> base{
        {0.9, 0.05, 0.05}, {0.2, 0.7, 0.1}, {0.4, 0.4, 0.2},
        {0.5, 0.2, 0.3},   {0.6, 0.3, 0.1}, // S ties with previous, higher H
    };
    std::vector<std::size_t> perm{0, 1, 2, 3, 4};
    int checked = 0;
    do {
        std::vector<IfsTriple> input;
        for (std::size_t idx : perm) input.push_back(base[idx]);
        if (rank_ifs(input).order != oracle::pairwise_rank(input))
            return {false, "mismatch on permutation " + std::to_string(checked)};
        ++checked;
    } while (std::next_permutation(perm.begin(), perm.end()));

    // Full-tie fixtures.
    Rng rng(1004);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<IfsTriple> input;
        const std::size_t m = 1 + rng.below(5);
        for (std::size_t i = 0; i < m; ++i)
            input.push_back(rng.bernoulli(0.4) && !input.empty()
                                ? input.front()
                                : random_triple(rng));
        if (rank_ifs(input).order != oracle::pairwise_rank(input))
            return {false, "mismatch on tie fixture " + std::to_string(trial)};
    }
    return {true, std::to_string(checked) + " permutations + 500 tie fixtures"};
}

Outcome graph_oracles() {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(1005);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        const Snapshot s = oracle::random_snapshot(rng, 8);
        const CharacteristicVector c = compute_characteristics(s);
        const auto profile = oracle::path_profile(s);
        const double expected[kCharacteristicCount] = {
            static_cast<double>(s.node_count()),
            static_cast<double>(s.edge_count()),
            c[metric::max_degree], // counted below
            s.node_count() ? 2.0 * static_cast<double>(s.edge_count()) /
                                 static_cast<double>(s.node_count())
                           : 0.0,
            static_cast<double>(oracle::kcore(s)),
            oracle::assortativity(s),
            oracle::clustering(s),
            oracle::structure_entropy(s),
            profile.avg_path_length,
            profile.diameter_max,
            profile.diameter_avg,
        };
        std::size_t max_deg = 0;
        for (std::size_t v = 0; v < s.node_count(); ++v)
            max_deg = std::max(max_deg, s.degree(static_cast<int>(v)));
        if (c[metric::max_degree] != static_cast<double>(max_deg))
            return {false, "max_degree mismatch"};
        for (std::size_t j = 0; j < kCharacteristicCount; ++j) {
            const double err = std::abs(c[j] - expected[j]);
            worst = std::max(worst, err);
            if (err > 1e-9) {
                std::ostringstream ss;
                ss << kCharacteristicNames[j] << " off by " << err << " (trial "
                   << trial << ", n=" << s.node_count() << ")";
                return {false, ss.str()};
            }
        }
    }
    if (seconds_since(start) > 30.0)
        return {false, "exceeded the 30 s budget"};
    std::ostringstream ss;
    ss << "200 graphs x 11 metrics, worst deviation = " << worst;
    return {true, ss.str()};
}

Outcome fcm_behavior() {
    Rng rng(1006);
    // FCM objective non-increasing at every iteration across random series.
    // (The hesitation-modified update is not a descent step; its guarantees
    // are termination plus the recovery checks below.)
    for (int trial = 0; trial < 400; ++trial) {
        std::vector<double> series;
        const int n = 15 + static_cast<int>(rng.below(100));
        const bool clustered = rng.bernoulli(0.5);
        for (int i = 0; i < n; ++i)
            series.push_back(clustered ? rng.uniform(0.0, 1.0) +
                                             5.0 * static_cast<double>(rng.below(3))
                                       : rng.uniform(-10.0, 10.0));
        ClusterConfig cfg;
        cfg.exact_fcm = true;
        const std::size_t m = 2 + rng.below(3);
        const FcmResult r = ifcm_cluster(series, m, cfg);
        for (std::size_t t = 1; t < r.objective_trace.size(); ++t)
            if (r.objective_trace[t] > r.objective_trace[t - 1] * (1.0 + 1e-12)) {
                std::ostringstream ss;
                ss << "objective rose at iter " << t << ": "
                   << r.objective_trace[t - 1] << " -> " << r.objective_trace[t];
                return {false, ss.str()};
            }
    }
    // Two point masses recovered within 1e-6.
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        const double a = rng.uniform(-100.0, 0.0);
        const double b = a + rng.uniform(5.0, 100.0);
        std::vector<double> series;
        const int per = 3 + static_cast<int>(rng.below(10));
        for (int i = 0; i < per; ++i) {
            series.push_back(a);
            series.push_back(b);
        }
        ClusterConfig cfg;
        cfg.exact_fcm = trial % 2 == 0;
        const Partition p = fit_partition(series, 2, cfg);
        worst = std::max({worst, std::abs(p.centers[0] - a), std::abs(p.centers[1] - b)});
        if (worst > 1e-6)
            return {false, "mass recovery error " + std::to_string(worst)};
    }
    std::ostringstream ss;
    ss << "400 monotone FCM traces; worst mass-centre error (both modes) = " << worst;
    return {true, ss.str()};
}

struct SyntheticResult {
    double ifsad_m3 = 0.0;
    double ifsad_m8 = 0.0;
    double node_baseline = 0.0;
    double diam_baseline = 0.0;
    double seconds = 0.0;
};

SyntheticResult run_synthetic_suite() {
    const auto start = std::chrono::steady_clock::now();
    SyntheticResult mean;
    const int runs = 20;
    for (int run = 0; run < runs; ++run) {
        const synthetic::Series series = synthetic::make_series(5000 + run);
        const CharacteristicMatrix matrix = synthetic::matrix_of(series);

        PipelineConfig cfg;
        cfg.alpha = 0.2;
        cfg.beta = 0.5;
        cfg.cluster.beta = 0.5;
        cfg.cluster.seed = static_cast<std::uint64_t>(run);

        const std::vector<std::size_t> ms{3, 8};
        const auto table = sweep_cluster_size(matrix, series.truth, ms, cfg);
        mean.ifsad_m3 += table[0].second;
        mean.ifsad_m8 += table[1].second;

        // Single-characteristic baselines on the same trained model.
        const DetectionModel model = train(matrix, 3, cfg);
        const auto baseline_accuracy = [&](std::size_t j) {
            std::vector<bool> preds;
            for (std::size_t t = 0; t < matrix.tick_count(); ++t)
                preds.push_back(model.active[j] &&
                                classify_single(model, j, matrix.rows[j][t]) ==
                                    "abnormal");
            return evaluate(preds, series.truth).accuracy;
        };
        mean.node_baseline += baseline_accuracy(metric::node_size);
        mean.diam_baseline += baseline_accuracy(metric::diameter_max);
    }
    mean.ifsad_m3 /= runs;
    mean.ifsad_m8 /= runs;
    mean.node_baseline /= runs;
    mean.diam_baseline /= runs;
    mean.seconds = seconds_since(start);
    return mean;
}

SyntheticResult& synthetic_result() {
    static SyntheticResult r = run_synthetic_suite();
    return r;
}

Outcome synthetic_end_to_end() {
    const SyntheticResult& r = synthetic_result();
    std::ostringstream ss;
    ss << "mean accuracy: ifsad=" << r.ifsad_m3 << " node=" << r.node_baseline
       << " diameter=" << r.diam_baseline;
    if (r.ifsad_m3 < 0.90) return {false, ss.str() + " (below 0.90)"};
    if (r.ifsad_m3 <= r.node_baseline)
        return {false, ss.str() + " (does not beat node baseline)"};
    if (r.ifsad_m3 <= r.diam_baseline)
        return {false, ss.str() + " (does not beat diameter baseline)"};
    if (r.seconds > 120.0) return {false, ss.str() + " (exceeded the 2 min budget)"};
    return {true, ss.str()};
}

Outcome sweep_property() {
    const SyntheticResult& r = synthetic_result();
    std::ostringstream ss;
    ss << "accuracy m=3: " << r.ifsad_m3 << ", m=8: " << r.ifsad_m8;
    if (r.ifsad_m3 < r.ifsad_m8) return {false, ss.str()};
    return {true, ss.str()};
}

Outcome determinism() {
    namespace fs = std::filesystem;
    const synthetic::Series series = synthetic::make_series(421, {.ticks = 60, .nodes = 80});
    const CharacteristicMatrix matrix = synthetic::matrix_of(series);
    LabeledSeries labels;
    for (std::size_t t = 0; t < series.truth.size(); ++t)
        if (series.truth[t]) {
            labels.ticks.push_back(static_cast<int>(t));
            labels.labels.push_back(true);
        }

    RunConfig cfg;
    cfg.seed = 7;
    cfg.restarts = 3;
    const auto slurp = [](const std::string& p) {
        std::ifstream in(p, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    fs::remove_all("scratch/acceptance");
    const DetectionReport a =
        run_detect(cfg, matrix, labels, "scratch/acceptance/a", true);
    const DetectionReport b =
        run_detect(cfg, matrix, labels, "scratch/acceptance/b", true);
    if (slurp(a.report_csv) != slurp(b.report_csv))
        return {false, "report.csv differs between identical runs"};
    if (slurp(a.metrics_json) != slurp(b.metrics_json))
        return {false, "metrics.json differs between identical runs"};
    if (slurp(a.metrics_txt) != slurp(b.metrics_txt))
        return {false, "metrics.txt differs between identical runs"};
    if (slurp(a.svg) != slurp(b.svg))
        return {false, "report.svg differs between identical runs"};
    return {true, "4 report files byte-identical across reruns"};
}

} // namespace

int main(int argc, char** argv) {
    std::vector<Check> checks{
        {"ifs-validity", ifs_validity},
        {"membership-rules", membership_rules},
        {"ifwg-oracle", ifwg_oracle},
        {"ranking-oracle", ranking_oracle},
        {"graph-oracles", graph_oracles},
        {"fcm-behavior", fcm_behavior},
        {"synthetic-end-to-end", synthetic_end_to_end},
        {"sweep-property", sweep_property},
        {"determinism", determinism},
    };

    std::vector<std::string> filter(argv + 1, argv + argc);
    int failures = 0;
    for (const Check& c : checks) {
        if (!filter.empty() &&
            std::find(filter.begin(), filter.end(), c.name) == filter.end())
            continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.fn();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        std::printf("[%s] %-22s %s (%.2fs)\n", out.pass ? "PASS" : "FAIL",
                    c.name.c_str(), out.detail.c_str(), secs);
        if (!out.pass) ++failures;
    }
    return failures == 0 ? 0 : 1;
}
