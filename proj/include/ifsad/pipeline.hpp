#ifndef IFSAD_PIPELINE_HPP
#define IFSAD_PIPELINE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ifsad/fusion.hpp"
#include "ifsad/fuzzifier.hpp"
#include "ifsad/graph.hpp"
#include "ifsad/partition.hpp"

namespace ifsad {

// p characteristic series over n ticks (row per characteristic).
struct CharacteristicMatrix {
    std::vector<std::string> names;        // size p
    std::vector<int> ticks;                // size n
    std::vector<std::vector<double>> rows; // p rows of length n

    std::size_t characteristic_count() const { return rows.size(); }
    std::size_t tick_count() const { return rows.empty() ? 0 : rows.front().size(); }
};

// The 11-metric matrix of a snapshot sequence.
CharacteristicMatrix characteristics_of(std::span<const Snapshot> snapshots);

// Which end of a characteristic's value range counts as abnormal. Auto picks
// the end interval holding the fewest training points (anomalies are rare).
enum class Polarity { kAuto, kLowAbnormal, kHighAbnormal };

struct PipelineConfig {
    double alpha = 0.2;
    double beta = 0.5;
    ClusterConfig cluster;
    double train_fraction = 1.0;     // leading fraction of ticks used for fitting
    std::vector<double> weights;     // empty = uniform over active characteristics
    std::vector<Polarity> polarity;  // empty = all auto; else one per characteristic
};

// Severity-ordered linguistic variable names: "normal" ... "abnormal".
std::vector<std::string> variable_names(std::size_t m);

// Trained ensemble. Characteristics whose series cannot be partitioned (for
// example constant rows) are masked inactive and carry no weight; their
// hesitation is effectively total. Immutable once trained.
struct DetectionModel {
    std::vector<std::optional<Fuzzifier>> fuzzifiers; // size p, empty if inactive
    std::vector<bool> active;                         // size p
    std::vector<bool> reversed;   // per characteristic: abnormal at the low end
    std::vector<double> weights;  // size p, zero on inactive, sums to 1
    std::vector<std::string> characteristic_names; // size p
    std::vector<std::string> variables;            // size m, severity order

    std::size_t characteristic_count() const { return active.size(); }
    std::size_t variable_count() const { return variables.size(); }
};

DetectionModel train(const CharacteristicMatrix& c_matrix, std::size_t m,
                     const PipelineConfig& cfg = {});

struct Classification {
    int tick = 0;
    std::vector<IfsTriple> fused; // one per variable, severity order
    Ranking ranking;
    std::string predicted;
    bool binary_abnormal = false;
};

// Fuses one tick's characteristic values through the trained model.
Classification classify(const DetectionModel& model, std::span<const double> values);

// classify() over every column of the matrix, carrying the tick ids along.
std::vector<Classification> classify_matrix(const DetectionModel& model,
                                            const CharacteristicMatrix& c_matrix);

// Single-characteristic detector: the state whose triple ranks best for
// characteristic j alone. Throws model_error if j is masked.
std::string classify_single(const DetectionModel& model, std::size_t j, double x);

struct EvalMetrics {
    double accuracy = 0.0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    long tp = 0, fp = 0, tn = 0, fn = 0;
};

// Binary confusion metrics with abnormal as the positive class. Zero
// denominators give 0 by convention.
EvalMetrics evaluate(const std::vector<bool>& preds, const std::vector<bool>& truth);

// One train+classify+evaluate pass per requested cluster size (each in 2..10).
std::vector<std::pair<std::size_t, double>> sweep_cluster_size(
    const CharacteristicMatrix& c_matrix, const std::vector<bool>& truth,
    std::span<const std::size_t> m_values, const PipelineConfig& cfg = {});

} // namespace ifsad

#endif
