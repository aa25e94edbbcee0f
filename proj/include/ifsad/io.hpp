#ifndef IFSAD_IO_HPP
#define IFSAD_IO_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ifsad/graph.hpp"
#include "ifsad/pipeline.hpp"

namespace ifsad {

// Everything the CLI exposes as flags / config-file keys.
struct RunConfig {
    std::size_t m = 3;
    double alpha = 0.2;
    double beta = 0.5;
    std::vector<double> weights;  // empty = uniform
    long long window_seconds = 0; // required for edge-stream input
    std::uint64_t seed = 0;
    double train_fraction = 1.0;
    bool exact_fcm = true; // see ClusterConfig
    int restarts = 1;
    std::map<std::string, Polarity> polarity; // by characteristic name
};

// Sparse binary ground truth: ticks not listed default to normal.
struct LabeledSeries {
    std::vector<int> ticks;   // strictly increasing
    std::vector<bool> labels; // true = abnormal
};

// Parses `key = value` lines into cfg; lines starting with '#' are comments.
// Unknown keys and malformed values raise config_error.
void apply_config_file(RunConfig& cfg, const std::string& path);

// IFSAD_SEED, when set, overrides cfg.seed.
void apply_env_overrides(RunConfig& cfg);

PipelineConfig make_pipeline_config(const RunConfig& cfg,
                                    const std::vector<std::string>& names);

// `timestamp src dst` rows (comma- or whitespace-separated) bucketed into
// fixed windows of window_seconds; empty windows yield empty snapshots.
std::vector<Snapshot> load_edge_stream(const std::string& path, long long window_seconds);

// Header-named numeric CSV, one row per tick, one column per characteristic.
CharacteristicMatrix load_characteristic_csv(const std::string& path);

void write_characteristic_csv(const std::string& path, const CharacteristicMatrix& m);

// `tick,label` CSV with label in {0,1}; an optional header row is skipped.
LabeledSeries load_labels(const std::string& path);

// Truth vector aligned with the given tick sequence.
std::vector<bool> truth_for_ticks(const LabeledSeries& labels, const std::vector<int>& ticks);

// Shortest round-trip decimal representation (deterministic across runs).
std::string format_number(double v);

void write_report_csv(const std::string& path,
                      const std::vector<Classification>& results,
                      const std::vector<std::string>& variables);

void write_metrics_json(const std::string& path, const EvalMetrics& m);
void write_metrics_table(const std::string& path, const EvalMetrics& m);
std::string metrics_table(const EvalMetrics& m);

void write_sweep_csv(const std::string& path,
                     const std::vector<std::pair<std::size_t, double>>& table);

// Stacked per-tick bars of (mu, gamma, pi) per linguistic variable, highest
// severity panel first, with an abnormal-prediction ribbon on top.
void write_svg_panels(const std::string& path,
                      const std::vector<Classification>& results,
                      const std::vector<std::string>& variables);

struct DetectionReport {
    std::string report_csv;
    std::string metrics_json; // empty when no labels were supplied
    std::string metrics_txt;  // empty when no labels were supplied
    std::string svg;          // empty unless requested
    std::optional<EvalMetrics> metrics;
};

// Full run: train on the matrix, classify every tick, write the report files
// under out_dir (report.csv, metrics.json, metrics.txt, report.svg).
DetectionReport run_detect(const RunConfig& cfg, const CharacteristicMatrix& matrix,
                           const std::optional<LabeledSeries>& labels,
                           const std::string& out_dir, bool emit_svg);

} // namespace ifsad

#endif
