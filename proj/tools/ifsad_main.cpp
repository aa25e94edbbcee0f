#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ifsad/errors.hpp"
#include "ifsad/io.hpp"
#include "ifsad/pipeline.hpp"

namespace {

struct CommonArgs {
    std::string edges;
    std::string matrix;
    std::string labels;
    std::string config;
    ifsad::RunConfig cfg;
    std::vector<std::string> polarity_flags;
    std::string weights_flag;
    bool ifcm_flag = false;
};

void add_input_options(CLI::App* cmd, CommonArgs& a) {
    auto* edges = cmd->add_option("--edges", a.edges,
                                  "Edge stream file (timestamp src dst per row)");
    auto* matrix = cmd->add_option("--matrix", a.matrix,
                                   "Precomputed characteristic CSV (header + numeric rows)");
    edges->excludes(matrix);
    cmd->add_option("--labels", a.labels, "Ground-truth CSV (tick,label)");
}

void add_config_options(CLI::App* cmd, CommonArgs& a) {
    cmd->add_option("--config", a.config, "Key = value config file");
    cmd->add_option("-m,--clusters", a.cfg.m, "Number of linguistic variables");
    cmd->add_option("--alpha", a.cfg.alpha, "Boundary hesitation parameter, in [0,1)");
    cmd->add_option("--beta", a.cfg.beta, "Yager complement parameter, in (0,1]");
    cmd->add_option("--weights", a.weights_flag,
                    "Comma-separated characteristic weights, or 'uniform'");
    cmd->add_option("--window", a.cfg.window_seconds,
                    "Window size in seconds for edge-stream bucketing");
    cmd->add_option("--seed", a.cfg.seed, "RNG seed (IFSAD_SEED overrides)");
    cmd->add_option("--train-fraction", a.cfg.train_fraction,
                    "Leading fraction of ticks used to fit the partitions");
    cmd->add_flag("--ifcm", a.ifcm_flag,
                  "Fold the Yager hesitation into the clustering centre update "
                  "(default is plain fuzzy C-means)");
    cmd->add_option("--restarts", a.cfg.restarts, "Clustering restarts per characteristic");
    cmd->add_option("--polarity", a.polarity_flags,
                    "Per-characteristic polarity, e.g. node_size=low (repeatable)");
}

// Config file fills anything the command line did not set explicitly.
void finalize_config(CLI::App* cmd, CommonArgs& a) {
    if (!a.config.empty()) {
        ifsad::RunConfig from_file = a.cfg;
        ifsad::apply_config_file(from_file, a.config);
        ifsad::RunConfig merged = from_file;
        if (cmd->count("--clusters")) merged.m = a.cfg.m;
        if (cmd->count("--alpha")) merged.alpha = a.cfg.alpha;
        if (cmd->count("--beta")) merged.beta = a.cfg.beta;
        if (cmd->count("--window")) merged.window_seconds = a.cfg.window_seconds;
        if (cmd->count("--seed")) merged.seed = a.cfg.seed;
        if (cmd->count("--train-fraction")) merged.train_fraction = a.cfg.train_fraction;
        if (cmd->count("--restarts")) merged.restarts = a.cfg.restarts;
        a.cfg = merged;
    }
    if (a.ifcm_flag) a.cfg.exact_fcm = false;
    if (!a.weights_flag.empty()) {
        if (a.weights_flag == "uniform") {
            a.cfg.weights.clear();
        } else {
            std::vector<double> w;
            std::string cell;
            std::istringstream in(a.weights_flag);
            while (std::getline(in, cell, ',')) {
                try {
                    w.push_back(std::stod(cell));
                } catch (const std::exception&) {
                    throw ifsad::config_error("--weights: non-numeric entry '" + cell + "'");
                }
            }
            a.cfg.weights = std::move(w);
        }
    }
    for (const std::string& flag : a.polarity_flags) {
        const auto eq = flag.find('=');
        if (eq == std::string::npos)
            throw ifsad::config_error("--polarity expects name=low|high|auto");
        const std::string name = flag.substr(0, eq);
        const std::string value = flag.substr(eq + 1);
        if (value == "low") a.cfg.polarity[name] = ifsad::Polarity::kLowAbnormal;
        else if (value == "high") a.cfg.polarity[name] = ifsad::Polarity::kHighAbnormal;
        else if (value == "auto") a.cfg.polarity[name] = ifsad::Polarity::kAuto;
        else throw ifsad::config_error("--polarity expects name=low|high|auto");
    }
    ifsad::apply_env_overrides(a.cfg);
}

ifsad::CharacteristicMatrix load_input(const CommonArgs& a) {
    if (a.edges.empty() == a.matrix.empty())
        throw ifsad::config_error("exactly one of --edges or --matrix is required");
    if (!a.edges.empty()) {
        const std::vector<ifsad::Snapshot> snapshots =
            ifsad::load_edge_stream(a.edges, a.cfg.window_seconds);
        if (snapshots.empty()) throw ifsad::input_error(a.edges + ": no events");
        return ifsad::characteristics_of(snapshots);
    }
    return ifsad::load_characteristic_csv(a.matrix);
}

std::optional<ifsad::LabeledSeries> load_labels_if_any(const CommonArgs& a) {
    if (a.labels.empty()) return std::nullopt;
    return ifsad::load_labels(a.labels);
}

int run_metrics(const CommonArgs& a, const std::string& output) {
    if (a.edges.empty())
        throw ifsad::config_error("metrics requires --edges");
    const std::vector<ifsad::Snapshot> snapshots =
        ifsad::load_edge_stream(a.edges, a.cfg.window_seconds);
    if (snapshots.empty()) throw ifsad::input_error(a.edges + ": no events");
    ifsad::write_characteristic_csv(output, ifsad::characteristics_of(snapshots));
    std::cout << "wrote " << output << " (" << snapshots.size() << " ticks)\n";
    return 0;
}

int run_detect_cmd(const CommonArgs& a, const std::string& out_dir, bool svg) {
    const ifsad::CharacteristicMatrix matrix = load_input(a);
    const auto labels = load_labels_if_any(a);
    const ifsad::DetectionReport report =
        ifsad::run_detect(a.cfg, matrix, labels, out_dir, svg);
    std::cout << "wrote " << report.report_csv << "\n";
    if (!report.svg.empty()) std::cout << "wrote " << report.svg << "\n";
    if (report.metrics) {
        std::cout << "wrote " << report.metrics_json << "\n";
        std::cout << ifsad::metrics_table(*report.metrics);
    }
    return 0;
}

int run_sweep_cmd(const CommonArgs& a, const std::string& out_dir, std::size_t m_min,
                  std::size_t m_max) {
    if (a.labels.empty()) throw ifsad::config_error("sweep requires --labels");
    if (m_min > m_max) throw ifsad::config_error("--m-min must be <= --m-max");
    const ifsad::CharacteristicMatrix matrix = load_input(a);
    const ifsad::LabeledSeries labels = ifsad::load_labels(a.labels);
    const std::vector<bool> truth = ifsad::truth_for_ticks(labels, matrix.ticks);

    std::vector<std::size_t> m_values;
    for (std::size_t m = m_min; m <= m_max; ++m) m_values.push_back(m);
    const ifsad::PipelineConfig pc = ifsad::make_pipeline_config(a.cfg, matrix.names);
    const auto table = ifsad::sweep_cluster_size(matrix, truth, m_values, pc);

    std::filesystem::create_directories(out_dir);
    const std::string path = (std::filesystem::path(out_dir) / "sweep.csv").string();
    ifsad::write_sweep_csv(path, table);
    std::cout << "wrote " << path << "\n";
    for (const auto& [m, acc] : table)
        std::printf("m=%zu  accuracy=%.4f\n", m, acc);
    return 0;
}

int run_baseline_cmd(const CommonArgs& a, const std::string& character,
                     const std::string& out_dir) {
    const ifsad::CharacteristicMatrix matrix = load_input(a);
    const auto it = std::find(matrix.names.begin(), matrix.names.end(), character);
    if (it == matrix.names.end())
        throw ifsad::config_error("--char '" + character + "' not in input characteristics");
    const std::size_t j = static_cast<std::size_t>(it - matrix.names.begin());

    const ifsad::PipelineConfig pc = ifsad::make_pipeline_config(a.cfg, matrix.names);
    const ifsad::DetectionModel model = ifsad::train(matrix, a.cfg.m, pc);

    std::filesystem::create_directories(out_dir);
    const std::string path =
        (std::filesystem::path(out_dir) / ("baseline_" + character + ".csv")).string();
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ifsad::input_error("cannot open for writing: " + path);
    out << "tick,predicted,abnormal\n";
    std::vector<bool> preds;
    preds.reserve(matrix.tick_count());
    for (std::size_t t = 0; t < matrix.tick_count(); ++t) {
        const std::string state =
            ifsad::classify_single(model, j, matrix.rows[j][t]);
        const bool abnormal = state == "abnormal";
        preds.push_back(abnormal);
        out << matrix.ticks[t] << "," << state << "," << (abnormal ? 1 : 0) << "\n";
    }
    std::cout << "wrote " << path << "\n";
    if (!a.labels.empty()) {
        const ifsad::LabeledSeries labels = ifsad::load_labels(a.labels);
        const ifsad::EvalMetrics m =
            ifsad::evaluate(preds, ifsad::truth_for_ticks(labels, matrix.ticks));
        std::cout << ifsad::metrics_table(m);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"IFSAD: anomaly detection for temporal networks via "
                 "intuitionistic fuzzy set ensembles"};
    app.require_subcommand(1);

    CommonArgs metrics_args, detect_args, sweep_args, baseline_args;
    std::string metrics_out = "metrics.csv";
    std::string detect_out = "ifsad-out", sweep_out = "ifsad-out",
                baseline_out = "ifsad-out";
    bool detect_svg = false;
    std::size_t m_min = 2, m_max = 8;
    std::string baseline_char;

    CLI::App* metrics = app.add_subcommand(
        "metrics", "Compute the 11 structural characteristics of an edge stream");
    metrics->add_option("--edges", metrics_args.edges, "Edge stream file")->required();
    metrics->add_option("--window", metrics_args.cfg.window_seconds,
                        "Window size in seconds")->required();
    metrics->add_option("-o,--output", metrics_out, "Output CSV path");

    CLI::App* detect = app.add_subcommand("detect", "Train and classify every tick");
    add_input_options(detect, detect_args);
    add_config_options(detect, detect_args);
    detect->add_option("-o,--out", detect_out, "Output directory");
    detect->add_flag("--svg", detect_svg, "Also emit stacked-bar SVG panels");

    CLI::App* sweep = app.add_subcommand("sweep", "Accuracy as a function of cluster size");
    add_input_options(sweep, sweep_args);
    add_config_options(sweep, sweep_args);
    sweep->add_option("-o,--out", sweep_out, "Output directory");
    sweep->add_option("--m-min", m_min, "Smallest cluster size");
    sweep->add_option("--m-max", m_max, "Largest cluster size");

    CLI::App* baseline = app.add_subcommand(
        "baseline", "Single-characteristic detector (node_size, diameter_max, ...)");
    add_input_options(baseline, baseline_args);
    add_config_options(baseline, baseline_args);
    baseline->add_option("--char", baseline_char, "Characteristic name")->required();
    baseline->add_option("-o,--out", baseline_out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (metrics->parsed()) return run_metrics(metrics_args, metrics_out);
        if (detect->parsed()) {
            finalize_config(detect, detect_args);
            return run_detect_cmd(detect_args, detect_out, detect_svg);
        }
        if (sweep->parsed()) {
            finalize_config(sweep, sweep_args);
            return run_sweep_cmd(sweep_args, sweep_out, m_min, m_max);
        }
        if (baseline->parsed()) {
            finalize_config(baseline, baseline_args);
            return run_baseline_cmd(baseline_args, baseline_char, baseline_out);
        }
    } catch (const ifsad::config_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const ifsad::input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 3;
    } catch (const ifsad::model_error& e) {
        std::cerr << "model error: " << e.what() << "\n";
        return 4;
    } catch (const ifsad::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
