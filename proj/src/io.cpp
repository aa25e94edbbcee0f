#include "ifsad/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ifsad/errors.hpp"

namespace ifsad {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) cells.push_back(trim(cell));
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

bool parse_double(const std::string& s, double& out) {
    const char* b = s.data();
    const char* e = b + s.size();
    const auto res = std::from_chars(b, e, out);
    return res.ec == std::errc() && res.ptr == e;
}

bool parse_ll(const std::string& s, long long& out) {
    const char* b = s.data();
    const char* e = b + s.size();
    const auto res = std::from_chars(b, e, out);
    return res.ec == std::errc() && res.ptr == e;
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open: " + path);
    return in;
}

Polarity parse_polarity(const std::string& v) {
    if (v == "low") return Polarity::kLowAbnormal;
    if (v == "high") return Polarity::kHighAbnormal;
    if (v == "auto") return Polarity::kAuto;
    throw config_error("polarity must be low, high or auto, got '" + v + "'");
}

} // namespace

std::string format_number(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void apply_config_file(RunConfig& cfg, const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw config_error(path + ":" + std::to_string(lineno) +
                               ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        const std::string value = trim(t.substr(eq + 1));
        const auto bad = [&](const std::string& what) {
            return config_error(path + ":" + std::to_string(lineno) + ": " + what);
        };

        double d = 0.0;
        long long ll = 0;
        if (key == "m") {
            if (!parse_ll(value, ll) || ll < 1) throw bad("m must be a positive integer");
            cfg.m = static_cast<std::size_t>(ll);
        } else if (key == "alpha") {
            if (!parse_double(value, d)) throw bad("alpha must be numeric");
            cfg.alpha = d;
        } else if (key == "beta") {
            if (!parse_double(value, d)) throw bad("beta must be numeric");
            cfg.beta = d;
        } else if (key == "weights") {
            if (value == "uniform") {
                cfg.weights.clear();
            } else {
                std::vector<double> w;
                for (const std::string& cell : split_csv(value)) {
                    if (!parse_double(cell, d)) throw bad("weights must be numeric");
                    w.push_back(d);
                }
                cfg.weights = std::move(w);
            }
        } else if (key == "window_seconds") {
            if (!parse_ll(value, ll)) throw bad("window_seconds must be an integer");
            cfg.window_seconds = ll;
        } else if (key == "seed") {
            if (!parse_ll(value, ll) || ll < 0) throw bad("seed must be a non-negative integer");
            cfg.seed = static_cast<std::uint64_t>(ll);
        } else if (key == "train_fraction") {
            if (!parse_double(value, d)) throw bad("train_fraction must be numeric");
            cfg.train_fraction = d;
        } else if (key == "exact_fcm") {
            if (value == "true" || value == "1") cfg.exact_fcm = true;
            else if (value == "false" || value == "0") cfg.exact_fcm = false;
            else throw bad("exact_fcm must be true/false");
        } else if (key == "restarts") {
            if (!parse_ll(value, ll) || ll < 1) throw bad("restarts must be >= 1");
            cfg.restarts = static_cast<int>(ll);
        } else if (key.rfind("polarity.", 0) == 0) {
            cfg.polarity[key.substr(9)] = parse_polarity(value);
        } else {
            throw bad("unknown key '" + key + "'");
        }
    }
}

void apply_env_overrides(RunConfig& cfg) {
    if (const char* env = std::getenv("IFSAD_SEED")) {
        long long ll = 0;
        if (!parse_ll(env, ll) || ll < 0)
            throw config_error("IFSAD_SEED must be a non-negative integer");
        cfg.seed = static_cast<std::uint64_t>(ll);
    }
}

PipelineConfig make_pipeline_config(const RunConfig& cfg,
                                    const std::vector<std::string>& names) {
    if (cfg.alpha < 0.0 || cfg.alpha >= 1.0)
        throw config_error("alpha must be in [0, 1)");
    if (cfg.beta <= 0.0 || cfg.beta > 1.0)
        throw config_error("beta must be in (0, 1]");
    if (!(cfg.train_fraction > 0.0 && cfg.train_fraction <= 1.0))
        throw config_error("train_fraction must be in (0, 1]");
    if (cfg.restarts < 1) throw config_error("restarts must be >= 1");

    PipelineConfig pc;
    pc.alpha = cfg.alpha;
    pc.beta = cfg.beta;
    pc.train_fraction = cfg.train_fraction;
    pc.weights = cfg.weights;
    pc.cluster.beta = cfg.beta;
    pc.cluster.exact_fcm = cfg.exact_fcm;
    pc.cluster.restarts = cfg.restarts;
    pc.cluster.seed = cfg.seed;
    if (!cfg.polarity.empty()) {
        pc.polarity.assign(names.size(), Polarity::kAuto);
        for (const auto& [name, pol] : cfg.polarity) {
            const auto it = std::find(names.begin(), names.end(), name);
            if (it == names.end())
                throw config_error("polarity override for unknown characteristic '" +
                                   name + "'");
            pc.polarity[static_cast<std::size_t>(it - names.begin())] = pol;
        }
    }
    return pc;
}

std::vector<Snapshot> load_edge_stream(const std::string& path,
                                       long long window_seconds) {
    if (window_seconds <= 0) throw config_error("window_seconds must be > 0");
    std::ifstream in = open_in(path);

    struct Event {
        long long t;
        std::string src, dst;
    };
    std::vector<Event> events;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        std::replace(t.begin(), t.end(), ',', ' ');
        std::istringstream row(t);
        Event ev;
        std::string ts, extra;
        if (!(row >> ts >> ev.src >> ev.dst) || (row >> extra) ||
            !parse_ll(ts, ev.t))
            throw input_error(path + ":" + std::to_string(lineno) +
                              ": expected 'timestamp src dst'");
        events.push_back(std::move(ev));
    }
    if (events.empty()) return {};

    long long t0 = events.front().t;
    long long t_max = t0;
    for (const Event& ev : events) {
        t0 = std::min(t0, ev.t);
        t_max = std::max(t_max, ev.t);
    }
    const std::size_t windows =
        static_cast<std::size_t>((t_max - t0) / window_seconds) + 1;

    std::vector<std::vector<std::pair<std::string, std::string>>> buckets(windows);
    for (Event& ev : events)
        buckets[static_cast<std::size_t>((ev.t - t0) / window_seconds)]
            .emplace_back(std::move(ev.src), std::move(ev.dst));

    std::vector<Snapshot> snapshots;
    snapshots.reserve(windows);
    for (std::size_t w = 0; w < windows; ++w)
        snapshots.push_back(build_snapshot(buckets[w], static_cast<int>(w)));
    return snapshots;
}

CharacteristicMatrix load_characteristic_csv(const std::string& path) {
    std::ifstream in = open_in(path);
    std::string line;
    if (!std::getline(in, line)) throw input_error(path + ": empty file");

    const std::vector<std::string> header = split_csv(line);
    if (header.empty()) throw input_error(path + ": empty header");
    bool all_numeric = true;
    for (const std::string& cell : header) {
        double d;
        if (!parse_double(cell, d)) all_numeric = false;
    }
    if (all_numeric)
        throw input_error(path + ": first row is numeric, header row required");
    for (const std::string& cell : header)
        if (cell.empty()) throw input_error(path + ": empty header cell");

    CharacteristicMatrix m;
    m.names = header;
    m.rows.assign(header.size(), {});

    int lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const std::vector<std::string> cells = split_csv(line);
        if (cells.size() != header.size())
            throw input_error(path + ":" + std::to_string(lineno) + ": expected " +
                              std::to_string(header.size()) + " cells, got " +
                              std::to_string(cells.size()));
        for (std::size_t j = 0; j < cells.size(); ++j) {
            double d;
            if (!parse_double(cells[j], d) || !std::isfinite(d))
                throw input_error(path + ":" + std::to_string(lineno) +
                                  ": non-numeric cell '" + cells[j] + "'");
            m.rows[j].push_back(d);
        }
    }
    if (m.tick_count() == 0) throw input_error(path + ": no data rows");
    m.ticks.resize(m.tick_count());
    for (std::size_t t = 0; t < m.ticks.size(); ++t) m.ticks[t] = static_cast<int>(t);
    return m;
}

void write_characteristic_csv(const std::string& path, const CharacteristicMatrix& m) {
    std::ofstream out = open_out(path);
    for (std::size_t j = 0; j < m.names.size(); ++j)
        out << (j ? "," : "") << m.names[j];
    out << "\n";
    for (std::size_t t = 0; t < m.tick_count(); ++t) {
        for (std::size_t j = 0; j < m.rows.size(); ++j)
            out << (j ? "," : "") << format_number(m.rows[j][t]);
        out << "\n";
    }
}

LabeledSeries load_labels(const std::string& path) {
    std::ifstream in = open_in(path);
    LabeledSeries series;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#') continue;
        const std::vector<std::string> cells = split_csv(t);
        if (lineno == 1 && cells.size() == 2 && cells[0] == "tick") continue;
        long long tick = 0, label = 0;
        if (cells.size() != 2 || !parse_ll(cells[0], tick) ||
            !parse_ll(cells[1], label) || (label != 0 && label != 1))
            throw input_error(path + ":" + std::to_string(lineno) +
                              ": expected 'tick,label' with label 0 or 1");
        if (!series.ticks.empty() && tick <= series.ticks.back())
            throw input_error(path + ":" + std::to_string(lineno) +
                              ": ticks must be strictly increasing");
        series.ticks.push_back(static_cast<int>(tick));
        series.labels.push_back(label == 1);
    }
    return series;
}

std::vector<bool> truth_for_ticks(const LabeledSeries& labels,
                                  const std::vector<int>& ticks) {
    std::vector<bool> truth(ticks.size(), false);
    for (std::size_t i = 0; i < ticks.size(); ++i) {
        const auto it =
            std::lower_bound(labels.ticks.begin(), labels.ticks.end(), ticks[i]);
        if (it != labels.ticks.end() && *it == ticks[i])
            truth[i] = labels.labels[static_cast<std::size_t>(it - labels.ticks.begin())];
    }
    return truth;
}

void write_report_csv(const std::string& path,
                      const std::vector<Classification>& results,
                      const std::vector<std::string>& variables) {
    std::ofstream out = open_out(path);
    out << "tick";
    for (const std::string& v : variables)
        out << ",mu_" << v << ",gamma_" << v << ",pi_" << v;
    out << ",predicted,abnormal\n";
    for (const Classification& c : results) {
        out << c.tick;
        for (const IfsTriple& t : c.fused)
            out << "," << format_number(t.mu) << "," << format_number(t.gamma) << ","
                << format_number(t.pi);
        out << "," << c.predicted << "," << (c.binary_abnormal ? 1 : 0) << "\n";
    }
}

void write_metrics_json(const std::string& path, const EvalMetrics& m) {
    nlohmann::json j{
        {"accuracy", m.accuracy},
        {"precision", m.precision},
        {"recall", m.recall},
        {"f1", m.f1},
        {"confusion", {{"tp", m.tp}, {"fp", m.fp}, {"tn", m.tn}, {"fn", m.fn}}},
    };
    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
}

std::string metrics_table(const EvalMetrics& m) {
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "metric     value\n"
                  "accuracy   %.4f\n"
                  "precision  %.4f\n"
                  "recall     %.4f\n"
                  "f1         %.4f\n"
                  "confusion  TP=%ld FP=%ld TN=%ld FN=%ld\n",
                  m.accuracy, m.precision, m.recall, m.f1, m.tp, m.fp, m.tn, m.fn);
    return buf;
}

void write_metrics_table(const std::string& path, const EvalMetrics& m) {
    std::ofstream out = open_out(path);
    out << metrics_table(m);
}

void write_sweep_csv(const std::string& path,
                     const std::vector<std::pair<std::size_t, double>>& table) {
    std::ofstream out = open_out(path);
    out << "m,accuracy\n";
    for (const auto& [m, acc] : table)
        out << m << "," << format_number(acc) << "\n";
}

namespace {

std::string svg_coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

} // namespace

void write_svg_panels(const std::string& path,
                      const std::vector<Classification>& results,
                      const std::vector<std::string>& variables) {
    const std::size_t n = results.size();
    const std::size_t m = variables.size();
    const double bar_w = std::clamp(900.0 / std::max<std::size_t>(n, 1), 2.0, 14.0);
    const double left = 90.0;
    const double panel_h = 90.0;
    const double panel_gap = 18.0;
    const double ribbon_h = 12.0;
    const double width = left + bar_w * static_cast<double>(n) + 20.0;
    const double height =
        ribbon_h + 16.0 + static_cast<double>(m) * (panel_h + panel_gap) + 20.0;

    // mu red, gamma green, pi blue, per the usual legend.
    const char* kMu = "#d62728";
    const char* kGamma = "#2ca02c";
    const char* kPi = "#1f77b4";

    std::ofstream out = open_out(path);
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << svg_coord(width)
        << "\" height=\"" << svg_coord(height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // Abnormal-prediction ribbon.
    out << "<text x=\"4\" y=\"" << svg_coord(ribbon_h) << "\">state</text>\n";
    for (std::size_t t = 0; t < n; ++t) {
        const char* fill = results[t].binary_abnormal ? "#00c8d7" : "#e8e8e8";
        out << "<rect x=\"" << svg_coord(left + bar_w * static_cast<double>(t))
            << "\" y=\"2\" width=\"" << svg_coord(bar_w) << "\" height=\""
            << svg_coord(ribbon_h) << "\" fill=\"" << fill << "\"/>\n";
    }

    // One panel per variable, highest severity first.
    for (std::size_t row = 0; row < m; ++row) {
        const std::size_t v = m - 1 - row;
        const double top =
            ribbon_h + 16.0 + static_cast<double>(row) * (panel_h + panel_gap);
        out << "<text x=\"4\" y=\"" << svg_coord(top + panel_h / 2.0) << "\">"
            << variables[v] << "</text>\n";
        out << "<rect x=\"" << svg_coord(left - 1.0) << "\" y=\"" << svg_coord(top - 1.0)
            << "\" width=\"" << svg_coord(bar_w * static_cast<double>(n) + 2.0)
            << "\" height=\"" << svg_coord(panel_h + 2.0)
            << "\" fill=\"none\" stroke=\"#999\"/>\n";
        for (std::size_t t = 0; t < n; ++t) {
            const IfsTriple& tri = results[t].fused[v];
            const double x = left + bar_w * static_cast<double>(t);
            double y = top + panel_h;
            const double parts[3] = {tri.mu, tri.gamma, tri.pi};
            const char* colors[3] = {kMu, kGamma, kPi};
            for (int s = 0; s < 3; ++s) {
                const double h = std::max(0.0, parts[s]) * panel_h;
                y -= h;
                out << "<rect x=\"" << svg_coord(x) << "\" y=\"" << svg_coord(y)
                    << "\" width=\"" << svg_coord(std::max(bar_w - 0.5, 1.0))
                    << "\" height=\"" << svg_coord(h) << "\" fill=\"" << colors[s]
                    << "\"/>\n";
            }
        }
    }

    // Legend.
    const double ly = height - 8.0;
    const char* names[3] = {"mu", "gamma", "pi"};
    const char* colors[3] = {kMu, kGamma, kPi};
    for (int s = 0; s < 3; ++s) {
        const double lx = left + 120.0 * s;
        out << "<rect x=\"" << svg_coord(lx) << "\" y=\"" << svg_coord(ly - 9.0)
            << "\" width=\"10\" height=\"10\" fill=\"" << colors[s] << "\"/>\n";
        out << "<text x=\"" << svg_coord(lx + 14.0) << "\" y=\"" << svg_coord(ly)
            << "\">" << names[s] << "</text>\n";
    }
    out << "</svg>\n";
}

DetectionReport run_detect(const RunConfig& cfg, const CharacteristicMatrix& matrix,
                           const std::optional<LabeledSeries>& labels,
                           const std::string& out_dir, bool emit_svg) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);

    const PipelineConfig pc = make_pipeline_config(cfg, matrix.names);
    const DetectionModel model = train(matrix, cfg.m, pc);
    const std::vector<Classification> results = classify_matrix(model, matrix);

    DetectionReport report;
    report.report_csv = (fs::path(out_dir) / "report.csv").string();
    write_report_csv(report.report_csv, results, model.variables);

    if (labels) {
        std::vector<bool> preds;
        preds.reserve(results.size());
        for (const Classification& c : results) preds.push_back(c.binary_abnormal);
        const EvalMetrics m = evaluate(preds, truth_for_ticks(*labels, matrix.ticks));
        report.metrics = m;
        report.metrics_json = (fs::path(out_dir) / "metrics.json").string();
        report.metrics_txt = (fs::path(out_dir) / "metrics.txt").string();
        write_metrics_json(report.metrics_json, m);
        write_metrics_table(report.metrics_txt, m);
    }
    if (emit_svg) {
        report.svg = (fs::path(out_dir) / "report.svg").string();
        write_svg_panels(report.svg, results, model.variables);
    }
    return report;
}

} // namespace ifsad
