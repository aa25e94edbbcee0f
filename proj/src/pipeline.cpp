#include "ifsad/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ifsad/errors.hpp"

namespace ifsad {

CharacteristicMatrix characteristics_of(std::span<const Snapshot> snapshots) {
    CharacteristicMatrix m;
    m.names.assign(kCharacteristicNames.begin(), kCharacteristicNames.end());
    m.rows.assign(kCharacteristicCount, std::vector<double>(snapshots.size()));
    m.ticks.resize(snapshots.size());
    for (std::size_t t = 0; t < snapshots.size(); ++t) {
        m.ticks[t] = snapshots[t].tick();
        const CharacteristicVector c = compute_characteristics(snapshots[t]);
        for (std::size_t j = 0; j < kCharacteristicCount; ++j) m.rows[j][t] = c[j];
    }
    return m;
}

std::vector<std::string> variable_names(std::size_t m) {
    if (m == 0) throw config_error("variables: m must be >= 1");
    std::vector<std::string> names;
    names.reserve(m);
    names.emplace_back("normal");
    if (m == 1) return names;
    if (m == 3) {
        names.emplace_back("fluctuate");
    } else {
        for (std::size_t i = 1; i + 1 < m; ++i)
            names.emplace_back("fluctuate" + std::to_string(i));
    }
    names.emplace_back("abnormal");
    return names;
}

namespace {

// Abnormal end of one fitted partition: the end interval holding fewer
// training points; ties keep the high end.
bool low_end_abnormal(const Partition& p, std::span<const double> training) {
    if (p.size() < 2) return false;
    std::vector<std::size_t> counts(p.size(), 0);
    for (double x : training) ++counts[interval_of(p, x)];
    return counts.front() < counts.back();
}

std::size_t variable_to_interval(const DetectionModel& model, std::size_t j,
                                 std::size_t v) {
    return model.reversed[j] ? model.variable_count() - 1 - v : v;
}

} // namespace

DetectionModel train(const CharacteristicMatrix& c_matrix, std::size_t m,
                     const PipelineConfig& cfg) {
    const std::size_t p = c_matrix.characteristic_count();
    const std::size_t n = c_matrix.tick_count();
    if (p == 0 || n == 0) throw config_error("train: empty characteristic matrix");
    if (m < 1) throw config_error("train: m must be >= 1");
    if (!(cfg.train_fraction > 0.0 && cfg.train_fraction <= 1.0))
        throw config_error("train: train_fraction must be in (0, 1]");
    if (!cfg.polarity.empty() && cfg.polarity.size() != p)
        throw config_error("train: polarity override count != p");
    if (!cfg.weights.empty() && cfg.weights.size() != p)
        throw config_error("train: weight count != p");

    const std::size_t train_n = std::clamp<std::size_t>(
        static_cast<std::size_t>(std::lround(cfg.train_fraction * static_cast<double>(n))),
        1, n);

    DetectionModel model;
    model.fuzzifiers.resize(p);
    model.active.assign(p, false);
    model.reversed.assign(p, false);
    model.characteristic_names = c_matrix.names;
    model.variables = variable_names(m);

    for (std::size_t j = 0; j < p; ++j) {
        std::span<const double> series(c_matrix.rows[j].data(), train_n);
        ClusterConfig ccfg = cfg.cluster;
        ccfg.seed = cfg.cluster.seed + j; // decorrelate per-characteristic restarts
        Partition part;
        try {
            part = fit_partition(series, m, ccfg);
        } catch (const infeasible_partition_error&) {
            continue; // masked inactive; weight renormalises below
        }
        const Polarity pol = cfg.polarity.empty() ? Polarity::kAuto : cfg.polarity[j];
        model.reversed[j] = pol == Polarity::kAuto ? low_end_abnormal(part, series)
                                                   : pol == Polarity::kLowAbnormal;
        model.fuzzifiers[j] = make_fuzzifier(std::move(part), cfg.alpha, cfg.beta);
        model.active[j] = true;
    }

    const std::size_t active_count =
        static_cast<std::size_t>(std::count(model.active.begin(), model.active.end(), true));
    if (active_count == 0)
        throw model_error("train: every characteristic is infeasible, model untrainable");

    model.weights.assign(p, 0.0);
    if (cfg.weights.empty()) {
        for (std::size_t j = 0; j < p; ++j)
            if (model.active[j]) model.weights[j] = 1.0 / static_cast<double>(active_count);
    } else {
        make_weights(cfg.weights); // range/sum validation
        double active_sum = 0.0;
        for (std::size_t j = 0; j < p; ++j)
            if (model.active[j]) active_sum += cfg.weights[j];
        if (active_sum <= 0.0)
            throw model_error("train: all weight assigned to masked characteristics");
        for (std::size_t j = 0; j < p; ++j)
            if (model.active[j]) model.weights[j] = cfg.weights[j] / active_sum;
    }
    return model;
}

Classification classify(const DetectionModel& model, std::span<const double> values) {
    const std::size_t p = model.characteristic_count();
    const std::size_t m = model.variable_count();
    if (values.size() != p)
        throw model_error("classify: value count != characteristic count");

    std::vector<std::vector<IfsTriple>> rows(p);
    std::vector<double> active_w;
    for (std::size_t j = 0; j < p; ++j) {
        if (!model.active[j]) continue;
        rows[j] = fuzzify(*model.fuzzifiers[j], values[j]);
        active_w.push_back(model.weights[j]);
    }
    const WeightVector w = make_weights(std::move(active_w));

    Classification out;
    out.fused.resize(m);
    std::vector<IfsTriple> column;
    for (std::size_t v = 0; v < m; ++v) {
        column.clear();
        for (std::size_t j = 0; j < p; ++j)
            if (model.active[j]) column.push_back(rows[j][variable_to_interval(model, j, v)]);
        out.fused[v] = ifwg_fuse(column, w);
    }
    out.ranking = rank_ifs(out.fused);
    out.predicted = model.variables[out.ranking.order.front()];
    out.binary_abnormal = out.ranking.order.front() == m - 1 && m > 1;
    return out;
}

std::vector<Classification> classify_matrix(const DetectionModel& model,
                                            const CharacteristicMatrix& c_matrix) {
    if (c_matrix.characteristic_count() != model.characteristic_count())
        throw model_error("classify: matrix/model characteristic count mismatch");
    const std::size_t n = c_matrix.tick_count();
    std::vector<Classification> out;
    out.reserve(n);
    std::vector<double> values(model.characteristic_count());
    for (std::size_t t = 0; t < n; ++t) {
        for (std::size_t j = 0; j < values.size(); ++j) values[j] = c_matrix.rows[j][t];
        Classification c = classify(model, values);
        c.tick = c_matrix.ticks[t];
        out.push_back(std::move(c));
    }
    return out;
}

std::string classify_single(const DetectionModel& model, std::size_t j, double x) {
    if (j >= model.characteristic_count())
        throw model_error("classify_single: characteristic index out of range");
    if (!model.active[j])
        throw model_error("classify_single: characteristic '" +
                          model.characteristic_names[j] + "' is masked");
    const std::vector<IfsTriple> triples = fuzzify(*model.fuzzifiers[j], x);
    std::vector<IfsTriple> by_severity(triples.size());
    for (std::size_t v = 0; v < triples.size(); ++v)
        by_severity[v] = triples[variable_to_interval(model, j, v)];
    const Ranking r = rank_ifs(by_severity);
    return model.variables[r.order.front()];
}

EvalMetrics evaluate(const std::vector<bool>& preds, const std::vector<bool>& truth) {
    if (preds.empty() || preds.size() != truth.size())
        throw input_error("evaluate: prediction/truth length mismatch");
    EvalMetrics m;
    for (std::size_t i = 0; i < preds.size(); ++i) {
        if (preds[i] && truth[i]) ++m.tp;
        else if (preds[i] && !truth[i]) ++m.fp;
        else if (!preds[i] && truth[i]) ++m.fn;
        else ++m.tn;
    }
    const double total = static_cast<double>(preds.size());
    m.accuracy = static_cast<double>(m.tp + m.tn) / total;
    m.precision = m.tp + m.fp > 0 ? static_cast<double>(m.tp) / (m.tp + m.fp) : 0.0;
    m.recall = m.tp + m.fn > 0 ? static_cast<double>(m.tp) / (m.tp + m.fn) : 0.0;
    m.f1 = m.precision + m.recall > 0.0
               ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
               : 0.0;
    return m;
}

std::vector<std::pair<std::size_t, double>> sweep_cluster_size(
    const CharacteristicMatrix& c_matrix, const std::vector<bool>& truth,
    std::span<const std::size_t> m_values, const PipelineConfig& cfg) {
    for (std::size_t m : m_values)
        if (m < 2 || m > 10)
            throw config_error("sweep: cluster sizes must lie in [2, 10]");

    std::vector<std::pair<std::size_t, double>> table;
    table.reserve(m_values.size());
    for (std::size_t m : m_values) {
        const DetectionModel model = train(c_matrix, m, cfg);
        std::vector<bool> preds;
        preds.reserve(c_matrix.tick_count());
        for (const Classification& c : classify_matrix(model, c_matrix))
            preds.push_back(c.binary_abnormal);
        table.emplace_back(m, evaluate(preds, truth).accuracy);
    }
    return table;
}

} // namespace ifsad
