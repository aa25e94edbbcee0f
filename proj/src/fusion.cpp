#include "ifsad/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ifsad/errors.hpp"

namespace ifsad {

WeightVector make_weights(std::vector<double> w) {
    if (w.empty()) throw config_error("weights: empty vector");
    double sum = 0.0;
    for (double x : w) {
        if (!(x >= 0.0 && x <= 1.0))
            throw config_error("weights: entries must be in [0, 1]");
        sum += x;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw config_error("weights: must sum to 1");
    return WeightVector{std::move(w)};
}

WeightVector uniform_weights(std::size_t p) {
    if (p == 0) throw config_error("weights: p must be >= 1");
    return WeightVector{std::vector<double>(p, 1.0 / static_cast<double>(p))};
}

IfsMatrix build_ifs_matrix(std::span<const double> values,
                           std::span<const Fuzzifier> fuzzifiers) {
    if (values.size() != fuzzifiers.size())
        throw model_error("ifs matrix: value/fuzzifier count mismatch");
    for (const auto& f : fuzzifiers)
        if (f.size() != fuzzifiers.front().size())
            throw model_error("ifs matrix: fuzzifiers disagree on variable count");

    IfsMatrix rows;
    rows.reserve(values.size());
    for (std::size_t j = 0; j < values.size(); ++j)
        rows.push_back(fuzzify(fuzzifiers[j], values[j]));
    return rows;
}

IfsTriple ifwg_fuse(std::span<const IfsTriple> column, const WeightVector& w) {
    if (column.size() != w.size())
        throw model_error("ifwg: column/weight size mismatch");
    // A^1 = A: a single fully weighted input passes through unchanged.
    for (std::size_t j = 0; j < column.size(); ++j)
        if (w[j] == 1.0) return column[j];
    double mu = 1.0;
    double one_minus_gamma = 1.0;
    for (std::size_t j = 0; j < column.size(); ++j) {
        if (w[j] == 0.0) continue; // 0^0 = 1: excluded characteristic
        mu *= std::pow(column[j].mu, w[j]);
        one_minus_gamma *= std::pow(1.0 - column[j].gamma, w[j]);
    }
    const double gamma = 1.0 - one_minus_gamma;
    return {mu, gamma, 1.0 - mu - gamma};
}

Ranking rank_ifs(std::span<const IfsTriple> fused) {
    Ranking r;
    r.scores.reserve(fused.size());
    for (const auto& a : fused) r.scores.emplace_back(score(a), precision(a));
    r.order.resize(fused.size());
    std::iota(r.order.begin(), r.order.end(), std::size_t{0});
    std::sort(r.order.begin(), r.order.end(), [&](std::size_t a, std::size_t b) {
        if (r.scores[a].first != r.scores[b].first)
            return r.scores[a].first > r.scores[b].first;
        if (r.scores[a].second != r.scores[b].second)
            return r.scores[a].second > r.scores[b].second;
        return a < b;
    });
    return r;
}

} // namespace ifsad
