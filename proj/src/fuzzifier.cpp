#include "ifsad/fuzzifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "ifsad/errors.hpp"

namespace ifsad {

double nonmembership(double mu, double beta) {
    if (beta <= 0.0 || beta > 1.0)
        throw config_error("nonmembership: beta must be in (0, 1]");
    return std::pow(1.0 - std::pow(mu, beta), 1.0 / beta);
}

Fuzzifier make_fuzzifier(Partition partition, double alpha, double beta) {
    if (alpha < 0.0 || alpha >= 1.0)
        throw config_error("fuzzifier: alpha must be in [0, 1)");
    if (beta <= 0.0 || beta > 1.0)
        throw config_error("fuzzifier: beta must be in (0, 1]");
    const std::size_t m = partition.size();
    if (m == 0) throw config_error("fuzzifier: empty partition");
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (!(partition.centers[i] < partition.centers[i + 1]))
            throw config_error("fuzzifier: centres not strictly ascending");

    Fuzzifier f;
    f.alpha = alpha;
    f.beta = beta;
    f.sigma2.resize(m);
    // log((1-alpha)/2) < 0, so sigma2 stays positive.
    const double denom = 2.0 * std::log((1.0 - alpha) / 2.0);
    for (std::size_t i = 0; i < m; ++i) {
        double gap;
        if (m == 1) {
            gap = 0.5 * (partition.domain_hi - partition.domain_lo);
        } else {
            const double left = i > 0
                ? partition.centers[i] - partition.centers[i - 1]
                : std::numeric_limits<double>::infinity();
            const double right = i + 1 < m
                ? partition.centers[i + 1] - partition.centers[i]
                : std::numeric_limits<double>::infinity();
            gap = std::min(left, right);
        }
        const double half = 0.5 * gap;
        f.sigma2[i] = -(half * half) / denom;
    }
    f.partition = std::move(partition);
    return f;
}

double membership(const Fuzzifier& f, double x, std::size_t i) {
    const double d = x - f.partition.centers[i];
    return std::exp(-(d * d) / (2.0 * f.sigma2[i]));
}

std::vector<IfsTriple> fuzzify(const Fuzzifier& f, double x) {
    std::vector<IfsTriple> out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double mu = membership(f, x, i);
        const double gamma = nonmembership(mu, f.beta);
        out[i] = {mu, gamma, 1.0 - mu - gamma};
    }
    return out;
}

} // namespace ifsad
