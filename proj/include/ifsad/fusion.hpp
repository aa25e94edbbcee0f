#ifndef IFSAD_FUSION_HPP
#define IFSAD_FUSION_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "ifsad/fuzzifier.hpp"

namespace ifsad {

// Fusion weights over p characteristics: each in [0,1], summing to 1.
struct WeightVector {
    std::vector<double> w;

    std::size_t size() const { return w.size(); }
    double operator[](std::size_t i) const { return w[i]; }
};

WeightVector make_weights(std::vector<double> w);
WeightVector uniform_weights(std::size_t p);

// p x m grid of triples; row j holds characteristic j's evaluation over the
// m linguistic variables.
using IfsMatrix = std::vector<std::vector<IfsTriple>>;

// Row j = fuzzify(fuzzifiers[j], values[j]). All fuzzifiers must share m.
IfsMatrix build_ifs_matrix(std::span<const double> values,
                           std::span<const Fuzzifier> fuzzifiers);

// Weighted geometric fusion of one linguistic variable's column:
//   mu = prod mu_j^w_j,  gamma = 1 - prod (1 - gamma_j)^w_j,
// with 0^0 = 1 so zero-weight entries drop out.
IfsTriple ifwg_fuse(std::span<const IfsTriple> column, const WeightVector& w);

inline double score(const IfsTriple& a) { return a.mu - a.gamma; }
inline double precision(const IfsTriple& a) { return a.mu + a.gamma; }

// Total order over the fused triples: score descending, precision descending
// on score ties, lowest index on full ties. order[0] is the winner.
struct Ranking {
    std::vector<std::size_t> order;
    std::vector<std::pair<double, double>> scores; // (S, H) in input order
};

Ranking rank_ifs(std::span<const IfsTriple> fused);

} // namespace ifsad

#endif
