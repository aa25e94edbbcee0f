#ifndef IFSAD_FUZZIFIER_HPP
#define IFSAD_FUZZIFIER_HPP

#include <cstddef>
#include <vector>

#include "ifsad/partition.hpp"

namespace ifsad {

// One intuitionistic fuzzy evaluation: membership, non-membership and the
// residual hesitation pi = 1 - mu - gamma (all in [0,1], mu + gamma <= 1).
struct IfsTriple {
    double mu = 0.0;
    double gamma = 0.0;
    double pi = 0.0;
};

// Yager complement (1 - mu^beta)^(1/beta). The restriction beta <= 1 is what
// keeps mu + gamma <= 1 for every mu; values outside (0, 1] are rejected.
double nonmembership(double mu, double beta);

// Per-characteristic fuzzification model: a fitted partition plus the
// Gaussian width per interval, fixed so that membership is exactly 1 at each
// centre and (1 - alpha)/2 at the midpoint toward the nearest adjacent
// centre.
struct Fuzzifier {
    Partition partition;
    double alpha = 0.2;
    double beta = 0.5;
    std::vector<double> sigma2; // one Gaussian variance per interval

    std::size_t size() const { return partition.size(); }
};

Fuzzifier make_fuzzifier(Partition partition, double alpha, double beta);

// Gaussian membership of x to interval i (0-based).
double membership(const Fuzzifier& f, double x, std::size_t i);

// Full evaluation of x: one triple per linguistic variable, interval order.
std::vector<IfsTriple> fuzzify(const Fuzzifier& f, double x);

} // namespace ifsad

#endif
