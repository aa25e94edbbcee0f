#ifndef IFSAD_RNG_HPP
#define IFSAD_RNG_HPP

#include <cstdint>
#include <random>

namespace ifsad {

// Thin wrapper around mt19937_64 with explicit value mappings so that the
// produced streams do not depend on the standard library's distribution
// implementations (byte-identical outputs across toolchains).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n) {
        // Rejection-free multiply-shift; bias is < 2^-64 * n, irrelevant here.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(engine_()) * n) >> 64);
    }

    bool bernoulli(double p) { return uniform() < p; }

private:
    std::mt19937_64 engine_;
};

} // namespace ifsad

#endif
