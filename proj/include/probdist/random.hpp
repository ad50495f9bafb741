#ifndef PROBDIST_RANDOM_HPP
#define PROBDIST_RANDOM_HPP

#include <cstdint>
#include <random>

namespace probdist {

// Deterministic uniform source for inversion sampling. Backed by
// std::mt19937_64, whose seeding and output sequence are fully pinned by
// the C++ standard, so golden sequences hold across platforms. Variates
// carry 53 random mantissa bits and lie in [0, 1).
//
// A RandomState is single-owner: move it between threads if you like, but
// never share one between threads. Use one state per thread instead.
class RandomState {
public:
    explicit RandomState(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    // Seeds from the system clock, for callers that did not ask for a
    // specific seed. The chosen seed is recoverable via seed().
    static RandomState from_clock();

    // Next uniform variate in [0, 1).
    double next_uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    std::uint64_t seed() const { return seed_; }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

}  // namespace probdist

#endif
