// rng.hpp — reproducible random streams.
//
// Per-trajectory streams are mt19937_64 engines seeded with a splitmix64
// hash of (master seed, stream index), so ensembles are order-independent
// and identical across platforms: the engine is fully specified by the
// standard and uniform doubles are extracted manually below (the standard
// library distributions are implementation-defined).

#pragma once

#include <cstdint>
#include <random>

namespace herald {

// splitmix64 step (public-domain mixer by Sebastiano Vigna).
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t index) {
    std::uint64_t state = master_seed;
    std::uint64_t mixed = splitmix64(state);
    state = mixed ^ (index + 0x9e3779b97f4a7c15ULL);
    return splitmix64(state);
}

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    // Uniform in [2^-53, 1): never returns 0, so it is usable as a jump
    // threshold for a norm that only reaches 0 asymptotically.
    double uniform() {
        const std::uint64_t bits = engine_() >> 11;  // top 53 bits
        return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
    }

    bool bernoulli(double probability) { return uniform() <= probability; }

private:
    std::mt19937_64 engine_;
};

}  // namespace herald
