#pragma once

#include <cstdint>
#include <random>

namespace entropygraph {

using Rng = std::mt19937_64;

// Uniform double in [0,1) built from the top 53 bits; identical on every platform.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool bernoulli(Rng& rng, double p) {
    return uniform01(rng) < p;
}

// Uniform integer in [0, n).  Rejection sampling keeps it unbiased.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

// splitmix64 finaliser; used to derive independent replica streams.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t replica) {
    return mix_seed(seed ^ mix_seed(replica + 1));
}

} // namespace entropygraph
