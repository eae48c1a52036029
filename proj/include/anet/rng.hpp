#pragma once

#include <cstdint>

#include "anet/core.hpp"

namespace anet {

/// Deterministic, platform-independent generator for seeded test cases.
struct SplitMix64 {
    std::uint64_t state = 0;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next()
    {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
    int digit(int q) { return static_cast<int>(below(static_cast<std::uint64_t>(q))); }
};

inline Network random_network(const Params& p, SplitMix64& rng)
{
    Network f{p, std::vector<Config>(p.size)};
    for (Config x = 0; x < p.size; ++x) f.table[x] = static_cast<Config>(rng.below(p.size));
    return f;
}

inline Network random_bijection(const Params& p, SplitMix64& rng)
{
    Network f = Network::identity(p);
    for (Config i = p.size; i > 1; --i) {
        const Config j = static_cast<Config>(rng.below(i));
        std::swap(f.table[i - 1], f.table[j]);
    }
    return f;
}

} // namespace anet
