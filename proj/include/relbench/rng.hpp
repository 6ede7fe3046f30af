#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace relbench {

// 64-bit FNV-1a over the bytes of `text`.
inline std::uint64_t fnv1a64(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char byte : text) {
        h ^= byte;
        h *= 1099511628211ull;
    }
    return h;
}

// SplitMix64 finalizer, used to derive per-stage seeds from a base seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Uniform draw from [0, bound) by rejection sampling on the raw 64-bit
// stream. std::uniform_int_distribution is implementation-defined, so the
// reproducibility contract is built on this instead.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t r;
    do {
        r = rng();
    } while (r >= limit);
    return r % bound;
}

// Fisher-Yates shuffle driven by uniform_below; byte-identical output for a
// given seed on every platform.
template <typename T>
void fisher_yates_shuffle(std::vector<T>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

}  // namespace relbench
