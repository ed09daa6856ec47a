#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace sws {

// FNV-1a, used to split one session seed into stable per-stream seeds.
// std::hash is avoided so seeds do not depend on the standard library build.
inline std::uint64_t fnv1a(std::string_view s, std::uint64_t h = 14695981039346656037ull) {
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t base, std::string_view stream) {
    std::uint64_t h = fnv1a(stream);
    // splitmix64 finalizer over the combined value
    std::uint64_t z = base ^ h;
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

}  // namespace sws
