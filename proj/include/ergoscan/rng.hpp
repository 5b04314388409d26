#pragma once

#include <cstdint>
#include <string_view>

namespace ergoscan {

// splitmix64 output at stream position i. Pure function of (seed, i), so symbol
// generators built on it have O(1) random access and are reproducible across
// runs, platforms and thread counts.
constexpr uint64_t splitmix64_at(uint64_t seed, uint64_t i) {
    uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

constexpr uint64_t fnv1a64(std::string_view s) {
    uint64_t h = 0xcbf29ce484222325ull;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ull;
    }
    return h;
}

// Seed-splitting rule: one master seed, derived streams keyed by label.
// child_seed(master, label) = splitmix64_at(master ^ fnv1a64(label), 0).
constexpr uint64_t child_seed(uint64_t master, std::string_view label) {
    return splitmix64_at(master ^ fnv1a64(label), 0);
}

} // namespace ergoscan
