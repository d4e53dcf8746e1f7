#pragma once

#include <cstdint>
#include <random>

namespace iriscap {

/// splitmix64 finalizer; good avalanche, used to derive independent
/// sub-seeds from (seed, stream) pairs so parallel work stays reproducible
/// regardless of scheduling.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream_a,
                                 std::uint64_t stream_b = 0) noexcept {
    std::uint64_t s = splitmix64(seed ^ (stream_a * 0xBF58476D1CE4E5B9ULL));
    return splitmix64(s ^ (stream_b * 0x94D049BB133111EBULL));
}

/// FNV-1a, used to fold string identifiers into seed streams.
constexpr std::uint64_t fnv1a(std::string_view s) noexcept {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ULL;
    }
    return h;
}

using RandomEngine = std::mt19937_64;

inline RandomEngine make_engine(std::uint64_t seed) { return RandomEngine(seed); }

/// Unbiased index in [0, n); used instead of std::shuffle so splits are
/// reproducible independently of the standard library implementation.
inline std::size_t uniform_index(RandomEngine& eng, std::size_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t v;
    do {
        v = eng();
    } while (v >= limit);
    return static_cast<std::size_t>(v % n);
}

template <typename T>
void fisher_yates_shuffle(std::vector<T>& items, RandomEngine& eng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[uniform_index(eng, i)]);
    }
}

}  // namespace iriscap
