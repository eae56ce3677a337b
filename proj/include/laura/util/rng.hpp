#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace laura::util {

/// One splitmix64 step. Used for seed mixing only, never as a main stream.
inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from a base seed and salt values.
/// Adding a new salt combination never perturbs streams derived from others.
inline std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> salts) {
    std::uint64_t state = base;
    std::uint64_t out = splitmix64_next(state);
    for (std::uint64_t salt : salts) {
        state ^= salt + 0x9e3779b97f4a7c15ULL + (out << 6) + (out >> 2);
        out = splitmix64_next(state);
    }
    return out;
}

/// FNV-1a over a string, for salting seeds with names.
inline std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Deterministic random source. All draws are built from raw mt19937_64
/// output with explicit integer arithmetic, so sequences are identical
/// across standard libraries and platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [0, n). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below: n must be positive");
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % n;
        for (;;) {
            const std::uint64_t x = next_u64();
            if (x < limit) return x % n;
        }
    }

    std::size_t index(std::size_t n) { return static_cast<std::size_t>(below(n)); }

    bool bernoulli(double p) { return uniform() < p; }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::swap(values[i - 1], values[index(i)]);
        }
    }

    /// k distinct indices drawn from [0, n), in draw order.
    std::vector<std::size_t> sample_indices(std::size_t n, std::size_t k) {
        if (k > n) throw std::invalid_argument("Rng::sample_indices: k exceeds n");
        std::vector<std::size_t> pool(n);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::size_t i = 0; i < k; ++i) {
            std::swap(pool[i], pool[i + index(n - i)]);
        }
        pool.resize(k);
        return pool;
    }

private:
    std::mt19937_64 engine_;
};

} // namespace laura::util
