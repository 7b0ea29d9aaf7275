#pragma once

#include <cstdint>
#include <random>

namespace maxstable {

/// Stateless 64-bit mixer (splitmix64 finalizer). Used to derive independent
/// stream seeds from (seed, stream-id) pairs so replicate-level work is
/// reproducible regardless of scheduling.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed ^ mix64(stream));
}

/// A self-contained random stream. Streams are never shared across tasks;
/// derive one per replicate / per shift via derive().
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    RandomStream derive(std::uint64_t stream) const {
        return RandomStream(mix_seed(seed_, stream));
    }

    /// Uniform on [0, 1).
    double uniform() { return unif_(engine_); }

    /// Standard normal.
    double normal() { return norm_(engine_); }

    /// Standard exponential.
    double exponential() { return expo_(engine_); }

    /// Uniform integer in {0, ..., n-1}.
    int uniform_int(int n) {
        return std::uniform_int_distribution<int>(0, n - 1)(engine_);
    }

    std::mt19937_64& engine() { return engine_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    std::uniform_real_distribution<double> unif_{0.0, 1.0};
    std::normal_distribution<double> norm_{0.0, 1.0};
    std::exponential_distribution<double> expo_{1.0};
};

}  // namespace maxstable
