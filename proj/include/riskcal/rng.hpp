#pragma once
// Seedable, portable random source: xoshiro256++ seeded through splitmix64.
// Stream splitting: derive_stream(seed, ...) hashes a seed with stream ids so
// per-record / per-trial generators are independent of evaluation order.

#include <cstdint>
#include <span>
#include <vector>

namespace riskcal {

// splitmix64 step; also the basis for stream derivation.
constexpr std::uint64_t splitmix64_next(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a) {
    std::uint64_t s = seed;
    std::uint64_t h = splitmix64_next(s);
    s = h ^ a;
    return splitmix64_next(s);
}

inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    return derive_stream(derive_stream(seed, a), b);
}

class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // Uniform on [0,1) with 53 random bits.
    double uniform01();
    double uniform(double lo, double hi);

    // Unbiased integer in [0, bound); bound > 0.
    std::uint64_t uniform_int(std::uint64_t bound);

    // Standard normal (polar Marsaglia; caches the spare deviate).
    double normal();

    // Gamma(shape, 1) via Marsaglia-Tsang; shape > 0.
    double gamma(double shape);

    // Beta(a, b) from two gamma draws.
    double beta(double a, double b);

    // Symmetric Dirichlet(1) weights over out.size() slots.
    void dirichlet_uniform(std::span<double> out);

    bool bernoulli(double p) { return uniform01() < p; }

private:
    std::uint64_t s_[4];
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Bernoulli loss sample of length n, as a {0,1} byte vector.
std::vector<std::uint8_t> bernoulli_losses(Rng& rng, std::size_t n, double p);

}  // namespace riskcal
