#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace infodiff {

/// Seeded generator used by every stochastic routine in the library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double uniform01() { return std::uniform_real_distribution<double>(0.0, 1.0)(engine_); }

    /// Uniform integer in [0, n). n must be positive.
    std::size_t uniform_index(std::size_t n)
    {
        return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
    }

    /// One-point crossover position in [1, beta] (1-based, tail starts here).
    std::size_t crossover_point(std::size_t beta)
    {
        return std::uniform_int_distribution<std::size_t>(1, beta)(engine_);
    }

    bool bernoulli(double p) { return uniform01() < p; }

    std::mt19937_64& engine() { return engine_; }

private:
    std::mt19937_64 engine_;
};

/// The draws a diffusion step needs. Tests substitute scripted sources.
template <class R>
concept StepRandom = requires(R& r, std::size_t beta, double p) {
    { r.crossover_point(beta) } -> std::convertible_to<std::size_t>;
    { r.bernoulli(p) } -> std::convertible_to<bool>;
    { r.uniform01() } -> std::convertible_to<double>;
};

/// 64-bit FNV-1a; stable across platforms and runs.
constexpr std::uint64_t stable_hash(std::string_view text, std::uint64_t h = 0xcbf29ce484222325ULL)
{
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace infodiff
