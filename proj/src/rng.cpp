#include "horpca/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace horpca::rng {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t tag) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (tag + 1));
    std::uint64_t a = splitmix64(s);
    return splitmix64(s) ^ a;
}

Engine::Engine(std::uint64_t seed) : gen_(seed) {}

std::uint64_t Engine::next_u64() { return gen_(); }

double Engine::uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Engine::uniform_open() {
    return (static_cast<double>(next_u64() >> 12) + 0.5) * 0x1.0p-52;
}

double Engine::uniform_sym(double m) { return (2.0 * uniform_open() - 1.0) * m; }

double Engine::normal() {
    if (has_cached_) {
        has_cached_ = false;
        return cached_normal_;
    }
    const double u1 = uniform_open();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_normal_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

Index Engine::below(Index n) {
    if (n <= 0) throw std::invalid_argument("below: n must be positive");
    const std::uint64_t un = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % un;
    std::uint64_t x;
    do {
        x = next_u64();
    } while (x >= limit);
    return static_cast<Index>(x % un);
}

std::vector<Index> sample_without_replacement(Index n, Index m, Engine& eng) {
    if (m < 0 || m > n) throw std::invalid_argument("sample size out of range");
    std::vector<Index> pool(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<Index> out(static_cast<std::size_t>(m));
    for (Index k = 0; k < m; ++k) {
        const Index j = k + eng.below(n - k);
        std::swap(pool[static_cast<std::size_t>(k)], pool[static_cast<std::size_t>(j)]);
        out[static_cast<std::size_t>(k)] = pool[static_cast<std::size_t>(k)];
    }
    return out;
}

}  // namespace horpca::rng
