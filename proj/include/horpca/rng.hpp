#pragma once

#include "horpca/tensor.hpp"

#include <cstdint>
#include <random>

namespace horpca::rng {

/// One splitmix64 step; also the seed-mixing primitive for derived streams.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic combine of a base seed with a stream tag.
std::uint64_t mix(std::uint64_t seed, std::uint64_t tag);

/// Seeded generator with portable distributions. The engine output is fully
/// specified by the standard; the distributions are implemented here so that
/// streams are identical across platforms and library versions.
class Engine {
  public:
    explicit Engine(std::uint64_t seed);

    std::uint64_t next_u64();
    /// Uniform on [0, 1).
    double uniform01();
    /// Uniform on (0, 1).
    double uniform_open();
    /// Uniform on (-m, m).
    double uniform_sym(double m);
    /// Standard normal via Box-Muller.
    double normal();
    /// Uniform integer in [0, n), unbiased.
    Index below(Index n);

  private:
    std::mt19937_64 gen_;
    double cached_normal_ = 0.0;
    bool has_cached_ = false;
};

/// m distinct values from [0, n), by partial Fisher-Yates, in draw order.
std::vector<Index> sample_without_replacement(Index n, Index m, Engine& eng);

}  // namespace horpca::rng
