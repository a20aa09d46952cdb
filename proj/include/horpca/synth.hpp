#pragma once

#include "horpca/rng.hpp"
#include "horpca/solver.hpp"

namespace horpca {

/// Ground-truth description: a rank-(r_1..r_N) tensor of the given size.
struct SynthSpec {
    Shape dims;
    std::vector<Index> ranks;
    std::uint64_t seed = 0;
};

/// Sparse corruption: a fraction rho_n of entries gets additive uniform
/// noise from (-magnitude, magnitude).
struct CorruptionSpec {
    double rho_n = 0.0;
    double magnitude = 1.0;
    std::uint64_t seed = 0;
};

/// Gaussian core multiplied by Haar-distributed orthonormal frames. The
/// output is checked to have exactly the requested multilinear ranks and
/// redrawn (up to 10 attempts) on the measure-zero failure.
DenseTensor gen_low_rank(const SynthSpec& spec);

/// Column-orthonormal frame from the QR of a Gaussian matrix with the
/// R-diagonal sign fix (Haar-distributed).
Matrix haar_orthonormal(Index rows, Index cols, rng::Engine& eng);

struct Corrupted {
    DenseTensor b;   // x + e0
    DenseTensor e0;  // planted sparse corruption
};

Corrupted corrupt(const DenseTensor& x, const CorruptionSpec& spec);

/// Same, but the corruption support is drawn from the observed set only.
Corrupted corrupt_within(const DenseTensor& x, const CorruptionSpec& spec,
                         const ObservationMask& mask);

/// Uniform random observation set of size round(rho_o * element count).
ObservationMask sample_mask(const Shape& shape, double rho_o, std::uint64_t seed);

/// ||x - x0|| / ||x0||.
double rel_error(const DenseTensor& x, const DenseTensor& x0);

/// Per-mode count of singular values above threshold * sigma_max.
std::vector<Index> estimate_rank(const DenseTensor& x, double threshold);

/// Tucker core and factors: U_i are the top-r_i left singular vectors of the
/// mode-i unfoldings, g = x x_1 U_1^T ... x_N U_N^T.
struct CoreDecomposition {
    DenseTensor core;
    std::vector<Matrix> factors;
};

CoreDecomposition core_tensor(const DenseTensor& x, const std::vector<Index>& ranks);

/// Complete config with the default parameter heuristics filled in:
/// lambda1 = alpha * lambda_star / sqrt(I_max) with alpha = 1 (singleton
/// family) or 1/N (mixture family), mu = 10 * std of the observed values,
/// eta = 1/(N+1), and the standard continuation and mu-schedule packs.
SolverConfig default_params(const Problem& p, Model model);

}  // namespace horpca
