#include "horpca/synth.hpp"

#include "horpca/prox.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace horpca {

namespace {

Index round_count(double fraction, Index n) {
    return static_cast<Index>(std::floor(fraction * static_cast<double>(n) + 0.5));
}

bool has_exact_ranks(const DenseTensor& x, const std::vector<Index>& ranks) {
    for (int i = 0; i < x.order(); ++i) {
        const Vector s = thin_svd(unfold(x, i + 1)).s;
        if (s.size() == 0 || s[0] == 0.0) return false;
        const double cutoff = 1e-8 * s[0];
        Index rank = 0;
        while (rank < s.size() && s[rank] > cutoff) ++rank;
        if (rank != ranks[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

}  // namespace

Matrix haar_orthonormal(Index rows, Index cols, rng::Engine& eng) {
    Matrix g(rows, cols);
    for (Index j = 0; j < cols; ++j)
        for (Index i = 0; i < rows; ++i) g(i, j) = eng.normal();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
    for (Index j = 0; j < cols; ++j)
        if (qr.matrixQR()(j, j) < 0.0) q.col(j) = -q.col(j);
    return q;
}

DenseTensor gen_low_rank(const SynthSpec& spec) {
    const int n = spec.dims.order();
    if (static_cast<int>(spec.ranks.size()) != n)
        throw std::invalid_argument("rank tuple length does not match dims");
    for (int i = 0; i < n; ++i) {
        const Index r = spec.ranks[static_cast<std::size_t>(i)];
        if (r < 1 || r > spec.dims[i]) throw std::invalid_argument("ranks must lie in [1, dim]");
    }

    rng::Engine eng(spec.seed);
    for (int attempt = 0; attempt < 10; ++attempt) {
        DenseTensor core{Shape(spec.ranks)};
        for (Index j = 0; j < core.size(); ++j) core.values[j] = eng.normal();
        DenseTensor x = std::move(core);
        for (int i = 0; i < n; ++i)
            x = mode_multiply(x, haar_orthonormal(spec.dims[i], spec.ranks[static_cast<std::size_t>(i)], eng), i + 1);
        if (has_exact_ranks(x, spec.ranks)) return x;
    }
    throw std::runtime_error("gen_low_rank: could not realize the requested ranks");
}

namespace {

Corrupted corrupt_on(const DenseTensor& x, const CorruptionSpec& spec,
                     const std::vector<Index>* support_pool) {
    if (spec.rho_n < 0.0 || spec.rho_n > 1.0)
        throw std::invalid_argument("rho_n must lie in [0, 1]");
    if (spec.magnitude <= 0.0) throw std::invalid_argument("magnitude must be positive");

    const Index n = x.size();
    const Index count = round_count(spec.rho_n, n);
    Corrupted out{x, DenseTensor(x.shape)};
    if (count == 0) return out;

    rng::Engine eng(spec.seed);
    std::vector<Index> support;
    if (support_pool) {
        const Index pool = static_cast<Index>(support_pool->size());
        if (count > pool)
            throw std::invalid_argument("corruption count exceeds the observed set");
        for (Index k : rng::sample_without_replacement(pool, count, eng))
            support.push_back((*support_pool)[static_cast<std::size_t>(k)]);
    } else {
        support = rng::sample_without_replacement(n, count, eng);
    }
    for (Index j : support) {
        const double v = eng.uniform_sym(spec.magnitude);
        out.e0.values[j] = v;
        out.b.values[j] += v;
    }
    return out;
}

}  // namespace

Corrupted corrupt(const DenseTensor& x, const CorruptionSpec& spec) {
    return corrupt_on(x, spec, nullptr);
}

Corrupted corrupt_within(const DenseTensor& x, const CorruptionSpec& spec,
                         const ObservationMask& mask) {
    if (!(mask.shape == x.shape)) throw std::invalid_argument("mask shape does not match tensor");
    return corrupt_on(x, spec, &mask.indices);
}

ObservationMask sample_mask(const Shape& shape, double rho_o, std::uint64_t seed) {
    if (rho_o < 0.0 || rho_o > 1.0) throw std::invalid_argument("rho_o must lie in [0, 1]");
    const Index n = shape.count();
    const Index count = round_count(rho_o, n);
    rng::Engine eng(seed);
    std::vector<Index> idx = rng::sample_without_replacement(n, count, eng);
    std::sort(idx.begin(), idx.end());
    return ObservationMask(shape, std::move(idx));
}

double rel_error(const DenseTensor& x, const DenseTensor& x0) {
    if (!(x.shape == x0.shape)) throw std::invalid_argument("rel_error requires matching shapes");
    const double nx0 = fro_norm(x0);
    if (nx0 == 0.0) throw std::invalid_argument("rel_error: zero ground truth");
    return (x.values - x0.values).norm() / nx0;
}

std::vector<Index> estimate_rank(const DenseTensor& x, double threshold) {
    if (threshold <= 0.0 || threshold >= 1.0) throw std::invalid_argument("threshold must lie in (0, 1)");
    std::vector<Index> ranks(static_cast<std::size_t>(x.order()), 0);
    for (int i = 0; i < x.order(); ++i) {
        const Vector s = thin_svd(unfold(x, i + 1)).s;
        if (s.size() == 0 || s[0] == 0.0) continue;
        const double cutoff = threshold * s[0];
        Index r = 0;
        while (r < s.size() && s[r] > cutoff) ++r;
        ranks[static_cast<std::size_t>(i)] = r;
    }
    return ranks;
}

CoreDecomposition core_tensor(const DenseTensor& x, const std::vector<Index>& ranks) {
    const int n = x.order();
    if (static_cast<int>(ranks.size()) != n)
        throw std::invalid_argument("rank tuple length does not match tensor order");
    for (int i = 0; i < n; ++i)
        if (ranks[static_cast<std::size_t>(i)] < 1 || ranks[static_cast<std::size_t>(i)] > x.shape[i])
            throw std::invalid_argument("core rank exceeds mode dimension");

    CoreDecomposition out;
    out.factors.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const SvdResult svd = thin_svd(unfold(x, i + 1));
        out.factors.push_back(svd.u.leftCols(ranks[static_cast<std::size_t>(i)]));
    }
    out.core = x;
    for (int i = 0; i < n; ++i)
        out.core = mode_multiply(out.core, Matrix(out.factors[static_cast<std::size_t>(i)].transpose()), i + 1);
    return out;
}

SolverConfig default_params(const Problem& p, Model model) {
    const int n = p.order();
    const Index i_max = *std::max_element(p.b.shape.dims.begin(), p.b.shape.dims.end());
    const bool mixture_family = model == Model::mixture || model == Model::mixture_lagrangian;

    SolverConfig c;
    c.model = model;
    c.lambda_star = 1.0;
    c.continuation.alpha = mixture_family ? 1.0 / n : 1.0;
    c.continuation.ratio = 1.0 / std::sqrt(static_cast<double>(i_max));
    c.lambda1 = c.continuation.alpha * c.lambda_star * c.continuation.ratio;

    // mu = 10 * population std of the observed values, floored for
    // degenerate (constant) data.
    Vector observed = p.mask ? mask_project(p.b, *p.mask) : p.b.values;
    double sd = 0.0;
    if (observed.size() > 0) {
        const double mean = observed.mean();
        sd = std::sqrt((observed.array() - mean).square().sum() / static_cast<double>(observed.size()));
    }
    c.mu = std::max(10.0 * sd, 1e-6);

    c.eta = 1.0 / (n + 1);

    const double nb = observed.norm();
    c.continuation.lambda0 = std::max(0.99 * nb, 1e-12);
    c.continuation.lambda_bar = 1e-5 * c.continuation.lambda0;
    c.continuation.factor = 0.97;

    c.mu_schedule = MuSchedule{};
    c.tol_adal = 1e-3;
    c.tol_fista = 1e-4;
    c.max_iters = 500;
    return c;
}

}  // namespace horpca
