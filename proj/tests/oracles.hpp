// Test-only reference implementations, kept independent of the library's
// solver and prox code paths (Eigen only).
#pragma once

#include "horpca/rng.hpp"
#include "horpca/tensor.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace oracles {

using horpca::Index;
using horpca::Matrix;
using horpca::Vector;

inline Matrix soft(const Matrix& x, double tau) {
    return x.array().sign() * (x.array().abs() - tau).max(0.0);
}

struct RpcaResult {
    Matrix x;
    Matrix e;
    int iterations = 0;
};

// Matrix robust PCA, min ||X||_* + lambda ||E||_1 s.t. X + E = B, by ADAL
// with the augmented-Lagrangian scaling 1/(2 mu) (multiplier step 1/mu).
inline RpcaResult matrix_rpca_adal(const Matrix& b, double lambda, double mu, double tol,
                                   int max_iters) {
    RpcaResult r;
    r.x = Matrix::Zero(b.rows(), b.cols());
    r.e = r.x;
    Matrix multiplier = r.x;
    const double nb = std::max(1.0, b.norm());
    for (int k = 0; k < max_iters; ++k) {
        Matrix target = b - r.e + mu * multiplier;
        Eigen::BDCSVD<Matrix> svd(target, Eigen::ComputeThinU | Eigen::ComputeThinV);
        Vector s = svd.singularValues();
        Index keep = 0;
        while (keep < s.size() && s[keep] > mu) ++keep;
        if (keep == 0)
            r.x.setZero();
        else
            r.x = svd.matrixU().leftCols(keep) *
                  Vector(s.head(keep).array() - mu).asDiagonal() *
                  svd.matrixV().leftCols(keep).transpose();
        Matrix e_old = r.e;
        r.e = soft(b - r.x + mu * multiplier, mu * lambda);
        multiplier -= (r.x + r.e - b) / mu;
        r.iterations = k + 1;
        const double primal = (r.x + r.e - b).norm() / nb;
        const double dual = (r.e - e_old).norm() / (mu * nb);
        if (std::max(primal, dual) < tol) break;
    }
    return r;
}

// Alternating projection onto the per-mode rank constraint sets, as a
// baseline fit for the Tucker-ADAL solver.
inline double alt_projection_tucker_fit(const horpca::DenseTensor& b,
                                        const std::vector<Index>& ranks, int sweeps = 50) {
    horpca::DenseTensor x = b;
    for (int sweep = 0; sweep < sweeps; ++sweep) {
        for (int mode = 1; mode <= b.order(); ++mode) {
            Matrix m = horpca::unfold(x, mode);
            Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
            const Index k = ranks[static_cast<std::size_t>(mode - 1)];
            Matrix trunc = svd.matrixU().leftCols(k) *
                           svd.singularValues().head(k).asDiagonal() *
                           svd.matrixV().leftCols(k).transpose();
            x = horpca::fold(trunc, mode, b.shape);
        }
    }
    return (x.values - b.values).norm() / b.values.norm();
}

inline horpca::DenseTensor random_tensor(const horpca::Shape& shape, std::uint64_t seed) {
    horpca::rng::Engine eng(seed);
    horpca::DenseTensor x(shape);
    for (Index i = 0; i < x.size(); ++i) x.values[i] = eng.normal();
    return x;
}

}  // namespace oracles
