#pragma once

#include "horpca/tensor.hpp"

namespace horpca {

/// Thin SVD m = u * diag(s) * v^T with s nonincreasing.
struct SvdResult {
    Matrix u;
    Vector s;
    Matrix v;
};

/// Thin SVD with a deterministic sign convention: in each left singular
/// vector the entry of largest magnitude is nonnegative (ties broken by the
/// lowest row index). Throws on non-finite input.
SvdResult thin_svd(const Matrix& m);

/// Singular value thresholding: U * diag(max(sigma - tau, 0)) * V^T.
Matrix svt(const Matrix& m, double tau);

/// SVT applied to the mode-i unfolding: fold(svt(unfold(x, mode), tau), mode).
DenseTensor svt_mode(const DenseTensor& x, int mode, double tau);

/// svt_mode plus the nuclear norm of the thresholded unfolding, which falls
/// out of the same SVD (used by the solvers for objective tracking).
struct SvtModeResult {
    DenseTensor x;
    double nuclear;
};
SvtModeResult svt_mode_with_norm(const DenseTensor& x, int mode, double tau);

/// Elementwise soft thresholding sign(x) * max(|x| - tau, 0).
DenseTensor shrink(const DenseTensor& x, double tau);
Vector shrink(const Vector& x, double tau);

/// Best rank-k approximation (Eckart-Young): keep the k largest singular
/// values. k = 0 gives the zero matrix.
Matrix rank_project(const Matrix& m, Index k);

/// Singular values below 1e-12 * sigma_max count as zero.
Index numeric_rank(const Vector& singular_values);

}  // namespace horpca
