#include "horpca/prox.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <cmath>
#include <stdexcept>

namespace horpca {

namespace {

void fix_signs(Matrix& u, Matrix& v) {
    for (Index j = 0; j < u.cols(); ++j) {
        Index imax = 0;
        double amax = -1.0;
        for (Index i = 0; i < u.rows(); ++i) {
            const double a = std::abs(u(i, j));
            if (a > amax) {
                amax = a;
                imax = i;
            }
        }
        if (u(imax, j) < 0.0) {
            u.col(j) = -u.col(j);
            v.col(j) = -v.col(j);
        }
    }
}

SvdResult small_svd(const Matrix& m) {
    Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

}  // namespace

SvdResult thin_svd(const Matrix& m) {
    if (!m.allFinite()) throw std::invalid_argument("thin_svd: non-finite input");

    // Strongly rectangular inputs go through a QR of the short side first;
    // the SVD then runs on a k x k factor.
    SvdResult r;
    const Index rows = m.rows(), cols = m.cols();
    if (cols > 2 * rows) {
        Eigen::HouseholderQR<Matrix> qr(m.transpose());
        Matrix q = qr.householderQ() * Matrix::Identity(cols, rows);
        Matrix rt = qr.matrixQR().topRows(rows).triangularView<Eigen::Upper>();
        SvdResult inner = small_svd(Matrix(rt.transpose()));
        r.u = std::move(inner.u);
        r.s = std::move(inner.s);
        r.v = q * inner.v;
    } else if (rows > 2 * cols) {
        Eigen::HouseholderQR<Matrix> qr(m);
        Matrix q = qr.householderQ() * Matrix::Identity(rows, cols);
        Matrix rr = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
        SvdResult inner = small_svd(rr);
        r.u = q * inner.u;
        r.s = std::move(inner.s);
        r.v = std::move(inner.v);
    } else {
        r = small_svd(m);
    }
    fix_signs(r.u, r.v);
    return r;
}

Matrix svt(const Matrix& m, double tau) {
    if (tau < 0.0) throw std::invalid_argument("svt: negative threshold");
    if (tau == 0.0) return m;
    SvdResult r = thin_svd(m);
    Index keep = 0;
    while (keep < r.s.size() && r.s[keep] > tau) ++keep;
    if (keep == 0) return Matrix::Zero(m.rows(), m.cols());
    Vector sbar = r.s.head(keep).array() - tau;
    return r.u.leftCols(keep) * sbar.asDiagonal() * r.v.leftCols(keep).transpose();
}

DenseTensor svt_mode(const DenseTensor& x, int mode, double tau) {
    return svt_mode_with_norm(x, mode, tau).x;
}

SvtModeResult svt_mode_with_norm(const DenseTensor& x, int mode, double tau) {
    if (tau < 0.0) throw std::invalid_argument("svt: negative threshold");
    Matrix m = unfold(x, mode);
    if (tau == 0.0) {
        // Identity prox; the nuclear norm still needs the singular values.
        SvdResult r = thin_svd(m);
        return {x, r.s.sum()};
    }
    SvdResult r = thin_svd(m);
    Index keep = 0;
    while (keep < r.s.size() && r.s[keep] > tau) ++keep;
    if (keep == 0) return {DenseTensor(x.shape), 0.0};
    Vector sbar = r.s.head(keep).array() - tau;
    Matrix t = r.u.leftCols(keep) * sbar.asDiagonal() * r.v.leftCols(keep).transpose();
    return {fold(t, mode, x.shape), sbar.sum()};
}

DenseTensor shrink(const DenseTensor& x, double tau) {
    return DenseTensor(x.shape, shrink(x.values, tau));
}

Vector shrink(const Vector& x, double tau) {
    if (tau < 0.0) throw std::invalid_argument("shrink: negative threshold");
    return x.array().sign() * (x.array().abs() - tau).max(0.0);
}

Matrix rank_project(const Matrix& m, Index k) {
    if (k < 0 || k > std::min(m.rows(), m.cols()))
        throw std::invalid_argument("rank_project: rank out of range");
    if (k == 0) return Matrix::Zero(m.rows(), m.cols());
    SvdResult r = thin_svd(m);
    return r.u.leftCols(k) * r.s.head(k).asDiagonal() * r.v.leftCols(k).transpose();
}

Index numeric_rank(const Vector& singular_values) {
    if (singular_values.size() == 0) return 0;
    const double cutoff = 1e-12 * singular_values[0];
    Index rank = 0;
    while (rank < singular_values.size() && singular_values[rank] > cutoff) ++rank;
    return singular_values[0] == 0.0 ? 0 : rank;
}

}  // namespace horpca
