#include "horpca/prox.hpp"
#include "horpca/solver.hpp"

#include <cmath>
#include <stdexcept>

namespace horpca {

namespace {

KktCertificate convex_certificate(const SolverResult& r, const DenseTensor& b, const SolverConfig& c) {
    const int n = b.order();
    KktCertificate cert;
    cert.spectral_norms.resize(static_cast<std::size_t>(n));
    cert.nuclear_gaps.resize(static_cast<std::size_t>(n));

    Vector lambda_sum = Vector::Zero(b.values.size());
    double feas = 0.0;
    const double nb = std::max(1.0, fro_norm(b));
    for (int i = 0; i < n; ++i) {
        const DenseTensor& lam = r.lambdas[i];
        const DenseTensor& xi = r.components[i];
        const double w = c.mode_weight(i + 1);
        const double spectral = thin_svd(unfold(lam, i + 1)).s[0];
        cert.spectral_norms[static_cast<std::size_t>(i)] = w > 0.0 ? spectral / w : spectral;
        const double nuc = thin_svd(unfold(xi, i + 1)).s.sum();
        cert.nuclear_gaps[static_cast<std::size_t>(i)] = std::abs(inner(lam, xi) - w * nuc);
        lambda_sum += lam.values;
        feas = std::max(feas, (xi.values + r.e.values - b.values).norm() / nb);
    }
    cert.feasibility = feas;

    // sum(Lambda_i) must be a lambda1-scaled subgradient of ||E||_1.
    double gap = 0.0;
    for (Index j = 0; j < b.values.size(); ++j) {
        const double ej = r.e.values[j];
        const double lj = lambda_sum[j];
        if (ej != 0.0)
            gap = std::max(gap, std::abs(lj - c.lambda1 * (ej > 0.0 ? 1.0 : -1.0)));
        else
            gap = std::max(gap, std::max(std::abs(lj) - c.lambda1, 0.0));
    }
    cert.e_fixed_point_gap = gap;
    return cert;
}

KktCertificate rank_certificate(const SolverResult& r, const DenseTensor& b) {
    const int n = b.order();
    if (r.final_mu <= 0.0) throw std::invalid_argument("certificate needs the final penalty value");
    KktCertificate cert;
    cert.spectral_norms.resize(static_cast<std::size_t>(n));
    cert.nuclear_gaps.resize(static_cast<std::size_t>(n));

    double feas = 0.0;
    const double nb = std::max(1.0, fro_norm(b));
    Vector sum = Vector::Zero(b.values.size());
    for (int i = 0; i < n; ++i) {
        const Matrix lu = unfold(r.lambdas[i], i + 1);
        const double nl = std::max(1.0, lu.norm());
        const SvdResult svd = thin_svd(unfold(r.components[i], i + 1));
        const Index rank = numeric_rank(svd.s);
        if (rank == 0) {
            // Zero component: the orthogonality conditions are vacuous.
            cert.spectral_norms[static_cast<std::size_t>(i)] = 0.0;
            cert.nuclear_gaps[static_cast<std::size_t>(i)] = 0.0;
        } else {
            cert.spectral_norms[static_cast<std::size_t>(i)] = (lu * svd.v.leftCols(rank)).norm() / nl;
            cert.nuclear_gaps[static_cast<std::size_t>(i)] = (svd.u.leftCols(rank).transpose() * lu).norm() / nl;
        }
        sum += b.values + r.final_mu * r.lambdas[i].values - r.components[i].values;
        feas = std::max(feas, (r.components[i].values + r.e.values - b.values).norm() / nb);
    }
    cert.feasibility = feas;
    const Vector fixed_point = shrink(sum, r.final_mu) / static_cast<double>(n);
    cert.e_fixed_point_gap = (r.e.values - fixed_point).norm() / std::max(1.0, r.e.values.norm());
    return cert;
}

}  // namespace

KktCertificate kkt_certificate(const SolverResult& r, const Problem& p, const SolverConfig& c) {
    if (r.lambdas.empty()) throw std::invalid_argument("kkt_certificate: multipliers absent");
    if (p.mask && !p.mask->is_full())
        throw std::invalid_argument("kkt_certificate: defined for full observations");
    if (static_cast<int>(r.lambdas.count()) != p.order() || r.components.count() != p.order())
        throw std::invalid_argument("kkt_certificate: per-mode multipliers required");

    switch (c.model) {
        case Model::singleton:
            return convex_certificate(r, p.b, c);
        case Model::nonconvex:
        case Model::tucker:
            return rank_certificate(r, p.b);
        default:
            throw std::invalid_argument("kkt_certificate: supported for singleton and rank-constrained results");
    }
}

}  // namespace horpca
