#include "horpca/solver.hpp"

#include "horpca/prox.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace horpca {

namespace {

void check_finite(const DenseTensor& b) {
    if (!b.values.allFinite()) throw std::invalid_argument("observed data contains non-finite values");
}

void check_common(const SolverConfig& c) {
    if (c.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
    if (c.tol_adal <= 0.0 || c.tol_fista <= 0.0) throw std::invalid_argument("tolerances must be positive");
}

// Observed data with unobserved entries forced to zero.
DenseTensor effective_b(const Problem& p) {
    check_finite(p.b);
    if (!p.mask) return p.b;
    if (!(p.mask->shape == p.b.shape)) throw std::invalid_argument("mask shape does not match data");
    return keep_observed(p.b, *p.mask);
}

std::vector<double> resolve_weights(const SolverConfig& c, int n) {
    std::vector<double> w = c.mode_weights;
    if (w.empty()) w.assign(static_cast<std::size_t>(n), 1.0);
    if (static_cast<int>(w.size()) != n)
        throw std::invalid_argument("mode_weights length does not match tensor order");
    double sum = 0.0;
    for (double wi : w) {
        if (wi < 0.0) throw std::invalid_argument("mode weights must be nonnegative");
        sum += wi;
    }
    if (sum == 0.0) throw std::invalid_argument("mode weights must not be all zero");
    return w;
}

void check_ranks(const SolverConfig& c, const Shape& shape) {
    if (static_cast<int>(c.target_ranks.size()) != shape.order())
        throw std::invalid_argument("target_ranks length does not match tensor order");
    for (int i = 0; i < shape.order(); ++i) {
        const Index r = c.target_ranks[static_cast<std::size_t>(i)];
        if (r < 0 || r > shape[i]) throw std::invalid_argument("target rank exceeds mode dimension");
    }
    const MuSchedule& s = c.mu_schedule;
    if (s.initial <= 0.0 || s.factor <= 0.0 || s.factor > 1.0 || s.period < 1 || s.floor <= 0.0)
        throw std::invalid_argument("invalid mu schedule");
}

void check_continuation(const ContinuationPack& k) {
    if (!(k.lambda_bar > 0.0) || !(k.lambda0 >= k.lambda_bar))
        throw std::invalid_argument("continuation needs lambda0 >= lambda_bar > 0");
    if (!(k.factor > 0.0 && k.factor < 1.0))
        throw std::invalid_argument("continuation factor must lie in (0, 1)");
    if (!(k.ratio > 0.0) || !(k.alpha > 0.0))
        throw std::invalid_argument("continuation ratio and alpha must be positive");
}

double stack_norm(double sq) { return std::sqrt(std::max(sq, 0.0)); }

// Residual-curve stall: no movement in either residual across the window.
bool stalled(const std::vector<ResidualRecord>& h, int window = 30, double eps = 1e-8) {
    const std::size_t n = h.size();
    if (n < static_cast<std::size_t>(window) + 1) return false;
    const ResidualRecord& now = h[n - 1];
    const ResidualRecord& then = h[n - 1 - static_cast<std::size_t>(window)];
    return std::abs(now.primal - then.primal) < eps && std::abs(now.dual - then.dual) < eps;
}

}  // namespace

std::string model_name(Model m) {
    switch (m) {
        case Model::singleton: return "singleton";
        case Model::mixture: return "mixture";
        case Model::singleton_lagrangian: return "singleton-lagrangian";
        case Model::mixture_lagrangian: return "mixture-lagrangian";
        case Model::nonconvex: return "nonconvex";
        case Model::tucker: return "tucker";
    }
    return "?";
}

Model model_from_name(const std::string& name) {
    for (Model m : {Model::singleton, Model::mixture, Model::singleton_lagrangian,
                    Model::mixture_lagrangian, Model::nonconvex, Model::tucker})
        if (model_name(m) == name) return m;
    throw std::invalid_argument("unknown model: " + name);
}

std::string status_name(SolveStatus s) {
    return s == SolveStatus::converged ? "converged" : "max-iters";
}

double SolverConfig::mode_weight(int mode) const {
    if (mode_weights.empty()) return 1.0;
    return mode_weights[static_cast<std::size_t>(mode - 1)];
}

std::pair<double, double> residuals(const SolverState& s, const Problem& p, const SolverConfig& c) {
    const DenseTensor b = effective_b(p);
    const double nb = std::max(1.0, fro_norm(b));
    const int n = s.xs.count();
    const bool masked = p.mask.has_value();
    auto project = [&](const Vector& v) -> Vector {
        if (!masked) return v;
        Vector out = Vector::Zero(v.size());
        for (Index i : p.mask->indices) out[i] = v[i];
        return out;
    };

    switch (c.model) {
        case Model::singleton:
        case Model::nonconvex:
        case Model::tucker: {
            if (s.y) {
                double sq = 0.0;
                for (int i = 0; i < n; ++i) sq += (s.xs[i].values - s.y->values).squaredNorm();
                sq += project(s.y->values + s.e.values - b.values).squaredNorm();
                const double primal = stack_norm(sq) / nb;
                const double dual =
                    s.y_prev ? (s.y->values - s.y_prev->values).norm() / (s.mu * nb) : 0.0;
                return {primal, dual};
            }
            double sq = 0.0;
            for (int i = 0; i < n; ++i) sq += (s.xs[i].values + s.e.values - b.values).squaredNorm();
            const double primal = stack_norm(sq) / nb;
            const double dual = (s.e.values - s.e_prev.values).norm() / (s.mu * nb);
            return {primal, dual};
        }
        case Model::mixture: {
            Vector viol = s.xs[0].values;
            for (int i = 1; i < n; ++i) viol += s.xs[i].values;
            viol += s.e.values - b.values;
            const double primal = project(viol).norm() / nb;
            const double dual = (s.e.values - s.e_prev.values).norm() / (s.mu * nb);
            return {primal, dual};
        }
        case Model::singleton_lagrangian:
        case Model::mixture_lagrangian: {
            double sq = 0.0;
            if (c.model == Model::singleton_lagrangian) {
                for (int i = 0; i < n; ++i)
                    sq += project(s.xs[i].values + s.e.values - b.values).squaredNorm();
            } else {
                Vector viol = s.xs[0].values;
                for (int i = 1; i < n; ++i) viol += s.xs[i].values;
                viol += s.e.values - b.values;
                sq = project(viol).squaredNorm();
            }
            const double primal = stack_norm(sq) / nb;
            double change_sq = 0.0, prev_sq = 0.0;
            for (int i = 0; i < n; ++i) {
                change_sq += (s.xs[i].values - s.xs_prev[i].values).squaredNorm();
                prev_sq += s.xs_prev[i].values.squaredNorm();
            }
            change_sq += (s.e.values - s.e_prev.values).squaredNorm();
            prev_sq += s.e_prev.values.squaredNorm();
            const double dual = stack_norm(change_sq) / std::max(1.0, stack_norm(prev_sq));
            return {primal, dual};
        }
    }
    return {0.0, 0.0};
}

SolverResult solve_singleton(const Problem& p, const SolverConfig& c) {
    if (p.mask) throw std::invalid_argument("solve_singleton expects full observations");
    check_common(c);
    const DenseTensor b = effective_b(p);
    const int n = p.order();
    const std::vector<double> w = resolve_weights(c, n);
    if (c.lambda1 <= 0.0) throw std::invalid_argument("lambda1 must be positive");
    if (c.mu <= 0.0) throw std::invalid_argument("mu must be positive");
    const double mu = c.mu;

    SolverState s;
    s.xs = TensorArray::zeros(n, b.shape);
    s.e = DenseTensor(b.shape);
    s.lambdas = TensorArray::zeros(n, b.shape);
    s.e_prev = s.e;
    s.mu = mu;

    SolverResult out;
    std::vector<double> nuclear(static_cast<std::size_t>(n), 0.0);
    SolveStatus status = SolveStatus::max_iters;
    for (int k = 0; k < c.max_iters; ++k) {
        for (int i = 0; i < n; ++i) {
            DenseTensor z(b.shape, b.values + mu * s.lambdas[i].values - s.e.values);
            auto r = svt_mode_with_norm(z, i + 1, mu * w[static_cast<std::size_t>(i)]);
            s.xs[i] = std::move(r.x);
            nuclear[static_cast<std::size_t>(i)] = r.nuclear;
        }
        s.e_prev = s.e;
        Vector mean = Vector::Zero(b.values.size());
        for (int i = 0; i < n; ++i) mean += b.values + mu * s.lambdas[i].values - s.xs[i].values;
        mean /= static_cast<double>(n);
        s.e.values = shrink(mean, mu * c.lambda1 / n);
        for (int i = 0; i < n; ++i)
            s.lambdas[i].values -= (s.xs[i].values + s.e.values - b.values) / mu;
        s.iter = k + 1;
        auto [primal, dual] = residuals(s, p, c);
        double obj = c.lambda1 * l1_norm(s.e);
        for (int i = 0; i < n; ++i) obj += w[static_cast<std::size_t>(i)] * nuclear[static_cast<std::size_t>(i)];
        out.residual_history.push_back({primal, dual, obj});
        if (std::max(primal, dual) < c.tol_adal) {
            status = SolveStatus::converged;
            break;
        }
    }

    out.iterations = static_cast<int>(out.residual_history.size());
    out.status = status;
    out.x = DenseTensor(b.shape);
    for (int i = 0; i < n; ++i) out.x.values += s.xs[i].values;
    out.x.values /= static_cast<double>(n);
    out.e = std::move(s.e);
    out.components = std::move(s.xs);
    out.lambdas = std::move(s.lambdas);
    out.final_mu = mu;
    return out;
}

SolverResult solve_singleton_partial(const Problem& p, const SolverConfig& c) {
    if (!p.mask) throw std::invalid_argument("solve_singleton_partial expects a mask");
    check_common(c);
    const DenseTensor b = effective_b(p);
    const int n = p.order();
    const std::vector<double> w = resolve_weights(c, n);
    if (c.lambda1 <= 0.0) throw std::invalid_argument("lambda1 must be positive");
    if (c.mu <= 0.0) throw std::invalid_argument("mu must be positive");
    const double mu = c.mu;
    const Vector ind = p.mask->indicator();

    SolverState s;
    s.xs = TensorArray::zeros(n, b.shape);
    s.e = DenseTensor(b.shape);
    s.y = DenseTensor(b.shape);
    s.y_prev = DenseTensor(b.shape);
    s.lambdas = TensorArray::zeros(n, b.shape);
    s.gamma = DenseTensor(b.shape);
    s.e_prev = s.e;
    s.mu = mu;

    const Vector divisor = Vector::Constant(b.values.size(), static_cast<double>(n)) + ind;

    SolverResult out;
    std::vector<double> nuclear(static_cast<std::size_t>(n), 0.0);
    SolveStatus status = SolveStatus::max_iters;
    for (int k = 0; k < c.max_iters; ++k) {
        for (int i = 0; i < n; ++i) {
            DenseTensor z(b.shape, s.y->values + mu * s.lambdas[i].values);
            auto r = svt_mode_with_norm(z, i + 1, mu * w[static_cast<std::size_t>(i)]);
            s.xs[i] = std::move(r.x);
            nuclear[static_cast<std::size_t>(i)] = r.nuclear;
        }
        // b, gamma, e all live on the observed set already.
        s.e_prev = s.e;
        Vector d = b.values + mu * s.gamma.values - s.y->values.cwiseProduct(ind);
        s.e.values = shrink(d, mu * c.lambda1);

        s.y_prev = s.y;
        Vector numer = b.values + mu * s.gamma.values - s.e.values;
        for (int i = 0; i < n; ++i) numer += s.xs[i].values - mu * s.lambdas[i].values;
        s.y->values = numer.cwiseQuotient(divisor);

        for (int i = 0; i < n; ++i)
            s.lambdas[i].values -= (s.xs[i].values - s.y->values) / mu;
        s.gamma.values -= (s.y->values + s.e.values - b.values).cwiseProduct(ind) / mu;

        s.iter = k + 1;
        auto [primal, dual] = residuals(s, p, c);
        double obj = c.lambda1 * l1_norm(s.e);
        for (int i = 0; i < n; ++i) obj += w[static_cast<std::size_t>(i)] * nuclear[static_cast<std::size_t>(i)];
        out.residual_history.push_back({primal, dual, obj});
        if (std::max(primal, dual) < c.tol_adal) {
            status = SolveStatus::converged;
            break;
        }
    }

    out.iterations = static_cast<int>(out.residual_history.size());
    out.status = status;
    out.x = DenseTensor(b.shape);
    for (int i = 0; i < n; ++i) out.x.values += s.xs[i].values;
    out.x.values /= static_cast<double>(n);
    out.e = std::move(s.e);
    out.components = std::move(s.xs);
    out.lambdas = std::move(s.lambdas);
    out.final_mu = mu;
    return out;
}

SolverResult solve_mixture(const Problem& p, const SolverConfig& c) {
    check_common(c);
    const DenseTensor b = effective_b(p);
    const int n = p.order();
    if (!(c.eta > 0.0 && c.eta < 1.0 / n))
        throw std::invalid_argument("mixture proximal step eta must lie in (0, 1/N)");
    if (c.lambda1 <= 0.0) throw std::invalid_argument("lambda1 must be positive");
    if (c.mu <= 0.0) throw std::invalid_argument("mu must be positive");
    const double mu = c.mu;
    const bool masked = p.mask.has_value();
    Vector ind;
    if (masked) ind = p.mask->indicator();
    auto project = [&](Vector v) {
        if (masked) v = v.cwiseProduct(ind);
        return v;
    };

    SolverState s;
    s.xs = TensorArray::zeros(n, b.shape);
    s.e = DenseTensor(b.shape);
    s.lambdas = TensorArray::zeros(1, b.shape);
    s.e_prev = s.e;
    s.mu = mu;

    SolverResult out;
    std::vector<double> nuclear(static_cast<std::size_t>(n), 0.0);
    SolveStatus status = SolveStatus::max_iters;
    for (int k = 0; k < c.max_iters; ++k) {
        Vector sum = s.xs[0].values;
        for (int i = 1; i < n; ++i) sum += s.xs[i].values;
        const Vector grad = project(sum + s.e.values - b.values - mu * s.lambdas[0].values);
        for (int i = 0; i < n; ++i) {
            DenseTensor z(b.shape, s.xs[i].values - c.eta * grad);
            auto r = svt_mode_with_norm(z, i + 1, c.eta * mu);
            s.xs[i] = std::move(r.x);
            nuclear[static_cast<std::size_t>(i)] = r.nuclear;
        }
        sum = s.xs[0].values;
        for (int i = 1; i < n; ++i) sum += s.xs[i].values;
        s.e_prev = s.e;
        s.e.values = shrink(project(b.values + mu * s.lambdas[0].values - sum), mu * c.lambda1);
        s.lambdas[0].values -= project(sum + s.e.values - b.values) / mu;

        s.iter = k + 1;
        auto [primal, dual] = residuals(s, p, c);
        double obj = c.lambda1 * l1_norm(s.e);
        for (double v : nuclear) obj += v;
        out.residual_history.push_back({primal, dual, obj});
        if (std::max(primal, dual) < c.tol_adal) {
            status = SolveStatus::converged;
            break;
        }
    }

    out.iterations = static_cast<int>(out.residual_history.size());
    out.status = status;
    out.x = sum_components(s.xs);
    out.e = std::move(s.e);
    out.components = std::move(s.xs);
    out.lambdas = std::move(s.lambdas);
    out.final_mu = mu;
    return out;
}

double lagrangian_smooth_value(const Problem& p, Model model, const TensorArray& xs,
                               const DenseTensor& e) {
    const DenseTensor b = effective_b(p);
    const int n = xs.count();
    auto project = [&](Vector v) {
        if (p.mask) v = v.cwiseProduct(p.mask->indicator());
        return v;
    };
    if (model == Model::singleton_lagrangian || model == Model::singleton) {
        double sq = 0.0;
        for (int i = 0; i < n; ++i) sq += project(xs[i].values + e.values - b.values).squaredNorm();
        return 0.5 * sq;
    }
    Vector sum = xs[0].values;
    for (int i = 1; i < n; ++i) sum += xs[i].values;
    return 0.5 * project(sum + e.values - b.values).squaredNorm();
}

void lagrangian_smooth_gradient(const Problem& p, Model model, const TensorArray& xs,
                                const DenseTensor& e, TensorArray& gx, DenseTensor& ge) {
    const DenseTensor b = effective_b(p);
    const int n = xs.count();
    auto project = [&](Vector v) {
        if (p.mask) v = v.cwiseProduct(p.mask->indicator());
        return v;
    };
    gx = TensorArray::zeros(n, b.shape);
    ge = DenseTensor(b.shape);
    if (model == Model::singleton_lagrangian || model == Model::singleton) {
        for (int i = 0; i < n; ++i) {
            gx[i].values = project(xs[i].values + e.values - b.values);
            ge.values += gx[i].values;
        }
        return;
    }
    Vector sum = xs[0].values;
    for (int i = 1; i < n; ++i) sum += xs[i].values;
    ge.values = project(sum + e.values - b.values);
    for (int i = 0; i < n; ++i) gx[i].values = ge.values;
}

SolverResult solve_lagrangian(const Problem& p, const SolverConfig& c) {
    if (c.model != Model::singleton_lagrangian && c.model != Model::mixture_lagrangian)
        throw std::invalid_argument("solve_lagrangian requires a lagrangian model");
    check_common(c);
    check_continuation(c.continuation);
    const DenseTensor b = effective_b(p);
    const int n = p.order();
    const bool single = c.model == Model::singleton_lagrangian;
    const double step = 1.0 / (n + 1);

    SolverState s;
    s.xs = TensorArray::zeros(n, b.shape);
    s.e = DenseTensor(b.shape);
    s.ys = s.xs;
    s.ys_e = s.e;
    s.xs_prev = s.xs;
    s.e_prev = s.e;
    s.t = 1.0;
    s.mu = step;

    double lambda_star = c.continuation.lambda0;

    SolverResult out;
    std::vector<double> nuclear(static_cast<std::size_t>(n), 0.0);
    SolveStatus status = SolveStatus::max_iters;
    for (int k = 0; k < c.max_iters; ++k) {
        const double lambda1 = c.continuation.alpha * c.continuation.ratio * lambda_star;

        // Gradient step on the smooth coupling at the extrapolation point.
        TensorArray gx;
        DenseTensor ge;
        lagrangian_smooth_gradient(p, c.model, s.ys, s.ys_e, gx, ge);

        s.xs_prev = s.xs;
        s.e_prev = s.e;
        for (int i = 0; i < n; ++i) {
            DenseTensor z(b.shape, s.ys[i].values - step * gx[i].values);
            auto r = svt_mode_with_norm(z, i + 1, step * lambda_star);
            s.xs[i] = std::move(r.x);
            nuclear[static_cast<std::size_t>(i)] = r.nuclear;
        }
        s.e.values = shrink(Vector(s.ys_e.values - step * ge.values), step * lambda1);

        const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * s.t * s.t));
        const double beta = (s.t - 1.0) / t_next;
        for (int i = 0; i < n; ++i)
            s.ys[i].values = s.xs[i].values + beta * (s.xs[i].values - s.xs_prev[i].values);
        s.ys_e.values = s.e.values + beta * (s.e.values - s.e_prev.values);
        s.t = t_next;

        s.iter = k + 1;
        auto [primal, change] = residuals(s, p, c);
        double obj = lagrangian_smooth_value(p, c.model, s.xs, s.e) + lambda1 * l1_norm(s.e);
        for (double v : nuclear) obj += lambda_star * v;
        out.residual_history.push_back({primal, change, obj});
        if (primal < c.tol_fista && change < c.tol_fista) {
            status = SolveStatus::converged;
            break;
        }
        lambda_star = std::max(c.continuation.factor * lambda_star, c.continuation.lambda_bar);
    }

    out.iterations = static_cast<int>(out.residual_history.size());
    out.status = status;
    out.x = DenseTensor(b.shape);
    if (single) {
        for (int i = 0; i < n; ++i) out.x.values += s.xs[i].values;
        out.x.values /= static_cast<double>(n);
    } else {
        for (int i = 0; i < n; ++i) out.x.values += s.xs[i].values;
    }
    out.e = std::move(s.e);
    out.components = std::move(s.xs);
    out.final_mu = step;
    return out;
}

namespace {

// Shared body of the rank-constrained solvers; `tucker` switches the E
// update from shrinkage to the quadratic solution.
SolverResult solve_rank_constrained(const Problem& p, const SolverConfig& c, bool tucker) {
    check_common(c);
    const DenseTensor b = effective_b(p);
    const int n = p.order();
    check_ranks(c, b.shape);
    const MuSchedule& sched = c.mu_schedule;
    const bool masked = p.mask.has_value();

    SolverState s;
    s.xs = TensorArray::zeros(n, b.shape);
    s.e = DenseTensor(b.shape);
    s.lambdas = TensorArray::zeros(n, b.shape);
    s.e_prev = s.e;
    s.mu = sched.initial;

    Vector ind, divisor;
    if (masked) {
        s.y = DenseTensor(b.shape);
        s.y_prev = DenseTensor(b.shape);
        s.gamma = DenseTensor(b.shape);
        ind = p.mask->indicator();
        divisor = Vector::Constant(b.values.size(), static_cast<double>(n)) + ind;
    }

    SolverResult out;
    SolveStatus status = SolveStatus::max_iters;
    for (int k = 0; k < c.max_iters; ++k) {
        const double mu = s.mu;
        for (int i = 0; i < n; ++i) {
            const Vector base = masked ? Vector(s.y->values + mu * s.lambdas[i].values)
                                       : Vector(b.values + mu * s.lambdas[i].values - s.e.values);
            DenseTensor z(b.shape, base);
            s.xs[i] = fold(rank_project(unfold(z, i + 1), c.target_ranks[static_cast<std::size_t>(i)]),
                           i + 1, b.shape);
        }

        s.e_prev = s.e;
        if (masked) {
            // tucker never reaches here (full data required)
            Vector d = b.values + mu * s.gamma.values - s.y->values.cwiseProduct(ind);
            s.e.values = shrink(d, mu);
            s.y_prev = s.y;
            Vector numer = b.values + mu * s.gamma.values - s.e.values;
            for (int i = 0; i < n; ++i) numer += s.xs[i].values - mu * s.lambdas[i].values;
            s.y->values = numer.cwiseQuotient(divisor);
            for (int i = 0; i < n; ++i)
                s.lambdas[i].values -= (s.xs[i].values - s.y->values) / mu;
            s.gamma.values -= (s.y->values + s.e.values - b.values).cwiseProduct(ind) / mu;
        } else {
            Vector sum = Vector::Zero(b.values.size());
            for (int i = 0; i < n; ++i) sum += b.values + mu * s.lambdas[i].values - s.xs[i].values;
            if (tucker)
                s.e.values = sum / (n + 2.0 * mu);
            else
                s.e.values = shrink(Vector(sum / n), mu / n);
            for (int i = 0; i < n; ++i)
                s.lambdas[i].values -= (s.xs[i].values + s.e.values - b.values) / mu;
        }

        s.iter = k + 1;
        auto [primal, dual] = residuals(s, p, c);
        const double obj = tucker ? s.e.values.squaredNorm() : l1_norm(s.e);
        out.residual_history.push_back({primal, dual, obj});
        if (std::max(primal, dual) < c.tol_adal) {
            status = SolveStatus::converged;
            break;
        }
        if (stalled(out.residual_history)) break;
        if ((k + 1) % sched.period == 0) s.mu = std::max(s.mu * sched.factor, sched.floor);
    }

    out.iterations = static_cast<int>(out.residual_history.size());
    out.status = status;
    out.x = DenseTensor(b.shape);
    for (int i = 0; i < n; ++i) out.x.values += s.xs[i].values;
    out.x.values /= static_cast<double>(n);
    out.e = std::move(s.e);
    out.components = std::move(s.xs);
    out.lambdas = std::move(s.lambdas);
    out.final_mu = s.mu;
    return out;
}

}  // namespace

SolverResult solve_nonconvex(const Problem& p, const SolverConfig& c) {
    return solve_rank_constrained(p, c, false);
}

SolverResult solve_tucker(const Problem& p, const SolverConfig& c) {
    if (p.mask) throw std::invalid_argument("solve_tucker expects full observations");
    return solve_rank_constrained(p, c, true);
}

SolverResult solve(const Problem& p, const SolverConfig& c) {
    switch (c.model) {
        case Model::singleton:
            return p.mask ? solve_singleton_partial(p, c) : solve_singleton(p, c);
        case Model::mixture:
            return solve_mixture(p, c);
        case Model::singleton_lagrangian:
        case Model::mixture_lagrangian:
            return solve_lagrangian(p, c);
        case Model::nonconvex:
            return solve_nonconvex(p, c);
        case Model::tucker:
            return solve_tucker(p, c);
    }
    throw std::invalid_argument("unknown model");
}

}  // namespace horpca
