#pragma once

#include "horpca/mask.hpp"
#include "horpca/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace horpca {

enum class Model {
    singleton,
    mixture,
    singleton_lagrangian,
    mixture_lagrangian,
    nonconvex,
    tucker,
};

std::string model_name(Model m);
Model model_from_name(const std::string& name);

/// Observed data B plus an optional observation set. When the mask is
/// present, unobserved entries of b are ignored (treated as zero).
struct Problem {
    DenseTensor b;
    std::optional<ObservationMask> mask;

    int order() const { return b.order(); }
};

/// Continuation schedule for the FISTA solvers: lambda_star starts at
/// lambda0 and decays by `factor` per iteration down to lambda_bar;
/// lambda1 = alpha * ratio * lambda_star throughout.
struct ContinuationPack {
    double lambda0 = 0.0;
    double lambda_bar = 0.0;
    double factor = 0.97;
    double ratio = 0.0;
    double alpha = 1.0;
};

/// Penalty decay for the rank-constrained solvers: mu starts at `initial`
/// and is multiplied by `factor` every `period` iterations, floored.
struct MuSchedule {
    double initial = 1.0;
    double factor = 0.9;
    int period = 10;
    double floor = 1e-4;
};

struct SolverConfig {
    Model model = Model::singleton;
    double lambda1 = 0.0;
    double lambda_star = 1.0;
    std::vector<double> mode_weights;  // empty = all ones
    double mu = 0.0;
    double eta = 0.0;  // mixture proximal step, in (0, 1/N)
    ContinuationPack continuation;
    std::vector<Index> target_ranks;
    MuSchedule mu_schedule;
    double tol_adal = 1e-3;
    double tol_fista = 1e-4;
    int max_iters = 500;

    /// Weight of mode i (1-based), honoring the all-ones default.
    double mode_weight(int mode) const;
};

enum class SolveStatus { converged, max_iters };

std::string status_name(SolveStatus s);

struct ResidualRecord {
    double primal = 0.0;
    double dual = 0.0;
    double objective = 0.0;
};

struct SolverResult {
    DenseTensor x;
    DenseTensor e;
    TensorArray components;     // final X_i
    TensorArray lambdas;        // final multipliers when the solver keeps them
    int iterations = 0;
    SolveStatus status = SolveStatus::max_iters;
    std::vector<ResidualRecord> residual_history;
    double final_mu = 0.0;      // last penalty value (scheduled solvers)
};

/// Working iterate set shared by the solvers; residuals() reads the
/// previous-block snapshots to form the dual residual.
struct SolverState {
    TensorArray xs;
    DenseTensor e;
    std::optional<DenseTensor> y;  // splitting variable (partial singleton family)
    TensorArray lambdas;
    DenseTensor gamma;             // observation-constraint multiplier, embedded
    double t = 1.0;                // FISTA momentum
    TensorArray ys;                // FISTA extrapolation point, X parts
    DenseTensor ys_e;              // FISTA extrapolation point, E part
    TensorArray xs_prev;
    DenseTensor e_prev;
    std::optional<DenseTensor> y_prev;
    int iter = 0;
    double mu = 0.0;
};

/// Relative (primal, dual) residuals of the current state under the
/// configured model. Primal is the constraint-violation stack over
/// max(1, ||B||); dual is the scaled inter-iteration change of the second
/// block (E, or Y for the split form; iterate change for FISTA).
std::pair<double, double> residuals(const SolverState& s, const Problem& p, const SolverConfig& c);

SolverResult solve_singleton(const Problem& p, const SolverConfig& c);
SolverResult solve_singleton_partial(const Problem& p, const SolverConfig& c);
SolverResult solve_mixture(const Problem& p, const SolverConfig& c);
SolverResult solve_lagrangian(const Problem& p, const SolverConfig& c);
SolverResult solve_nonconvex(const Problem& p, const SolverConfig& c);
SolverResult solve_tucker(const Problem& p, const SolverConfig& c);

/// Smooth coupling term of the Lagrangian objective,
/// 0.5 sum_i ||P(X_i + E - B)||^2 (singleton) or
/// 0.5 ||P(sum_i X_i + E - B)||^2 (mixture), and its gradient. This is the
/// exact quantity the FISTA solvers step on.
double lagrangian_smooth_value(const Problem& p, Model model, const TensorArray& xs,
                               const DenseTensor& e);
void lagrangian_smooth_gradient(const Problem& p, Model model, const TensorArray& xs,
                                const DenseTensor& e, TensorArray& gx, DenseTensor& ge);

/// Dispatch on c.model, routing the singleton family to the split form when
/// a mask is present.
SolverResult solve(const Problem& p, const SolverConfig& c);

/// Optimality certificate evaluated at a solver result.
/// Convex singleton: per-mode ||unfold(Lambda_i, i)||_2 / weight_i, the
/// complementarity gap |<Lambda_i, X_i> - w_i ||unfold(X_i, i)||_*|, the
/// worst violation of sum(Lambda) in lambda1 * subgradient(||E||_1), and the
/// constraint feasibility. Rank-constrained models: per-mode orthogonality
/// residuals ||L V_r|| and ||U_r^T L|| of the multiplier against the SVD
/// factors of X_i, and the shrinkage fixed-point gap of E.
struct KktCertificate {
    std::vector<double> spectral_norms;
    std::vector<double> nuclear_gaps;
    double e_fixed_point_gap = 0.0;
    double feasibility = 0.0;
};

KktCertificate kkt_certificate(const SolverResult& r, const Problem& p, const SolverConfig& c);

}  // namespace horpca
