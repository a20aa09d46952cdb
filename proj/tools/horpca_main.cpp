// Command-line front end: synthesize, corrupt, mask, solve, inspect, sweep.

#include "horpca/io.hpp"
#include "horpca/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>

namespace {

using namespace horpca;

constexpr const char* kUsage =
    "usage: horpca <gen|corrupt|mask|solve|rank|core|sweep|info> [options] (--help for details)";

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check_ranks_arg(const std::vector<Index>& ranks, const Shape& dims) {
    if (static_cast<int>(ranks.size()) != dims.order())
        throw UsageError("--ranks length must match --dims");
    for (int i = 0; i < dims.order(); ++i)
        if (ranks[static_cast<std::size_t>(i)] < 1 || ranks[static_cast<std::size_t>(i)] > dims[i])
            throw UsageError("--ranks entries must lie in [1, dim]");
}

struct SolveArgs {
    std::string model;
    std::string in, mask, config, out_x, out_e, report;
    std::vector<double> mode_weights;
    std::vector<Index> target_ranks;
    std::optional<double> lambda1, lambda_star, mu, eta, tol_adal, tol_fista;
    std::optional<double> cont_lambda0, cont_lambda_bar, cont_factor, cont_ratio, cont_alpha;
    std::optional<double> mu_initial, mu_factor, mu_floor;
    std::optional<int> max_iters, mu_period;
};

int run_solve(const SolveArgs& a) {
    const Model model = model_from_code(a.model);
    if (a.model == "s-adp" && a.mode_weights.empty())
        throw UsageError("model s-adp needs --mode-weights");
    if ((a.model == "c" || a.model == "tucker") && a.target_ranks.empty() &&
        a.config.empty())
        throw UsageError("model " + a.model + " needs --ranks");

    Problem p;
    p.b = read_dtf(a.in);
    if (!a.mask.empty()) p.mask = read_dmk(a.mask);

    SolverConfig c = default_params(p, model);
    if (!a.config.empty()) {
        auto kv = parse_kv_file(a.config);
        kv.erase("model");  // the --model flag decides
        apply_config_kv(c, kv);
        c.model = model;
    }
    if (!a.mode_weights.empty()) c.mode_weights = a.mode_weights;
    if (!a.target_ranks.empty()) c.target_ranks = a.target_ranks;
    if (a.lambda1) c.lambda1 = *a.lambda1;
    if (a.lambda_star) c.lambda_star = *a.lambda_star;
    if (a.mu) c.mu = *a.mu;
    if (a.eta) c.eta = *a.eta;
    if (a.tol_adal) c.tol_adal = *a.tol_adal;
    if (a.tol_fista) c.tol_fista = *a.tol_fista;
    if (a.max_iters) c.max_iters = *a.max_iters;
    if (a.cont_lambda0) c.continuation.lambda0 = *a.cont_lambda0;
    if (a.cont_lambda_bar) c.continuation.lambda_bar = *a.cont_lambda_bar;
    if (a.cont_factor) c.continuation.factor = *a.cont_factor;
    if (a.cont_ratio) c.continuation.ratio = *a.cont_ratio;
    if (a.cont_alpha) c.continuation.alpha = *a.cont_alpha;
    if (a.mu_initial) c.mu_schedule.initial = *a.mu_initial;
    if (a.mu_factor) c.mu_schedule.factor = *a.mu_factor;
    if (a.mu_period) c.mu_schedule.period = *a.mu_period;
    if (a.mu_floor) c.mu_schedule.floor = *a.mu_floor;

    if ((model == Model::nonconvex || model == Model::tucker) && c.target_ranks.empty())
        throw UsageError("model " + a.model + " needs --ranks");

    const SolverResult r = solve(p, c);
    if (!a.out_x.empty()) write_dtf(a.out_x, r.x);
    if (!a.out_e.empty()) write_dtf(a.out_e, r.e);
    if (!a.report.empty()) write_residual_csv(a.report, r.residual_history);

    const double primal = r.residual_history.empty() ? 0.0 : r.residual_history.back().primal;
    std::printf("iters=%d status=%s primal=%.6g\n", r.iterations, status_name(r.status).c_str(), primal);
    return r.status == SolveStatus::converged ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"HoRPCA: robust recovery of low-Tucker-rank tensors from sparse gross corruption"};
    app.set_version_flag("--version", "1.0.0");
    app.require_subcommand(1);
    int exit_code = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random low-Tucker-rank tensor (.dtf)");
    std::vector<Index> gen_dims, gen_ranks;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--dims", gen_dims, "tensor extents, comma separated")->required()->delimiter(',');
    gen->add_option("--ranks", gen_ranks, "Tucker ranks, comma separated")->required()->delimiter(',');
    gen->add_option("--seed", gen_seed, "RNG seed");
    gen->add_option("--out", gen_out, "output .dtf path")->required();
    gen->callback([&] {
        Shape dims(gen_dims);
        check_ranks_arg(gen_ranks, dims);
        write_dtf(gen_out, gen_low_rank({dims, gen_ranks, gen_seed}));
    });

    // corrupt
    auto* corr = app.add_subcommand("corrupt", "add sparse uniform corruption to a tensor");
    std::string corr_in, corr_out, corr_out_e, corr_within;
    double corr_rho = 0.0, corr_mag = 1.0;
    std::uint64_t corr_seed = 0;
    corr->add_option("--in", corr_in, "input .dtf")->required();
    corr->add_option("--rho-n", corr_rho, "fraction of entries to corrupt")->required();
    corr->add_option("--magnitude", corr_mag, "corruption magnitude bound M");
    corr->add_option("--seed", corr_seed, "RNG seed");
    corr->add_option("--out", corr_out, "corrupted output .dtf")->required();
    corr->add_option("--out-e", corr_out_e, "also write the planted corruption tensor");
    corr->add_option("--within-mask", corr_within, "restrict the support to a .dmk observation set");
    corr->callback([&] {
        if (corr_rho < 0.0 || corr_rho > 1.0) throw UsageError("--rho-n must lie in [0, 1]");
        const DenseTensor x = read_dtf(corr_in);
        const CorruptionSpec spec{corr_rho, corr_mag, corr_seed};
        const Corrupted c = corr_within.empty() ? corrupt(x, spec)
                                                : corrupt_within(x, spec, read_dmk(corr_within));
        write_dtf(corr_out, c.b);
        if (!corr_out_e.empty()) write_dtf(corr_out_e, c.e0);
    });

    // mask
    auto* msk = app.add_subcommand("mask", "sample a random observation set (.dmk)");
    std::vector<Index> msk_dims;
    double msk_rho = 1.0;
    std::uint64_t msk_seed = 0;
    std::string msk_out;
    msk->add_option("--dims", msk_dims, "tensor extents")->required()->delimiter(',');
    msk->add_option("--rho-o", msk_rho, "fraction of entries observed")->required();
    msk->add_option("--seed", msk_seed, "RNG seed");
    msk->add_option("--out", msk_out, "output .dmk path")->required();
    msk->callback([&] {
        if (msk_rho < 0.0 || msk_rho > 1.0) throw UsageError("--rho-o must lie in [0, 1]");
        write_dmk(msk_out, sample_mask(Shape(msk_dims), msk_rho, msk_seed));
    });

    // solve
    auto* sol = app.add_subcommand("solve", "run a recovery solver");
    SolveArgs sa;
    sol->add_option("--model", sa.model, "s | s-adp | m | sp | mp | c | tucker")->required();
    sol->add_option("--in", sa.in, "observed tensor .dtf")->required();
    sol->add_option("--mask", sa.mask, "observation set .dmk (absent = full data)");
    sol->add_option("--config", sa.config, "key = value config file");
    sol->add_option("--out-x", sa.out_x, "write the recovered low-rank tensor");
    sol->add_option("--out-e", sa.out_e, "write the recovered sparse tensor");
    sol->add_option("--report", sa.report, "write the residual history CSV");
    sol->add_option("--mode-weights", sa.mode_weights, "per-mode nuclear weights")->delimiter(',');
    sol->add_option("--ranks,--target-ranks", sa.target_ranks, "target Tucker ranks (c, tucker)")->delimiter(',');
    auto opt = [&](const char* name, std::optional<double>& slot, const char* help) {
        sol->add_option(name, slot, help);
    };
    opt("--lambda1", sa.lambda1, "sparsity weight");
    opt("--lambda-star", sa.lambda_star, "nuclear weight scale");
    opt("--mu", sa.mu, "ADAL penalty");
    opt("--eta", sa.eta, "mixture proximal step");
    opt("--tol-adal", sa.tol_adal, "ADAL residual tolerance");
    opt("--tol-fista", sa.tol_fista, "FISTA stopping tolerance");
    opt("--continuation-lambda0", sa.cont_lambda0, "initial lambda_star");
    opt("--continuation-lambda-bar", sa.cont_lambda_bar, "final lambda_star");
    opt("--continuation-factor", sa.cont_factor, "per-iteration decay");
    opt("--continuation-ratio", sa.cont_ratio, "lambda1 / lambda_star ratio");
    opt("--continuation-alpha", sa.cont_alpha, "lambda1 heuristic scale");
    opt("--mu-initial", sa.mu_initial, "rank-constrained mu start");
    opt("--mu-factor", sa.mu_factor, "rank-constrained mu decay");
    opt("--mu-floor", sa.mu_floor, "rank-constrained mu floor");
    sol->add_option("--mu-period", sa.mu_period, "iterations between mu decays");
    sol->add_option("--max-iters", sa.max_iters, "iteration cap");
    sol->callback([&] { exit_code = run_solve(sa); });

    // rank
    auto* rnk = app.add_subcommand("rank", "estimate the Tucker rank by singular-value threshold");
    std::string rnk_in;
    double rnk_threshold = 0.05;
    rnk->add_option("--in", rnk_in, "input .dtf")->required();
    rnk->add_option("--threshold", rnk_threshold, "fraction of the top singular value");
    rnk->callback([&] {
        if (rnk_threshold <= 0.0 || rnk_threshold >= 1.0)
            throw UsageError("--threshold must lie in (0, 1)");
        std::printf("%s\n", format_index_list(estimate_rank(read_dtf(rnk_in), rnk_threshold)).c_str());
    });

    // core
    auto* cor = app.add_subcommand("core", "extract a Tucker core and factors");
    std::string core_in, core_out, core_factors;
    std::vector<Index> core_ranks;
    cor->add_option("--in", core_in, "input .dtf")->required();
    cor->add_option("--ranks", core_ranks, "core ranks")->required()->delimiter(',');
    cor->add_option("--out-core", core_out, "output .dtf for the core")->required();
    cor->add_option("--out-factors", core_factors, "prefix for per-mode factor .dtf files");
    cor->callback([&] {
        const DenseTensor x = read_dtf(core_in);
        const CoreDecomposition d = core_tensor(x, core_ranks);
        write_dtf(core_out, d.core);
        if (!core_factors.empty()) {
            for (std::size_t i = 0; i < d.factors.size(); ++i) {
                const Matrix& u = d.factors[i];
                DenseTensor t(Shape{u.rows(), u.cols()},
                              Eigen::Map<const Vector>(u.data(), u.size()));
                write_dtf(core_factors + std::to_string(i + 1) + ".dtf", t);
            }
        }
    });

    // info
    auto* inf = app.add_subcommand("info", "print dims, norms, and optional relative error");
    std::string info_in, info_ref;
    inf->add_option("input", info_in, "input .dtf")->required();
    inf->add_option("--ref", info_ref, "reference .dtf for rel_err");
    inf->callback([&] {
        const DenseTensor x = read_dtf(info_in);
        std::string line = "dims=" + format_index_list(x.shape.dims) +
                           " elements=" + std::to_string(x.size()) + " fro=" + fmt(fro_norm(x)) +
                           " l1=" + fmt(l1_norm(x));
        if (!info_ref.empty()) line += " rel_err=" + fmt(rel_error(x, read_dtf(info_ref)));
        std::printf("%s\n", line.c_str());
    });

    // sweep
    auto* swp = app.add_subcommand("sweep", "run a recovery experiment grid");
    std::string swp_spec, swp_out;
    int swp_jobs = 1;
    swp->add_option("--spec", swp_spec, "sweep spec file")->required();
    swp->add_option("--out", swp_out, "output CSV path")->required();
    swp->add_option("--jobs", swp_jobs, "parallel cells");
    swp->callback([&] {
        if (swp_jobs < 1) throw UsageError("--jobs must be >= 1");
        write_sweep_csv(swp_out, run_sweep(parse_sweep_file(swp_spec), swp_jobs));
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
        std::cerr << "error: " << e.what() << "\n" << kUsage << std::endl;
        return 2;
    } catch (const horpca::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n" << kUsage << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return 1;
    }
    return exit_code;
}
