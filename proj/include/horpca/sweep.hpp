#pragma once

#include "horpca/synth.hpp"

#include <map>
#include <string>

namespace horpca {

/// Grid of synthetic recovery experiments. Models use the CLI short codes
/// (s, s-adp, m, sp, mp, c, tucker); `overrides` holds solver-config keys
/// applied on top of the defaults for every cell.
struct SweepSpec {
    std::vector<std::string> models;
    Shape dims;
    std::vector<std::vector<Index>> ranks_grid;
    std::vector<double> rho_o_grid;
    std::vector<double> rho_n_grid;
    std::vector<double> magnitude_grid;
    std::vector<std::uint64_t> seeds;
    std::map<std::string, std::string> overrides;
    bool corrupt_within_mask = false;
};

struct SweepRecord {
    std::string model;
    double rho_o = 1.0;
    double rho_n = 0.0;
    double magnitude = 1.0;
    std::vector<Index> ranks;
    std::uint64_t seed = 0;
    double rel_err = 0.0;
    int iterations = 0;
    std::string status;
    double wall_ms = 0.0;
};

/// Derived per-stage seeds for one sweep cell. Ground truth depends only on
/// the cell seed; corruption additionally on (rho_n, M); the mask on rho_o,
/// so an observation-fraction grid reuses one corrupted tensor.
struct CellSeeds {
    std::uint64_t gen = 0;
    std::uint64_t corrupt = 0;
    std::uint64_t mask = 0;
};

CellSeeds cell_seeds(std::uint64_t seed, double rho_n, double magnitude, double rho_o);

/// CLI short code -> model (s and s-adp both map to the singleton family).
Model model_from_code(const std::string& code);

/// Exact-recovery convention for phase diagrams.
inline bool sweep_success(const SweepRecord& r) { return r.rel_err <= 0.01; }

/// Run every grid cell; failures are recorded in `status`, never thrown.
/// Records come back in deterministic grid order regardless of `jobs`.
std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int jobs = 1);

/// Parse the sweep key-value format (grid keys plus config overrides).
SweepSpec parse_sweep_text(const std::string& text);
SweepSpec parse_sweep_file(const std::string& path);

void write_sweep_csv(const std::string& path, const std::vector<SweepRecord>& records);

}  // namespace horpca
