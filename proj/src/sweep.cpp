#include "horpca/sweep.hpp"

#include "horpca/io.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <thread>

namespace horpca {

namespace {

std::uint64_t bits(double v) { return std::bit_cast<std::uint64_t>(v); }

constexpr std::uint64_t kTagGen = 0x67656e00;      // "gen"
constexpr std::uint64_t kTagCorrupt = 0x636f7200;  // "cor"
constexpr std::uint64_t kTagMask = 0x6d736b00;     // "msk"

struct Cell {
    std::string model;
    std::vector<Index> ranks;
    double rho_o, rho_n, magnitude;
    std::uint64_t seed;
};

}  // namespace

CellSeeds cell_seeds(std::uint64_t seed, double rho_n, double magnitude, double rho_o) {
    CellSeeds s;
    s.gen = rng::mix(seed, kTagGen);
    s.corrupt = rng::mix(rng::mix(seed, kTagCorrupt), bits(rho_n) ^ bits(magnitude));
    s.mask = rng::mix(rng::mix(seed, kTagMask), bits(rho_o));
    return s;
}

Model model_from_code(const std::string& code) {
    if (code == "s" || code == "s-adp") return Model::singleton;
    if (code == "m") return Model::mixture;
    if (code == "sp") return Model::singleton_lagrangian;
    if (code == "mp") return Model::mixture_lagrangian;
    if (code == "c") return Model::nonconvex;
    if (code == "tucker") return Model::tucker;
    throw UsageError("unknown model code: " + code);
}

namespace {

SweepRecord run_cell(const SweepSpec& spec, const Cell& cell) {
    SweepRecord rec;
    rec.model = cell.model;
    rec.rho_o = cell.rho_o;
    rec.rho_n = cell.rho_n;
    rec.magnitude = cell.magnitude;
    rec.ranks = cell.ranks;
    rec.seed = cell.seed;

    const auto t0 = std::chrono::steady_clock::now();
    try {
        const CellSeeds seeds = cell_seeds(cell.seed, cell.rho_n, cell.magnitude, cell.rho_o);
        const DenseTensor x0 = gen_low_rank({spec.dims, cell.ranks, seeds.gen});

        std::optional<ObservationMask> mask;
        if (cell.rho_o < 1.0) mask = sample_mask(spec.dims, cell.rho_o, seeds.mask);

        const CorruptionSpec cs{cell.rho_n, cell.magnitude, seeds.corrupt};
        const Corrupted noisy = (spec.corrupt_within_mask && mask)
                                    ? corrupt_within(x0, cs, *mask)
                                    : corrupt(x0, cs);

        Problem p{noisy.b, mask};
        SolverConfig c = default_params(p, model_from_code(cell.model));
        c.target_ranks = cell.ranks;
        apply_config_kv(c, spec.overrides);

        const SolverResult result = solve(p, c);
        rec.rel_err = rel_error(result.x, x0);
        rec.iterations = result.iterations;
        rec.status = status_name(result.status);
    } catch (const std::exception& e) {
        rec.rel_err = std::numeric_limits<double>::quiet_NaN();
        rec.iterations = 0;
        rec.status = std::string("error: ") + e.what();
    }
    rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

}  // namespace

std::vector<SweepRecord> run_sweep(const SweepSpec& spec, int jobs) {
    std::vector<Cell> cells;
    for (const auto& model : spec.models)
        for (const auto& ranks : spec.ranks_grid)
            for (double rho_o : spec.rho_o_grid)
                for (double rho_n : spec.rho_n_grid)
                    for (double m : spec.magnitude_grid)
                        for (std::uint64_t seed : spec.seeds)
                            cells.push_back({model, ranks, rho_o, rho_n, m, seed});

    std::vector<SweepRecord> records(cells.size());
    if (jobs <= 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) records[i] = run_cell(spec, cells[i]);
        return records;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= cells.size()) return;
            records[i] = run_cell(spec, cells[i]);
        }
    };
    std::vector<std::thread> pool;
    const int count = std::min<int>(jobs, static_cast<int>(cells.size()));
    pool.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return records;
}

SweepSpec parse_sweep_text(const std::string& text) {
    auto kv = parse_kv_text(text);
    SweepSpec spec;

    auto take = [&](const char* key) -> std::optional<std::string> {
        auto it = kv.find(key);
        if (it == kv.end()) return std::nullopt;
        std::string v = it->second;
        kv.erase(it);
        return v;
    };

    const auto models = take("models");
    if (!models) throw UsageError("sweep spec needs a 'models' list");
    for (const auto& part : [&] {
             std::vector<std::string> out;
             std::string cur;
             for (char ch : *models + ",") {
                 if (ch == ',') {
                     if (!cur.empty()) out.push_back(cur);
                     cur.clear();
                 } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                     cur += ch;
                 }
             }
             return out;
         }()) {
        model_from_code(part);  // validates
        spec.models.push_back(part);
    }
    if (spec.models.empty()) throw UsageError("empty model grid");

    const auto dims = take("dims");
    if (!dims) throw UsageError("sweep spec needs 'dims'");
    spec.dims = Shape(parse_index_list(*dims));

    const auto ranks = take("ranks");
    if (!ranks) throw UsageError("sweep spec needs a 'ranks' grid (e.g. 5x5x5, 6x6x6)");
    std::string cur;
    for (char ch : *ranks + ",") {
        if (ch == ',') {
            if (!cur.empty()) spec.ranks_grid.push_back(parse_index_list(cur, 'x'));
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (spec.ranks_grid.empty()) throw UsageError("empty ranks grid");
    for (const auto& r : spec.ranks_grid) {
        if (static_cast<int>(r.size()) != spec.dims.order())
            throw UsageError("rank tuple " + format_index_list(r, 'x') + " does not match dims");
        for (std::size_t i = 0; i < r.size(); ++i)
            if (r[i] < 1 || r[i] > spec.dims[static_cast<int>(i)])
                throw UsageError("rank tuple " + format_index_list(r, 'x') + " out of range");
    }

    auto grid = [&](const char* key, double lo, double hi, std::vector<double> dflt) {
        const auto v = take(key);
        if (!v) return dflt;
        std::vector<double> g = parse_double_list(*v);
        for (double x : g)
            if (x < lo || x > hi) throw UsageError(std::string(key) + " value out of range");
        return g;
    };
    spec.rho_o_grid = grid("rho_o", 0.0, 1.0, {1.0});
    spec.rho_n_grid = grid("rho_n", 0.0, 1.0, {0.0});
    spec.magnitude_grid = grid("magnitude", 1e-12, 1e12, {1.0});

    const auto seeds = take("seeds");
    if (!seeds) throw UsageError("sweep spec needs a 'seeds' list");
    for (const auto& part : parse_index_list(*seeds))
        spec.seeds.push_back(static_cast<std::uint64_t>(part));

    if (const auto v = take("corrupt_within_mask")) {
        if (*v == "true" || *v == "1")
            spec.corrupt_within_mask = true;
        else if (*v == "false" || *v == "0")
            spec.corrupt_within_mask = false;
        else
            throw UsageError("corrupt_within_mask must be true or false");
    }

    if (kv.count("model")) throw UsageError("use 'models' to choose solvers in a sweep");
    spec.overrides = kv;
    {
        SolverConfig probe;  // validate override keys early
        apply_config_kv(probe, spec.overrides);
    }
    for (const auto& m : spec.models)
        if (m == "s-adp" && !spec.overrides.count("mode_weights"))
            throw UsageError("model s-adp needs a mode_weights override");
    return spec;
}

SweepSpec parse_sweep_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot read " + path);
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return parse_sweep_text(text);
}

void write_sweep_csv(const std::string& path, const std::vector<SweepRecord>& records) {
    std::ofstream f(path, std::ios::trunc);
    if (!f) throw std::runtime_error("cannot write " + path);
    f << "model,rho_o,rho_n,M,ranks,seed,rel_err,iters,status,wall_ms\n";
    char buf[256];
    for (const auto& r : records) {
        // grid coordinates echo the user's values; rel_err keeps full precision
        std::snprintf(buf, sizeof buf, ",%g,%g,%g,", r.rho_o, r.rho_n, r.magnitude);
        f << r.model << buf << format_index_list(r.ranks, 'x') << ',' << r.seed << ',';
        std::snprintf(buf, sizeof buf, "%.17g,%d,%s,%.3f\n", r.rel_err, r.iterations,
                      r.status.c_str(), r.wall_ms);
        f << buf;
    }
    if (!f) throw std::runtime_error("failed writing " + path);
}

}  // namespace horpca
