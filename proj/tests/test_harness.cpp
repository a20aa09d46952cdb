#include "horpca/io.hpp"
#include "horpca/prox.hpp"
#include "horpca/sweep.hpp"
#include "horpca/synth.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace horpca;

TEST_CASE("gen_low_rank realizes the requested multilinear ranks") {
    SUBCASE("standard instance") {
        DenseTensor x = gen_low_rank({Shape{50, 50, 20}, {5, 5, 5}, 7});
        for (int mode = 1; mode <= 3; ++mode) {
            const Vector s = thin_svd(unfold(x, mode)).s;
            Index rank = 0;
            while (rank < s.size() && s[rank] > 1e-8 * s[0]) ++rank;
            CHECK(rank == 5);
        }
    }

    SUBCASE("full ranks give a full-rank tensor") {
        DenseTensor x = gen_low_rank({Shape{6, 5, 4}, {6, 5, 4}, 8});
        for (int mode = 1; mode <= 3; ++mode) {
            const Vector s = thin_svd(unfold(x, mode)).s;
            CHECK(numeric_rank(s) == x.shape[mode - 1]);
        }
    }

    SUBCASE("deterministic per seed") {
        DenseTensor a = gen_low_rank({Shape{10, 9, 8}, {2, 3, 2}, 9});
        DenseTensor b = gen_low_rank({Shape{10, 9, 8}, {2, 3, 2}, 9});
        CHECK(a.values == b.values);
        DenseTensor c = gen_low_rank({Shape{10, 9, 8}, {2, 3, 2}, 10});
        CHECK(a.values != c.values);
    }

    SUBCASE("invalid ranks rejected") {
        CHECK_THROWS_AS(gen_low_rank({Shape{4, 4}, {5, 1}, 0}), std::invalid_argument);
        CHECK_THROWS_AS(gen_low_rank({Shape{4, 4}, {0, 1}, 0}), std::invalid_argument);
        CHECK_THROWS_AS(gen_low_rank({Shape{4, 4}, {2}, 0}), std::invalid_argument);
    }
}

TEST_CASE("haar factors are orthonormal") {
    rng::Engine eng(11);
    Matrix q = haar_orthonormal(30, 7, eng);
    CHECK((q.transpose() * q - Matrix::Identity(7, 7)).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("corrupt") {
    DenseTensor x = gen_low_rank({Shape{50, 50, 20}, {5, 5, 5}, 12});

    SUBCASE("rho_n = 0 leaves the tensor untouched") {
        Corrupted c = corrupt(x, {0.0, 1.0, 3});
        CHECK(c.b.values == x.values);
        CHECK(c.e0.values.norm() == 0.0);
    }

    SUBCASE("rho_n = 1 perturbs every entry") {
        Corrupted c = corrupt(x, {1.0, 1.0, 3});
        Index nonzeros = 0;
        for (Index i = 0; i < c.e0.size(); ++i)
            if (c.e0.values[i] != 0.0) ++nonzeros;
        CHECK(nonzeros == x.size());
    }

    SUBCASE("support size is exact and magnitudes bounded") {
        Corrupted c = corrupt(x, {0.1, 1.0, 4});
        Index nonzeros = 0;
        double max_abs = 0.0;
        for (Index i = 0; i < c.e0.size(); ++i)
            if (c.e0.values[i] != 0.0) {
                ++nonzeros;
                max_abs = std::max(max_abs, std::abs(c.e0.values[i]));
            }
        CHECK(nonzeros == 5000);
        CHECK(max_abs < 1.0);
        CHECK(c.b.values == Vector(x.values + c.e0.values));
    }

    SUBCASE("deterministic per seed") {
        Corrupted a = corrupt(x, {0.2, 2.0, 5});
        Corrupted b = corrupt(x, {0.2, 2.0, 5});
        CHECK(a.b.values == b.b.values);
    }

    SUBCASE("corrupt_within keeps the support inside the mask") {
        ObservationMask mask = sample_mask(x.shape, 0.4, 6);
        Corrupted c = corrupt_within(x, {0.1, 1.0, 7}, mask);
        std::set<Index> observed(mask.indices.begin(), mask.indices.end());
        for (Index i = 0; i < c.e0.size(); ++i)
            if (c.e0.values[i] != 0.0) CHECK(observed.count(i) == 1);
    }

    SUBCASE("invalid fractions rejected") {
        CHECK_THROWS_AS(corrupt(x, {-0.1, 1.0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(corrupt(x, {1.5, 1.0, 0}), std::invalid_argument);
    }
}

TEST_CASE("sample_mask") {
    SUBCASE("rho_o = 1 gives the full mask") {
        ObservationMask m = sample_mask(Shape{4, 4}, 1.0, 1);
        CHECK(m.is_full());
    }
    SUBCASE("rho_o = 0 gives the empty mask") {
        CHECK(sample_mask(Shape{4, 4}, 0.0, 1).count() == 0);
    }
    SUBCASE("half of a 4x4 grid is 8 distinct sorted indices") {
        ObservationMask m = sample_mask(Shape{4, 4}, 0.5, 2);
        CHECK(m.count() == 8);
        for (std::size_t i = 1; i < m.indices.size(); ++i) CHECK(m.indices[i] > m.indices[i - 1]);
    }
    SUBCASE("deterministic per seed") {
        CHECK(sample_mask(Shape{10, 10}, 0.3, 3).indices == sample_mask(Shape{10, 10}, 0.3, 3).indices);
    }
}

TEST_CASE("rel_error") {
    DenseTensor x0 = gen_low_rank({Shape{6, 6, 4}, {2, 2, 2}, 21});
    CHECK(rel_error(x0, x0) == 0.0);
    DenseTensor zero(x0.shape);
    CHECK(rel_error(zero, x0) == doctest::Approx(1.0));
    DenseTensor twice(x0.shape, Vector(2.0 * x0.values));
    CHECK(rel_error(twice, x0) == doctest::Approx(1.0));
    CHECK_THROWS_AS(rel_error(x0, zero), std::invalid_argument);
}

TEST_CASE("estimate_rank") {
    SUBCASE("clean synthetic tensor at threshold 0.05") {
        DenseTensor x = gen_low_rank({Shape{20, 30, 15}, {3, 3, 3}, 31});
        CHECK(estimate_rank(x, 0.05) == std::vector<Index>{3, 3, 3});
    }
    SUBCASE("zero tensor maps to the zero tuple") {
        CHECK(estimate_rank(DenseTensor(Shape{4, 4}), 0.1) == std::vector<Index>{0, 0});
    }
    SUBCASE("scale invariance") {
        DenseTensor x = gen_low_rank({Shape{12, 10, 8}, {2, 3, 4}, 32});
        for (double scale : {1e-6, 0.5, 3.0, 1e7, -2.0}) {
            DenseTensor y(x.shape, Vector(scale * x.values));
            CHECK(estimate_rank(y, 0.03) == estimate_rank(x, 0.03));
        }
    }
    SUBCASE("threshold domain") {
        DenseTensor x(Shape{2, 2}, Vector::Ones(4));
        CHECK_THROWS_AS(estimate_rank(x, 0.0), std::invalid_argument);
        CHECK_THROWS_AS(estimate_rank(x, 1.0), std::invalid_argument);
    }
}

TEST_CASE("core_tensor") {
    SUBCASE("exactly low-rank input reconstructs to 1e-8") {
        DenseTensor x = gen_low_rank({Shape{12, 10, 8}, {3, 2, 3}, 41});
        CoreDecomposition d = core_tensor(x, {3, 2, 3});
        DenseTensor rec = d.core;
        for (int i = 0; i < 3; ++i) rec = mode_multiply(rec, d.factors[static_cast<std::size_t>(i)], i + 1);
        CHECK((rec.values - x.values).norm() / x.values.norm() <= 1e-8);
        for (const Matrix& u : d.factors)
            CHECK((u.transpose() * u - Matrix::Identity(u.cols(), u.cols())).cwiseAbs().maxCoeff() <= 1e-10);
    }

    SUBCASE("full ranks preserve the norm") {
        DenseTensor x = gen_low_rank({Shape{6, 5, 4}, {3, 3, 3}, 42});
        CoreDecomposition d = core_tensor(x, {6, 5, 4});
        CHECK(fro_norm(d.core) == doctest::Approx(fro_norm(x)).epsilon(1e-10));
    }

    SUBCASE("rank-1 tensor gives a scalar core of magnitude ||x||") {
        DenseTensor x = gen_low_rank({Shape{7, 6, 5}, {1, 1, 1}, 43});
        CoreDecomposition d = core_tensor(x, {1, 1, 1});
        CHECK(d.core.shape == Shape{1, 1, 1});
        CHECK(std::abs(d.core.values[0]) == doctest::Approx(fro_norm(x)).epsilon(1e-10));
    }

    SUBCASE("rank above the dimension rejected") {
        DenseTensor x(Shape{3, 3}, Vector::Ones(9));
        CHECK_THROWS_AS(core_tensor(x, {4, 1}), std::invalid_argument);
    }
}

TEST_CASE("default_params") {
    SUBCASE("lambda1 heuristic on a (50,50,20) tensor") {
        DenseTensor b = gen_low_rank({Shape{50, 50, 20}, {5, 5, 5}, 51});
        SolverConfig c = default_params({b, std::nullopt}, Model::singleton);
        CHECK(c.lambda1 == doctest::Approx(1.0 / std::sqrt(50.0)).epsilon(1e-12));
        CHECK(c.lambda_star == 1.0);
        CHECK(c.tol_adal == 1e-3);
        CHECK(c.tol_fista == 1e-4);
        CHECK(c.max_iters == 500);
        CHECK(c.eta == doctest::Approx(0.25));

        SolverConfig m = default_params({b, std::nullopt}, Model::mixture);
        CHECK(m.lambda1 == doctest::Approx(c.lambda1 / 3.0).epsilon(1e-12));
    }

    SUBCASE("constant data clamps mu to the floor") {
        DenseTensor b(Shape{5, 5}, Vector::Constant(25, 4.2));
        SolverConfig c = default_params({b, std::nullopt}, Model::singleton);
        CHECK(c.mu == 1e-6);
    }

    SUBCASE("mu uses only the observed values") {
        DenseTensor b(Shape{4, 4}, Vector::Zero(16));
        b.values[2] = 10.0;
        b.values[5] = -10.0;
        ObservationMask m(b.shape, {2, 5});
        SolverConfig with_mask = default_params({b, m}, Model::singleton);
        CHECK(with_mask.mu == doctest::Approx(100.0));  // std of {10, -10} = 10
        SolverConfig no_mask = default_params({b, std::nullopt}, Model::singleton);
        CHECK(no_mask.mu < with_mask.mu);
    }

    SUBCASE("continuation pack follows the norm of the observed data") {
        DenseTensor b = gen_low_rank({Shape{8, 8, 4}, {2, 2, 2}, 52});
        SolverConfig c = default_params({b, std::nullopt}, Model::singleton_lagrangian);
        CHECK(c.continuation.lambda0 == doctest::Approx(0.99 * fro_norm(b)));
        CHECK(c.continuation.lambda_bar == doctest::Approx(1e-5 * c.continuation.lambda0));
        CHECK(c.continuation.factor == 0.97);
        CHECK(c.continuation.ratio == doctest::Approx(1.0 / std::sqrt(8.0)));
    }
}

TEST_CASE("run_sweep") {
    SweepSpec spec;
    spec.models = {"s"};
    spec.dims = Shape{8, 8, 6};
    spec.ranks_grid = {{2, 2, 2}};
    spec.rho_o_grid = {1.0};
    spec.rho_n_grid = {0.1};
    spec.magnitude_grid = {1.0};
    spec.seeds = {3};
    spec.overrides["max_iters"] = "200";

    SUBCASE("single cell matches a direct invocation") {
        auto records = run_sweep(spec);
        REQUIRE(records.size() == 1);
        const SweepRecord& rec = records[0];

        CellSeeds seeds = cell_seeds(3, 0.1, 1.0, 1.0);
        DenseTensor x0 = gen_low_rank({spec.dims, {2, 2, 2}, seeds.gen});
        Corrupted noisy = corrupt(x0, {0.1, 1.0, seeds.corrupt});
        Problem p{noisy.b, std::nullopt};
        SolverConfig c = default_params(p, Model::singleton);
        c.target_ranks = {2, 2, 2};
        c.max_iters = 200;
        SolverResult direct = solve(p, c);

        CHECK(rec.rel_err == rel_error(direct.x, x0));
        CHECK(rec.iterations == direct.iterations);
        CHECK(rec.status == status_name(direct.status));
        CHECK(rec.model == "s");
    }

    SUBCASE("records are reproducible and parallelism does not change them") {
        spec.rho_n_grid = {0.05, 0.1};
        spec.seeds = {1, 2};
        auto serial = run_sweep(spec, 1);
        auto again = run_sweep(spec, 1);
        auto parallel = run_sweep(spec, 4);
        REQUIRE(serial.size() == 4);
        for (std::size_t i = 0; i < serial.size(); ++i) {
            CHECK(serial[i].rel_err == again[i].rel_err);
            CHECK(serial[i].rel_err == parallel[i].rel_err);
            CHECK(serial[i].iterations == parallel[i].iterations);
        }
    }

    SUBCASE("cell failures are recorded, not thrown") {
        SweepSpec bad = spec;
        bad.overrides["mu"] = "-1";  // invalid config: every cell errors
        auto records = run_sweep(bad);
        REQUIRE(records.size() == 1);
        CHECK(records[0].status.rfind("error:", 0) == 0);
        CHECK(std::isnan(records[0].rel_err));
    }

    SUBCASE("grid order is deterministic: seeds vary fastest") {
        spec.rho_n_grid = {0.05, 0.1};
        spec.seeds = {1, 2};
        auto records = run_sweep(spec);
        REQUIRE(records.size() == 4);
        CHECK(records[0].rho_n == 0.05);
        CHECK(records[0].seed == 1);
        CHECK(records[1].rho_n == 0.05);
        CHECK(records[1].seed == 2);
        CHECK(records[2].rho_n == 0.1);
        CHECK(records[2].seed == 1);
    }

    SUBCASE("observation grid reuses the corrupted tensor") {
        CellSeeds a = cell_seeds(9, 0.1, 1.0, 0.5);
        CellSeeds b = cell_seeds(9, 0.1, 1.0, 0.9);
        CHECK(a.gen == b.gen);
        CHECK(a.corrupt == b.corrupt);
        CHECK(a.mask != b.mask);
        CellSeeds c = cell_seeds(9, 0.2, 1.0, 0.5);
        CHECK(c.corrupt != a.corrupt);
        CHECK(c.gen == a.gen);
    }
}

TEST_CASE("sweep spec parsing") {
    SUBCASE("full spec") {
        SweepSpec s = parse_sweep_text(
            "models = s, m\n"
            "dims = 8,8,6\n"
            "ranks = 2x2x2, 3x3x3\n"
            "rho_o = 1.0, 0.5\n"
            "rho_n = 0.1\n"
            "magnitude = 1\n"
            "seeds = 1,2,3\n"
            "max_iters = 100\n");
        CHECK(s.models == std::vector<std::string>{"s", "m"});
        CHECK(s.dims == Shape{8, 8, 6});
        CHECK(s.ranks_grid.size() == 2);
        CHECK(s.rho_o_grid == std::vector<double>{1.0, 0.5});
        CHECK(s.seeds.size() == 3);
        CHECK(s.overrides.at("max_iters") == "100");
    }

    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_sweep_text("dims = 4,4\nranks = 2x2\nseeds = 1\n"), UsageError);
        CHECK_THROWS_AS(parse_sweep_text("models =\ndims = 4,4\nranks = 2x2\nseeds = 1\n"), UsageError);
        CHECK_THROWS_AS(
            parse_sweep_text("models = s\ndims = 4,4\nranks = 2x2x2\nseeds = 1\n"), UsageError);
        CHECK_THROWS_AS(
            parse_sweep_text("models = s\ndims = 4,4\nranks = 2x2\nseeds = 1\nrho_o = 1.5\n"),
            UsageError);
        CHECK_THROWS_AS(
            parse_sweep_text("models = s\ndims = 4,4\nranks = 2x2\nseeds = 1\nbogus = 1\n"),
            UsageError);
        CHECK_THROWS_AS(
            parse_sweep_text("models = s-adp\ndims = 4,4\nranks = 2x2\nseeds = 1\n"), UsageError);
    }
}
