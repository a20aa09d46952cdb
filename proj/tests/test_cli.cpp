// End-to-end checks of the command-line tool (exit codes, file outputs,
// machine-readable summaries).

#include "horpca/io.hpp"
#include "horpca/synth.hpp"

#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>
#include <unistd.h>

using namespace horpca;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(HORPCA_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 512> buf;
    while (fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        static int counter = 0;
        path = std::filesystem::temp_directory_path() /
               ("horpca_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    return std::string((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("cli: version and usage errors") {
    CHECK(run_cli("--version").exit_code == 0);
    CHECK(run_cli("--version").out.find("1.0.0") != std::string::npos);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("gen --dims 4,4").exit_code == 2);  // missing required flags
}

TEST_CASE("cli: gen writes the declared header and is byte-idempotent") {
    TempDir dir;
    const std::string out = dir.file("x0.dtf");
    RunResult r = run_cli("gen --dims 50,50,20 --ranks 5,5,5 --seed 7 --out " + out);
    REQUIRE(r.exit_code == 0);
    DenseTensor x = read_dtf(out);
    CHECK(x.shape == Shape{50, 50, 20});

    const std::string again = dir.file("x0b.dtf");
    REQUIRE(run_cli("gen --dims 50,50,20 --ranks 5,5,5 --seed 7 --out " + again).exit_code == 0);
    CHECK(slurp(out) == slurp(again));

    // invalid ranks are usage errors
    CHECK(run_cli("gen --dims 4,4 --ranks 0,2 --seed 1 --out " + dir.file("bad.dtf")).exit_code == 2);
    CHECK(run_cli("gen --dims 4,4 --ranks 5,2 --seed 1 --out " + dir.file("bad.dtf")).exit_code == 2);
}

TEST_CASE("cli: corrupt with rho-n 0 copies the input bytes") {
    TempDir dir;
    const std::string in = dir.file("x.dtf");
    const std::string out = dir.file("b.dtf");
    REQUIRE(run_cli("gen --dims 8,8,6 --ranks 2,2,2 --seed 3 --out " + in).exit_code == 0);
    REQUIRE(run_cli("corrupt --in " + in + " --rho-n 0 --seed 5 --out " + out).exit_code == 0);
    CHECK(slurp(in) == slurp(out));
}

TEST_CASE("cli: info reports dims and relative error") {
    TempDir dir;
    const std::string in = dir.file("x.dtf");
    REQUIRE(run_cli("gen --dims 6,5,4 --ranks 2,2,2 --seed 9 --out " + in).exit_code == 0);
    RunResult r = run_cli("info " + in + " --ref " + in);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("dims=6,5,4") != std::string::npos);
    CHECK(r.out.find("rel_err=0") != std::string::npos);
}

TEST_CASE("cli: solve end to end") {
    TempDir dir;
    const std::string x0 = dir.file("x0.dtf");
    const std::string b = dir.file("b.dtf");
    const std::string xr = dir.file("x.dtf");
    const std::string er = dir.file("e.dtf");
    const std::string report = dir.file("hist.csv");
    REQUIRE(run_cli("gen --dims 20,20,10 --ranks 3,3,3 --seed 11 --out " + x0).exit_code == 0);
    REQUIRE(run_cli("corrupt --in " + x0 + " --rho-n 0.1 --magnitude 1 --seed 12 --out " + b)
                .exit_code == 0);

    RunResult r = run_cli("solve --model s --in " + b + " --out-x " + xr + " --out-e " + er +
                          " --report " + report);
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("iters=") != std::string::npos);
    CHECK(r.out.find("status=converged") != std::string::npos);
    CHECK(r.out.find("primal=") != std::string::npos);

    // the recovery should be essentially exact in this regime
    DenseTensor x = read_dtf(xr);
    DenseTensor truth = read_dtf(x0);
    CHECK(rel_error(x, truth) <= 0.01);
    CHECK(slurp(report).rfind("iter,", 0) == 0);

    SUBCASE("model c without --ranks is a usage error") {
        CHECK(run_cli("solve --model c --in " + b + " --out-x " + xr).exit_code == 2);
    }

    SUBCASE("an iteration-starved run exits 1 with the status string") {
        RunResult starved = run_cli("solve --model s --in " + b + " --max-iters 2 --out-x " + xr);
        CHECK(starved.exit_code == 1);
        CHECK(starved.out.find("status=max-iters") != std::string::npos);
    }

    SUBCASE("solving with a full mask matches the no-mask run") {
        const std::string mask = dir.file("full.dmk");
        REQUIRE(run_cli("mask --dims 20,20,10 --rho-o 1.0 --seed 1 --out " + mask).exit_code == 0);
        const std::string xm = dir.file("xm.dtf");
        RunResult rm = run_cli("solve --model s --in " + b + " --mask " + mask +
                               " --tol-adal 1e-8 --max-iters 5000 --out-x " + xm);
        REQUIRE(rm.exit_code == 0);
        const std::string xf = dir.file("xf.dtf");
        REQUIRE(run_cli("solve --model s --in " + b + " --tol-adal 1e-8 --max-iters 5000 --out-x " +
                        xf).exit_code == 0);
        DenseTensor a = read_dtf(xm);
        DenseTensor bb = read_dtf(xf);
        CHECK((a.values - bb.values).norm() / bb.values.norm() < 1e-6);
    }

    SUBCASE("solve outputs are byte-idempotent") {
        const std::string x2 = dir.file("x2.dtf");
        REQUIRE(run_cli("solve --model s --in " + b + " --out-x " + x2).exit_code == 0);
        CHECK(slurp(xr) == slurp(x2));
    }
}

TEST_CASE("cli: config file plus flag overrides, flags win") {
    TempDir dir;
    const std::string b = dir.file("b.dtf");
    REQUIRE(run_cli("gen --dims 8,8,6 --ranks 2,2,2 --seed 21 --out " + b).exit_code == 0);
    const std::string cfg = dir.file("solver.cfg");
    std::ofstream(cfg) << "max_iters = 1\n";

    // the config alone starves the solver; the flag restores it
    CHECK(run_cli("solve --model s --in " + b + " --config " + cfg).exit_code == 1);
    CHECK(run_cli("solve --model s --in " + b + " --config " + cfg + " --max-iters 500").exit_code == 0);
}

TEST_CASE("cli: rank on a clean rank-(3,3,3) tensor prints 3,3,3") {
    TempDir dir;
    const std::string x = dir.file("x.dtf");
    REQUIRE(run_cli("gen --dims 20,30,15 --ranks 3,3,3 --seed 31 --out " + x).exit_code == 0);
    RunResult r = run_cli("rank --in " + x + " --threshold 0.05");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3,3,3\n");
}

TEST_CASE("cli: core extraction reconstructs exactly low-rank data") {
    TempDir dir;
    const std::string x = dir.file("x.dtf");
    const std::string g = dir.file("g.dtf");
    REQUIRE(run_cli("gen --dims 10,8,6 --ranks 2,2,2 --seed 41 --out " + x).exit_code == 0);
    REQUIRE(run_cli("core --in " + x + " --ranks 2,2,2 --out-core " + g + " --out-factors " +
                    dir.file("u")).exit_code == 0);
    DenseTensor core = read_dtf(g);
    CHECK(core.shape == Shape{2, 2, 2});
    DenseTensor rec = core;
    for (int mode = 1; mode <= 3; ++mode) {
        DenseTensor ut = read_dtf(dir.file("u" + std::to_string(mode) + ".dtf"));
        REQUIRE(ut.order() == 2);
        Matrix u = unfold(ut, 1);
        rec = mode_multiply(rec, u, mode);
    }
    DenseTensor truth = read_dtf(x);
    CHECK((rec.values - truth.values).norm() / truth.values.norm() <= 1e-8);
}

TEST_CASE("cli: round trip with a huge lambda1 reproduces clean input") {
    TempDir dir;
    const std::string x0 = dir.file("x0.dtf");
    const std::string xr = dir.file("x.dtf");
    REQUIRE(run_cli("gen --dims 10,10,6 --ranks 2,2,2 --seed 51 --out " + x0).exit_code == 0);
    REQUIRE(run_cli("solve --model s --in " + x0 + " --lambda1 1e6 --tol-adal 1e-9 " +
                    "--max-iters 20000 --out-x " + xr).exit_code == 0);
    CHECK(rel_error(read_dtf(xr), read_dtf(x0)) <= 1e-6);
}

TEST_CASE("cli: sweep") {
    TempDir dir;
    const std::string spec = dir.file("sweep.spec");
    const std::string out = dir.file("records.csv");

    SUBCASE("one-cell spec gives one CSV row") {
        std::ofstream(spec) << "models = s\ndims = 8,8,6\nranks = 2x2x2\nrho_n = 0.1\n"
                            << "seeds = 1\nmax_iters = 150\n";
        REQUIRE(run_cli("sweep --spec " + spec + " --out " + out).exit_code == 0);
        std::string text = slurp(out);
        CHECK(text.rfind("model,rho_o,rho_n,M,ranks,seed,rel_err,iters,status,wall_ms\n", 0) == 0);
        CHECK(std::count(text.begin(), text.end(), '\n') == 2);
    }

    SUBCASE("failed cells keep exit code 0") {
        std::ofstream(spec) << "models = s\ndims = 8,8,6\nranks = 2x2x2\nrho_n = 0.1\n"
                            << "seeds = 1\nmu = -1\n";
        REQUIRE(run_cli("sweep --spec " + spec + " --out " + out).exit_code == 0);
        CHECK(slurp(out).find("error:") != std::string::npos);
    }

    SUBCASE("empty grid is a usage error") {
        std::ofstream(spec) << "models = s\ndims = 8,8,6\nranks = 2x2x2\nseeds =\n";
        CHECK(run_cli("sweep --spec " + spec + " --out " + out).exit_code == 2);
    }

    SUBCASE("malformed spec is a usage error") {
        std::ofstream(spec) << "models = s\nranks = 2x2x2\nseeds = 1\n";
        CHECK(run_cli("sweep --spec " + spec + " --out " + out).exit_code == 2);
    }
}
