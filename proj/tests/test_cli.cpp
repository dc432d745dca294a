#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace fs = std::filesystem;

namespace {

const fs::path& workdir()
{
    static const fs::path dir = [] {
        auto d = fs::temp_directory_path() / ("subhom_cli_test_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir;
}

// Runs the CLI inside the work directory; returns its exit status.
int run(const std::string& args)
{
    const std::string cmd = "cd '" + workdir().string() + "' && '" SUBHOM_CLI "' " + args + " >out.txt 2>err.txt";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

TEST_CASE("usage errors exit with 2")
{
    CHECK(run("") == 2);
    CHECK(run("frobnicate") == 2);
    CHECK(run("generate --shape triangle --n 10 --out x.csv") == 2);
    CHECK(run("generate --shape figure8 --n abc --out x.csv") == 2);
    CHECK(run("estimate --sizes 10") == 2);
    CHECK(run("check --kind annulus") == 2);
    CHECK(run("analyze --cloud nothing.csv") == 2);
    std::ofstream(workdir() / "bad.json") << "{ not json";
    CHECK(run("check --matrix bad.json --kind annulus") == 2);
}

TEST_CASE("runtime failures exit with 1")
{
    CHECK(run("analyze --cloud missing.csv --threshold-fixed 0.5") == 1);
    CHECK(slurp(workdir() / "err.txt").find("missing.csv") != std::string::npos);
}

TEST_CASE("generate, estimate and check")
{
    REQUIRE(run("generate --shape figure8 --n 300 --seed 1 --out f8.csv") == 0);
    REQUIRE(run("generate --shape figure8 --n 300 --seed 1 --out f8b.csv") == 0);
    CHECK(slurp(workdir() / "f8.csv") == slurp(workdir() / "f8b.csv"));

    REQUIRE(run("estimate --cloud f8.csv --sizes 60,120 --replicates 3 --seed 2 --out run1 --omit-timings") == 0);
    REQUIRE(run("estimate --cloud f8.csv --sizes 60,120 --replicates 3 --seed 2 --threads 2 --out run2 "
                "--omit-timings") == 0);
    for (const char* f : {"ensemble.json", "estimate.json", "rank_statistics.json", "basis_60.json"})
        CHECK(slurp(workdir() / "run1" / f) == slurp(workdir() / "run2" / f));
    CHECK(slurp(workdir() / "out.txt").find("size 120: estimate (") != std::string::npos);

    // Re-estimating from the saved maps gives the same basis.
    REQUIRE(run("estimate --maps run1/ensemble.json --out run3") == 0);
    CHECK(slurp(workdir() / "run1" / "basis_120.json") == slurp(workdir() / "run3" / "basis_120.json"));

    std::ofstream(workdir() / "h.json") << "[[1, 0, 1], [0, 1, 1]]";
    REQUIRE(run("check --matrix h.json --kind annulus --out rep.json") == 0);
    const auto rep = nlohmann::json::parse(slurp(workdir() / "rep.json"));
    CHECK(rep["found"] == true);
    REQUIRE(run("check --matrix h.json --kind figure8 --out rep8.json") == 0);
    CHECK(nlohmann::json::parse(slurp(workdir() / "rep8.json"))["found"] == false);
}

TEST_CASE("check on a stored basis")
{
    const std::string basis = SUBHOM_FIXTURES "/bases/figure8_H_300.json";
    REQUIRE(run("check --matrix '" + basis + "' --kind figure8 --transpose --out f8rep.json") == 0);
    CHECK(nlohmann::json::parse(slurp(workdir() / "f8rep.json"))["found"] == true);
    std::ofstream(workdir() / "id.json") << "[[1, 0, 0], [0, 1, 0], [0, 0, 1]]";
    REQUIRE(run("check --matrix id.json --kind figure8 --out id8.json") == 0);
    CHECK(nlohmann::json::parse(slurp(workdir() / "id8.json"))["found"] == false);
}

TEST_CASE("analyze and bench")
{
    REQUIRE(run("generate --shape annulus --n 120 --seed 0 --out ann.csv") == 0);
    REQUIRE(run("analyze --cloud ann.csv --threshold-fixed 0.4 --dump-complex cx.json --persistence pd.csv "
                "--out an.json") == 0);
    REQUIRE(run("bench --cloud ann.csv --sizes 60 --replicates 2 --seeds 0,1 --out bench.csv") == 0);
    const auto csv = slurp(workdir() / "bench.csv");
    CHECK(csv.rfind("method,size,seed,wall_time_s,beta0,beta1\n", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 7);
}
