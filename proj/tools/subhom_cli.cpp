// Command-line front end: generate, sample, analyze, estimate, check, bench.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error or malformed input.

#include "subhom/bench.hpp"
#include "subhom/construction.hpp"
#include "subhom/greedy.hpp"
#include "subhom/homology.hpp"
#include "subhom/induced_map.hpp"
#include "subhom/io.hpp"
#include "subhom/persistence.hpp"
#include "subhom/pointcloud.hpp"
#include "subhom/rips.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <functional>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace subhom;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct StageError : std::runtime_error {
    StageError(const std::string& stage, const std::string& what) : std::runtime_error(stage + ": " + what) {}
};

template <class Fn>
auto stage(const std::string& name, Fn&& fn) -> decltype(fn())
{
    try {
        return fn();
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw StageError(name, e.what());
    }
}

PointCloud load_cloud(const std::string& path)
{
    try {
        return read_csv_file(path);
    } catch (const std::invalid_argument& e) {
        throw UsageError(path + ": " + e.what());
    }
}

Json load_json(const std::string& path)
{
    try {
        return read_json_file(path);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

std::string betti_string(const BettiVector& b)
{
    std::string s = "(";
    for (std::size_t k = 0; k < b.betti.size(); ++k)
        s += (k ? ", " : "") + std::to_string(b.betti[k]);
    return s + ")";
}

struct PipelineFlags {
    unsigned p = kDefaultModulus;
    double threshold_base = kDefaultThresholdBase;
    std::optional<double> threshold_fixed;
    std::vector<std::size_t> sizes;
    std::size_t replicates = 10;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    bool ignore_zero_columns = false;
    bool compare_rows = false;

    void add_to(CLI::App* cmd)
    {
        cmd->add_option("--p", p, "Prime field modulus")->check(CLI::PositiveNumber);
        cmd->add_option("--threshold-base", threshold_base, "Rips threshold is base + 2 * Hausdorff distance")
            ->check(CLI::NonNegativeNumber);
        cmd->add_option("--threshold-fixed", threshold_fixed, "Use this Rips threshold for every complex")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--sizes", sizes, "Sub-sample sizes")->delimiter(',')->required();
        cmd->add_option("--replicates", replicates, "Sub-samples per size")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", seed, "Sampling seed");
        cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
        cmd->add_flag("--ignore-zero-columns", ignore_zero_columns, "Zero columns do not count toward map weights");
        cmd->add_flag("--compare-rows", compare_rows, "Weights count distinct rows instead of columns");
    }

    void validate() const
    {
        if (!is_prime(p))
            throw UsageError("--p " + std::to_string(p) + " is not prime");
    }

    EnsembleOptions ensemble() const
    {
        EnsembleOptions o;
        o.p = p;
        o.threads = threads;
        o.rule = threshold_fixed ? ThresholdRule::fixed(*threshold_fixed) : ThresholdRule::hausdorff(threshold_base);
        return o;
    }

    WeightOptions weights() const { return WeightOptions{ignore_zero_columns, compare_rows}; }

    SampleSchedule schedule() const { return SampleSchedule{sizes, replicates, seed}; }
};

struct EstimateRow {
    std::size_t size;
    HomologyBasisEstimate est;
    BettiVector betti;
};

std::vector<EstimateRow> estimate_per_size(const std::vector<InducedMap>& maps, const WeightOptions& weights,
                                           const std::function<std::size_t(std::size_t)>& beta0_of)
{
    std::vector<std::size_t> sizes;
    for (const auto& m : maps)
        if (std::find(sizes.begin(), sizes.end(), m.sample_size) == sizes.end())
            sizes.push_back(m.sample_size);
    std::vector<EstimateRow> rows;
    for (std::size_t size : sizes) {
        std::vector<InducedMap> group;
        for (const auto& m : maps)
            if (m.sample_size == size)
                group.push_back(m);
        auto est = stage("greedy", [&] { return greedy_basis(form_weights(group, weights)); });
        const BettiVector b = estimate_from_basis(est, beta0_of(size));
        rows.push_back({size, std::move(est), b});
    }
    return rows;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Homology estimation from sub-sample induced maps"};
    app.require_subcommand(1);

    // generate
    auto* gen = app.add_subcommand("generate", "Write a synthetic point cloud as CSV");
    std::string shape;
    std::size_t gen_n = 1000;
    double noise = 0.1;
    double r_inner = 0.5;
    double r_outer = 1.0;
    std::uint64_t gen_seed = 0;
    std::string gen_out;
    gen->add_option("--shape", shape, "figure8 or annulus")->required()->check(CLI::IsMember({"figure8", "annulus"}));
    gen->add_option("--n", gen_n, "Number of points")->check(CLI::PositiveNumber);
    gen->add_option("--noise", noise, "Gaussian noise standard deviation")->check(CLI::NonNegativeNumber);
    gen->add_option("--r-inner", r_inner, "Annulus inner radius")->check(CLI::PositiveNumber);
    gen->add_option("--r-outer", r_outer, "Annulus outer radius")->check(CLI::PositiveNumber);
    gen->add_option("--seed", gen_seed, "Generator seed");
    gen->add_option("--out", gen_out, "Output CSV (default stdout)");

    // sample
    auto* smp = app.add_subcommand("sample", "Draw one sub-sample of a cloud");
    std::string smp_cloud;
    std::size_t smp_n = 0;
    std::uint64_t smp_seed = 0;
    std::string smp_out;
    smp->add_option("--cloud", smp_cloud, "Input CSV")->required();
    smp->add_option("--n", smp_n, "Sub-sample size")->required()->check(CLI::PositiveNumber);
    smp->add_option("--seed", smp_seed, "Sampling seed");
    smp->add_option("--out", smp_out, "Output CSV (default stdout)");

    // analyze
    auto* ana = app.add_subcommand("analyze", "Rips complex, Betti numbers and persistence of one cloud");
    std::string ana_cloud;
    double ana_threshold = 0.0;
    int max_dim = 2;
    unsigned ana_p = kDefaultModulus;
    std::string dump_complex;
    std::string ana_persistence;
    std::size_t ana_steps = 10;
    std::string ana_out;
    ana->add_option("--cloud", ana_cloud, "Input CSV")->required();
    ana->add_option("--threshold-fixed", ana_threshold, "Rips threshold")->required()->check(CLI::PositiveNumber);
    ana->add_option("--max-dim", max_dim, "Top simplex dimension")->check(CLI::Range(1, 2));
    ana->add_option("--p", ana_p, "Prime field modulus")->check(CLI::PositiveNumber);
    ana->add_option("--dump-complex", dump_complex, "Write the complex as JSON");
    ana->add_option("--persistence", ana_persistence, "Write persistence pairs up to the threshold as CSV");
    ana->add_option("--steps", ana_steps, "Threshold steps for --persistence")->check(CLI::PositiveNumber);
    ana->add_option("--out", ana_out, "Write the Betti numbers as JSON");

    // estimate
    auto* est = app.add_subcommand("estimate", "Induced-map ensemble, greedy basis and homology estimate");
    PipelineFlags est_flags;
    std::string est_cloud;
    std::string est_maps;
    std::string est_out = ".";
    bool omit_timings = false;
    est->add_option("--cloud", est_cloud, "Input CSV");
    est->add_option("--maps", est_maps, "Skip sampling and read an ensemble JSON instead");
    est_flags.add_to(est);
    est->get_option("--sizes")->required(false);
    est->add_option("--out", est_out, "Output directory");
    est->add_flag("--omit-timings", omit_timings, "Leave timings out of the ensemble JSON");

    // check
    auto* chk = app.add_subcommand("check", "Look for a figure-8 or annulus construction in a basis");
    std::string chk_matrix;
    std::string kind;
    bool transpose = false;
    bool strict = false;
    std::size_t max_subset = kDefaultMaxSubset;
    unsigned chk_p = kDefaultModulus;
    std::string chk_out;
    chk->add_option("--matrix", chk_matrix, "Matrix JSON")->required();
    chk->add_option("--kind", kind, "figure8 or annulus")->required()->check(CLI::IsMember({"figure8", "annulus"}));
    chk->add_flag("--transpose", transpose, "Check the rows instead of the columns");
    chk->add_flag("--strict-circuits", strict, "figure8: require two distinct circuits sharing a column");
    chk->add_option("--max-subset", max_subset, "Largest column subset searched")->check(CLI::PositiveNumber);
    chk->add_option("--p", chk_p, "Modulus for bare-array matrices")->check(CLI::PositiveNumber);
    chk->add_option("--out", chk_out, "Output JSON (default stdout)");

    // bench
    auto* bch = app.add_subcommand("bench", "Time persistence, greedy and bootstrap baselines");
    PipelineFlags bch_flags;
    std::string bch_cloud;
    std::size_t bch_steps = 10;
    std::vector<std::uint64_t> bch_seeds;
    std::string bch_out;
    std::string bch_summary;
    bch->add_option("--cloud", bch_cloud, "Input CSV")->required();
    bch_flags.add_to(bch);
    bch->add_option("--seeds", bch_seeds, "Run once per seed (overrides --seed)")->delimiter(',');
    bch->add_option("--steps", bch_steps, "Threshold steps of the persistence baseline")->check(CLI::PositiveNumber);
    bch->add_option("--out", bch_out, "Benchmark CSV (default stdout)");
    bch->add_option("--summary", bch_summary, "Per-size summary JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) {
            const PointCloud c = shape == "figure8" ? generate_figure8(gen_n, noise, gen_seed)
                                                    : generate_annulus(gen_n, r_inner, r_outer, noise, gen_seed);
            if (gen_out.empty())
                write_csv(std::cout, c);
            else
                write_csv_file(gen_out, c);
        } else if (*smp) {
            const PointCloud c = load_cloud(smp_cloud);
            if (smp_n > c.size())
                throw UsageError("--n " + std::to_string(smp_n) + " exceeds the cloud size " + std::to_string(c.size()));
            const PointCloud s = subsample(c, smp_n, smp_seed);
            if (smp_out.empty())
                write_csv(std::cout, s);
            else
                write_csv_file(smp_out, s);
        } else if (*ana) {
            if (!is_prime(ana_p))
                throw UsageError("--p " + std::to_string(ana_p) + " is not prime");
            const PointCloud c = load_cloud(ana_cloud);
            const auto complex = stage("rips", [&] { return build_rips(c, ana_threshold, max_dim, RipsOptions{true}); });
            const auto rcc = stage("reduce", [&] {
                ReduceOptions o;
                o.track_bases = false;
                return reduce(complex, ana_p, o);
            });
            const BettiVector b = rcc.betti();
            Json out{{"threshold", ana_threshold},
                     {"simplices", {complex.num_vertices(), complex.num_edges(), complex.num_triangles()}},
                     {"betti", betti_to_json(b)}};
            if (!dump_complex.empty())
                write_json_file(dump_complex, complex_to_json(complex));
            if (!ana_persistence.empty()) {
                const auto pairs = stage("persistence", [&] { return persistence_baseline(c, ana_threshold, ana_steps, ana_p); });
                std::ofstream pout(ana_persistence);
                if (!pout)
                    throw std::runtime_error("cannot write " + ana_persistence);
                write_persistence_csv(pout, pairs);
            }
            if (ana_out.empty())
                std::cout << out.dump(2) << '\n';
            else
                write_json_file(ana_out, out);
        } else if (*est) {
            est_flags.validate();
            if (est_cloud.empty() == est_maps.empty())
                throw UsageError("give exactly one of --cloud and --maps");
            fs::create_directories(est_out);
            std::vector<EstimateRow> rows;
            Json summary = Json::array();
            if (!est_maps.empty()) {
                const Json j = load_json(est_maps);
                std::vector<InducedMap> maps;
                try {
                    maps = maps_from_json(j, est_flags.p);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(est_maps + ": " + e.what());
                }
                // Without the full cloud, beta_0 of the full complex is unknown; report 1.
                rows = estimate_per_size(maps, est_flags.weights(), [](std::size_t) { return std::size_t{1}; });
                write_json_file((fs::path(est_out) / "rank_statistics.json").string(),
                                rank_statistics_to_json(rank_statistics(maps)));
            } else {
                if (est_flags.sizes.empty())
                    throw UsageError("--sizes is required with --cloud");
                const PointCloud c = load_cloud(est_cloud);
                const SampleSchedule schedule = est_flags.schedule();
                try {
                    schedule.validate(c.size());
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                const EnsembleResult ens =
                    stage("ensemble", [&] { return induced_map_ensemble(c, schedule, est_flags.ensemble()); });
                write_json_file((fs::path(est_out) / "ensemble.json").string(), ensemble_to_json(ens, omit_timings));
                const auto maps = ens.maps();
                write_json_file((fs::path(est_out) / "rank_statistics.json").string(),
                                rank_statistics_to_json(rank_statistics(maps)));
                rows = estimate_per_size(maps, est_flags.weights(),
                                         [&](std::size_t size) { return ens.group(size).betti_full[0]; });
                for (auto& g : ens.groups)
                    summary.push_back(Json{{"size", g.size},
                                           {"full_threshold", g.threshold},
                                           {"betti_full", betti_to_json(g.betti_full)}});
            }
            Json estimates = Json::array();
            for (const auto& r : rows) {
                write_json_file((fs::path(est_out) / ("basis_" + std::to_string(r.size) + ".json")).string(),
                                basis_to_json(r.est, r.betti));
                Json e{{"size", r.size}, {"beta_estimate", betti_to_json(r.betti)}};
                for (const auto& s : summary)
                    if (s["size"] == r.size) {
                        e["full_threshold"] = s["full_threshold"];
                        e["betti_full"] = s["betti_full"];
                    }
                estimates.push_back(std::move(e));
                std::cout << "size " << r.size << ": estimate " << betti_string(r.betti) << '\n';
            }
            write_json_file((fs::path(est_out) / "estimate.json").string(), estimates);
        } else if (*chk) {
            if (!is_prime(chk_p))
                throw UsageError("--p " + std::to_string(chk_p) + " is not prime");
            FieldMatrix h;
            try {
                h = matrix_from_json(load_json(chk_matrix), chk_p);
            } catch (const std::invalid_argument& e) {
                throw UsageError(chk_matrix + ": " + e.what());
            }
            if (transpose)
                h = h.transpose();
            const ConstructionReport report =
                kind == "figure8"
                    ? check_figure8(h, max_subset, strict ? Figure8Mode::circuits : Figure8Mode::subsets)
                    : check_annulus(h, max_subset);
            const Json out = report_to_json(report);
            if (chk_out.empty())
                std::cout << out.dump(2) << '\n';
            else
                write_json_file(chk_out, out);
        } else if (*bch) {
            bch_flags.validate();
            const PointCloud c = load_cloud(bch_cloud);
            if (bch_seeds.empty())
                bch_seeds.push_back(bch_flags.seed);
            BenchmarkOptions options;
            options.ensemble = bch_flags.ensemble();
            options.weights = bch_flags.weights();
            options.persistence_steps = bch_steps;
            std::vector<BenchmarkRecord> records;
            for (std::uint64_t seed : bch_seeds) {
                SampleSchedule schedule = bch_flags.schedule();
                schedule.seed = seed;
                try {
                    schedule.validate(c.size());
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                auto r = stage("bench", [&] { return run_benchmark(c, schedule, options); });
                records.insert(records.end(), r.begin(), r.end());
            }
            if (bch_out.empty()) {
                write_benchmark_csv(std::cout, records);
            } else {
                std::ofstream out(bch_out);
                if (!out)
                    throw std::runtime_error("cannot write " + bch_out);
                write_benchmark_csv(out, records);
            }
            if (!bch_summary.empty())
                write_json_file(bch_summary, benchmark_summary_json(records));
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
