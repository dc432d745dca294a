#include "subhom/bench.hpp"
#include "subhom/induced_map.hpp"
#include "subhom/io.hpp"
#include "subhom/pointcloud.hpp"

#include <doctest.h>

#include <sstream>

using namespace subhom;

TEST_CASE("ensemble layout and determinism")
{
    const auto cloud = generate_figure8(200, 0.1, 1);
    const SampleSchedule schedule{{40, 80}, 3, 5};
    EnsembleOptions one;
    const auto a = induced_map_ensemble(cloud, schedule, one);
    EnsembleOptions four = one;
    four.threads = 4;
    const auto b = induced_map_ensemble(cloud, schedule, four);

    REQUIRE(a.samples.size() == 6);
    REQUIRE(a.groups.size() == 2);
    CHECK(ensemble_to_json(a, true) == ensemble_to_json(b, true));
    for (std::size_t i = 0; i < a.samples.size(); ++i) {
        const auto& s = a.samples[i];
        CHECK(s.sample_id == i);
        CHECK(s.size == schedule.sizes[i / 3]);
        CHECK(s.replicate == i % 3);
        CHECK(s.seed == sample_seed(5, s.size, s.replicate));
        const auto& g = a.group(s.size);
        CHECK(s.threshold <= g.threshold);
        CHECK(s.map.matrix.rows() == g.betti_full[1]);
        CHECK(s.map.matrix.cols() == s.betti_sub[1]);
    }
    CHECK_THROWS_AS(a.group(41), std::out_of_range);
}

TEST_CASE("ensemble maps match an explicit reduction")
{
    const auto cloud = generate_figure8(120, 0.1, 3);
    const SampleSchedule schedule{{60}, 2, 0};
    const auto ens = induced_map_ensemble(cloud, schedule);
    const auto& g = ens.groups.front();
    const auto full = build_rips(cloud, g.threshold, 2);
    const auto rf = reduce(full);
    CHECK(rf.betti() == g.betti_full);
    for (const auto& s : ens.samples) {
        const auto sub = build_rips(select_points(cloud, s.indices), s.threshold, 2);
        const auto rs = reduce(sub);
        CHECK(rs.betti() == s.betti_sub);
        const auto m = induced_on_homology(rs, rf, inclusion_chain_map(sub, full, 1), 1).matrix;
        CHECK(m == s.map.matrix);
    }
}

TEST_CASE("fixed threshold rule")
{
    const auto cloud = generate_annulus(150, 0.5, 1.0, 0.02, 0);
    EnsembleOptions opt;
    opt.rule = ThresholdRule::fixed(0.3);
    const auto ens = induced_map_ensemble(cloud, {{50, 100}, 2, 1}, opt);
    for (const auto& s : ens.samples)
        CHECK(s.threshold == 0.3);
    opt.rule = ThresholdRule::fixed(0.0);
    CHECK_THROWS_AS(induced_map_ensemble(cloud, {{50}, 2, 1}, opt), std::invalid_argument);
}

TEST_CASE("benchmark records")
{
    const auto cloud = generate_figure8(150, 0.1, 0);
    BenchmarkOptions opt;
    const SampleSchedule schedule{{50}, 3, 2};
    const auto records = run_benchmark(cloud, schedule, opt);
    REQUIRE(records.size() == 3);
    CHECK(records[0].method == BenchMethod::RC);
    CHECK(records[1].method == BenchMethod::GMA);
    CHECK(records[2].method == BenchMethod::TB);
    for (const auto& r : records) {
        CHECK(r.sample_hash == records[0].sample_hash);
        CHECK(r.wall_time_s >= 0.0);
    }

    const auto ens = induced_map_ensemble(cloud, schedule, opt.ensemble);
    const auto tb = bootstrap_from_ensemble(ens);
    REQUIRE(tb.size() == 1);
    CHECK(tb[0].homology == records[2].homology);
    const auto again = bootstrap_baseline(cloud, schedule, opt.ensemble);
    CHECK(again[0].homology == tb[0].homology);

    std::ostringstream csv;
    write_benchmark_csv(csv, records);
    CHECK(csv.str().rfind("method,size,seed,wall_time_s,beta0,beta1\nRC,50,2,", 0) == 0);
    const auto summary = benchmark_summary_json(records);
    CHECK(summary.size() == 3);
}

TEST_CASE("matrix json")
{
    FieldMatrix m(2, 3);
    m(0, 1) = 2;
    m(1, 2) = 1;
    CHECK(matrix_from_json(matrix_to_json(m)) == m);
    CHECK(matrix_from_json(Json::parse("[]")).rows() == 0);
    const auto one_by_zero = matrix_from_json(Json::parse("[[]]"));
    CHECK(one_by_zero.rows() == 1);
    CHECK(one_by_zero.cols() == 0);
    CHECK(matrix_from_json(Json::parse("[[4, -1]]"))(0, 0) == 1);
    CHECK(matrix_from_json(Json::parse("[[4, -1]]"))(0, 1) == 2);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1, 2], [3]]")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": 1, "cols": 1, "p": 4, "entries": [[1]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"rows": 1, "cols": 1})")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1.5]]")), std::invalid_argument);
    const auto basis = matrix_from_json(Json::parse(R"({"rows": 3, "p": 3, "columns": [[1, 0, 2], [0, 1, 1]]})"));
    REQUIRE(basis.rows() == 3);
    REQUIRE(basis.cols() == 2);
    CHECK(basis(2, 0) == 2);
    CHECK(basis(2, 1) == 1);
    CHECK(matrix_from_json(Json::parse(R"({"rows": 2, "columns": []})")).rows() == 2);
}

TEST_CASE("ensemble json round trip")
{
    const auto cloud = generate_figure8(100, 0.1, 0);
    const auto ens = induced_map_ensemble(cloud, {{50}, 2, 0});
    const auto j = ensemble_to_json(ens);
    CHECK(j[0].contains("timing_ms"));
    CHECK_FALSE(ensemble_to_json(ens, true)[0].contains("timing_ms"));
    const auto maps = maps_from_json(j);
    REQUIRE(maps.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(maps[i].matrix == ens.samples[i].map.matrix);
        CHECK(maps[i].sample_size == 50);
    }
    CHECK_THROWS_AS(maps_from_json(Json::parse(R"([{"sample_id": 0}])")), std::invalid_argument);
}
