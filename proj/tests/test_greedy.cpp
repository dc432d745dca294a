#include "oracles.hpp"

#include "subhom/construction.hpp"
#include "subhom/greedy.hpp"

#include <doctest.h>

#include <random>

using namespace subhom;

namespace {

InducedMap map_of(FieldMatrix m, std::size_t id, std::size_t size = 10)
{
    InducedMap im;
    im.matrix = std::move(m);
    im.sample_id = id;
    im.sample_size = size;
    return im;
}

FieldMatrix rows(std::initializer_list<std::vector<Scalar>> r)
{
    const std::size_t cols = r.size() ? r.begin()->size() : 0;
    FieldMatrix m(r.size(), cols);
    std::size_t i = 0;
    for (const auto& row : r) {
        for (std::size_t j = 0; j < cols; ++j)
            m(i, j) = row[j];
        ++i;
    }
    return m;
}

}  // namespace

TEST_CASE("weights count distinct binarized patterns")
{
    const auto m = binarize(rows({{1, 2, 0, 1}, {0, 0, 0, 0}, {2, 1, 0, 0}}));
    CHECK(map_weight(m) == 3);
    WeightOptions ignore;
    ignore.ignore_zero_columns = true;
    CHECK(map_weight(m, ignore) == 2);
    WeightOptions by_rows;
    by_rows.compare_rows = true;
    CHECK(map_weight(m, by_rows) == 3);
    CHECK(map_weight(FieldMatrix(3, 0)) == 0);
}

TEST_CASE("order is weight descending and stable")
{
    const std::vector<InducedMap> ens{map_of(rows({{1}}), 0), map_of(rows({{1, 0}}), 1), map_of(rows({{0}}), 2),
                                      map_of(rows({{1, 0}}), 3)};
    const auto w = form_weights(ens);
    CHECK(w.weights == std::vector<std::size_t>{1, 2, 1, 2});
    CHECK(w.order == std::vector<std::size_t>{1, 3, 0, 2});
}

TEST_CASE("greedy seeds with the heaviest map and pads later acceptances")
{
    const std::vector<InducedMap> ens{map_of(rows({{1, 0}, {0, 0}, {0, 0}}), 0),
                                      map_of(rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}), 1),
                                      map_of(rows({{0}, {0}, {1}}), 2)};
    const auto est = greedy_basis(form_weights(ens));
    // Map 1 seeds two columns (the third is their sum), map 2 adds one, map 0 adds none.
    CHECK(est.basis.cols() == 3);
    CHECK(est.n_zeros == 1);
    CHECK(est.basis.rows() == 4);
    CHECK(est.provenance == std::vector<BasisProvenance>{{1, 0}, {1, 1}, {2, 0}});
    CHECK(estimate_from_basis(est, 1) == BettiVector{{1, 3}});
}

TEST_CASE("greedy on empty and zero maps")
{
    CHECK(greedy_basis(form_weights({})).basis.cols() == 0);
    const std::vector<InducedMap> ens{map_of(FieldMatrix(0, 0), 0), map_of(FieldMatrix(0, 0), 1)};
    const auto est = greedy_basis(form_weights(ens));
    CHECK(est.basis.cols() == 0);
    CHECK(estimate_from_basis(est, 1) == BettiVector{{1, 0}});
    const std::vector<InducedMap> bad{map_of(rows({{1}}), 0), map_of(rows({{1}, {1}}), 1)};
    CHECK_THROWS_AS(greedy_basis(form_weights(bad)), std::invalid_argument);
}

TEST_CASE("matroid properties on random ensembles")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t r = 1 + rng() % 4;
        std::vector<InducedMap> ens;
        std::vector<FieldMatrix> binary;
        for (std::size_t i = 0, n = 1 + rng() % 5; i < n; ++i) {
            ens.push_back(map_of(oracle::random_matrix(rng, r, rng() % 4, 3, 0.4), i));
            binary.push_back(binarize(ens.back().matrix));
        }
        const auto est = greedy_basis(form_weights(ens));
        const auto concat = FieldMatrix::hconcat(binary);
        CHECK(oracle::independent_by_enumeration(oracle::dense(est.basis), est.basis.cols(), 3));
        CHECK(est.basis.cols() == oracle::rank(oracle::dense(concat), 3));
    }
}

TEST_CASE("rank statistics by size")
{
    const std::vector<InducedMap> ens{map_of(rows({{1, 0}, {0, 1}}), 0, 50), map_of(rows({{1, 1}, {0, 0}}), 1, 50),
                                      map_of(rows({{1}}), 2, 20)};
    const auto stats = rank_statistics(ens);
    REQUIRE(stats.size() == 2);
    CHECK(stats[0].size == 20);
    CHECK(stats[1].size == 50);
    CHECK(stats[1].mean_rank == doctest::Approx(1.5));
    CHECK(stats[1].histogram.at(2) == 1);
}

TEST_CASE("annulus check")
{
    SUBCASE("independent columns")
    {
        CHECK_FALSE(check_annulus(FieldMatrix::identity(4)).found);
        CHECK_FALSE(check_annulus(FieldMatrix(3, 0)).found);
    }
    SUBCASE("one dependency")
    {
        const auto rep = check_annulus(rows({{1, 0, 1}, {0, 1, 1}}));
        CHECK(rep.found);
        REQUIRE(rep.witness);
        CHECK(rep.witness->first == std::vector<std::size_t>{0, 1, 2});
        CHECK(kernel_vector(rows({{1, 0, 1}, {0, 1, 1}}), rep.witness->first).has_value());
    }
    SUBCASE("a zero column is a circuit of one")
    {
        const auto rep = check_annulus(rows({{1, 0}, {0, 0}}));
        CHECK(rep.found);
        CHECK(rep.witness->first == std::vector<std::size_t>{1});
    }
}

TEST_CASE("figure-8 check")
{
    // Columns a, b, a+b, c, c+b: circuits {0,1,2} and {1,3,4} share column 1.
    const auto two = rows({{1, 0, 1, 0, 0}, {0, 1, 1, 0, 1}, {0, 0, 0, 1, 1}});
    for (auto mode : {Figure8Mode::subsets, Figure8Mode::circuits}) {
        const auto rep = check_figure8(two, kDefaultMaxSubset, mode);
        CHECK(rep.found);
        REQUIRE(rep.witness);
        REQUIRE(rep.witness->common);
        const auto& w = *rep.witness;
        CHECK(std::find(w.first.begin(), w.first.end(), *w.common) != w.first.end());
        CHECK(std::find(w.second.begin(), w.second.end(), *w.common) != w.second.end());
        CHECK(w.first != w.second);
    }

    // Exactly one circuit and one spare column.
    const auto one = rows({{1, 0, 1, 0}, {0, 1, 1, 0}, {0, 0, 0, 1}});
    CHECK(column_circuits(one, 6).size() == 1);
    CHECK(check_figure8(one).found);
    CHECK_FALSE(check_figure8(one, kDefaultMaxSubset, Figure8Mode::circuits).found);

    // A lone circuit with nothing else has no second dependent subset.
    CHECK_FALSE(check_figure8(rows({{1, 0, 1}, {0, 1, 1}})).found);
    CHECK_FALSE(check_figure8(FieldMatrix::identity(5)).found);
}

TEST_CASE("circuits are minimal and dependent")
{
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const auto h = oracle::random_matrix(rng, 1 + rng() % 3, 1 + rng() % 5, 3, 0.5);
        for (const auto& c : column_circuits(h, 6)) {
            const auto sub = h.select_columns(c);
            CHECK_FALSE(oracle::independent_by_enumeration(oracle::dense(sub), sub.cols(), 3));
            for (std::size_t drop = 0; drop < c.size(); ++drop) {
                auto smaller = c;
                smaller.erase(smaller.begin() + static_cast<std::ptrdiff_t>(drop));
                const auto s = h.select_columns(smaller);
                CHECK(oracle::independent_by_enumeration(oracle::dense(s), s.cols(), 3));
            }
        }
    }
}

TEST_CASE("a figure-8 verdict implies an annulus verdict")
{
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = oracle::random_matrix(rng, 1 + rng() % 4, 1 + rng() % 6, 3, 0.4);
        for (auto mode : {Figure8Mode::subsets, Figure8Mode::circuits})
            if (check_figure8(h, kDefaultMaxSubset, mode).found)
                CHECK(check_annulus(h).found);
    }
}
