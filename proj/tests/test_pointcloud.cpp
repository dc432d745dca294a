#include "subhom/pointcloud.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

using namespace subhom;

TEST_CASE("generators are deterministic and near their shape")
{
    const auto a = generate_figure8(200, 0.0, 4);
    CHECK(a == generate_figure8(200, 0.0, 4));
    CHECK_FALSE(a == generate_figure8(200, 0.0, 5));
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto p = a.point(i);
        const double d = std::min(std::hypot(p[0], p[1] - 1.0), std::hypot(p[0], p[1] + 1.0));
        CHECK(d == doctest::Approx(1.0).epsilon(1e-9));
    }
    const auto ann = generate_annulus(300, 0.5, 1.0, 0.0, 1);
    for (std::size_t i = 0; i < ann.size(); ++i) {
        const double r = std::hypot(ann.point(i)[0], ann.point(i)[1]);
        CHECK(r >= 0.5 - 1e-12);
        CHECK(r <= 1.0 + 1e-12);
    }
    CHECK_THROWS_AS(generate_annulus(10, 1.0, 0.5, 0.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(generate_figure8(0, 0.1, 0), std::invalid_argument);
}

TEST_CASE("subsampling")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto idx = subsample_indices(100, 30, seed);
        CHECK(idx.size() == 30);
        CHECK(std::is_sorted(idx.begin(), idx.end()));
        CHECK(std::set<std::size_t>(idx.begin(), idx.end()).size() == 30);
        CHECK(idx.back() < 100);
        CHECK(idx == subsample_indices(100, 30, seed));
    }
    CHECK(subsample_indices(5, 5, 0) == std::vector<std::size_t>{0, 1, 2, 3, 4});
    CHECK_THROWS_AS(subsample_indices(5, 6, 0), std::invalid_argument);

    const auto cloud = generate_figure8(50, 0.1, 0);
    const std::vector<std::size_t> pick{7, 3};
    const auto s = select_points(cloud, pick);
    CHECK(s.id(0) == 7);
    CHECK(s.id(1) == 3);
    CHECK(s.point(0)[0] == cloud.point(7)[0]);
}

TEST_CASE("Hausdorff distance against a direct computation")
{
    const PointCloud a(1, {0.0, 1.0});
    const PointCloud b(1, {0.0, 3.0, 1.5});
    CHECK(hausdorff_distance(a, b) == doctest::Approx(2.0));
    CHECK(hausdorff_distance(b, a) == doctest::Approx(2.0));
    CHECK(hausdorff_distance(a, a) == 0.0);
    CHECK(rips_threshold(b, a) == doctest::Approx(0.25 + 4.0));
    CHECK(rips_threshold(b, a, 1.0) == doctest::Approx(5.0));
}

TEST_CASE("schedule validation")
{
    SampleSchedule s{{10, 20}, 3, 0};
    CHECK_NOTHROW(s.validate(20));
    CHECK_THROWS_AS(s.validate(19), std::invalid_argument);
    s.sizes = {10, 10};
    CHECK_THROWS_AS(s.validate(20), std::invalid_argument);
    s.sizes = {0};
    CHECK_THROWS_AS(s.validate(20), std::invalid_argument);
    s.sizes = {5};
    s.replicates = 0;
    CHECK_THROWS_AS(s.validate(20), std::invalid_argument);
}

TEST_CASE("csv round trip")
{
    const auto cloud = generate_annulus(20, 0.5, 1.0, 0.05, 2);
    std::stringstream io;
    write_csv(io, cloud);
    const auto back = read_csv(io);
    REQUIRE(back.size() == cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i)
        for (std::size_t d = 0; d < 2; ++d)
            CHECK(back.point(i)[d] == cloud.point(i)[d]);

    std::istringstream ragged("1,2\n3\n");
    CHECK_THROWS_AS(read_csv(ragged), std::invalid_argument);
    std::istringstream junk("1,x\n");
    CHECK_THROWS_AS(read_csv(junk), std::invalid_argument);
}

TEST_CASE("noisy samples stay near their shape")
{
    const double noise = 0.1;
    const auto f8 = generate_figure8(1000, noise, 0);
    double worst = 0.0;
    for (std::size_t i = 0; i < f8.size(); ++i) {
        const auto p = f8.point(i);
        const double d = std::min(std::abs(std::hypot(p[0], p[1] - 1.0) - 1.0),
                                  std::abs(std::hypot(p[0], p[1] + 1.0) - 1.0));
        worst = std::max(worst, d);
    }
    CHECK(worst < 5 * noise);

    const auto ann = generate_annulus(1000, 0.5, 1.0, 0.05, 1);
    std::size_t inside = 0;
    for (std::size_t i = 0; i < ann.size(); ++i) {
        const double r = std::hypot(ann.point(i)[0], ann.point(i)[1]);
        inside += r >= 0.45 && r <= 1.05 ? 1 : 0;
    }
    CHECK(inside >= 950);
}
