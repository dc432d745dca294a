#include "subhom/homology.hpp"
#include "subhom/persistence.hpp"
#include "subhom/pointcloud.hpp"
#include "subhom/rips.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace subhom;

TEST_CASE("unit square")
{
    const PointCloud square(2, {0, 0, 1, 0, 1, 1, 0, 1});
    const auto pairs = persistence_baseline(square, 2.0, 10);
    std::size_t finite0 = 0;
    for (const auto& pr : pairs) {
        if (pr.dim == 0 && !std::isinf(pr.death)) {
            CHECK(pr.birth == 0.0);
            CHECK(pr.death == doctest::Approx(1.0));
            ++finite0;
        }
        if (pr.dim == 1) {
            // The loop appears with the sides and is filled once the diagonals enter.
            CHECK(pr.birth == doctest::Approx(1.0));
            CHECK(pr.death == doctest::Approx(1.6));
        }
    }
    CHECK(finite0 == 3);
    CHECK(essential_counts(pairs) == std::vector<std::size_t>{1, 0});
}

TEST_CASE("pairs alive at each step match the Betti numbers of that complex")
{
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        const auto cloud = generate_figure8(60, 0.1, seed);
        const double r_max = 0.8;
        const std::size_t steps = 8;
        const auto pairs = persistence_baseline(cloud, r_max, steps);
        for (std::size_t s = 1; s <= steps; ++s) {
            const double r = r_max * static_cast<double>(s) / static_cast<double>(steps);
            const auto b = reduce(build_rips(cloud, r, 2)).betti();
            for (int k = 0; k <= 1; ++k) {
                std::size_t alive = 0;
                for (const auto& pr : pairs)
                    if (pr.dim == k && pr.birth <= r && r < pr.death)
                        ++alive;
                CAPTURE(seed);
                CAPTURE(s);
                CAPTURE(k);
                if (s == steps) {
                    // Only classes that never die survive the last step.
                    CHECK(essential_counts(pairs)[static_cast<std::size_t>(k)] == b[static_cast<std::size_t>(k)]);
                }
                CHECK(alive == b[static_cast<std::size_t>(k)]);
            }
        }
    }
}

TEST_CASE("persistence csv")
{
    std::ostringstream out;
    write_persistence_csv(out, {{0.0, 0.5, 0}, {0.0, INFINITY, 0}});
    CHECK(out.str() == "birth,death,dim\n0,0.5,0\n0,inf,0\n");
    const PointCloud one(2, {0, 0});
    CHECK_THROWS_AS(persistence_baseline(one, 1.0, 0), std::invalid_argument);
    CHECK_THROWS_AS(persistence_baseline(one, 0.0, 4), std::invalid_argument);
}
