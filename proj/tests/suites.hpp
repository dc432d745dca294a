#ifndef SUBHOM_TESTS_SUITES_HPP
#define SUBHOM_TESTS_SUITES_HPP

#include "subhom/pointcloud.hpp"
#include "subhom/rips.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace suites {

using namespace subhom;

struct Nested {
    std::vector<SimplicialComplex> chain;  // each includes into the next
    std::string name;
};

/// Chains of complexes, each including into the next.
inline std::vector<Nested> crafted_suite()
{
    std::vector<Nested> out;
    // Square, square plus a diagonal, then one half filled, then both halves.
    const std::vector<Edge> square{{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    const std::vector<Edge> diag{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}};
    out.push_back({{SimplicialComplex::from_simplices(4, square), SimplicialComplex::from_simplices(4, diag),
                    SimplicialComplex::from_simplices(4, diag, {{0, 1, 2}}),
                    SimplicialComplex::from_simplices(4, diag, {{0, 1, 2}, {0, 2, 3}})},
                   "square"});
    // Two separate points joined later, then a loop appears.
    out.push_back({{SimplicialComplex::from_simplices(3, {}), SimplicialComplex::from_simplices(3, {{0, 1}}),
                    SimplicialComplex::from_simplices(3, {{0, 1}, {0, 2}, {1, 2}})},
                   "points"});
    // Wedge of two circles inside a wedge with one lobe filled.
    const std::vector<Edge> wedge{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {3, 4}};
    out.push_back({{SimplicialComplex::from_simplices(5, wedge), SimplicialComplex::from_simplices(5, wedge, {{0, 3, 4}})},
                   "wedge"});

    // Nested Rips complexes of shuffled sub-samples, so vertex orders disagree.
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto full = generate_figure8(45, 0.08, seed);
        std::mt19937_64 rng(seed);
        std::vector<std::size_t> idx(full.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::shuffle(idx.begin(), idx.end(), rng);
        const double r = 0.35 + 0.05 * static_cast<double>(seed % 4);
        std::vector<std::size_t> small(idx.begin(), idx.begin() + 20);
        std::vector<std::size_t> mid(idx.begin(), idx.begin() + 32);
        std::shuffle(mid.begin(), mid.end(), rng);
        out.push_back({{build_rips(select_points(full, small), r, 2), build_rips(select_points(full, mid), r, 2),
                        build_rips(full, r, 2)},
                       "rips seed " + std::to_string(seed)});
    }
    return out;
}

}  // namespace suites

#endif  // SUBHOM_TESTS_SUITES_HPP
