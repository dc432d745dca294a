#include "oracles.hpp"
#include "suites.hpp"

#include "subhom/homology.hpp"
#include "subhom/induced_map.hpp"
#include "subhom/pointcloud.hpp"
#include "subhom/rips.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace subhom;
using suites::crafted_suite;

namespace {

FieldMatrix induced(const SimplicialComplex& a, const SimplicialComplex& b, int k,
                    InducedMethod method = InducedMethod::fast)
{
    const auto ra = reduce(a);
    const auto rb = reduce(b);
    return induced_on_homology(ra, rb, inclusion_chain_map(a, b, k), k, method).matrix;
}

SparseMatrix add(const SparseMatrix& a, const SparseMatrix& b)
{
    const FieldMatrix da = a.to_dense();
    const FieldMatrix db = b.to_dense();
    FieldMatrix s(da.rows(), da.cols(), da.modulus());
    const PrimeField f(da.modulus());
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t j = 0; j < s.cols(); ++j)
            s(i, j) = f.add(da(i, j), db(i, j));
    return SparseMatrix::from_dense(s);
}

}  // namespace

TEST_CASE("identity inclusion induces the identity")
{
    for (const auto& nest : crafted_suite())
        for (const auto& k : nest.chain)
            for (int dim = 0; dim <= 1; ++dim) {
                CAPTURE(nest.name);
                const auto m = induced(k, k, dim);
                CHECK(m == FieldMatrix::identity(reduce(k).betti()[static_cast<std::size_t>(dim)]));
            }
}

TEST_CASE("composition law")
{
    const auto suite = crafted_suite();
    CHECK(suite.size() >= 20);
    for (const auto& nest : suite)
        for (std::size_t a = 0; a < nest.chain.size(); ++a)
            for (std::size_t b = a + 1; b < nest.chain.size(); ++b)
                for (std::size_t c = b + 1; c < nest.chain.size(); ++c)
                    for (int dim = 0; dim <= 1; ++dim) {
                        CAPTURE(nest.name);
                        CAPTURE(dim);
                        const auto ab = induced(nest.chain[a], nest.chain[b], dim);
                        const auto bc = induced(nest.chain[b], nest.chain[c], dim);
                        const auto ac = induced(nest.chain[a], nest.chain[c], dim);
                        CHECK(ac == bc * ab);
                    }
}

TEST_CASE("literal and fast routes agree")
{
    for (const auto& nest : crafted_suite())
        for (std::size_t a = 0; a < nest.chain.size(); ++a)
            for (std::size_t b = a; b < nest.chain.size(); ++b)
                for (int dim = 0; dim <= 1; ++dim) {
                    CAPTURE(nest.name);
                    CHECK(induced(nest.chain[a], nest.chain[b], dim, InducedMethod::literal) ==
                          induced(nest.chain[a], nest.chain[b], dim, InducedMethod::fast));
                }
}

TEST_CASE("representatives differing by a boundary give the same map")
{
    std::mt19937_64 rng(4);
    for (const auto& nest : crafted_suite()) {
        const auto& sub = nest.chain.front();
        const auto& full = nest.chain.back();
        const auto rs = reduce(sub);
        const auto rf = reduce(full);
        const auto d = boundary_matrices(full);
        for (int dim = 0; dim <= 1; ++dim) {
            if (static_cast<std::size_t>(dim) >= d.size())
                continue;
            CAPTURE(nest.name);
            const auto chain = inclusion_chain_map(sub, full, dim);
            const auto g = SparseMatrix::from_dense(
                oracle::random_matrix(rng, full.size(dim + 1), sub.size(dim), 3, 0.05));
            const auto shifted = add(chain, d[static_cast<std::size_t>(dim)].matrix * g);
            for (auto method : {InducedMethod::fast, InducedMethod::literal})
                CHECK(induced_on_homology(rs, rf, shifted, dim, method).matrix ==
                      induced_on_homology(rs, rf, chain, dim, method).matrix);
        }
    }
}

TEST_CASE("flag-reduced complexes give the same induced maps")
{
    for (const auto& nest : crafted_suite()) {
        const auto& sub = nest.chain.front();
        const auto& full = nest.chain.back();
        if (sub.max_dim() < 2)
            continue;
        CAPTURE(nest.name);
        // Rips complexes are flag complexes, so their 1-skeleta carry all the data.
        auto skeleton = [](const SimplicialComplex& k) {
            return SimplicialComplex(std::vector<std::size_t>(k.vertex_ids().begin(), k.vertex_ids().end()),
                                     std::vector<Edge>(k.edges().begin(), k.edges().end()), {}, 1);
        };
        const auto ss = skeleton(sub);
        const auto fs = skeleton(full);
        const auto chain = inclusion_chain_map(ss, fs, 1);
        CHECK(induced_on_homology(reduce_flag(ss), reduce_flag(fs), chain, 1).matrix == induced(sub, full, 1));
    }
}

TEST_CASE("missing simplices and shape errors")
{
    const auto a = SimplicialComplex::from_simplices(3, {{0, 1}, {0, 2}, {1, 2}});
    const auto b = SimplicialComplex::from_simplices(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_AS(inclusion_chain_map(a, b, 1), PreconditionViolation);
    CHECK_NOTHROW(inclusion_chain_map(a, b, 0));
    const auto ra = reduce(a);
    const auto rb = reduce(b);
    CHECK_THROWS_AS(induced_on_homology(ra, rb, SparseMatrix(1, 1), 1), std::invalid_argument);
}

TEST_CASE("sign of a reordered simplex")
{
    // Same edge, vertices listed in opposite order in the two complexes.
    const auto sub = SimplicialComplex({7, 3}, {{0, 1}}, {}, 1);
    const auto full = SimplicialComplex({3, 7}, {{0, 1}}, {}, 1);
    const auto f = inclusion_chain_map(sub, full, 1, 3);
    CHECK(f.to_dense()(0, 0) == 2);
}
