#ifndef SUBHOM_HOMOLOGY_HPP
#define SUBHOM_HOMOLOGY_HPP

#include "subhom/rips.hpp"
#include "subhom/sparse.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace subhom {

/// Betti numbers indexed by dimension.
struct BettiVector {
    std::vector<std::size_t> betti;

    std::size_t operator[](std::size_t k) const { return k < betti.size() ? betti[k] : 0; }
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

struct ReduceOptions {
    /// Keep U for the top dimension. Only needed for induced maps in that dimension;
    /// the full complexes of the pipeline drop it to save memory.
    bool track_top_basis = true;
    /// Keep no U at all (Betti numbers and pivots only).
    bool track_bases = true;
};

/// Output of the column reduction R_k = d_k U_k for k = 1..max_dim.
///
/// U_0 is the identity and R_0 = 0. Column j of U_k is the basis chain b_j; the
/// columns listed in I_k are the cycles whose classes form a basis of H_k.
///
/// A flag-complex reduction (reduce_flag) never lists the triangles: its R_2 is
/// compact, holding only the nonzero columns, and I_2 is known only by its size.
class ReducedChainComplex {
public:
    ReducedChainComplex() = default;

    Scalar modulus() const { return p_; }
    int max_dim() const { return static_cast<int>(sizes_.size()) - 1; }
    std::size_t size(int k) const;

    /// R_k, rows size(k-1); k in [1, max_dim]. Compact R_k has one column per pivot.
    const SparseMatrix& reduced(int k) const;
    bool compact(int k) const;
    /// The simplex behind column `col` of a compact R_k.
    const Simplex& compact_simplex(int k, std::size_t col) const;

    /// U_k, shape size(k) x size(k); k in [0, max_dim]. Throws std::logic_error if not tracked.
    const SparseMatrix& basis(int k) const;
    bool has_basis(int k) const;

    /// Column of R_k whose lowest nonzero entry is in row `row`, if any.
    std::optional<std::size_t> pivot_column(int k, std::size_t row) const;

    /// Indices of the homology generators in dimension k, ascending. Throws
    /// std::logic_error for the top dimension of a flag-complex reduction.
    const std::vector<std::size_t>& generators(int k) const;

    BettiVector betti() const;

    friend ReducedChainComplex reduce(const std::vector<BoundaryMatrix>& boundaries, std::size_t num_vertices,
                                      ReduceOptions options);
    friend ReducedChainComplex reduce_flag(const SimplicialComplex& skeleton, Scalar p);

private:
    Scalar p_ = kDefaultModulus;
    std::vector<std::size_t> sizes_;
    std::vector<SparseMatrix> reduced_;                    // index k, entry 0 unused
    std::vector<std::optional<SparseMatrix>> basis_;       // index k; U_0 built on demand
    std::vector<std::vector<std::int64_t>> pivot_of_row_;  // index k: row of R_k -> column or -1
    std::vector<std::vector<std::size_t>> generators_;
    std::vector<std::size_t> betti_;
    std::vector<std::vector<Simplex>> compact_simplices_;  // index k; empty unless R_k is compact
    std::vector<bool> generators_listed_;
    mutable std::optional<SparseMatrix> identity0_;
};

/// Reduces each boundary matrix left to right by lowest nonzero entry, reducing
/// the highest dimension first so its pivots clear columns one dimension down.
/// Throws std::invalid_argument if consecutive boundaries do not compose to zero.
ReducedChainComplex reduce(const std::vector<BoundaryMatrix>& boundaries, std::size_t num_vertices,
                           ReduceOptions options = {});

/// Reduces the boundary matrices of a complex.
ReducedChainComplex reduce(const SimplicialComplex& complex, Scalar p = kDefaultModulus,
                           ReduceOptions options = {});

/// Reduction of the 2-dimensional flag complex of a graph (the Rips complex when
/// the graph is a Rips 1-skeleton), without listing its triangles.
///
/// The triangles that kill 1-cycles are found by reducing the coboundary of the
/// edges, edges in decreasing order with the earliest triangle as pivot; the
/// pairing of a simplexwise order is the same for homology and cohomology. Only
/// those triangles are then reduced as in reduce(), so R_1, U_1, I_0, I_1 and the
/// nonzero columns of R_2 equal those of reduce() on the full complex.
/// U_2 is not available.
ReducedChainComplex reduce_flag(const SimplicialComplex& skeleton, Scalar p = kDefaultModulus);

BettiVector betti(const ReducedChainComplex& rcc);

}  // namespace subhom

#endif  // SUBHOM_HOMOLOGY_HPP
