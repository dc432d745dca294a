#ifndef SUBHOM_GREEDY_HPP
#define SUBHOM_GREEDY_HPP

#include "subhom/field.hpp"
#include "subhom/homology.hpp"
#include "subhom/induced_map.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace subhom {

struct WeightOptions {
    /// Leave all-zero columns out of the distinct-pattern count.
    bool ignore_zero_columns = false;
    /// Count distinct rows instead of distinct columns.
    bool compare_rows = false;
};

/// Binarized maps with their weights and the processing order.
struct WeightedMapSet {
    std::vector<InducedMap> maps;
    std::vector<std::size_t> weights;
    /// Indices into maps, weight descending, ties by index ascending.
    std::vector<std::size_t> order;
};

/// Number of distinct column (or row) patterns of the binarized matrix.
std::size_t map_weight(const FieldMatrix& binary, const WeightOptions& options = {});

WeightedMapSet form_weights(const std::vector<InducedMap>& ensemble, const WeightOptions& options = {});

struct BasisProvenance {
    std::size_t sample_id = 0;
    std::size_t column = 0;

    friend bool operator==(const BasisProvenance&, const BasisProvenance&) = default;
};

struct HomologyBasisEstimate {
    /// Accepted vectors as columns. Each acceptance after the seed map appends one
    /// zero row, so rows = common map row count + n_zeros.
    FieldMatrix basis;
    std::vector<BasisProvenance> provenance;
    std::size_t n_zeros = 0;
};

/// Seeds the basis with the independent columns of the first map in `order`, then
/// visits the remaining maps' columns in order, zero-padded to the current row
/// count, accepting each one outside the current span. Throws std::invalid_argument
/// if maps with columns disagree on their row count.
HomologyBasisEstimate greedy_basis(const WeightedMapSet& weighted);

/// (beta0_full, rank of the basis).
BettiVector estimate_from_basis(const HomologyBasisEstimate& est, std::size_t beta0_full);

struct RankStatistics {
    std::size_t size = 0;
    double mean_rank = 0.0;
    /// rank -> number of maps with that rank
    std::map<std::size_t, std::size_t> histogram;
};

/// One entry per sample size, ascending.
std::vector<RankStatistics> rank_statistics(const std::vector<InducedMap>& ensemble);

}  // namespace subhom

#endif  // SUBHOM_GREEDY_HPP
