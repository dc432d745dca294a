#ifndef SUBHOM_CONSTRUCTION_HPP
#define SUBHOM_CONSTRUCTION_HPP

#include "subhom/field.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace subhom {

enum class ConstructionKind { figure8, annulus };

std::string to_string(ConstructionKind kind);

/// Column subsets of the checked matrix. `first` (and `second` for figure-8) are
/// dependent; `common` is a column in both with a nonzero kernel coefficient.
struct ConstructionWitness {
    std::vector<std::size_t> first;
    std::vector<std::size_t> second;
    std::optional<std::size_t> common;
};

struct ConstructionReport {
    ConstructionKind kind = ConstructionKind::annulus;
    bool found = false;
    std::optional<ConstructionWitness> witness;
};

inline constexpr std::size_t kDefaultMaxSubset = 6;

/// Minimal dependent column sets (circuits) with at most max_subset columns, each
/// as ascending indices, ordered by largest index and then lexicographically.
std::vector<std::vector<std::size_t>> column_circuits(const FieldMatrix& h, std::size_t max_subset);

/// Nonzero kernel vector of the columns `subset` of h, if they are dependent.
std::optional<std::vector<Scalar>> kernel_vector(const FieldMatrix& h, const std::vector<std::size_t>& subset);

/// Found iff the columns of h are dependent. The witness is a smallest circuit
/// within max_subset, or else the fundamental circuit of the first column that
/// depends on earlier ones.
ConstructionReport check_annulus(const FieldMatrix& h, std::size_t max_subset = kDefaultMaxSubset);

enum class Figure8Mode {
    /// Two different dependent subsets X != Y, both within max_subset and both
    /// containing a column with nonzero kernel coefficient: either two circuits
    /// sharing a column, or a circuit C and C plus one further column.
    subsets,
    /// Two different circuits sharing a column.
    circuits,
};

ConstructionReport check_figure8(const FieldMatrix& h, std::size_t max_subset = kDefaultMaxSubset,
                                 Figure8Mode mode = Figure8Mode::subsets);

}  // namespace subhom

#endif  // SUBHOM_CONSTRUCTION_HPP
