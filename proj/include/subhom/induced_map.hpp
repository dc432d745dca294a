#ifndef SUBHOM_INDUCED_MAP_HPP
#define SUBHOM_INDUCED_MAP_HPP

#include "subhom/field.hpp"
#include "subhom/homology.hpp"
#include "subhom/pointcloud.hpp"
#include "subhom/rips.hpp"
#include "subhom/sparse.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace subhom {

/// A caller-side precondition does not hold (for example a sub-sample simplex
/// that is missing from the full complex).
class PreconditionViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Matrix of H_k(sub) -> H_k(full): rows are the full generators I^D_k, columns
/// the sub-sample generators I^C_k, both ascending.
struct InducedMap {
    FieldMatrix matrix;
    int k = 1;
    std::size_t sample_id = 0;
    std::size_t sample_size = 0;
};

/// Chain map C_k(sub) -> C_k(full) sending each simplex to the full simplex on the
/// same point ids. Entries are +-1: the sign is the parity of the permutation
/// that sorts the mapped vertices into full order (always +1 for order-preserving
/// vertex maps). Throws PreconditionViolation naming the first missing simplex.
SparseMatrix inclusion_chain_map(const SimplicialComplex& sub, const SimplicialComplex& full, int k,
                                 Scalar p = kDefaultModulus);

enum class InducedMethod {
    /// y = U^-1 F x, then eliminate against U^-1 R_{k+1} from the highest pivot down.
    literal,
    /// Reduce F x directly against the columns of R_{k+1} and the generator cycles.
    fast,
};

/// Throws std::invalid_argument on shape or field mismatch, std::logic_error if a
/// needed basis U_k was not tracked.
InducedMap induced_on_homology(const ReducedChainComplex& sub, const ReducedChainComplex& full,
                               const SparseMatrix& chain_map, int k, InducedMethod method = InducedMethod::fast);

/// How the Rips threshold of each complex is chosen.
struct ThresholdRule {
    enum class Kind { hausdorff, fixed };
    Kind kind = Kind::hausdorff;
    /// hausdorff: a sample uses base + 2 d_H(sample, full).
    double base = kDefaultThresholdBase;
    /// fixed: every complex uses this radius.
    double radius = 0.0;

    static ThresholdRule hausdorff(double base = kDefaultThresholdBase) { return {Kind::hausdorff, base, 0.0}; }
    static ThresholdRule fixed(double radius) { return {Kind::fixed, 0.0, radius}; }
};

struct EnsembleOptions {
    ThresholdRule rule;
    Scalar p = kDefaultModulus;
    int k = 1;
    unsigned threads = 1;
    bool use_grid = true;
};

struct SampleRecord {
    std::size_t sample_id = 0;
    std::size_t size = 0;
    std::size_t replicate = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> indices;
    double threshold = 0.0;
    BettiVector betti_sub;
    InducedMap map;
    double timing_ms = 0.0;
};

/// One full complex shared by all samples of a size.
struct SizeGroup {
    std::size_t size = 0;
    double threshold = 0.0;
    BettiVector betti_full;
    double timing_ms = 0.0;
};

struct EnsembleResult {
    std::vector<SampleRecord> samples;
    std::vector<SizeGroup> groups;

    std::vector<InducedMap> maps() const;
    const SizeGroup& group(std::size_t size) const;
};

/// Seed of replicate r of sub-sample size n.
std::uint64_t sample_seed(std::uint64_t base, std::size_t size, std::size_t replicate);

/// For each size in the schedule the full cloud's complex is built once, at the
/// largest threshold of that size's samples under the hausdorff rule, so every
/// sample complex of the size includes into it and all its maps share one row
/// count. Samples are numbered in schedule order, replicates innermost.
EnsembleResult induced_map_ensemble(const PointCloud& full, const SampleSchedule& schedule,
                                    const EnsembleOptions& options = {});

}  // namespace subhom

#endif  // SUBHOM_INDUCED_MAP_HPP
