#ifndef SUBHOM_PERSISTENCE_HPP
#define SUBHOM_PERSISTENCE_HPP

#include "subhom/field.hpp"
#include "subhom/pointcloud.hpp"

#include <cstddef>
#include <iosfwd>
#include <vector>

namespace subhom {

/// death is +infinity for classes alive at the last step.
struct PersistencePair {
    double birth = 0.0;
    double death = 0.0;
    int dim = 0;

    friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

/// Persistence of the Rips filtration sampled at r_max * s / steps, s = 1..steps.
///
/// A simplex enters at the first step not below its diameter (vertices at 0).
/// Simplices are ordered by (entry value, dimension, lexicographic) and reduced
/// with the standard column algorithm. Pairs of zero length are dropped; classes
/// of dimension 0 and 1 that never die get death = infinity. Output is sorted by
/// (dim, birth, death).
std::vector<PersistencePair> persistence_baseline(const PointCloud& cloud, double r_max, std::size_t steps,
                                                  Scalar p = kDefaultModulus);

/// Number of infinite pairs per dimension 0 and 1.
std::vector<std::size_t> essential_counts(const std::vector<PersistencePair>& pairs);

/// Header line "birth,death,dim"; infinity is written as "inf".
void write_persistence_csv(std::ostream& out, const std::vector<PersistencePair>& pairs);

}  // namespace subhom

#endif  // SUBHOM_PERSISTENCE_HPP
