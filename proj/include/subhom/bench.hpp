#ifndef SUBHOM_BENCH_HPP
#define SUBHOM_BENCH_HPP

#include "subhom/greedy.hpp"
#include "subhom/homology.hpp"
#include "subhom/induced_map.hpp"
#include "subhom/pointcloud.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace subhom {

enum class BenchMethod { RC, GMA, TB };

std::string to_string(BenchMethod method);

struct BenchmarkRecord {
    BenchMethod method = BenchMethod::RC;
    std::size_t size = 0;
    std::uint64_t seed = 0;
    double wall_time_s = 0.0;
    BettiVector homology;
    /// Hash of the sub-sample indices the method consumed; equal across methods
    /// for the same (size, seed).
    std::uint64_t sample_hash = 0;
};

struct BootstrapResult {
    std::size_t size = 0;
    BettiVector homology;
};

/// Topological bootstrapping: per size, the Betti numbers of every replicate's
/// own complex summed over the replicates, with no matching of features between
/// samples.
std::vector<BootstrapResult> bootstrap_baseline(const PointCloud& full, const SampleSchedule& schedule,
                                                const EnsembleOptions& options = {});

/// Same aggregation from Betti numbers already computed for an ensemble.
std::vector<BootstrapResult> bootstrap_from_ensemble(const EnsembleResult& ensemble);

struct BenchmarkOptions {
    EnsembleOptions ensemble;
    WeightOptions weights;
    std::size_t persistence_steps = 10;
};

/// FNV-1a over the index lists of the samples.
std::uint64_t sample_hash(const std::vector<const SampleRecord*>& samples);

/// Per size, one record each for RC (persistence baseline of every replicate, up
/// to that replicate's threshold), GMA (weights and greedy basis over the
/// precomputed induced maps) and TB (complex, reduction and Betti numbers of every
/// replicate). `seed` is the schedule seed.
std::vector<BenchmarkRecord> run_benchmark(const PointCloud& full, const SampleSchedule& schedule,
                                           const BenchmarkOptions& options = {});

/// Columns method,size,seed,wall_time_s,beta0,beta1.
void write_benchmark_csv(std::ostream& out, const std::vector<BenchmarkRecord>& records);

}  // namespace subhom

#endif  // SUBHOM_BENCH_HPP
