#ifndef SUBHOM_IO_HPP
#define SUBHOM_IO_HPP

#include "subhom/bench.hpp"
#include "subhom/construction.hpp"
#include "subhom/field.hpp"
#include "subhom/greedy.hpp"
#include "subhom/homology.hpp"
#include "subhom/induced_map.hpp"
#include "subhom/persistence.hpp"
#include "subhom/rips.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace subhom {

using Json = nlohmann::json;

/// {"rows": r, "cols": c, "p": p, "entries": [[...], ...]} with one array per row.
Json matrix_to_json(const FieldMatrix& m);

/// Accepts the object form above or a bare array of rows (p = default_p). A bare
/// "[]" is 0x0 and "[[]]" is 1x0. Throws std::invalid_argument on malformed input.
FieldMatrix matrix_from_json(const Json& j, Scalar default_p = kDefaultModulus);

Json betti_to_json(const BettiVector& b);

/// Array of {sample_id, size, seed, k, matrix, betti_sub, timing_ms}. timing_ms is
/// left out when omit_timings is set so reruns compare byte for byte.
Json ensemble_to_json(const EnsembleResult& ensemble, bool omit_timings = false);

/// Reads induced maps from an ensemble array. Only sample_id and matrix are
/// required; size defaults to 0 and k to 1.
std::vector<InducedMap> maps_from_json(const Json& j, Scalar default_p = kDefaultModulus);

/// {"p", "columns", "provenance", "n_zeros", "beta_estimate"}.
Json basis_to_json(const HomologyBasisEstimate& est, const BettiVector& estimate);

Json report_to_json(const ConstructionReport& report);

/// {"dim": d, "simplices": [[vertices], [edges], [triangles]]}, vertices given by point id.
Json complex_to_json(const SimplicialComplex& complex);

Json persistence_to_json(const std::vector<PersistencePair>& pairs);

Json rank_statistics_to_json(const std::vector<RankStatistics>& stats);

/// Per (method, size): mean wall time, mean Betti numbers and the sample hashes.
Json benchmark_summary_json(const std::vector<BenchmarkRecord>& records);

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

}  // namespace subhom

#endif  // SUBHOM_IO_HPP
