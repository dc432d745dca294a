#include "subhom/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace subhom {

std::size_t map_weight(const FieldMatrix& binary, const WeightOptions& options)
{
    const FieldMatrix m = options.compare_rows ? binary.transpose() : binary;
    std::set<std::vector<Scalar>> patterns;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (options.ignore_zero_columns && m.column_is_zero(j))
            continue;
        patterns.insert(m.column(j));
    }
    return patterns.size();
}

WeightedMapSet form_weights(const std::vector<InducedMap>& ensemble, const WeightOptions& options)
{
    WeightedMapSet out;
    out.maps.reserve(ensemble.size());
    for (const auto& im : ensemble) {
        InducedMap b = im;
        b.matrix = binarize(im.matrix);
        out.weights.push_back(map_weight(b.matrix, options));
        out.maps.push_back(std::move(b));
    }
    out.order.resize(ensemble.size());
    std::iota(out.order.begin(), out.order.end(), std::size_t{0});
    std::stable_sort(out.order.begin(), out.order.end(),
                     [&](std::size_t a, std::size_t b) { return out.weights[a] > out.weights[b]; });
    return out;
}

HomologyBasisEstimate greedy_basis(const WeightedMapSet& weighted)
{
    std::optional<std::size_t> rows;
    Scalar p = kDefaultModulus;
    for (const auto& im : weighted.maps) {
        if (im.matrix.cols() == 0)
            continue;
        if (rows && *rows != im.matrix.rows())
            throw std::invalid_argument("greedy_basis: induced maps have " + std::to_string(*rows) + " and " +
                                        std::to_string(im.matrix.rows()) + " rows");
        rows = im.matrix.rows();
        p = im.matrix.modulus();
    }
    if (!weighted.maps.empty() && !rows) {
        rows = weighted.maps[weighted.order.front()].matrix.rows();
        p = weighted.maps[weighted.order.front()].matrix.modulus();
    }

    HomologyBasisEstimate est;
    est.basis = FieldMatrix(rows.value_or(0), 0, p);
    bool seeded = false;
    for (std::size_t idx : weighted.order) {
        const InducedMap& im = weighted.maps[idx];
        for (std::size_t j = 0; j < im.matrix.cols(); ++j) {
            std::vector<Scalar> b = im.matrix.column(j);
            if (seeded)
                b.resize(b.size() + est.n_zeros, 0);
            if (solve_in_span(est.basis, b))
                continue;
            est.basis.append_column(b);
            est.provenance.push_back({im.sample_id, j});
            if (seeded) {
                est.basis.append_zero_rows(1);
                ++est.n_zeros;
            }
        }
        seeded = true;
    }
    return est;
}

BettiVector estimate_from_basis(const HomologyBasisEstimate& est, std::size_t beta0_full)
{
    return BettiVector{{beta0_full, rank(est.basis)}};
}

std::vector<RankStatistics> rank_statistics(const std::vector<InducedMap>& ensemble)
{
    std::map<std::size_t, RankStatistics> by_size;
    for (const auto& im : ensemble) {
        auto& s = by_size[im.sample_size];
        s.size = im.sample_size;
        ++s.histogram[rank(im.matrix)];
    }
    std::vector<RankStatistics> out;
    for (auto& [size, s] : by_size) {
        std::size_t total = 0;
        std::size_t count = 0;
        for (const auto& [r, c] : s.histogram) {
            total += r * c;
            count += c;
        }
        s.mean_rank = static_cast<double>(total) / static_cast<double>(count);
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace subhom
