#include "subhom/persistence.hpp"

#include "subhom/homology.hpp"
#include "subhom/rips.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace subhom {

namespace {

std::size_t entry_step(double diameter, double r_max, std::size_t steps)
{
    auto s = static_cast<std::size_t>(std::ceil(diameter / r_max * static_cast<double>(steps)));
    s = std::max<std::size_t>(s, 1);
    while (s < steps && r_max * static_cast<double>(s) / static_cast<double>(steps) < diameter)
        ++s;
    return std::min(s, steps);
}

std::vector<std::size_t> filtration_order(const std::vector<std::size_t>& step)
{
    std::vector<std::size_t> order(step.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return step[a] < step[b]; });
    return order;
}

void sort_column(SparseColumn& c)
{
    std::sort(c.begin(), c.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
}

}  // namespace

std::vector<PersistencePair> persistence_baseline(const PointCloud& cloud, double r_max, std::size_t steps, Scalar p)
{
    if (steps < 1)
        throw std::invalid_argument("persistence_baseline: steps must be at least 1");
    if (!(r_max > 0.0))
        throw std::invalid_argument("persistence_baseline: r_max must be positive");
    const SimplicialComplex complex = build_rips(cloud, r_max, 2, RipsOptions{true});
    const PrimeField f(p);
    const double inf = std::numeric_limits<double>::infinity();

    const auto edges = complex.edges();
    const auto tris = complex.triangles();
    std::vector<std::size_t> edge_step(edges.size());
    for (std::size_t e = 0; e < edges.size(); ++e)
        edge_step[e] = entry_step(euclidean_distance(cloud.point(edges[e][0]), cloud.point(edges[e][1])), r_max, steps);
    std::vector<std::size_t> tri_step(tris.size());
    for (std::size_t t = 0; t < tris.size(); ++t) {
        const auto [a, b, c] = tris[t];
        tri_step[t] = std::max({edge_step[*complex.edge_index(a, b)], edge_step[*complex.edge_index(a, c)],
                                edge_step[*complex.edge_index(b, c)]});
    }
    const auto edge_order = filtration_order(edge_step);
    const auto tri_order = filtration_order(tri_step);
    std::vector<std::uint32_t> edge_pos(edges.size());
    for (std::size_t i = 0; i < edge_order.size(); ++i)
        edge_pos[edge_order[i]] = static_cast<std::uint32_t>(i);

    std::vector<BoundaryMatrix> bds;
    SparseMatrix d1(complex.num_vertices(), edges.size(), p);
    for (std::size_t i = 0; i < edge_order.size(); ++i) {
        const auto& e = edges[edge_order[i]];
        d1.column(i) = {{e[0], f.neg(1)}, {e[1], 1}};
    }
    SparseMatrix d2(edges.size(), tris.size(), p);
    for (std::size_t i = 0; i < tri_order.size(); ++i) {
        const auto [a, b, c] = tris[tri_order[i]];
        auto& col = d2.column(i);
        col = {{edge_pos[*complex.edge_index(a, b)], 1},
               {edge_pos[*complex.edge_index(a, c)], f.neg(1)},
               {edge_pos[*complex.edge_index(b, c)], 1}};
        sort_column(col);
    }
    bds.push_back({1, std::move(d1)});
    bds.push_back({2, std::move(d2)});
    ReduceOptions options;
    options.track_bases = false;
    const ReducedChainComplex rcc = reduce(bds, complex.num_vertices(), options);

    auto value = [&](int dim, std::size_t pos) -> double {
        if (dim == 0)
            return 0.0;
        const std::size_t s = dim == 1 ? edge_step[edge_order[pos]] : tri_step[tri_order[pos]];
        return r_max * static_cast<double>(s) / static_cast<double>(steps);
    };

    std::vector<PersistencePair> pairs;
    for (int k = 1; k <= 2; ++k) {
        const auto& r = rcc.reduced(k);
        for (std::size_t j = 0; j < r.cols(); ++j) {
            const auto lo = low(r.column(j));
            if (!lo)
                continue;
            const double birth = value(k - 1, *lo);
            const double death = value(k, j);
            if (death > birth)
                pairs.push_back({birth, death, k - 1});
        }
    }
    for (int k = 0; k <= 1; ++k)
        for (std::size_t j : rcc.generators(k))
            pairs.push_back({value(k, j), inf, k});

    std::sort(pairs.begin(), pairs.end(), [](const PersistencePair& a, const PersistencePair& b) {
        if (a.dim != b.dim)
            return a.dim < b.dim;
        if (a.birth != b.birth)
            return a.birth < b.birth;
        return a.death < b.death;
    });
    return pairs;
}

std::vector<std::size_t> essential_counts(const std::vector<PersistencePair>& pairs)
{
    std::vector<std::size_t> out(2, 0);
    for (const auto& pr : pairs)
        if (std::isinf(pr.death) && pr.dim >= 0 && pr.dim <= 1)
            ++out[static_cast<std::size_t>(pr.dim)];
    return out;
}

void write_persistence_csv(std::ostream& out, const std::vector<PersistencePair>& pairs)
{
    out << "birth,death,dim\n";
    for (const auto& pr : pairs) {
        out << pr.birth << ',';
        if (std::isinf(pr.death))
            out << "inf";
        else
            out << pr.death;
        out << ',' << pr.dim << '\n';
    }
}

}  // namespace subhom
