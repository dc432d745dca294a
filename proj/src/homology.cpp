#include "subhom/homology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <string>

namespace subhom {

std::size_t ReducedChainComplex::size(int k) const
{
    if (k < 0 || k > max_dim())
        return 0;
    return sizes_[static_cast<std::size_t>(k)];
}

const SparseMatrix& ReducedChainComplex::reduced(int k) const
{
    if (k < 1 || k > max_dim())
        throw std::out_of_range("no reduced boundary in dimension " + std::to_string(k));
    return reduced_[static_cast<std::size_t>(k)];
}

bool ReducedChainComplex::compact(int k) const
{
    return k >= 1 && k <= max_dim() && !generators_listed_[static_cast<std::size_t>(k)];
}

const Simplex& ReducedChainComplex::compact_simplex(int k, std::size_t col) const
{
    if (!compact(k))
        throw std::logic_error("reduced boundary in dimension " + std::to_string(k) + " is not compact");
    return compact_simplices_[static_cast<std::size_t>(k)].at(col);
}

bool ReducedChainComplex::has_basis(int k) const
{
    if (k < 0 || k > max_dim())
        return false;
    return k == 0 || basis_[static_cast<std::size_t>(k)].has_value();
}

const SparseMatrix& ReducedChainComplex::basis(int k) const
{
    if (k < 0 || k > max_dim())
        throw std::out_of_range("no basis in dimension " + std::to_string(k));
    if (k == 0) {
        if (!identity0_)
            identity0_ = SparseMatrix::identity(sizes_[0], p_);
        return *identity0_;
    }
    const auto& u = basis_[static_cast<std::size_t>(k)];
    if (!u)
        throw std::logic_error("basis in dimension " + std::to_string(k) + " was not tracked");
    return *u;
}

std::optional<std::size_t> ReducedChainComplex::pivot_column(int k, std::size_t row) const
{
    if (k < 1 || k > max_dim())
        return std::nullopt;
    const auto& piv = pivot_of_row_[static_cast<std::size_t>(k)];
    if (row >= piv.size() || piv[row] < 0)
        return std::nullopt;
    return static_cast<std::size_t>(piv[row]);
}

const std::vector<std::size_t>& ReducedChainComplex::generators(int k) const
{
    if (k < 0 || k > max_dim())
        throw std::out_of_range("no generators in dimension " + std::to_string(k));
    if (!generators_listed_[static_cast<std::size_t>(k)])
        throw std::logic_error("generators in dimension " + std::to_string(k) + " were not listed");
    return generators_[static_cast<std::size_t>(k)];
}

BettiVector ReducedChainComplex::betti() const
{
    return BettiVector{betti_};
}

namespace {

struct DimReduction {
    SparseMatrix r;
    std::optional<SparseMatrix> u;
    std::vector<std::int64_t> pivot_of_row;
};

// `cleared[j] >= 0` names the column of R_{k+1} whose low is j; that column is
// a cycle with low j, so it replaces b_j and R_k column j is zero without work.
DimReduction reduce_dimension(const SparseMatrix& d, bool track_u, const std::vector<std::int64_t>& cleared,
                              const SparseMatrix* above)
{
    const PrimeField f(d.modulus());
    const std::size_t n = d.cols();
    DimReduction out{SparseMatrix(d.rows(), n, d.modulus()), std::nullopt,
                     std::vector<std::int64_t>(d.rows(), -1)};
    if (track_u)
        out.u.emplace(n, n, d.modulus());

    SparseColumn scratch;
    for (std::size_t j = 0; j < n; ++j) {
        if (!cleared.empty() && cleared[j] >= 0) {
            if (track_u)
                out.u->column(j) = above->column(static_cast<std::size_t>(cleared[j]));
            continue;
        }
        SparseColumn col = d.column(j);
        SparseColumn u;
        if (track_u)
            u.push_back({static_cast<std::uint32_t>(j), 1});
        while (!col.empty()) {
            const std::int64_t l = out.pivot_of_row[col.back().index];
            if (l < 0)
                break;
            const auto& pivot = out.r.column(static_cast<std::size_t>(l));
            const Scalar a = f.neg(f.div(col.back().value, pivot.back().value));
            add_scaled_inplace(col, a, pivot, f, scratch);
            if (track_u)
                add_scaled_inplace(u, a, out.u->column(static_cast<std::size_t>(l)), f, scratch);
        }
        if (!col.empty())
            out.pivot_of_row[col.back().index] = static_cast<std::int64_t>(j);
        out.r.column(j) = std::move(col);
        if (track_u)
            out.u->column(j) = std::move(u);
    }
    return out;
}

void check_composes_to_zero(const SparseMatrix& lower, const SparseMatrix& upper, int k)
{
    const PrimeField f(lower.modulus());
    SparseColumn acc;
    SparseColumn scratch;
    for (std::size_t j = 0; j < upper.cols(); ++j) {
        acc.clear();
        for (const auto& e : upper.column(j))
            add_scaled_inplace(acc, e.value, lower.column(e.index), f, scratch);
        if (!acc.empty())
            throw std::invalid_argument("boundary of boundary is nonzero: d_" + std::to_string(k) + " d_" +
                                        std::to_string(k + 1) + " column " + std::to_string(j));
    }
}

}  // namespace

ReducedChainComplex reduce(const std::vector<BoundaryMatrix>& boundaries, std::size_t num_vertices,
                           ReduceOptions options)
{
    ReducedChainComplex rcc;
    const std::size_t top = boundaries.size();
    rcc.p_ = top > 0 ? boundaries[0].matrix.modulus() : kDefaultModulus;
    rcc.sizes_.push_back(num_vertices);
    for (std::size_t i = 0; i < top; ++i) {
        const auto& b = boundaries[i];
        if (b.k != static_cast<int>(i) + 1)
            throw std::invalid_argument("boundary matrices must be listed as d_1, d_2, ...");
        if (b.matrix.modulus() != rcc.p_)
            throw std::invalid_argument("boundary matrices over different fields");
        if (b.matrix.rows() != rcc.sizes_.back())
            throw std::invalid_argument("d_" + std::to_string(b.k) + " has " + std::to_string(b.matrix.rows()) +
                                        " rows, expected " + std::to_string(rcc.sizes_.back()));
        rcc.sizes_.push_back(b.matrix.cols());
    }
    for (std::size_t i = 1; i < top; ++i)
        check_composes_to_zero(boundaries[i - 1].matrix, boundaries[i].matrix, static_cast<int>(i));

    rcc.reduced_.resize(top + 1);
    rcc.basis_.resize(top + 1);
    rcc.pivot_of_row_.resize(top + 1);
    rcc.generators_.resize(top + 1);
    rcc.compact_simplices_.resize(top + 1);
    rcc.generators_listed_.assign(top + 1, true);

    for (std::size_t k = top; k >= 1; --k) {
        std::vector<std::int64_t> cleared;
        const SparseMatrix* above = nullptr;
        if (k < top) {
            cleared = rcc.pivot_of_row_[k + 1];
            above = &rcc.reduced_[k + 1];
        }
        const bool track = options.track_bases && (k < top || options.track_top_basis);
        auto dr = reduce_dimension(boundaries[k - 1].matrix, track, cleared, above);
        rcc.reduced_[k] = std::move(dr.r);
        rcc.basis_[k] = std::move(dr.u);
        rcc.pivot_of_row_[k] = std::move(dr.pivot_of_row);
    }

    for (std::size_t k = 0; k <= top; ++k) {
        for (std::size_t j = 0; j < rcc.sizes_[k]; ++j) {
            const bool cycle = k == 0 || rcc.reduced_[k].column(j).empty();
            const bool killed = k < top && rcc.pivot_of_row_[k + 1][j] >= 0;
            if (cycle && !killed)
                rcc.generators_[k].push_back(j);
        }
        rcc.betti_.push_back(rcc.generators_[k].size());
    }
    return rcc;
}

ReducedChainComplex reduce(const SimplicialComplex& complex, Scalar p, ReduceOptions options)
{
    return reduce(boundary_matrices(complex, p), complex.num_vertices(), options);
}

namespace {

// Adjacency of the 1-skeleton, with triangles of its flag complex encoded as
// (a * n + b) * n + c for a < b < c so that code order is lexicographic order.
class FlagGraph {
public:
    explicit FlagGraph(const SimplicialComplex& skeleton) : n_(skeleton.num_vertices()), nbrs_(n_)
    {
        if (n_ > (std::size_t{1} << 21))
            throw std::invalid_argument("reduce_flag: too many vertices");
        for (const Edge& e : skeleton.edges()) {
            nbrs_[e[0]].push_back(e[1]);
            nbrs_[e[1]].push_back(e[0]);
        }
        for (auto& l : nbrs_)
            std::sort(l.begin(), l.end());
    }

    std::uint64_t code(Vertex a, Vertex b, Vertex c) const
    {
        return (std::uint64_t{a} * n_ + b) * n_ + c;
    }

    Triangle decode(std::uint64_t code) const
    {
        const auto c = static_cast<Vertex>(code % n_);
        code /= n_;
        return {static_cast<Vertex>(code / n_), static_cast<Vertex>(code % n_), c};
    }

    /// Calls fn(c) for every common neighbour c of a and b, ascending; stops when fn returns false.
    template <class Fn>
    void for_common(Vertex a, Vertex b, Fn&& fn) const
    {
        const auto& x = nbrs_[a];
        const auto& y = nbrs_[b];
        auto i = x.begin();
        auto j = y.begin();
        while (i != x.end() && j != y.end()) {
            if (*i < *j)
                ++i;
            else if (*j < *i)
                ++j;
            else {
                if (!fn(*i))
                    return;
                ++i;
                ++j;
            }
        }
    }

private:
    std::size_t n_;
    std::vector<std::vector<Vertex>> nbrs_;
};

struct CoEntry {
    std::uint64_t code;
    Scalar coeff;
    bool operator>(const CoEntry& o) const { return code > o.code; }
};

using CoHeap = std::priority_queue<CoEntry, std::vector<CoEntry>, std::greater<>>;

// One cohomology column that owns a pivot: the combination sum w * delta(edge).
struct Claim {
    std::uint64_t pivot;
    Scalar pivot_coeff;
    std::size_t edge;
    std::vector<std::pair<std::size_t, Scalar>> combination;
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v)
{
    while (parent[v] != v) {
        parent[v] = parent[parent[v]];
        v = parent[v];
    }
    return v;
}

}  // namespace

ReducedChainComplex reduce_flag(const SimplicialComplex& skeleton, Scalar p)
{
    const PrimeField f(p);
    const std::size_t nv = skeleton.num_vertices();
    const auto edges = skeleton.edges();
    const std::size_t ne = edges.size();
    const FlagGraph graph(skeleton);

    // Edges that join two components are paired with vertices; their coboundary
    // columns would reduce to zero.
    std::vector<bool> negative(ne, false);
    {
        std::vector<std::size_t> parent(nv);
        std::iota(parent.begin(), parent.end(), std::size_t{0});
        for (std::size_t e = 0; e < ne; ++e) {
            const auto ra = find_root(parent, edges[e][0]);
            const auto rb = find_root(parent, edges[e][1]);
            if (ra != rb) {
                parent[std::max(ra, rb)] = std::min(ra, rb);
                negative[e] = true;
            }
        }
    }

    auto push_coboundary = [&](CoHeap& heap, std::size_t e, Scalar w) {
        const Vertex a = edges[e][0];
        const Vertex b = edges[e][1];
        const Scalar minus = f.neg(w);
        graph.for_common(a, b, [&](Vertex c) {
            if (c < a)
                heap.push({graph.code(c, a, b), w});
            else if (c < b)
                heap.push({graph.code(a, c, b), minus});
            else
                heap.push({graph.code(a, b, c), w});
            return true;
        });
    };
    auto pop_pivot = [&](CoHeap& heap) -> std::optional<CoEntry> {
        while (!heap.empty()) {
            CoEntry top = heap.top();
            heap.pop();
            while (!heap.empty() && heap.top().code == top.code) {
                top.coeff = f.add(top.coeff, heap.top().coeff);
                heap.pop();
            }
            if (top.coeff != 0)
                return top;
        }
        return std::nullopt;
    };

    std::vector<Claim> claims;
    std::unordered_map<std::uint64_t, std::size_t> owner;
    for (std::size_t e = ne; e-- > 0;) {
        if (negative[e])
            continue;
        const Vertex a = edges[e][0];
        const Vertex b = edges[e][1];
        std::optional<Vertex> first;
        graph.for_common(a, b, [&](Vertex c) {
            first = c;
            return false;
        });
        if (!first)
            continue;
        if (*first < a) {
            // e is the last facet of its first cofacet, so nothing processed
            // before can own that pivot.
            const std::uint64_t t = graph.code(*first, a, b);
            if (!owner.contains(t)) {
                owner.emplace(t, claims.size());
                claims.push_back({t, 1, e, {}});
                continue;
            }
        }
        CoHeap heap;
        push_coboundary(heap, e, 1);
        std::vector<std::pair<std::size_t, Scalar>> combination{{e, 1}};
        while (const auto pivot = pop_pivot(heap)) {
            const auto it = owner.find(pivot->code);
            if (it == owner.end()) {
                std::sort(combination.begin(), combination.end());
                std::vector<std::pair<std::size_t, Scalar>> merged;
                for (const auto& [g, w] : combination) {
                    if (!merged.empty() && merged.back().first == g)
                        merged.back().second = f.add(merged.back().second, w);
                    else
                        merged.emplace_back(g, w);
                }
                std::erase_if(merged, [](const auto& gw) { return gw.second == 0; });
                owner.emplace(pivot->code, claims.size());
                claims.push_back({pivot->code, pivot->coeff, e, std::move(merged)});
                break;
            }
            heap.push(*pivot);
            const Claim& other = claims[it->second];
            const Scalar factor = f.neg(f.div(pivot->coeff, other.pivot_coeff));
            if (other.combination.empty()) {
                push_coboundary(heap, other.edge, factor);
                combination.emplace_back(other.edge, factor);
            } else {
                for (const auto& [g, w] : other.combination) {
                    const Scalar fw = f.mul(factor, w);
                    push_coboundary(heap, g, fw);
                    combination.emplace_back(g, fw);
                }
            }
        }
    }

    // Reduce the boundaries of the paired triangles in lexicographic order.
    std::sort(claims.begin(), claims.end(), [](const Claim& x, const Claim& y) { return x.pivot < y.pivot; });
    ReducedChainComplex rcc;
    rcc.p_ = p;
    SparseMatrix r2(ne, claims.size(), p);
    std::vector<std::int64_t> pivot2(ne, -1);
    std::vector<Simplex> simplices2;
    simplices2.reserve(claims.size());
    SparseColumn scratch;
    for (std::size_t i = 0; i < claims.size(); ++i) {
        const auto [a, b, c] = graph.decode(claims[i].pivot);
        SparseColumn col{{static_cast<std::uint32_t>(*skeleton.edge_index(a, b)), 1},
                         {static_cast<std::uint32_t>(*skeleton.edge_index(a, c)), f.neg(1)},
                         {static_cast<std::uint32_t>(*skeleton.edge_index(b, c)), 1}};
        while (!col.empty()) {
            const std::int64_t l = pivot2[col.back().index];
            if (l < 0)
                break;
            const auto& piv = r2.column(static_cast<std::size_t>(l));
            add_scaled_inplace(col, f.neg(f.div(col.back().value, piv.back().value)), piv, f, scratch);
        }
        if (col.empty() || col.back().index != claims[i].edge)
            throw std::logic_error("reduce_flag: homology and cohomology pairings disagree");
        pivot2[col.back().index] = static_cast<std::int64_t>(i);
        r2.column(i) = std::move(col);
        simplices2.push_back({a, b, c});
    }

    std::size_t triangles = 0;
    for (const Edge& e : edges)
        graph.for_common(e[0], e[1], [&](Vertex c) {
            triangles += c > e[1] ? 1 : 0;
            return true;
        });

    auto d1 = boundary_matrices(SimplicialComplex(std::vector<std::size_t>(skeleton.vertex_ids().begin(),
                                                                           skeleton.vertex_ids().end()),
                                                  std::vector<Edge>(edges.begin(), edges.end()), {}, 1),
                                p);
    auto dr = reduce_dimension(d1.front().matrix, true, pivot2, &r2);

    rcc.sizes_ = {nv, ne, triangles};
    rcc.reduced_.resize(3);
    rcc.reduced_[1] = std::move(dr.r);
    rcc.reduced_[2] = std::move(r2);
    rcc.basis_.resize(3);
    rcc.basis_[1] = std::move(dr.u);
    rcc.pivot_of_row_.resize(3);
    rcc.pivot_of_row_[1] = std::move(dr.pivot_of_row);
    rcc.pivot_of_row_[2] = std::move(pivot2);
    rcc.generators_.resize(3);
    rcc.compact_simplices_.resize(3);
    rcc.compact_simplices_[2] = std::move(simplices2);
    rcc.generators_listed_ = {true, true, false};
    for (std::size_t v = 0; v < nv; ++v)
        if (rcc.pivot_of_row_[1][v] < 0)
            rcc.generators_[0].push_back(v);
    for (std::size_t e = 0; e < ne; ++e)
        if (rcc.reduced_[1].column(e).empty() && rcc.pivot_of_row_[2][e] < 0)
            rcc.generators_[1].push_back(e);
    rcc.betti_ = {rcc.generators_[0].size(), rcc.generators_[1].size(), triangles - claims.size()};
    return rcc;
}

BettiVector betti(const ReducedChainComplex& rcc)
{
    return rcc.betti();
}

}  // namespace subhom
