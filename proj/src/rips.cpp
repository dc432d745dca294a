#include "subhom/rips.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace subhom {

namespace {

std::string tuple_string(std::span<const Vertex> t)
{
    std::string s = "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(t[i]);
    }
    return s + "]";
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::size_t> vertex_ids, std::vector<Edge> edges,
                                     std::vector<Triangle> triangles, int max_dim)
    : max_dim_(max_dim), vertex_ids_(std::move(vertex_ids)), edges_(std::move(edges)),
      triangles_(std::move(triangles))
{
    if (max_dim_ < 0 || max_dim_ > 2)
        throw std::invalid_argument("complex dimension must be 0, 1 or 2");
    if (max_dim_ < 1 && !edges_.empty())
        throw std::invalid_argument("edges present in a 0-dimensional complex");
    if (max_dim_ < 2 && !triangles_.empty())
        throw std::invalid_argument("triangles present in a complex of dimension < 2");

    const std::size_t n = vertex_ids_.size();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (!(ed[0] < ed[1]) || ed[1] >= n)
            throw std::invalid_argument("bad edge " + tuple_string(ed));
        if (e > 0 && !(edges_[e - 1] < ed))
            throw std::invalid_argument("edges not strictly sorted at " + tuple_string(ed));
    }
    edge_offsets_.assign(n + 1, 0);
    for (const Edge& ed : edges_)
        ++edge_offsets_[ed[0] + 1];
    std::partial_sum(edge_offsets_.begin(), edge_offsets_.end(), edge_offsets_.begin());

    for (std::size_t t = 0; t < triangles_.size(); ++t) {
        const Triangle& tr = triangles_[t];
        if (!(tr[0] < tr[1] && tr[1] < tr[2]) || tr[2] >= n)
            throw std::invalid_argument("bad triangle " + tuple_string(tr));
        if (t > 0 && !(triangles_[t - 1] < tr))
            throw std::invalid_argument("triangles not strictly sorted at " + tuple_string(tr));
        if (!edge_index(tr[0], tr[1]) || !edge_index(tr[0], tr[2]) || !edge_index(tr[1], tr[2]))
            throw std::invalid_argument("triangle " + tuple_string(tr) + " is missing a face");
    }

    id_lookup_.reserve(n);
    for (std::size_t v = 0; v < n; ++v)
        id_lookup_.emplace_back(vertex_ids_[v], static_cast<Vertex>(v));
    std::sort(id_lookup_.begin(), id_lookup_.end());
    for (std::size_t i = 1; i < id_lookup_.size(); ++i)
        if (id_lookup_[i].first == id_lookup_[i - 1].first)
            throw std::invalid_argument("duplicate vertex id " + std::to_string(id_lookup_[i].first));
}

SimplicialComplex SimplicialComplex::from_simplices(std::size_t num_vertices, std::vector<Edge> edges,
                                                    std::vector<Triangle> triangles)
{
    std::vector<std::size_t> ids(num_vertices);
    std::iota(ids.begin(), ids.end(), std::size_t{0});
    std::sort(edges.begin(), edges.end());
    std::sort(triangles.begin(), triangles.end());
    const int dim = !triangles.empty() ? 2 : 1;
    return SimplicialComplex(std::move(ids), std::move(edges), std::move(triangles), dim);
}

std::size_t SimplicialComplex::size(int k) const
{
    switch (k) {
    case 0:
        return vertex_ids_.size();
    case 1:
        return max_dim_ >= 1 ? edges_.size() : 0;
    case 2:
        return max_dim_ >= 2 ? triangles_.size() : 0;
    default:
        return 0;
    }
}

Simplex SimplicialComplex::simplex(int k, std::size_t index) const
{
    if (index >= size(k))
        throw std::out_of_range("simplex index out of range");
    switch (k) {
    case 0:
        return {static_cast<Vertex>(index)};
    case 1:
        return {edges_[index][0], edges_[index][1]};
    default:
        return {triangles_[index][0], triangles_[index][1], triangles_[index][2]};
    }
}

std::optional<std::size_t> SimplicialComplex::edge_index(Vertex a, Vertex b) const
{
    if (!(a < b) || b >= vertex_ids_.size())
        return std::nullopt;
    const auto first = edges_.begin() + static_cast<std::ptrdiff_t>(edge_offsets_[a]);
    const auto last = edges_.begin() + static_cast<std::ptrdiff_t>(edge_offsets_[a + 1]);
    const auto it = std::lower_bound(first, last, b, [](const Edge& e, Vertex v) { return e[1] < v; });
    if (it == last || (*it)[1] != b)
        return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<std::size_t> SimplicialComplex::simplex_index(int k, std::span<const Vertex> tuple) const
{
    if (tuple.size() != static_cast<std::size_t>(k) + 1 || k > max_dim_ || k < 0)
        return std::nullopt;
    for (std::size_t i = 1; i < tuple.size(); ++i)
        if (!(tuple[i - 1] < tuple[i]))
            return std::nullopt;
    if (k == 0)
        return tuple[0] < vertex_ids_.size() ? std::optional<std::size_t>(tuple[0]) : std::nullopt;
    if (k == 1)
        return edge_index(tuple[0], tuple[1]);
    const Triangle key{tuple[0], tuple[1], tuple[2]};
    const auto it = std::lower_bound(triangles_.begin(), triangles_.end(), key);
    if (it == triangles_.end() || *it != key)
        return std::nullopt;
    return static_cast<std::size_t>(it - triangles_.begin());
}

std::optional<Vertex> SimplicialComplex::local_vertex(std::size_t id) const
{
    const auto it = std::lower_bound(id_lookup_.begin(), id_lookup_.end(), std::make_pair(id, Vertex{0}));
    if (it == id_lookup_.end() || it->first != id)
        return std::nullopt;
    return it->second;
}

namespace {

// Forward adjacency: for each i, sorted neighbours j > i within distance r.
std::vector<std::vector<Vertex>> neighbours_all_pairs(const PointCloud& cloud, double r)
{
    const std::size_t n = cloud.size();
    std::vector<std::vector<Vertex>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = cloud.point(i);
        for (std::size_t j = i + 1; j < n; ++j)
            if (euclidean_distance(p, cloud.point(j)) <= r)
                adj[i].push_back(static_cast<Vertex>(j));
    }
    return adj;
}

std::vector<std::vector<Vertex>> neighbours_grid(const PointCloud& cloud, double r)
{
    const std::size_t n = cloud.size();
    const std::size_t d = cloud.dim();
    // Slightly enlarged cells so that any pair within r lands in adjacent cells
    // despite rounding in the division.
    const double cell = r * (1.0 + 1e-6);
    auto key_of = [&](std::span<const double> p) {
        std::array<std::int64_t, 3> key{0, 0, 0};
        for (std::size_t a = 0; a < d; ++a)
            key[a] = static_cast<std::int64_t>(std::floor(p[a] / cell));
        return key;
    };
    struct KeyHash {
        std::size_t operator()(const std::array<std::int64_t, 3>& k) const
        {
            std::size_t h = 1469598103934665603ULL;
            for (auto v : k)
                h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ULL;
            return h;
        }
    };
    std::unordered_map<std::array<std::int64_t, 3>, std::vector<Vertex>, KeyHash> grid;
    for (std::size_t i = 0; i < n; ++i)
        grid[key_of(cloud.point(i))].push_back(static_cast<Vertex>(i));

    std::vector<std::vector<Vertex>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto p = cloud.point(i);
        const auto base = key_of(p);
        std::array<std::int64_t, 3> offset{-1, -1, -1};
        for (std::size_t a = d; a < 3; ++a)
            offset[a] = 0;
        while (true) {
            std::array<std::int64_t, 3> k = base;
            for (std::size_t a = 0; a < 3; ++a)
                k[a] += offset[a];
            if (const auto it = grid.find(k); it != grid.end())
                for (Vertex j : it->second)
                    if (j > i && euclidean_distance(p, cloud.point(j)) <= r)
                        adj[i].push_back(j);
            std::size_t a = 0;
            while (a < d && offset[a] == 1)
                offset[a++] = -1;
            if (a == d)
                break;
            ++offset[a];
        }
        std::sort(adj[i].begin(), adj[i].end());
    }
    return adj;
}

}  // namespace

SimplicialComplex build_rips(const PointCloud& cloud, double r, int max_dim, RipsOptions options)
{
    if (cloud.empty())
        throw std::invalid_argument("build_rips: empty point cloud");
    if (!(r > 0.0))
        throw std::invalid_argument("build_rips: threshold must be positive");
    if (max_dim < 0 || max_dim > 2)
        throw std::invalid_argument("build_rips: max_dim must be 0, 1 or 2");

    const std::size_t n = cloud.size();
    std::vector<std::size_t> ids(cloud.ids().begin(), cloud.ids().end());
    if (max_dim == 0)
        return SimplicialComplex(std::move(ids), {}, {}, 0);

    const auto adj = (options.use_grid && cloud.dim() <= 3) ? neighbours_grid(cloud, r)
                                                             : neighbours_all_pairs(cloud, r);

    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (Vertex j : adj[i])
            edges.push_back({static_cast<Vertex>(i), j});

    std::vector<Triangle> triangles;
    if (max_dim >= 2) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto& ni = adj[i];
            for (std::size_t a = 0; a < ni.size(); ++a) {
                const Vertex j = ni[a];
                const auto& nj = adj[j];
                // Common forward neighbours k > j of both i and j.
                auto x = ni.begin() + static_cast<std::ptrdiff_t>(a + 1);
                auto y = nj.begin();
                while (x != ni.end() && y != nj.end()) {
                    if (*x < *y)
                        ++x;
                    else if (*y < *x)
                        ++y;
                    else {
                        triangles.push_back({static_cast<Vertex>(i), j, *x});
                        ++x;
                        ++y;
                    }
                }
            }
        }
    }
    return SimplicialComplex(std::move(ids), std::move(edges), std::move(triangles), max_dim);
}

std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& complex, Scalar p)
{
    const PrimeField f(p);
    const Scalar minus_one = f.neg(1);
    std::vector<BoundaryMatrix> out;
    if (complex.max_dim() >= 1) {
        SparseMatrix d1(complex.num_vertices(), complex.num_edges(), p);
        const auto edges = complex.edges();
        for (std::size_t e = 0; e < edges.size(); ++e)
            d1.column(e) = {{edges[e][0], minus_one}, {edges[e][1], 1}};
        out.push_back({1, std::move(d1)});
    }
    if (complex.max_dim() >= 2) {
        SparseMatrix d2(complex.num_edges(), complex.num_triangles(), p);
        const auto tris = complex.triangles();
        for (std::size_t t = 0; t < tris.size(); ++t) {
            const auto [a, b, c] = tris[t];
            const auto ab = static_cast<std::uint32_t>(*complex.edge_index(a, b));
            const auto ac = static_cast<std::uint32_t>(*complex.edge_index(a, c));
            const auto bc = static_cast<std::uint32_t>(*complex.edge_index(b, c));
            // Lexicographic edge order gives ab < ac < bc.
            d2.column(t) = {{ab, 1}, {ac, minus_one}, {bc, 1}};
        }
        out.push_back({2, std::move(d2)});
    }
    return out;
}

}  // namespace subhom
