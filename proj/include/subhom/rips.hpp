#ifndef SUBHOM_RIPS_HPP
#define SUBHOM_RIPS_HPP

#include "subhom/pointcloud.hpp"
#include "subhom/sparse.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace subhom {

using Vertex = std::uint32_t;
using Edge = std::array<Vertex, 2>;
using Triangle = std::array<Vertex, 3>;
using Simplex = std::vector<Vertex>;

/// Simplicial complex of dimension <= 2 over vertices 0..n-1.
///
/// Simplices are strictly increasing vertex tuples kept in lexicographic order,
/// and that order is the basis order of every chain group. Each local vertex
/// carries the id of the point it came from (see PointCloud::ids).
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Validates ordering and closure under faces; throws std::invalid_argument.
    SimplicialComplex(std::vector<std::size_t> vertex_ids, std::vector<Edge> edges,
                      std::vector<Triangle> triangles, int max_dim);

    /// Convenience for tests: vertices 0..n-1 with ids equal to the local index.
    static SimplicialComplex from_simplices(std::size_t num_vertices, std::vector<Edge> edges,
                                            std::vector<Triangle> triangles = {});

    int max_dim() const { return max_dim_; }
    std::size_t num_vertices() const { return vertex_ids_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    std::size_t num_triangles() const { return triangles_.size(); }
    /// Number of k-simplices; zero for k outside [0, max_dim].
    std::size_t size(int k) const;

    std::span<const Edge> edges() const { return edges_; }
    std::span<const Triangle> triangles() const { return triangles_; }
    std::span<const std::size_t> vertex_ids() const { return vertex_ids_; }

    Simplex simplex(int k, std::size_t index) const;
    std::optional<std::size_t> simplex_index(int k, std::span<const Vertex> tuple) const;
    std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;

    /// Local vertex carrying the given point id.
    std::optional<Vertex> local_vertex(std::size_t id) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b)
    {
        return a.max_dim_ == b.max_dim_ && a.vertex_ids_ == b.vertex_ids_ && a.edges_ == b.edges_ &&
               a.triangles_ == b.triangles_;
    }

private:
    int max_dim_ = 0;
    std::vector<std::size_t> vertex_ids_;
    std::vector<Edge> edges_;
    std::vector<Triangle> triangles_;
    std::vector<std::size_t> edge_offsets_;  // CSR offsets: edges with first vertex v
    std::vector<std::pair<std::size_t, Vertex>> id_lookup_;
};

struct RipsOptions {
    /// Bucket points in a grid of cell size r before testing pairs. Produces the
    /// same complex as the all-pairs scan; only used for dimensions <= 3.
    bool use_grid = false;
};

/// Vietoris-Rips complex: an edge for every pair at distance <= r, a triangle for
/// every 3-clique of edges.
SimplicialComplex build_rips(const PointCloud& cloud, double r, int max_dim = 2, RipsOptions options = {});

struct BoundaryMatrix {
    int k = 0;
    /// Rows are (k-1)-simplices, columns k-simplices, both in complex order.
    SparseMatrix matrix;
};

/// Boundary maps d_1 .. d_max_dim with d[v0..vk] = sum_i (-1)^i [v0..^vi..vk].
std::vector<BoundaryMatrix> boundary_matrices(const SimplicialComplex& complex, Scalar p = kDefaultModulus);

}  // namespace subhom

#endif  // SUBHOM_RIPS_HPP
