#ifndef SUBHOM_POINTCLOUD_HPP
#define SUBHOM_POINTCLOUD_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace subhom {

/// Record of how a synthetic cloud was produced.
struct GeneratorInfo {
    std::string shape;
    double noise = 0.0;
    std::uint64_t seed = 0;
};

/// Immutable set of points in R^dim, stored row-major.
///
/// Each point carries an id. Generated and imported clouds use ids 0..n-1;
/// a sub-sample keeps the ids of the points it was drawn from, which is what
/// lets a sub-sample complex be mapped into the full complex.
class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::size_t dim, std::vector<double> coords,
               std::optional<GeneratorInfo> meta = std::nullopt);
    PointCloud(std::size_t dim, std::vector<double> coords, std::vector<std::size_t> ids,
               std::optional<GeneratorInfo> meta = std::nullopt);

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }

    std::span<const double> point(std::size_t i) const
    {
        return std::span<const double>(coords_).subspan(i * dim_, dim_);
    }
    std::span<const double> coords() const { return coords_; }
    std::span<const std::size_t> ids() const { return ids_; }
    std::size_t id(std::size_t i) const { return ids_[i]; }
    const std::optional<GeneratorInfo>& meta() const { return meta_; }

    friend bool operator==(const PointCloud& a, const PointCloud& b)
    {
        return a.dim_ == b.dim_ && a.coords_ == b.coords_ && a.ids_ == b.ids_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
    std::vector<std::size_t> ids_;
    std::optional<GeneratorInfo> meta_;
};

/// Sub-sample sizes and replicate count for an ensemble run.
struct SampleSchedule {
    std::vector<std::size_t> sizes;
    std::size_t replicates = 10;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless the sizes are distinct, each in [1, full_size],
    /// and replicates >= 1.
    void validate(std::size_t full_size) const;
};

double euclidean_distance(std::span<const double> a, std::span<const double> b);

/// n points along two unit circles centred at (0, 1) and (0, -1), tangent at the
/// origin, uniform in arc length, plus isotropic Gaussian noise. Points are ordered
/// by their position along the curve.
PointCloud generate_figure8(std::size_t n, double noise, std::uint64_t seed);

/// n points uniform by area in {r_inner <= |p| <= r_outer}, plus isotropic Gaussian
/// noise, ordered by angle.
PointCloud generate_annulus(std::size_t n, double r_inner, double r_outer, double noise,
                            std::uint64_t seed);

/// Indices of n distinct points drawn uniformly without replacement, ascending.
std::vector<std::size_t> subsample_indices(std::size_t population, std::size_t n, std::uint64_t seed);

/// n distinct points drawn uniformly without replacement; input order is preserved.
PointCloud subsample(const PointCloud& cloud, std::size_t n, std::uint64_t seed);

PointCloud select_points(const PointCloud& cloud, std::span<const std::size_t> indices);

/// Symmetric Hausdorff distance, brute force.
double hausdorff_distance(const PointCloud& a, const PointCloud& b);

inline constexpr double kDefaultThresholdBase = 0.25;

/// base + 2 * hausdorff_distance(sample, full).
double rips_threshold(const PointCloud& full, const PointCloud& sample,
                      double base = kDefaultThresholdBase);

/// One point per line, comma-separated coordinates, no header. The dimension is
/// taken from the first line.
PointCloud read_csv(std::istream& in);
PointCloud read_csv_file(const std::string& path);
void write_csv(std::ostream& out, const PointCloud& cloud);
void write_csv_file(const std::string& path, const PointCloud& cloud);

}  // namespace subhom

#endif  // SUBHOM_POINTCLOUD_HPP
