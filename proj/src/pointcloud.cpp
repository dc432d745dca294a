#include "subhom/pointcloud.hpp"

#include "subhom/random.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace subhom {

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords, std::optional<GeneratorInfo> meta)
    : dim_(dim), coords_(std::move(coords)), meta_(std::move(meta))
{
    if (dim_ == 0)
        throw std::invalid_argument("point cloud dimension must be positive");
    if (coords_.size() % dim_ != 0)
        throw std::invalid_argument("coordinate count is not a multiple of the dimension");
    ids_.resize(coords_.size() / dim_);
    std::iota(ids_.begin(), ids_.end(), std::size_t{0});
}

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords, std::vector<std::size_t> ids,
                       std::optional<GeneratorInfo> meta)
    : dim_(dim), coords_(std::move(coords)), ids_(std::move(ids)), meta_(std::move(meta))
{
    if (dim_ == 0)
        throw std::invalid_argument("point cloud dimension must be positive");
    if (coords_.size() != ids_.size() * dim_)
        throw std::invalid_argument("coordinate count does not match id count");
}

void SampleSchedule::validate(std::size_t full_size) const
{
    if (sizes.empty())
        throw std::invalid_argument("sample schedule has no sizes");
    if (replicates < 1)
        throw std::invalid_argument("sample schedule needs at least one replicate");
    for (std::size_t i = 0; i < sizes.size(); ++i)
        if (std::find(sizes.begin(), sizes.begin() + static_cast<std::ptrdiff_t>(i), sizes[i]) !=
            sizes.begin() + static_cast<std::ptrdiff_t>(i))
            throw std::invalid_argument("sample size " + std::to_string(sizes[i]) + " listed twice");
    for (std::size_t s : sizes)
        if (s < 1 || s > full_size)
            throw std::invalid_argument("sample size " + std::to_string(s) + " outside [1, " +
                                        std::to_string(full_size) + "]");
}

double euclidean_distance(std::span<const double> a, std::span<const double> b)
{
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - b[i];
        acc += d * d;
    }
    return std::sqrt(acc);
}

PointCloud generate_figure8(std::size_t n, double noise, std::uint64_t seed)
{
    if (n == 0)
        throw std::invalid_argument("generate_figure8: n must be positive");
    if (!(noise >= 0.0))
        throw std::invalid_argument("generate_figure8: noise must be nonnegative");

    // Curve parameter t in [0, 2): [0, 1) walks the upper circle starting at the
    // origin, [1, 2) the lower one. Both circles have the same length, so a uniform
    // t is uniform in arc length.
    Rng rng(seed);
    std::vector<double> t(n);
    for (double& v : t)
        v = rng.uniform(0.0, 2.0);
    std::sort(t.begin(), t.end());

    std::vector<double> coords;
    coords.reserve(2 * n);
    for (double s : t) {
        double x, y;
        if (s < 1.0) {
            const double theta = -std::numbers::pi / 2 + 2 * std::numbers::pi * s;
            x = std::cos(theta);
            y = 1.0 + std::sin(theta);
        } else {
            const double theta = std::numbers::pi / 2 + 2 * std::numbers::pi * (s - 1.0);
            x = std::cos(theta);
            y = -1.0 + std::sin(theta);
        }
        coords.push_back(x);
        coords.push_back(y);
    }
    if (noise > 0.0)
        for (double& c : coords)
            c += noise * rng.normal();
    return PointCloud(2, std::move(coords), GeneratorInfo{"figure8", noise, seed});
}

PointCloud generate_annulus(std::size_t n, double r_inner, double r_outer, double noise,
                            std::uint64_t seed)
{
    if (n == 0)
        throw std::invalid_argument("generate_annulus: n must be positive");
    if (!(r_inner > 0.0) || !(r_inner < r_outer))
        throw std::invalid_argument("generate_annulus: need 0 < r_inner < r_outer");
    if (!(noise >= 0.0))
        throw std::invalid_argument("generate_annulus: noise must be nonnegative");

    Rng rng(seed);
    struct Polar {
        double angle, radius;
    };
    std::vector<Polar> polar(n);
    const double a2 = r_inner * r_inner;
    const double b2 = r_outer * r_outer;
    for (auto& pr : polar) {
        pr.angle = rng.uniform(0.0, 2 * std::numbers::pi);
        pr.radius = std::sqrt(a2 + (b2 - a2) * rng.uniform());
        pr.radius = std::clamp(pr.radius, r_inner, r_outer);
    }
    std::sort(polar.begin(), polar.end(), [](const Polar& l, const Polar& r) { return l.angle < r.angle; });

    std::vector<double> coords;
    coords.reserve(2 * n);
    for (const auto& pr : polar) {
        coords.push_back(pr.radius * std::cos(pr.angle));
        coords.push_back(pr.radius * std::sin(pr.angle));
    }
    if (noise > 0.0)
        for (double& c : coords)
            c += noise * rng.normal();
    return PointCloud(2, std::move(coords), GeneratorInfo{"annulus", noise, seed});
}

std::vector<std::size_t> subsample_indices(std::size_t population, std::size_t n, std::uint64_t seed)
{
    if (n < 1 || n > population)
        throw std::invalid_argument("subsample: n = " + std::to_string(n) + " outside [1, " +
                                    std::to_string(population) + "]");
    Rng rng(seed);
    std::vector<std::size_t> perm(population);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i + static_cast<std::size_t>(rng.below(population - i));
        std::swap(perm[i], perm[j]);
    }
    perm.resize(n);
    std::sort(perm.begin(), perm.end());
    return perm;
}

PointCloud select_points(const PointCloud& cloud, std::span<const std::size_t> indices)
{
    std::vector<double> coords;
    std::vector<std::size_t> ids;
    coords.reserve(indices.size() * cloud.dim());
    ids.reserve(indices.size());
    for (std::size_t i : indices) {
        if (i >= cloud.size())
            throw std::out_of_range("select_points: index out of range");
        const auto p = cloud.point(i);
        coords.insert(coords.end(), p.begin(), p.end());
        ids.push_back(cloud.id(i));
    }
    return PointCloud(cloud.dim(), std::move(coords), std::move(ids), cloud.meta());
}

PointCloud subsample(const PointCloud& cloud, std::size_t n, std::uint64_t seed)
{
    const auto idx = subsample_indices(cloud.size(), n, seed);
    return select_points(cloud, idx);
}

namespace {

double directed_hausdorff(const PointCloud& from, const PointCloud& to)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < from.size(); ++i) {
        const auto p = from.point(i);
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t j = 0; j < to.size() && best > worst; ++j)
            best = std::min(best, euclidean_distance(p, to.point(j)));
        worst = std::max(worst, best);
    }
    return worst;
}

}  // namespace

double hausdorff_distance(const PointCloud& a, const PointCloud& b)
{
    if (a.empty() || b.empty())
        throw std::invalid_argument("hausdorff_distance: empty point cloud");
    if (a.dim() != b.dim())
        throw std::invalid_argument("hausdorff_distance: dimension mismatch");
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

double rips_threshold(const PointCloud& full, const PointCloud& sample, double base)
{
    return base + 2.0 * hausdorff_distance(sample, full);
}

PointCloud read_csv(std::istream& in)
{
    std::vector<double> coords;
    std::size_t dim = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos)
            continue;
        std::size_t count = 0;
        std::stringstream ss(line);
        std::string field;
        while (std::getline(ss, field, ',')) {
            const auto first = field.find_first_not_of(" \t");
            const auto last = field.find_last_not_of(" \t");
            if (first == std::string::npos)
                throw std::invalid_argument("csv line " + std::to_string(lineno) + ": empty field");
            const std::string token = field.substr(first, last - first + 1);
            double v = 0.0;
            const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
            if (res.ec != std::errc() || res.ptr != token.data() + token.size())
                throw std::invalid_argument("csv line " + std::to_string(lineno) + ": bad number '" +
                                            token + "'");
            coords.push_back(v);
            ++count;
        }
        if (dim == 0)
            dim = count;
        else if (count != dim)
            throw std::invalid_argument("csv line " + std::to_string(lineno) + ": expected " +
                                        std::to_string(dim) + " coordinates");
    }
    if (dim == 0)
        throw std::invalid_argument("csv input has no points");
    return PointCloud(dim, std::move(coords));
}

PointCloud read_csv_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_csv(in);
}

void write_csv(std::ostream& out, const PointCloud& cloud)
{
    char buf[32];
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        for (std::size_t d = 0; d < p.size(); ++d) {
            const auto res = std::to_chars(buf, buf + sizeof buf, p[d]);
            if (d > 0)
                out << ',';
            out.write(buf, res.ptr - buf);
        }
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const PointCloud& cloud)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    write_csv(out, cloud);
}

}  // namespace subhom
