#pragma once

#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace zzp {

using Index = std::uint32_t;

/// Finite set of points in R^d, stored row-major.
class PointCloud {
public:
    PointCloud() = default;
    PointCloud(std::size_t dim, std::vector<double> coords);
    PointCloud(std::initializer_list<std::initializer_list<double>> rows);

    std::size_t size() const { return dim_ == 0 ? 0 : coords_.size() / dim_; }
    std::size_t dim() const { return dim_; }
    bool empty() const { return size() == 0; }

    std::span<const double> point(std::size_t i) const {
        return {coords_.data() + i * dim_, dim_};
    }
    const std::vector<double>& coords() const { return coords_; }

private:
    std::size_t dim_ = 0;
    std::vector<double> coords_;
};

double euclidean(std::span<const double> a, std::span<const double> b);

/// Dense symmetric distance matrix with zero diagonal.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(std::size_t n);
    /// Validates symmetry, zero diagonal and nonnegativity.
    static DistanceMatrix from_rows(const std::vector<std::vector<double>>& rows);

    std::size_t size() const { return n_; }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, double v) {
        d_[i * n_ + j] = v;
        d_[j * n_ + i] = v;
    }

private:
    std::size_t n_ = 0;
    std::vector<double> d_;
};

DistanceMatrix distance_matrix(const PointCloud& cloud);

/// A finite metric space: either a point cloud measured with the Euclidean
/// norm on demand, or an explicit distance matrix. Copies share storage.
class Metric {
public:
    Metric(PointCloud cloud);
    Metric(DistanceMatrix dm);

    std::size_t size() const { return n_; }
    double operator()(Index i, Index j) const {
        if (matrix_) return (*matrix_)(i, j);
        return euclidean(cloud_->point(i), cloud_->point(j));
    }
    const PointCloud* cloud() const { return cloud_.get(); }

private:
    std::size_t n_ = 0;
    std::shared_ptr<const PointCloud> cloud_;
    std::shared_ptr<const DistanceMatrix> matrix_;
};

/// Sorted set of distinct point indices.
class IndexSet {
public:
    IndexSet() = default;
    /// Sorts and deduplicates.
    IndexSet(std::vector<Index> indices);
    IndexSet(std::initializer_list<Index> indices);
    static IndexSet range(std::size_t n);

    std::size_t size() const { return idx_.size(); }
    bool empty() const { return idx_.empty(); }
    bool contains(Index i) const;
    bool includes(const IndexSet& other) const;
    Index operator[](std::size_t k) const { return idx_[k]; }
    auto begin() const { return idx_.begin(); }
    auto end() const { return idx_.end(); }
    const std::vector<Index>& indices() const { return idx_; }
    /// Throws if any index is >= n.
    void check_bounds(std::size_t n, std::string_view what) const;

    bool operator==(const IndexSet&) const = default;

private:
    std::vector<Index> idx_;
};

IndexSet set_union(const IndexSet& a, const IndexSet& b);
IndexSet set_intersection(const IndexSet& a, const IndexSet& b);

enum class Shape { circle, figure8, sphere, torus4d };

Shape parse_shape(std::string_view name);
std::string_view shape_name(Shape s);

/// n points drawn uniformly from the named space. `noise` adds isotropic
/// Gaussian jitter with that standard deviation.
PointCloud generate(Shape shape, std::size_t n, std::uint64_t seed, double noise = 0.0);

IndexSet random_subsample(std::size_t n, std::size_t k, std::uint64_t seed);

/// Greedy farthest-point sequence starting at `first`, in selection order.
/// Ties go to the lowest index.
std::vector<Index> maxmin_landmarks(const Metric& metric, std::size_t k, Index first);

/// Same, restricted to the candidate points; `first` must be a candidate.
std::vector<Index> maxmin_landmarks(const Metric& metric, const IndexSet& candidates,
                                    std::size_t k, Index first);

PointCloud read_point_cloud(const std::filesystem::path& path);
DistanceMatrix read_distance_matrix(const std::filesystem::path& path);
void write_point_cloud(const std::filesystem::path& path, const PointCloud& cloud);

}  // namespace zzp
