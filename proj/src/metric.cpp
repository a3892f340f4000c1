#include "zzp/metric.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace zzp {

PointCloud::PointCloud(std::size_t dim, std::vector<double> coords)
    : dim_(dim), coords_(std::move(coords)) {
    if (dim_ == 0 && !coords_.empty())
        throw std::invalid_argument("point cloud: dimension must be >= 1");
    if (dim_ != 0 && coords_.size() % dim_ != 0)
        throw std::invalid_argument("point cloud: coordinate count is not a multiple of the dimension");
    for (double c : coords_)
        if (!std::isfinite(c)) throw std::invalid_argument("point cloud: non-finite coordinate");
}

PointCloud::PointCloud(std::initializer_list<std::initializer_list<double>> rows) {
    std::vector<double> coords;
    std::size_t dim = 0;
    for (const auto& r : rows) {
        if (dim == 0) dim = r.size();
        if (r.size() != dim) throw std::invalid_argument("point cloud: ragged rows");
        coords.insert(coords.end(), r.begin(), r.end());
    }
    *this = PointCloud(dim, std::move(coords));
}

double euclidean(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double t = a[k] - b[k];
        s += t * t;
    }
    return std::sqrt(s);
}

DistanceMatrix::DistanceMatrix(std::size_t n) : n_(n), d_(n * n, 0.0) {}

DistanceMatrix DistanceMatrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t n = rows.size();
    DistanceMatrix dm(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("distance matrix: not square");
        for (std::size_t j = 0; j < n; ++j) {
            const double v = rows[i][j];
            if (!std::isfinite(v) || v < 0.0)
                throw std::invalid_argument("distance matrix: entries must be finite and nonnegative");
            dm.d_[i * n + j] = v;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dm(i, i) != 0.0) throw std::invalid_argument("distance matrix: nonzero diagonal");
        for (std::size_t j = i + 1; j < n; ++j)
            if (dm(i, j) != dm(j, i)) throw std::invalid_argument("distance matrix: not symmetric");
    }
    return dm;
}

DistanceMatrix distance_matrix(const PointCloud& cloud) {
    if (cloud.empty()) throw std::invalid_argument("distance_matrix: empty point cloud");
    DistanceMatrix dm(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i)
        for (std::size_t j = i + 1; j < cloud.size(); ++j)
            dm.set(i, j, euclidean(cloud.point(i), cloud.point(j)));
    return dm;
}

Metric::Metric(PointCloud cloud)
    : n_(cloud.size()), cloud_(std::make_shared<const PointCloud>(std::move(cloud))) {}

Metric::Metric(DistanceMatrix dm)
    : n_(dm.size()), matrix_(std::make_shared<const DistanceMatrix>(std::move(dm))) {}

IndexSet::IndexSet(std::vector<Index> indices) : idx_(std::move(indices)) {
    std::sort(idx_.begin(), idx_.end());
    idx_.erase(std::unique(idx_.begin(), idx_.end()), idx_.end());
}

IndexSet::IndexSet(std::initializer_list<Index> indices)
    : IndexSet(std::vector<Index>(indices)) {}

IndexSet IndexSet::range(std::size_t n) {
    std::vector<Index> v(n);
    std::iota(v.begin(), v.end(), Index{0});
    return IndexSet(std::move(v));
}

bool IndexSet::contains(Index i) const {
    return std::binary_search(idx_.begin(), idx_.end(), i);
}

bool IndexSet::includes(const IndexSet& other) const {
    return std::includes(idx_.begin(), idx_.end(), other.idx_.begin(), other.idx_.end());
}

void IndexSet::check_bounds(std::size_t n, std::string_view what) const {
    if (!idx_.empty() && idx_.back() >= n)
        throw std::out_of_range(std::string(what) + ": index " + std::to_string(idx_.back()) +
                                " out of range for " + std::to_string(n) + " points");
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    std::vector<Index> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IndexSet(std::move(out));
}

IndexSet set_intersection(const IndexSet& a, const IndexSet& b) {
    std::vector<Index> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return IndexSet(std::move(out));
}

Shape parse_shape(std::string_view name) {
    if (name == "circle") return Shape::circle;
    if (name == "figure8") return Shape::figure8;
    if (name == "sphere") return Shape::sphere;
    if (name == "torus4d") return Shape::torus4d;
    throw std::invalid_argument("unknown shape '" + std::string(name) + "'");
}

std::string_view shape_name(Shape s) {
    switch (s) {
        case Shape::circle: return "circle";
        case Shape::figure8: return "figure8";
        case Shape::sphere: return "sphere";
        case Shape::torus4d: return "torus4d";
    }
    return "?";
}

PointCloud generate(Shape shape, std::size_t n, std::uint64_t seed, double noise) {
    if (n == 0) throw std::invalid_argument("generate: n must be >= 1");
    if (noise < 0.0) throw std::invalid_argument("generate: noise must be nonnegative");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::normal_distribution<double> normal(0.0, 1.0);

    std::size_t dim = 2;
    if (shape == Shape::sphere) dim = 3;
    if (shape == Shape::torus4d) dim = 4;
    std::vector<double> coords;
    coords.reserve(n * dim);

    for (std::size_t i = 0; i < n; ++i) {
        switch (shape) {
            case Shape::circle: {
                const double t = angle(rng);
                coords.push_back(std::cos(t));
                coords.push_back(std::sin(t));
                break;
            }
            case Shape::figure8: {
                // unit circles centred at (-1,0) and (1,0), tangent at the origin
                const double centre = (rng() & 1U) ? 1.0 : -1.0;
                const double t = angle(rng);
                coords.push_back(centre + std::cos(t));
                coords.push_back(std::sin(t));
                break;
            }
            case Shape::sphere: {
                double x, y, z, r;
                do {
                    x = normal(rng);
                    y = normal(rng);
                    z = normal(rng);
                    r = std::sqrt(x * x + y * y + z * z);
                } while (r < 1e-12);
                coords.push_back(x / r);
                coords.push_back(y / r);
                coords.push_back(z / r);
                break;
            }
            case Shape::torus4d: {
                const double s = angle(rng);
                const double t = angle(rng);
                coords.push_back(std::cos(s));
                coords.push_back(std::sin(s));
                coords.push_back(std::cos(t));
                coords.push_back(std::sin(t));
                break;
            }
        }
    }
    if (noise > 0.0)
        for (double& c : coords) c += noise * normal(rng);
    return PointCloud(dim, std::move(coords));
}

IndexSet random_subsample(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (k == 0 || k > n)
        throw std::invalid_argument("random_subsample: need 1 <= k <= n (k=" + std::to_string(k) +
                                    ", n=" + std::to_string(n) + ")");
    std::mt19937_64 rng(seed);
    std::vector<Index> all(n);
    std::iota(all.begin(), all.end(), Index{0});
    std::vector<Index> out;
    out.reserve(k);
    std::sample(all.begin(), all.end(), std::back_inserter(out), k, rng);
    return IndexSet(std::move(out));
}

std::vector<Index> maxmin_landmarks(const Metric& metric, std::size_t k, Index first) {
    return maxmin_landmarks(metric, IndexSet::range(metric.size()), k, first);
}

std::vector<Index> maxmin_landmarks(const Metric& metric, const IndexSet& candidates,
                                    std::size_t k, Index first) {
    candidates.check_bounds(metric.size(), "maxmin_landmarks");
    if (k == 0 || k > candidates.size())
        throw std::invalid_argument("maxmin_landmarks: need 1 <= k <= " +
                                    std::to_string(candidates.size()));
    if (!candidates.contains(first))
        throw std::invalid_argument("maxmin_landmarks: first point is not a candidate");

    const auto& cand = candidates.indices();
    std::vector<double> mind(cand.size(), std::numeric_limits<double>::infinity());
    std::vector<bool> taken(cand.size(), false);
    std::vector<Index> out{first};
    std::size_t cur = std::lower_bound(cand.begin(), cand.end(), first) - cand.begin();
    taken[cur] = true;

    while (out.size() < k) {
        std::size_t best = cand.size();
        double best_d = -1.0;
        for (std::size_t c = 0; c < cand.size(); ++c) {
            if (taken[c]) continue;
            mind[c] = std::min(mind[c], metric(cand[c], cand[cur]));
            if (mind[c] > best_d) {
                best_d = mind[c];
                best = c;
            }
        }
        cur = best;
        taken[cur] = true;
        out.push_back(cand[cur]);
    }
    return out;
}

namespace {

std::vector<std::vector<double>> read_rows(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::vector<std::vector<double>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ss(line);
        std::vector<double> row;
        std::string tok;
        while (ss >> tok) {
            std::size_t used = 0;
            double v;
            try {
                v = std::stod(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size())
                throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                         ": bad number '" + tok + "'");
            row.push_back(v);
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw std::runtime_error(path.string() + ":" + std::to_string(lineno) +
                                     ": inconsistent arity");
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

PointCloud read_point_cloud(const std::filesystem::path& path) {
    const auto rows = read_rows(path);
    if (rows.empty()) throw std::runtime_error("'" + path.string() + "' contains no points");
    std::vector<double> coords;
    for (const auto& r : rows) coords.insert(coords.end(), r.begin(), r.end());
    return PointCloud(rows.front().size(), std::move(coords));
}

DistanceMatrix read_distance_matrix(const std::filesystem::path& path) {
    return DistanceMatrix::from_rows(read_rows(path));
}

void write_point_cloud(const std::filesystem::path& path, const PointCloud& cloud) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << std::setprecision(17);
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const auto p = cloud.point(i);
        for (std::size_t k = 0; k < p.size(); ++k) out << (k ? " " : "") << p[k];
        out << '\n';
    }
}

}  // namespace zzp
