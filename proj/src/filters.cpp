#include "zzp/filters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zzp {

FilterValues codensity(const Metric& metric, std::size_t k) {
    const std::size_t n = metric.size();
    if (k == 0 || k >= n)
        throw std::invalid_argument("codensity: need 1 <= k <= n-1 (k=" + std::to_string(k) +
                                    ", n=" + std::to_string(n) + ")");
    FilterValues fv;
    fv.order = Order::ascending_is_best;
    fv.values.resize(n);
    std::vector<double> row(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t c = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) row[c++] = metric(static_cast<Index>(i), static_cast<Index>(j));
        std::nth_element(row.begin(), row.begin() + (k - 1), row.end());
        fv.values[i] = row[k - 1];
    }
    return fv;
}

FilterValues gaussian_kde(const PointCloud& cloud, double sigma) {
    if (!(sigma > 0.0)) throw std::invalid_argument("gaussian_kde: sigma must be positive");
    const std::size_t n = cloud.size();
    const double d = static_cast<double>(cloud.dim());
    const double norm = std::pow(std::sqrt(2.0 * std::numbers::pi) * sigma, -d);
    const double inv2s2 = 1.0 / (2.0 * sigma * sigma);

    FilterValues fv;
    fv.order = Order::descending_is_best;
    fv.values.assign(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        fv.values[i] += 1.0;  // self term, exp(0)
        for (std::size_t j = i + 1; j < n; ++j) {
            const double r = euclidean(cloud.point(i), cloud.point(j));
            const double k = std::exp(-r * r * inv2s2);
            fv.values[i] += k;
            fv.values[j] += k;
        }
    }
    for (double& v : fv.values) v *= norm / static_cast<double>(n);
    return fv;
}

IndexSet top_percent(const FilterValues& fv, double percent) {
    if (!(percent > 0.0 && percent <= 100.0))
        throw std::invalid_argument("top_percent: T must lie in (0, 100]");
    const std::size_t n = fv.values.size();
    auto count = static_cast<std::size_t>(std::ceil(percent * static_cast<double>(n) / 100.0));
    count = std::min(count, n);

    std::vector<Index> order(n);
    std::iota(order.begin(), order.end(), Index{0});
    const bool asc = fv.order == Order::ascending_is_best;
    std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
        return asc ? fv.values[a] < fv.values[b] : fv.values[a] > fv.values[b];
    });
    order.resize(count);
    return IndexSet(std::move(order));
}

}  // namespace zzp
