#pragma once

#include <vector>

#include "zzp/metric.hpp"

namespace zzp {

enum class Order { ascending_is_best, descending_is_best };

/// One filter value per point of a parent cloud.
struct FilterValues {
    std::vector<double> values;
    Order order = Order::ascending_is_best;
};

/// Distance from each point to its k-th nearest other point.
FilterValues codensity(const Metric& metric, std::size_t k);

/// Gaussian kernel density estimate at each sample point, self term included.
FilterValues gaussian_kde(const PointCloud& cloud, double sigma);

/// The best ceil(T n / 100) points; ties at the cut-off go to the lowest index.
IndexSet top_percent(const FilterValues& fv, double percent);

}  // namespace zzp
