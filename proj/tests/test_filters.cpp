#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "zzp/filters.hpp"

using namespace zzp;

TEST_CASE("codensity small cases") {
    const Metric two(PointCloud{{0}, {3}});
    CHECK(codensity(two, 1).values == std::vector<double>{3, 3});
    const Metric line(PointCloud{{0}, {1}, {10}});
    CHECK(codensity(line, 1).values == std::vector<double>{1, 1, 9});
    CHECK(codensity(line, 2).values == std::vector<double>{10, 9, 10});
    CHECK(codensity(line, 1).order == Order::ascending_is_best);
    CHECK_THROWS(codensity(line, 3));
    CHECK_THROWS(codensity(line, 0));
}

TEST_CASE("codensity agrees with brute-force k nearest neighbours") {
    const auto pc = generate(Shape::circle, 1000, 2, 0.05);
    const Metric m(pc);
    const auto fv = codensity(m, 15);
    for (std::size_t i = 0; i < pc.size(); ++i) {
        std::vector<double> d;
        for (std::size_t j = 0; j < pc.size(); ++j)
            if (j != i) d.push_back(euclidean(pc.point(i), pc.point(j)));
        std::sort(d.begin(), d.end());
        CHECK(fv.values[i] == d[14]);
    }
    const auto next = codensity(m, 16);
    for (std::size_t i = 0; i < pc.size(); ++i) CHECK(fv.values[i] <= next.values[i]);
}

TEST_CASE("kde small cases") {
    const double s = 0.3;
    const double single = 1.0 / (2 * std::numbers::pi * s * s);
    const auto one = gaussian_kde(PointCloud{{1, 2}}, s);
    CHECK(one.values[0] == doctest::Approx(single));
    CHECK(one.order == Order::descending_is_best);
    const auto both = gaussian_kde(PointCloud{{1, 2}, {1, 2}}, s);
    CHECK(both.values[0] == doctest::Approx(single));
    CHECK(both.values[1] == doctest::Approx(single));
    CHECK_THROWS(gaussian_kde(PointCloud{{0, 0}}, 0.0));
    CHECK_THROWS(gaussian_kde(PointCloud{{0, 0}}, -1.0));
}

TEST_CASE("kde matches a direct double loop") {
    const auto pc = generate(Shape::circle, 100, 8);
    const double s = 0.2;
    const auto fv = gaussian_kde(pc, s);
    const double norm = std::pow(std::sqrt(2 * std::numbers::pi) * s, -2.0);
    for (std::size_t i = 0; i < pc.size(); ++i) {
        double sum = 0;
        for (std::size_t j = 0; j < pc.size(); ++j) {
            const double dx = pc.point(i)[0] - pc.point(j)[0], dy = pc.point(i)[1] - pc.point(j)[1];
            sum += norm * std::exp(-(dx * dx + dy * dy) / (2 * s * s));
        }
        CHECK(std::abs(fv.values[i] - sum / pc.size()) <= 1e-12 * sum / pc.size());
        CHECK(fv.values[i] > 0);
    }
}

TEST_CASE("kde is invariant under rigid motion") {
    const auto pc = generate(Shape::circle, 60, 3, 0.1);
    const double c = std::cos(0.7), s = std::sin(0.7);
    std::vector<double> moved;
    for (std::size_t i = 0; i < pc.size(); ++i) {
        auto p = pc.point(i);
        moved.push_back(c * p[0] - s * p[1] + 5);
        moved.push_back(s * p[0] + c * p[1] - 2);
    }
    const auto a = gaussian_kde(pc, 0.4), b = gaussian_kde(PointCloud(2, moved), 0.4);
    for (std::size_t i = 0; i < pc.size(); ++i) CHECK(a.values[i] == doctest::Approx(b.values[i]).epsilon(1e-10));
}

TEST_CASE("top_percent small cases") {
    const FilterValues fv{{5, 1, 3}, Order::ascending_is_best};
    CHECK(top_percent(fv, 100) == IndexSet{0, 1, 2});
    CHECK(top_percent(fv, 34) == IndexSet{1, 2});
    CHECK(top_percent(fv, 33) == IndexSet{1});
    CHECK(top_percent({{5, 1, 3}, Order::descending_is_best}, 34) == IndexSet{0, 2});
    CHECK(top_percent({{2, 2, 2, 2}, Order::ascending_is_best}, 50) == IndexSet{0, 1});
    CHECK_THROWS(top_percent(fv, 0));
    CHECK_THROWS(top_percent(fv, 101));
}

TEST_CASE("top_percent agrees with a sort oracle and is nested") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> u(0, 500);  // small range forces ties
    FilterValues fv{std::vector<double>(10000), Order::ascending_is_best};
    for (auto& v : fv.values) v = u(rng);
    IndexSet prev;
    for (double t : {0.5, 3.0, 12.5, 40.0, 77.7, 100.0}) {
        const auto got = top_percent(fv, t);
        const auto want = static_cast<std::size_t>(std::ceil(t * 10000 / 100));
        CHECK(got.size() == want);
        std::vector<Index> order(10000);
        for (Index i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return fv.values[a] < fv.values[b]; });
        CHECK(got == IndexSet(std::vector<Index>(order.begin(), order.begin() + want)));
        CHECK(got.includes(prev));
        prev = got;
    }
}
