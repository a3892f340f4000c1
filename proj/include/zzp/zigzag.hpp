#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "zzp/complexes.hpp"
#include "zzp/metric.hpp"

namespace zzp {

/// Position in a zigzag diagram, stored doubled: stage j is 2j and the
/// bridge between j and j+1 is 2j+1.
struct ZigzagIndex {
    int doubled = 0;

    static constexpr ZigzagIndex stage(int j) { return {2 * j}; }
    static constexpr ZigzagIndex bridge(int j) { return {2 * j + 1}; }
    constexpr bool half_integral() const { return doubled % 2 != 0; }
    constexpr double value() const { return doubled / 2.0; }

    friend constexpr auto operator<=>(ZigzagIndex, ZigzagIndex) = default;
};

/// Closed interval [start, end] of dimension p.
struct Interval {
    int dimension = 0;
    ZigzagIndex start;
    ZigzagIndex end;

    /// Interval between integer stage indices.
    static Interval stages(int p, int s, int e) {
        return {p, ZigzagIndex::stage(s), ZigzagIndex::stage(e)};
    }
    bool covers(ZigzagIndex i) const { return start <= i && i <= end; }

    friend auto operator<=>(const Interval&, const Interval&) = default;
};

/// Multiset of intervals, kept sorted by (dimension, start, end).
class Barcode {
public:
    Barcode() = default;
    Barcode(std::vector<Interval> intervals);

    void add(Interval i);
    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t size() const { return intervals_.size(); }
    bool empty() const { return intervals_.empty(); }
    Barcode of_dimension(int p) const;
    std::vector<int> dimensions() const;
    std::size_t covering(int p, ZigzagIndex i) const;

    friend bool operator==(const Barcode&, const Barcode&) = default;

private:
    std::vector<Interval> intervals_;
};

std::string to_string(const Barcode& b);

/// Drops intervals that cover no stage, i.e. [j+1/2, j+1/2]; with `clip`,
/// moves remaining half-integral endpoints inward to the nearest stage.
Barcode suppress_half_integral(const Barcode& b, bool clip = true);

/// Reflects indices i -> last_stage - i.
Barcode mirror(const Barcode& b, int last_stage);

enum class SequenceKind { unions, intersections, biwitness };

/// A linear zigzag diagram: union or intersection bridges between Rips
/// complexes of point subsets, or biwitness bridges between witness
/// complexes of landmark sets.
struct DiagramSpec {
    SequenceKind kind = SequenceKind::unions;
    std::vector<IndexSet> stages;
    double epsilon = 0.0;   // Rips scale; unused for witness diagrams
    int max_dim = 2;
    IndexSet witnesses;     // witness diagrams only
    WitnessOptions witness_options;
};

struct ZigzagResult {
    std::vector<int> dims;
    /// Full decomposition, half-integral endpoints included.
    Barcode barcode;
    /// stage_betti[j][k] = rank of H_{dims[k]} at stage j.
    std::vector<std::vector<std::size_t>> stage_betti;
    /// bridge_betti[j][k] = rank of H_{dims[k]} of the bridge between j and j+1.
    std::vector<std::vector<std::size_t>> bridge_betti;
};

ZigzagResult compute_zigzag(const DiagramSpec& spec, const Metric& metric,
                            const std::vector<int>& dims);

Barcode union_zigzag(const std::vector<IndexSet>& stages, const Metric& metric, double epsilon,
                     int max_dim, int p, bool keep_half_integral = false);

Barcode intersection_zigzag(const std::vector<IndexSet>& stages, const Metric& metric,
                            double epsilon, int max_dim, int p, bool keep_half_integral = false);

Barcode bicomplex_zigzag(const std::vector<IndexSet>& landmark_stages, const IndexSet& witnesses,
                         const Metric& metric, int max_dim, int p, bool keep_half_integral = false,
                         WitnessOptions opts = {});

/// Expected barcode over a fixed set of dimensions.
struct BarcodeCriterion {
    std::vector<int> dims;
    Barcode expected;
};

struct Graph {
    std::size_t vertices = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    friend bool operator==(const Graph&, const Graph&) = default;
};

/// Edge (i, j) iff the two-stage biwitness zigzag of L_i, L_j has exactly the
/// expected barcode (half-integral intervals suppressed).
Graph pairwise_compatibility_graph(const std::vector<IndexSet>& landmarks,
                                   const IndexSet& witnesses, const Metric& metric, int max_dim,
                                   const BarcodeCriterion& criterion, WitnessOptions opts = {});

/// Number of intervals of the raw barcode covering each stage and each bridge
/// equals the Betti number there.
bool rank_consistent(const ZigzagResult& r);

}  // namespace zzp
