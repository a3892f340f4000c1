#include "zzp/zigzag.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "zzp/gf2.hpp"
#include "zzp/homology.hpp"

namespace zzp {

Barcode::Barcode(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    std::sort(intervals_.begin(), intervals_.end());
}

void Barcode::add(Interval i) {
    intervals_.insert(std::upper_bound(intervals_.begin(), intervals_.end(), i), i);
}

Barcode Barcode::of_dimension(int p) const {
    std::vector<Interval> out;
    for (const auto& i : intervals_)
        if (i.dimension == p) out.push_back(i);
    return Barcode(std::move(out));
}

std::vector<int> Barcode::dimensions() const {
    std::vector<int> out;
    for (const auto& i : intervals_)
        if (out.empty() || out.back() != i.dimension) out.push_back(i.dimension);
    return out;
}

std::size_t Barcode::covering(int p, ZigzagIndex at) const {
    return std::count_if(intervals_.begin(), intervals_.end(),
                         [&](const Interval& i) { return i.dimension == p && i.covers(at); });
}

std::string to_string(const Barcode& b) {
    std::ostringstream os;
    for (std::size_t k = 0; k < b.intervals().size(); ++k) {
        const auto& i = b.intervals()[k];
        os << (k ? " " : "") << "H" << i.dimension << "[" << i.start.value() << "," << i.end.value()
           << "]";
    }
    return os.str();
}

Barcode suppress_half_integral(const Barcode& b, bool clip) {
    std::vector<Interval> out;
    for (auto i : b.intervals()) {
        if (i.start == i.end && i.start.half_integral()) continue;  // lives on a bridge only
        if (clip) {
            if (i.start.half_integral()) ++i.start.doubled;
            if (i.end.half_integral()) --i.end.doubled;
        }
        out.push_back(i);
    }
    return Barcode(std::move(out));
}

Barcode mirror(const Barcode& b, int last_stage) {
    std::vector<Interval> out;
    for (const auto& i : b.intervals())
        out.push_back({i.dimension, ZigzagIndex{2 * last_stage - i.end.doubled},
                       ZigzagIndex{2 * last_stage - i.start.doubled}});
    return Barcode(std::move(out));
}

namespace {

/// Linear relation R between the homology of two neighbouring stages induced
/// by the bridge: (a, b) in R iff a and b come from one bridge class (span) or
/// have the same image in the bridge (cospan).
struct BridgeRelation {
    /// Spanning set of R; a in the left stage's current basis, b in the right
    /// stage's original basis.
    std::vector<std::pair<Bits, Bits>> generators;
    /// Bridge maps into the stages (intersections, biwitness) rather than the
    /// stages into the bridge (unions).
    bool span = false;
    std::size_t bridge_rank = 0;
    /// Classes alive only at the bridge.
    std::size_t bridge_only = 0;
};

struct Matching {
    /// Per left basis position: the new right basis position it continues
    /// into, or the doubled index where its interval ends.
    std::vector<std::optional<std::size_t>> partner;
    std::vector<int> end;
    /// New right basis in original right coordinates, matched vectors first,
    /// and the doubled start index of each unmatched one.
    std::vector<Bits> right_basis;
    std::vector<int> start;
    std::size_t matched = 0;
};

Bits permuted(const Bits& v, const std::vector<std::size_t>& order) {
    Bits out(v.size());
    for (std::size_t i = 0; i < order.size(); ++i) out[i] = v[order[i]];
    return out;
}

Bits unpermuted(const Bits& v, const std::vector<std::size_t>& order) {
    Bits out(v.size());
    for (std::size_t i = 0; i < order.size(); ++i) out[order[i]] = v[i];
    return out;
}

/// Splits both stages along the relation. On the left, L0 = {a : (a,0) in R}
/// sits inside L1 = proj_left(R); on the right R0 and R1 likewise. L1/L0 and
/// R1/R0 are matched isomorphically; the rest open or close intervals.
///
/// The left basis is adapted to L0 and L1 by triangular changes: a
/// combination that leaves at the bridge takes over the interval of its
/// youngest member, a continuing one the interval of its eldest.
Matching match_classes(std::size_t m, std::size_t m2, const BridgeRelation& rel,
                       const std::vector<int>& births, int j) {
    Echelon by_left(m, m2), by_right(m2, m);
    std::vector<Bits> l0, r0, l1;
    for (const auto& [a, b] : rel.generators) {
        Bits tb = b;
        if (!by_left.insert(a, tb) && tb.any()) r0.push_back(tb);
        Bits ta = a;
        if (!by_right.insert(b, ta) && ta.any()) l0.push_back(ta);
        if (a.any()) l1.push_back(a);
    }

    std::vector<std::size_t> young(m);
    std::iota(young.begin(), young.end(), std::size_t{0});
    std::sort(young.begin(), young.end(), [&](std::size_t x, std::size_t y) {
        return births[x] != births[y] ? births[x] > births[y] : x > y;
    });
    const std::vector<std::size_t> elder(young.rbegin(), young.rend());

    Matching out;
    out.partner.assign(m, std::nullopt);
    out.end.assign(m, rel.span ? 2 * j : 2 * j + 1);

    Echelon leaving(m, 0);
    for (const auto& v : l0) leaving.insert(permuted(v, young));
    for (std::size_t r = 0; r < leaving.rank(); ++r)
        out.end[young[leaving.pivot(r)]] = rel.span ? 2 * j + 1 : 2 * j;

    Echelon staying(m, 0);
    for (const auto& a : l1) {
        Bits v = permuted(a, young);
        if (leaving.reduce(v)) continue;
        staying.insert(permuted(unpermuted(v, young), elder));
    }
    std::vector<std::pair<std::size_t, Bits>> continuing;  // (left position, vector)
    for (std::size_t r = 0; r < staying.rank(); ++r)
        continuing.emplace_back(elder[staying.pivot(r)], unpermuted(staying.row(r), elder));
    std::sort(continuing.begin(), continuing.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });

    Echelon chosen(m2, 0);
    for (auto& [q, a] : continuing) {
        Bits b(m2);
        if (!by_left.reduce(a, b)) throw std::logic_error("zigzag: matched class outside the relation");
        if (!chosen.insert(b)) throw std::logic_error("zigzag: matched classes are dependent");
        out.partner[q] = out.right_basis.size();
        out.right_basis.push_back(std::move(b));
    }
    out.matched = out.right_basis.size();
    for (auto& b : r0)
        if (chosen.insert(b)) {
            out.right_basis.push_back(std::move(b));
            out.start.push_back(rel.span ? 2 * j + 1 : 2 * j + 2);
        }
    for (std::size_t k = 0; k < m2 && out.right_basis.size() < m2; ++k) {
        Bits e = unit_vector(m2, k);
        if (chosen.insert(e)) {
            out.right_basis.push_back(std::move(e));
            out.start.push_back(rel.span ? 2 * j + 2 : 2 * j + 1);
        }
    }
    return out;
}

/// Stages map into the bridge (union diagrams).
BridgeRelation cospan_relation(const SimplicialHomology& left, const SimplicialHomology& right,
                               const SimplicialHomology& bridge) {
    const std::size_t m = left.rank(), m2 = right.rank(), u = bridge.rank();
    auto push = [&](const SimplexChain& z) {
        auto c = bridge.coordinates(z);
        if (!c) throw std::logic_error("zigzag: stage cycle is not a cycle of the bridge");
        return *c;
    };
    std::vector<Bits> images;
    for (const auto& z : left.representatives()) images.push_back(push(z));
    for (const auto& z : right.representatives()) images.push_back(push(z));

    BridgeRelation rel;
    Echelon cols(u, m + m2);
    for (std::size_t k = 0; k < m + m2; ++k) {
        Bits tag = unit_vector(m + m2, k);
        if (cols.insert(images[k], tag)) continue;
        Bits a(m), b(m2);
        for (std::size_t i = 0; i < m; ++i) a[i] = tag[i];
        for (std::size_t i = 0; i < m2; ++i) b[i] = tag[m + i];
        rel.generators.emplace_back(std::move(a), std::move(b));
    }
    rel.bridge_rank = u;
    rel.bridge_only = u - cols.rank();
    return rel;
}

/// The bridge maps into both stages (intersection and biwitness diagrams).
template <class Cell, class MapL, class MapR>
BridgeRelation span_relation(const SimplicialHomology& left, const SimplicialHomology& right,
                             const HomologyGroup<Cell>& bridge, MapL&& to_left, MapR&& to_right) {
    const std::size_t m = left.rank(), m2 = right.rank();
    auto coords = [](const SimplicialHomology& h, const SimplexChain& z) {
        auto c = h.coordinates(z);
        if (!c) throw std::logic_error("zigzag: bridge cycle does not map to a cycle");
        return *c;
    };
    BridgeRelation rel;
    rel.span = true;
    Echelon pairs(m + m2, 0);
    for (const auto& c : bridge.representatives()) {
        Bits a = coords(left, to_left(c));
        Bits b = coords(right, to_right(c));
        Bits ab(m + m2);
        for (std::size_t i = 0; i < m; ++i) ab[i] = a[i];
        for (std::size_t i = 0; i < m2; ++i) ab[m + i] = b[i];
        pairs.insert(std::move(ab));
        rel.generators.emplace_back(std::move(a), std::move(b));
    }
    rel.bridge_rank = bridge.rank();
    rel.bridge_only = bridge.rank() - pairs.rank();
    return rel;
}

using StageGroups = std::vector<SimplicialHomology>;

/// Interval bookkeeping across the bridges of a diagram, per dimension.
class Sweep {
public:
    explicit Sweep(std::vector<int> dims) : dims_(std::move(dims)), open_(dims_.size()) {}

    void begin(StageGroups& first) {
        record_betti(first);
        for (std::size_t k = 0; k < dims_.size(); ++k)
            for (std::size_t i = 0; i < first[k].rank(); ++i) open_[k].push_back(open_at(k, 0));
    }

    /// Crosses bridge j in dimension dims[k]; rebases `right` so its basis
    /// lines up with the matches.
    void cross(int j, std::size_t k, const BridgeRelation& rel, StageGroups& left, StageGroups& right) {
        const std::size_t m = left[k].rank(), m2 = right[k].rank();
        std::vector<int> births;
        for (auto id : open_[k]) births.push_back(intervals_[id].start.doubled);
        const Matching match = match_classes(m, m2, rel, births, j);
        right[k].rebase(match.right_basis);

        std::vector<std::size_t> next(m2, 0);
        for (std::size_t q = 0; q < m; ++q) {
            if (match.partner[q])
                next[*match.partner[q]] = open_[k][q];
            else
                intervals_[open_[k][q]].end = ZigzagIndex{match.end[q]};
        }
        for (std::size_t r = match.matched; r < m2; ++r) next[r] = open_at(k, match.start[r - match.matched]);
        for (std::size_t b = 0; b < rel.bridge_only; ++b)
            intervals_.push_back({dims_[k], ZigzagIndex::bridge(j), ZigzagIndex::bridge(j)});
        open_[k] = std::move(next);

        if (bridge_betti_.size() <= static_cast<std::size_t>(j)) bridge_betti_.resize(j + 1);
        auto& row = bridge_betti_[j];
        row.resize(dims_.size());
        row[k] = rel.bridge_rank;
    }

    void record_betti(const StageGroups& g) {
        std::vector<std::size_t> b;
        for (const auto& h : g) b.push_back(h.rank());
        betti_.push_back(std::move(b));
    }

    ZigzagResult finish(int last_stage) {
        for (auto& per_dim : open_)
            for (auto id : per_dim) intervals_[id].end = ZigzagIndex::stage(last_stage);
        return {dims_, Barcode(intervals_), betti_, bridge_betti_};
    }

    const std::vector<int>& dims() const { return dims_; }

private:
    std::size_t open_at(std::size_t k, int doubled) {
        intervals_.push_back({dims_[k], ZigzagIndex{doubled}, ZigzagIndex{doubled}});
        return intervals_.size() - 1;
    }

    std::vector<int> dims_;
    std::vector<std::vector<std::size_t>> open_;
    std::vector<Interval> intervals_;
    std::vector<std::vector<std::size_t>> betti_;
    std::vector<std::vector<std::size_t>> bridge_betti_;
};

template <class Cell>
std::vector<HomologyGroup<Cell>> groups_of(std::shared_ptr<const CellComplex<Cell>> c,
                                           const std::vector<int>& dims) {
    std::vector<HomologyGroup<Cell>> out;
    for (int p : dims) out.emplace_back(c, p);
    return out;
}

void check_dims(const std::vector<int>& dims, int max_dim) {
    if (dims.empty()) throw std::invalid_argument("zigzag: no homology dimensions requested");
    for (int p : dims)
        if (p < 0 || p > max_dim)
            throw std::invalid_argument("zigzag: homology dimension " + std::to_string(p) +
                                        " outside [0, max_dim]");
}

StageGroups witness_stage(const DiagramSpec& spec, const Metric& metric, const IndexSet& landmarks,
                          const std::vector<int>& dims) {
    auto c = std::make_shared<const SimplicialComplex>(
        weak_witness_complex(metric, spec.witnesses, landmarks, spec.max_dim, spec.witness_options));
    return groups_of(std::move(c), dims);
}

void cross_biwitness(Sweep& sweep, int j, const Bicomplex& bc, StageGroups& left,
                     StageGroups& right) {
    auto bridge = std::make_shared<const Bicomplex>(bc);
    for (std::size_t k = 0; k < sweep.dims().size(); ++k) {
        const int p = sweep.dims()[k];
        BicomplexHomology h(bridge, p);
        auto rel = span_relation(
            left[k], right[k], h, [p](const BisimplexChain& c) { return project_chain(c, Side::left, p); },
            [p](const BisimplexChain& c) { return project_chain(c, Side::right, p); });
        sweep.cross(j, k, rel, left, right);
    }
}

}  // namespace

ZigzagResult compute_zigzag(const DiagramSpec& spec, const Metric& metric,
                            const std::vector<int>& dims) {
    if (spec.stages.size() < 2) throw std::invalid_argument("zigzag: need at least 2 stages");
    check_dims(dims, spec.max_dim);
    for (const auto& s : spec.stages) {
        if (s.empty()) throw std::invalid_argument("zigzag: empty stage");
        s.check_bounds(metric.size(), "zigzag stage");
    }
    const int last = static_cast<int>(spec.stages.size()) - 1;
    Sweep sweep(dims);

    if (spec.kind == SequenceKind::biwitness) {
        StageGroups left = witness_stage(spec, metric, spec.stages[0], dims);
        sweep.begin(left);
        for (int j = 0; j < last; ++j) {
            StageGroups right = witness_stage(spec, metric, spec.stages[j + 1], dims);
            const Bicomplex bc = biwitness_complex(metric, spec.witnesses, spec.stages[j],
                                                   spec.stages[j + 1], spec.max_dim,
                                                   spec.witness_options);
            cross_biwitness(sweep, j, bc, left, right);
            sweep.record_betti(right);
            left = std::move(right);
        }
        return sweep.finish(last);
    }

    auto rips = [&](const IndexSet& s) {
        return std::make_shared<const SimplicialComplex>(
            vietoris_rips(metric, s, spec.epsilon, spec.max_dim));
    };
    StageGroups left = groups_of(rips(spec.stages[0]), dims);
    sweep.begin(left);
    for (int j = 0; j < last; ++j) {
        StageGroups right = groups_of(rips(spec.stages[j + 1]), dims);
        if (spec.kind == SequenceKind::unions) {
            auto bridge = rips(set_union(spec.stages[j], spec.stages[j + 1]));
            for (std::size_t k = 0; k < dims.size(); ++k) {
                SimplicialHomology h(bridge, dims[k]);
                sweep.cross(j, k, cospan_relation(left[k], right[k], h), left, right);
            }
        } else {
            const IndexSet meet = set_intersection(spec.stages[j], spec.stages[j + 1]);
            auto bridge = meet.empty() ? std::make_shared<const SimplicialComplex>() : rips(meet);
            auto id = [](const SimplexChain& c) { return c; };
            for (std::size_t k = 0; k < dims.size(); ++k) {
                SimplicialHomology h(bridge, dims[k]);
                sweep.cross(j, k, span_relation(left[k], right[k], h, id, id), left, right);
            }
        }
        sweep.record_betti(right);
        left = std::move(right);
    }
    return sweep.finish(last);
}

namespace {

Barcode finish_barcode(const ZigzagResult& r, bool keep_half_integral) {
    return keep_half_integral ? r.barcode : suppress_half_integral(r.barcode);
}

}  // namespace

Barcode union_zigzag(const std::vector<IndexSet>& stages, const Metric& metric, double epsilon,
                     int max_dim, int p, bool keep_half_integral) {
    DiagramSpec spec{SequenceKind::unions, stages, epsilon, max_dim, {}, {}};
    return finish_barcode(compute_zigzag(spec, metric, {p}), keep_half_integral);
}

Barcode intersection_zigzag(const std::vector<IndexSet>& stages, const Metric& metric,
                            double epsilon, int max_dim, int p, bool keep_half_integral) {
    DiagramSpec spec{SequenceKind::intersections, stages, epsilon, max_dim, {}, {}};
    return finish_barcode(compute_zigzag(spec, metric, {p}), keep_half_integral);
}

Barcode bicomplex_zigzag(const std::vector<IndexSet>& landmark_stages, const IndexSet& witnesses,
                         const Metric& metric, int max_dim, int p, bool keep_half_integral,
                         WitnessOptions opts) {
    DiagramSpec spec{SequenceKind::biwitness, landmark_stages, 0.0, max_dim, witnesses, opts};
    return finish_barcode(compute_zigzag(spec, metric, {p}), keep_half_integral);
}

Graph pairwise_compatibility_graph(const std::vector<IndexSet>& landmarks,
                                   const IndexSet& witnesses, const Metric& metric, int max_dim,
                                   const BarcodeCriterion& criterion, WitnessOptions opts) {
    if (landmarks.size() < 2) throw std::invalid_argument("pairwise: need at least 2 landmark sets");
    check_dims(criterion.dims, max_dim);
    DiagramSpec spec{SequenceKind::biwitness, landmarks, 0.0, max_dim, witnesses, opts};

    std::vector<StageGroups> stages;
    for (const auto& l : landmarks) stages.push_back(witness_stage(spec, metric, l, criterion.dims));

    Barcode expected;
    for (const auto& i : criterion.expected.intervals())
        if (std::find(criterion.dims.begin(), criterion.dims.end(), i.dimension) != criterion.dims.end())
            expected.add(i);

    Graph g{landmarks.size(), {}};
    for (std::size_t a = 0; a < landmarks.size(); ++a)
        for (std::size_t b = a + 1; b < landmarks.size(); ++b) {
            StageGroups left = stages[a], right = stages[b];
            Sweep sweep(criterion.dims);
            sweep.begin(left);
            const Bicomplex bc =
                biwitness_complex(metric, witnesses, landmarks[a], landmarks[b], max_dim, opts);
            cross_biwitness(sweep, 0, bc, left, right);
            sweep.record_betti(right);
            if (suppress_half_integral(sweep.finish(1).barcode) == expected) g.edges.emplace_back(a, b);
        }
    return g;
}

bool rank_consistent(const ZigzagResult& r) {
    for (std::size_t j = 0; j < r.stage_betti.size(); ++j)
        for (std::size_t k = 0; k < r.dims.size(); ++k)
            if (r.barcode.covering(r.dims[k], ZigzagIndex::stage(static_cast<int>(j))) !=
                r.stage_betti[j][k])
                return false;
    for (std::size_t j = 0; j < r.bridge_betti.size(); ++j)
        for (std::size_t k = 0; k < r.dims.size(); ++k)
            if (r.barcode.covering(r.dims[k], ZigzagIndex::bridge(static_cast<int>(j))) !=
                r.bridge_betti[j][k])
                return false;
    return true;
}

}  // namespace zzp
