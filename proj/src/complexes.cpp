#include "zzp/complexes.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <limits>
#include <stdexcept>

namespace zzp {

namespace {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

/// Pairwise distances among the points of a subset, in subset order.
class LocalDistances {
public:
    LocalDistances(const Metric& metric, const IndexSet& subset)
        : n_(subset.size()), d_(n_ * n_, 0.0) {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                d_[i * n_ + j] = d_[j * n_ + i] = metric(subset[i], subset[j]);
    }
    double operator()(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }

private:
    std::size_t n_;
    std::vector<double> d_;
};

/// Depth-first clique enumeration; `up[v]` lists the neighbours of v with a
/// larger local index, sorted. Calls emit(clique) for every clique of at
/// most max_dim + 1 vertices.
template <class Emit>
void for_each_clique(const Adjacency& up, int max_dim, Emit&& emit) {
    std::vector<std::uint32_t> clique;
    auto recurse = [&](auto&& self, const std::vector<std::uint32_t>& cand) -> void {
        emit(clique);
        if (static_cast<int>(clique.size()) > max_dim) return;
        for (std::size_t k = 0; k < cand.size(); ++k) {
            const std::uint32_t c = cand[k];
            std::vector<std::uint32_t> next;
            std::set_intersection(cand.begin() + k + 1, cand.end(), up[c].begin(), up[c].end(),
                                  std::back_inserter(next));
            clique.push_back(c);
            self(self, next);
            clique.pop_back();
        }
    };
    for (std::uint32_t v = 0; v < up.size(); ++v) {
        clique.assign(1, v);
        recurse(recurse, up[v]);
    }
}

SimplicialComplex flag_complex(const IndexSet& vertices, const Adjacency& up, int max_dim) {
    std::vector<Simplex> cells;
    for_each_clique(up, max_dim, [&](const std::vector<std::uint32_t>& clique) {
        Simplex s;
        s.vertices.reserve(clique.size());
        for (auto v : clique) s.vertices.push_back(vertices[v]);
        cells.push_back(std::move(s));
    });
    return SimplicialComplex(std::move(cells));
}

void check_common(const Metric& metric, const IndexSet& set, const char* what) {
    set.check_bounds(metric.size(), what);
}

/// Landmark simplex as sorted positions into the landmark list, padded with
/// `none`. Fixed size keeps witness enumeration allocation-free.
constexpr std::size_t max_key = 8;
constexpr std::uint32_t none = std::numeric_limits<std::uint32_t>::max();
using Key = std::array<std::uint32_t, max_key>;

Key drop(const Key& k, std::size_t i) {
    Key f;
    f.fill(none);
    std::size_t n = 0;
    for (std::size_t j = 0; j < max_key && k[j] != none; ++j)
        if (j != i) f[n++] = k[j];
    return f;
}

Simplex to_simplex(const Key& k, const IndexSet& landmarks) {
    Simplex s;
    for (std::size_t j = 0; j < max_key && k[j] != none; ++j) s.vertices.push_back(landmarks[k[j]]);
    return s;
}

void check_witness_dim(int max_dim, const char* what) {
    if (max_dim < 0) throw std::invalid_argument(std::string(what) + ": max_dim must be nonnegative");
    if (max_dim >= static_cast<int>(max_key))
        throw std::invalid_argument(std::string(what) + ": max_dim above " + std::to_string(max_key - 1) +
                                    " is not supported");
}

/// Landmark simplices weakly witnessed by one point: sets σ of size k such
/// that d(x,u) <= d(x,v) for u in σ and v outside σ. Ties at the k-th
/// distance produce every admissible choice.
class WeakWitnessEnumerator {
public:
    WeakWitnessEnumerator(const Metric& metric, const IndexSet& landmarks, int max_dim)
        : metric_(metric), landmarks_(landmarks), max_dim_(max_dim) {}

    /// Calls emit(key, size) for each witnessed simplex, size = vertex count.
    template <class Emit>
    void run(Index x, Emit&& emit) {
        const std::size_t n = landmarks_.size();
        order_.resize(n);
        for (std::size_t i = 0; i < n; ++i) order_[i] = {metric_(x, landmarks_[i]), static_cast<std::uint32_t>(i)};
        const std::size_t need = std::min<std::size_t>(n, max_dim_ + 2);
        if (need < n)
            std::partial_sort(order_.begin(), order_.begin() + need, order_.end());
        else
            std::sort(order_.begin(), order_.end());

        const std::size_t kmax = std::min<std::size_t>(n, max_dim_ + 1);
        for (std::size_t k = 1; k <= kmax; ++k) {
            const double dk = order_[k - 1].first;
            // strict prefix [0, lo) and tie block at the k-th distance
            std::size_t lo = k - 1;
            while (lo > 0 && order_[lo - 1].first == dk) --lo;
            ties_.clear();
            std::size_t hi = lo;
            while (hi < need && order_[hi].first == dk) ties_.push_back(order_[hi++].second);
            if (hi == need)  // order_ is only sorted on [0, need)
                for (std::size_t i = need; i < n; ++i)
                    if (order_[i].first == dk) ties_.push_back(order_[i].second);
            choose_ties(lo, k - lo, emit);
        }
    }

private:
    template <class Emit>
    void choose_ties(std::size_t strict, std::size_t pick, Emit&& emit) {
        Key base;
        base.fill(none);
        for (std::size_t i = 0; i < strict; ++i) base[i] = order_[i].second;
        auto rec = [&](auto&& self, std::size_t from, std::size_t depth) -> void {
            if (depth == pick) {
                Key k = base;
                std::sort(k.begin(), k.begin() + strict + pick);
                emit(k, strict + pick);
                return;
            }
            for (std::size_t i = from; i + (pick - depth) <= ties_.size(); ++i) {
                base[strict + depth] = ties_[i];
                self(self, i + 1, depth + 1);
            }
        };
        rec(rec, 0, 0);
    }

    const Metric& metric_;
    const IndexSet& landmarks_;
    int max_dim_;
    std::vector<std::pair<double, std::uint32_t>> order_;
    std::vector<std::uint32_t> ties_;
};

template <class T>
void sort_unique(std::vector<T>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

/// Keeps the witnessed keys all of whose facets are kept; by_size[s] holds
/// keys with s vertices.
void close_simplices(std::vector<std::vector<Key>>& by_size) {
    for (auto& v : by_size) sort_unique(v);
    for (std::size_t s = 2; s < by_size.size(); ++s) {
        const auto& lower = by_size[s - 1];
        std::erase_if(by_size[s], [&](const Key& k) {
            for (std::size_t i = 0; i < s; ++i)
                if (!std::binary_search(lower.begin(), lower.end(), drop(k, i))) return true;
            return false;
        });
    }
}

bool may_witness(Index x, const IndexSet& a, const IndexSet* b, const WitnessOptions& opts) {
    if (!opts.exclude_landmark_witnesses) return true;
    return !a.contains(x) && !(b && b->contains(x));
}

}  // namespace

SimplicialComplex vietoris_rips(const Metric& metric, const IndexSet& subset, double epsilon,
                                int max_dim) {
    if (subset.empty()) throw std::invalid_argument("vietoris_rips: empty vertex set");
    if (epsilon < 0.0) throw std::invalid_argument("vietoris_rips: epsilon must be nonnegative");
    if (max_dim < 0) throw std::invalid_argument("vietoris_rips: max_dim must be nonnegative");
    check_common(metric, subset, "vietoris_rips");

    const std::size_t n = subset.size();
    Adjacency up(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (metric(subset[i], subset[j]) <= epsilon) up[i].push_back(static_cast<std::uint32_t>(j));
    return flag_complex(subset, up, max_dim);
}

FilteredComplex vietoris_rips_filtration(const Metric& metric, const IndexSet& subset,
                                         double max_epsilon, int max_dim) {
    if (subset.empty()) throw std::invalid_argument("vietoris_rips_filtration: empty vertex set");
    if (max_epsilon < 0.0)
        throw std::invalid_argument("vietoris_rips_filtration: epsilon must be nonnegative");
    check_common(metric, subset, "vietoris_rips_filtration");

    const std::size_t n = subset.size();
    const LocalDistances local(metric, subset);
    Adjacency up(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (local(i, j) <= max_epsilon) up[i].push_back(static_cast<std::uint32_t>(j));

    FilteredComplex out;
    for_each_clique(up, max_dim, [&](const std::vector<std::uint32_t>& clique) {
        double diam = 0.0;
        Simplex s;
        for (std::size_t a = 0; a < clique.size(); ++a) {
            s.vertices.push_back(subset[clique[a]]);
            for (std::size_t b = a + 1; b < clique.size(); ++b)
                diam = std::max(diam, local(clique[a], clique[b]));
        }
        out.cells.emplace_back(std::move(s), diam);
    });
    return out;
}

SimplicialComplex lazy_witness_complex(const Metric& metric, const IndexSet& witnesses,
                                       const IndexSet& landmarks, double epsilon, int max_dim) {
    if (landmarks.empty()) throw std::invalid_argument("lazy_witness_complex: empty landmark set");
    if (epsilon < 0.0) throw std::invalid_argument("lazy_witness_complex: epsilon must be nonnegative");
    check_common(metric, witnesses, "lazy_witness_complex");
    if (!witnesses.includes(landmarks))
        throw std::invalid_argument("lazy_witness_complex: landmarks must be a subset of the witnesses");

    const std::size_t n = landmarks.size();
    std::vector<char> edge(n * n, 0);
    std::vector<std::uint32_t> near;
    for (Index x : witnesses) {
        near.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (metric(x, landmarks[i]) <= epsilon) near.push_back(static_cast<std::uint32_t>(i));
        for (std::size_t a = 0; a < near.size(); ++a)
            for (std::size_t b = a + 1; b < near.size(); ++b) edge[near[a] * n + near[b]] = 1;
    }
    Adjacency up(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (edge[i * n + j]) up[i].push_back(static_cast<std::uint32_t>(j));
    return flag_complex(landmarks, up, max_dim);
}

SimplicialComplex weak_witness_complex(const Metric& metric, const IndexSet& witnesses,
                                       const IndexSet& landmarks, int max_dim,
                                       WitnessOptions opts) {
    if (landmarks.empty()) throw std::invalid_argument("weak_witness_complex: empty landmark set");
    check_witness_dim(max_dim, "weak_witness_complex");
    check_common(metric, witnesses, "weak_witness_complex");
    if (!witnesses.includes(landmarks))
        throw std::invalid_argument("weak_witness_complex: landmarks must be a subset of the witnesses");

    WeakWitnessEnumerator wit(metric, landmarks, max_dim);
    std::vector<std::vector<Key>> by_size(max_dim + 2);
    for (Index x : witnesses) {
        if (!may_witness(x, landmarks, nullptr, opts)) continue;
        wit.run(x, [&](const Key& k, std::size_t s) { by_size[s].push_back(k); });
    }
    close_simplices(by_size);
    std::vector<Simplex> cells;
    for (const auto& v : by_size)
        for (const auto& k : v) cells.push_back(to_simplex(k, landmarks));
    return SimplicialComplex(std::move(cells));
}

Bicomplex biwitness_complex(const Metric& metric, const IndexSet& witnesses, const IndexSet& left,
                            const IndexSet& right, int max_total_dim, WitnessOptions opts) {
    if (left.empty() || right.empty())
        throw std::invalid_argument("biwitness_complex: empty landmark set");
    check_witness_dim(max_total_dim, "biwitness_complex");
    check_common(metric, witnesses, "biwitness_complex");
    if (!witnesses.includes(left) || !witnesses.includes(right))
        throw std::invalid_argument("biwitness_complex: landmarks must be a subset of the witnesses");

    // grade[sl][sr]: witnessed bisimplices with sl left and sr right vertices
    const std::size_t top = max_total_dim + 2;
    std::vector<std::vector<std::vector<std::pair<Key, Key>>>> grade(
        top, std::vector<std::vector<std::pair<Key, Key>>>(top));
    WeakWitnessEnumerator lw(metric, left, max_total_dim);
    WeakWitnessEnumerator rw(metric, right, max_total_dim);
    std::vector<std::pair<Key, std::size_t>> ls, rs;
    for (Index x : witnesses) {
        if (!may_witness(x, left, &right, opts)) continue;
        ls.clear();
        rs.clear();
        lw.run(x, [&](const Key& k, std::size_t s) { ls.emplace_back(k, s); });
        rw.run(x, [&](const Key& k, std::size_t s) { rs.emplace_back(k, s); });
        for (const auto& [a, sa] : ls)
            for (const auto& [b, sb] : rs)
                if (sa + sb <= top) grade[sa][sb].emplace_back(a, b);
    }

    for (std::size_t total = 2; total <= top; ++total)
        for (std::size_t sa = 1; sa < total; ++sa) {
            const std::size_t sb = total - sa;
            auto& cells = grade[sa][sb];
            sort_unique(cells);
            std::erase_if(cells, [&](const std::pair<Key, Key>& c) {
                for (std::size_t i = 0; sa > 1 && i < sa; ++i)
                    if (!std::binary_search(grade[sa - 1][sb].begin(), grade[sa - 1][sb].end(),
                                            std::pair{drop(c.first, i), c.second}))
                        return true;
                for (std::size_t i = 0; sb > 1 && i < sb; ++i)
                    if (!std::binary_search(grade[sa][sb - 1].begin(), grade[sa][sb - 1].end(),
                                            std::pair{c.first, drop(c.second, i)}))
                        return true;
                return false;
            });
        }

    std::vector<Bisimplex> cells;
    for (const auto& row : grade)
        for (const auto& g : row)
            for (const auto& [a, b] : g) cells.push_back({to_simplex(a, left), to_simplex(b, right)});
    return Bicomplex(std::move(cells));
}

SimplexChain project_chain(const BisimplexChain& chain, Side side, int p) {
    if (!chain.homogeneous()) throw std::invalid_argument("project_chain: inhomogeneous chain");
    if (!chain.empty() && chain.cells().front().dim() != p)
        throw std::invalid_argument("project_chain: chain dimension differs from p");
    std::vector<Simplex> out;
    for (const auto& c : chain) {
        const Simplex& f = side == Side::left ? c.left : c.right;
        if (f.dim() == p) out.push_back(f);
    }
    return SimplexChain(std::move(out));
}

SimplicialComplex project_cells(const Bicomplex& bc, Side side) {
    std::vector<Simplex> out;
    for (int d = 0; d <= bc.max_dim(); ++d)
        for (const auto& c : bc.cells(d)) out.push_back(side == Side::left ? c.left : c.right);
    return SimplicialComplex(std::move(out));
}

}  // namespace zzp
