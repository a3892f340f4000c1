#pragma once
// Brute-force reference implementations. Nothing here calls the reduction
// engine or the witness enumerator; faces, boundaries and ranks are rebuilt
// from scratch.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "zzp/cells.hpp"
#include "zzp/metric.hpp"

namespace oracle {

using zzp::Index;
using Matrix = std::vector<std::vector<char>>;  // rows of 0/1

inline std::size_t rank(Matrix m) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && !m[piv][c]) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[piv], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i)
            if (i != r && m[i][c])
                for (std::size_t k = c; k < cols; ++k) m[i][k] ^= m[r][k];
        ++r;
    }
    return r;
}

inline std::vector<std::vector<Index>> drop_each(const std::vector<Index>& v) {
    std::vector<std::vector<Index>> out;
    if (v.size() < 2) return out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        auto f = v;
        f.erase(f.begin() + i);
        out.push_back(f);
    }
    return out;
}

inline std::vector<std::vector<Index>> facets_of(const zzp::Simplex& s) { return drop_each(s.vertices); }

inline std::vector<std::pair<std::vector<Index>, std::vector<Index>>> facets_of(const zzp::Bisimplex& b) {
    std::vector<std::pair<std::vector<Index>, std::vector<Index>>> out;
    for (auto& l : drop_each(b.left.vertices)) out.emplace_back(l, b.right.vertices);
    for (auto& r : drop_each(b.right.vertices)) out.emplace_back(b.left.vertices, r);
    return out;
}

inline std::vector<Index> key_of(const zzp::Simplex& s) { return s.vertices; }
inline std::pair<std::vector<Index>, std::vector<Index>> key_of(const zzp::Bisimplex& b) {
    return {b.left.vertices, b.right.vertices};
}

/// Betti numbers 0..max_p from dense boundary ranks.
template <class Cell>
std::vector<std::size_t> betti(const std::vector<Cell>& cells, int max_p) {
    using Key = decltype(key_of(cells[0]));
    std::vector<std::map<Key, std::size_t>> grade(max_p + 3);
    for (const auto& c : cells)
        if (c.dim() <= max_p + 1) grade[c.dim()].emplace(key_of(c), 0);
    for (auto& g : grade) {
        std::size_t i = 0;
        for (auto& [k, v] : g) v = i++;
    }
    auto boundary_rank = [&](int p) -> std::size_t {  // rank of ∂_p
        if (p <= 0 || grade[p].empty() || grade[p - 1].empty()) return 0;
        Matrix m(grade[p].size(), std::vector<char>(grade[p - 1].size(), 0));
        for (const auto& c : cells)
            if (c.dim() == p)
                for (const auto& f : facets_of(c)) m[grade[p].at(key_of(c))][grade[p - 1].at(f)] ^= 1;
        return rank(std::move(m));
    };
    std::vector<std::size_t> out;
    for (int p = 0; p <= max_p; ++p) out.push_back(grade[p].size() - boundary_rank(p) - boundary_rank(p + 1));
    return out;
}

/// Basis of {x : x M = 0}, where M has one row per chain-space coordinate.
inline Matrix left_nullspace(const Matrix& m, std::size_t cols) {
    const std::size_t n = m.size();
    Matrix aug(n, std::vector<char>(cols + n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(m[i].begin(), m[i].end(), aug[i].begin());
        aug[i][cols + i] = 1;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t piv = r;
        while (piv < n && !aug[piv][c]) ++piv;
        if (piv == n) continue;
        std::swap(aug[piv], aug[r]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != r && aug[i][c])
                for (std::size_t k = 0; k < cols + n; ++k) aug[i][k] ^= aug[r][k];
        ++r;
    }
    Matrix out;
    for (std::size_t i = r; i < n; ++i) out.emplace_back(aug[i].begin() + cols, aug[i].end());
    return out;
}

/// Rank of H_p(K_a) -> H_p(K_b) for the sublevel complexes of a filtration,
/// computed as rank(B_b + Z_a) - rank(B_b) in the p-chains of K_b.
inline std::size_t map_rank(const std::vector<std::pair<zzp::Simplex, double>>& cells, int p, double a,
                            double b) {
    std::map<std::vector<Index>, std::size_t> pos_b, face_b;
    for (const auto& [s, v] : cells) {
        if (v > b) continue;
        if (s.dim() == p) pos_b.emplace(s.vertices, 0);
        if (s.dim() == p - 1) face_b.emplace(s.vertices, 0);
    }
    std::size_t i = 0;
    for (auto& [k, v] : pos_b) v = i++;
    i = 0;
    for (auto& [k, v] : face_b) v = i++;

    // cycles of K_a: left kernel of its ∂_p rows
    std::vector<std::size_t> rows_a;
    Matrix da;
    for (const auto& [s, v] : cells)
        if (s.dim() == p && v <= a) {
            rows_a.push_back(pos_b.at(s.vertices));
            std::vector<char> row(face_b.size(), 0);
            for (const auto& f : facets_of(s)) row[face_b.at(f)] ^= 1;
            da.push_back(row);
        }
    Matrix z = left_nullspace(da, face_b.size());

    Matrix bnd;
    for (const auto& [s, v] : cells)
        if (s.dim() == p + 1 && v <= b) {
            std::vector<char> row(pos_b.size(), 0);
            for (const auto& f : facets_of(s)) row[pos_b.at(f)] ^= 1;
            bnd.push_back(row);
        }
    const std::size_t rb = rank(bnd);
    for (const auto& zz : z) {
        std::vector<char> row(pos_b.size(), 0);
        for (std::size_t k = 0; k < zz.size(); ++k)
            if (zz[k]) row[rows_a[k]] = 1;
        bnd.push_back(row);
    }
    return rank(bnd) - rb;
}

/// Rank of H_p(B) -> H_p(W_L) (+) H_p(W_R) induced by the projections of a
/// bicomplex onto the factors used. A p-bisimplex maps to its left factor
/// when that factor has dimension p, and to zero otherwise.
inline std::size_t projection_rank(const std::vector<zzp::Bisimplex>& b, const std::vector<zzp::Simplex>& left,
                                   const std::vector<zzp::Simplex>& right, int p, bool use_left, bool use_right) {
    std::map<std::pair<std::vector<Index>, std::vector<Index>>, std::size_t> cell, face;
    for (const auto& c : b) {
        if (c.dim() == p) cell.emplace(key_of(c), cell.size());
        if (c.dim() == p - 1) face.emplace(key_of(c), face.size());
    }
    std::vector<std::vector<Index>> cells_by_pos(cell.size());
    std::vector<std::vector<Index>> right_by_pos(cell.size());
    Matrix d(cell.size(), std::vector<char>(face.size(), 0));
    for (const auto& [k, i] : cell) {
        cells_by_pos[i] = k.first;
        right_by_pos[i] = k.second;
        for (const auto& f : facets_of(zzp::Bisimplex{zzp::Simplex(k.first), zzp::Simplex(k.second)}))
            d[i][face.at(f)] ^= 1;
    }
    const Matrix z = left_nullspace(d, face.size());

    std::map<std::vector<Index>, std::size_t> coord;  // target p-cells; right ones tagged by a leading marker
    auto add_side = [&](const std::vector<zzp::Simplex>& cx, Index tag) {
        for (const auto& s : cx)
            if (s.dim() == p) {
                auto k = s.vertices;
                k.insert(k.begin(), tag);
                coord.emplace(k, coord.size());
            }
    };
    constexpr Index left_tag = 0, right_tag = 1;
    if (use_left) add_side(left, left_tag);
    if (use_right) add_side(right, right_tag);

    Matrix rows;
    auto add_boundaries = [&](const std::vector<zzp::Simplex>& cx, Index tag) {
        for (const auto& s : cx)
            if (s.dim() == p + 1) {
                std::vector<char> row(coord.size(), 0);
                for (auto f : facets_of(s)) {
                    f.insert(f.begin(), tag);
                    row[coord.at(f)] ^= 1;
                }
                rows.push_back(row);
            }
    };
    if (use_left) add_boundaries(left, left_tag);
    if (use_right) add_boundaries(right, right_tag);
    const std::size_t rb = rank(rows);
    for (const auto& v : z) {
        std::vector<char> row(coord.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i]) continue;
            auto l = cells_by_pos[i], r = right_by_pos[i];
            if (use_left && l.size() == static_cast<std::size_t>(p + 1)) {
                l.insert(l.begin(), left_tag);
                row[coord.at(l)] ^= 1;
            }
            if (use_right && r.size() == static_cast<std::size_t>(p + 1)) {
                r.insert(r.begin(), right_tag);
                row[coord.at(r)] ^= 1;
            }
        }
        rows.push_back(row);
    }
    return rank(rows) - rb;
}

/// Vertex subsets of `l` of size 1..k, as sorted global indices.
inline std::vector<std::vector<Index>> subsets(const zzp::IndexSet& l, std::size_t k) {
    std::vector<std::vector<Index>> out;
    std::vector<Index> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!cur.empty()) out.push_back(cur);
        if (cur.size() == k) return;
        for (std::size_t i = from; i < l.size(); ++i) {
            cur.push_back(l[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

/// x weakly witnesses s with respect to l.
inline bool witnesses(const zzp::Metric& m, Index x, const std::vector<Index>& s, const zzp::IndexSet& l) {
    for (Index u : s)
        for (Index v : l)
            if (!std::binary_search(s.begin(), s.end(), v) && m(x, u) > m(x, v)) return false;
    return true;
}

inline std::set<std::vector<Index>> weak_witness(const zzp::Metric& m, const zzp::IndexSet& w,
                                                  const zzp::IndexSet& l, int max_dim) {
    std::set<std::vector<Index>> witnessed, out;
    for (const auto& s : subsets(l, max_dim + 1))
        for (Index x : w)
            if (witnesses(m, x, s, l)) {
                witnessed.insert(s);
                break;
            }
    for (const auto& s : witnessed) {
        bool ok = true;
        for (const auto& f : subsets(zzp::IndexSet(s), s.size()))
            ok = ok && witnessed.contains(f);
        if (ok) out.insert(s);
    }
    return out;
}

using BiKey = std::pair<std::vector<Index>, std::vector<Index>>;

inline std::set<BiKey> biwitness(const zzp::Metric& m, const zzp::IndexSet& w, const zzp::IndexSet& l,
                                 const zzp::IndexSet& r, int max_total_dim) {
    std::set<BiKey> witnessed, out;
    for (const auto& a : subsets(l, max_total_dim + 1))
        for (const auto& b : subsets(r, max_total_dim + 1)) {
            if (static_cast<int>(a.size() + b.size()) - 2 > max_total_dim) continue;
            for (Index x : w)
                if (witnesses(m, x, a, l) && witnesses(m, x, b, r)) {
                    witnessed.emplace(a, b);
                    break;
                }
        }
    for (const auto& [a, b] : witnessed) {
        bool ok = true;
        for (const auto& fa : subsets(zzp::IndexSet(a), a.size()))
            for (const auto& fb : subsets(zzp::IndexSet(b), b.size())) ok = ok && witnessed.contains({fa, fb});
        if (ok) out.emplace(a, b);
    }
    return out;
}

/// Clique complex of the epsilon graph on `s`, straight from the definition.
inline std::set<std::vector<Index>> rips(const zzp::Metric& m, const zzp::IndexSet& s, double eps, int max_dim) {
    std::set<std::vector<Index>> out;
    std::vector<Index> cur;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!cur.empty()) out.insert(cur);
        if (static_cast<int>(cur.size()) == max_dim + 1) return;
        for (std::size_t i = from; i < s.size(); ++i) {
            bool ok = true;
            for (Index v : cur) ok = ok && m(v, s[i]) <= eps;
            if (!ok) continue;
            cur.push_back(s[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline std::vector<zzp::Simplex> as_simplices(const std::set<std::vector<Index>>& s) {
    std::vector<zzp::Simplex> out;
    for (const auto& v : s) out.emplace_back(v);
    return out;
}

/// Random face-closed simplicial complex on `nverts` vertices.
inline std::vector<zzp::Simplex> random_complex(std::mt19937_64& rng, Index nverts, int max_dim,
                                                std::size_t max_cells) {
    std::set<std::vector<Index>> cells;
    std::uniform_int_distribution<int> dim(0, max_dim);
    std::vector<Index> verts(nverts);
    for (Index i = 0; i < nverts; ++i) verts[i] = i;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::shuffle(verts.begin(), verts.end(), rng);
        std::vector<Index> top(verts.begin(), verts.begin() + std::min<int>(dim(rng) + 1, nverts));
        std::sort(top.begin(), top.end());
        auto next = cells;
        for (const auto& f : subsets(zzp::IndexSet(top), top.size())) next.insert(f);
        if (next.size() > max_cells) break;
        cells = std::move(next);
    }
    return as_simplices(cells);
}

/// Points with small integer coordinates, so distance ties are common.
inline zzp::PointCloud grid_cloud(std::mt19937_64& rng, std::size_t n, std::size_t dim, int range) {
    std::uniform_int_distribution<int> u(-range, range);
    std::vector<double> c(n * dim);
    for (auto& x : c) x = u(rng);
    return zzp::PointCloud(dim, c);
}

}  // namespace oracle
