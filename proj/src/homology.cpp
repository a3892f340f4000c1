#include "zzp/homology.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace zzp {

void add_column(Column& target, const Column& source, Column& scratch) {
    scratch.clear();
    std::set_symmetric_difference(target.begin(), target.end(), source.begin(), source.end(),
                                  std::back_inserter(scratch));
    target.swap(scratch);
}

template <class Cell>
std::vector<Column> boundary_matrix(const CellComplex<Cell>& complex, int p) {
    std::vector<Column> cols;
    const auto& cells = complex.cells(p);
    cols.reserve(cells.size());
    for (const auto& c : cells) {
        Column col;
        for (const auto& f : c.facets()) {
            const auto idx = complex.index_of(f);
            if (!idx) throw std::invalid_argument("boundary_matrix: complex is not closed under faces");
            col.push_back(static_cast<std::uint32_t>(*idx));
        }
        std::sort(col.begin(), col.end());
        cols.push_back(std::move(col));
    }
    return cols;
}

template std::vector<Column> boundary_matrix(const SimplicialComplex&, int);
template std::vector<Column> boundary_matrix(const Bicomplex&, int);

template <class Cell>
HomologyGroup<Cell>::HomologyGroup(std::shared_ptr<const CellComplex<Cell>> complex, int p)
    : complex_(std::move(complex)), p_(p) {
    if (p < 0) throw std::invalid_argument("homology: negative dimension");
    const std::size_t np = complex_->count(p);
    Column scratch;

    // image of ∂_{p+1}
    bd_pivot_.assign(np, -1);
    {
        auto cols = boundary_matrix(*complex_, p + 1);
        for (auto& col : cols) {
            while (!col.empty()) {
                const auto piv = bd_pivot_[col.back()];
                if (piv < 0) {
                    bd_pivot_[col.back()] = static_cast<std::int32_t>(bd_cols_.size());
                    bd_cols_.push_back(std::move(col));
                    break;
                }
                add_column(col, bd_cols_[piv], scratch);
            }
        }
    }

    // kernel of ∂_p, tracking the column operations in v
    rep_pivot_.assign(np, -1);
    const std::size_t nrows = complex_->count(p - 1);
    std::vector<std::int32_t> pivot(nrows, -1);
    std::vector<Column> rcols, vcols;
    auto cols = boundary_matrix(*complex_, p);
    for (std::size_t j = 0; j < np; ++j) {
        Column r = std::move(cols[j]);
        Column v{static_cast<std::uint32_t>(j)};
        while (!r.empty()) {
            const auto piv = pivot[r.back()];
            if (piv < 0) break;
            add_column(r, rcols[piv], scratch);
            add_column(v, vcols[piv], scratch);
        }
        if (!r.empty()) {
            pivot[r.back()] = static_cast<std::int32_t>(rcols.size());
            rcols.push_back(std::move(r));
            vcols.push_back(std::move(v));
        } else if (bd_pivot_[j] < 0) {
            rep_pivot_[j] = static_cast<std::int32_t>(rep_cols_.size());
            orig_reps_.push_back(to_chain(v));
            rep_cols_.push_back(std::move(v));
        }
    }
    reps_ = orig_reps_;
    for (std::size_t k = 0; k < reps_.size(); ++k) basis_in_orig_.push_back(unit_vector(reps_.size(), k));
}

template <class Cell>
Column HomologyGroup<Cell>::to_column(const Chain<Cell>& z) const {
    Column col;
    col.reserve(z.size());
    for (const auto& c : z) {
        if (c.dim() != p_)
            throw std::invalid_argument("homology: chain has a cell of dimension " +
                                        std::to_string(c.dim()) + ", expected " + std::to_string(p_));
        const auto idx = complex_->index_of(c);
        if (!idx) throw std::invalid_argument("homology: chain is not supported on the complex");
        col.push_back(static_cast<std::uint32_t>(*idx));
    }
    std::sort(col.begin(), col.end());
    return col;
}

template <class Cell>
Chain<Cell> HomologyGroup<Cell>::to_chain(const Column& c) const {
    const auto& cells = complex_->cells(p_);
    std::vector<Cell> out;
    out.reserve(c.size());
    for (auto i : c) out.push_back(cells[i]);
    return Chain<Cell>(std::move(out));
}

template <class Cell>
std::optional<Bits> HomologyGroup<Cell>::coordinates(const Chain<Cell>& z) const {
    Column col = to_column(z);
    Column scratch;
    Bits orig(rep_cols_.size());
    while (!col.empty()) {
        const auto low = col.back();
        if (bd_pivot_[low] >= 0) {
            add_column(col, bd_cols_[bd_pivot_[low]], scratch);
        } else if (rep_pivot_[low] >= 0) {
            add_column(col, rep_cols_[rep_pivot_[low]], scratch);
            orig.flip(rep_pivot_[low]);
        } else {
            return std::nullopt;
        }
    }
    if (!change_) return orig;
    return change_->solve(std::move(orig));
}

template <class Cell>
bool HomologyGroup<Cell>::is_boundary(const Chain<Cell>& z) const {
    const auto c = coordinates(z);
    if (!c) throw std::invalid_argument("is_boundary: chain is not a cycle");
    return c->none();
}

template <class Cell>
void HomologyGroup<Cell>::rebase(const std::vector<Bits>& combos) {
    const std::size_t n = rank();
    if (combos.size() != n) throw std::invalid_argument("rebase: wrong number of basis vectors");
    std::vector<Bits> in_orig;
    Echelon change(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (combos[k].size() != n) throw std::invalid_argument("rebase: wrong vector length");
        Bits v(n);
        for (std::size_t i = 0; i < n; ++i)
            if (combos[k].test(i)) v ^= basis_in_orig_[i];
        Bits tag = unit_vector(n, k);
        if (!change.insert(v, tag)) throw std::invalid_argument("rebase: vectors are dependent");
        in_orig.push_back(std::move(v));
    }
    std::vector<Chain<Cell>> reps;
    for (const auto& v : in_orig) {
        Chain<Cell> c;
        for (std::size_t i = 0; i < n; ++i)
            if (v.test(i)) c += orig_reps_[i];
        reps.push_back(std::move(c));
    }
    basis_in_orig_ = std::move(in_orig);
    change_ = std::move(change);
    reps_ = std::move(reps);
}

template class HomologyGroup<Simplex>;
template class HomologyGroup<Bisimplex>;

namespace {

template <class Cell>
std::shared_ptr<const CellComplex<Cell>> borrow(const CellComplex<Cell>& c) {
    return std::shared_ptr<const CellComplex<Cell>>(&c, [](const CellComplex<Cell>*) {});
}

}  // namespace

template <class Cell>
HomologyBasis<Cell> homology_basis(const CellComplex<Cell>& complex, int p) {
    HomologyGroup<Cell> h(borrow(complex), p);
    return {p, h.representatives()};
}

template <class Cell>
bool is_boundary(const Chain<Cell>& z, const CellComplex<Cell>& complex, int p) {
    return HomologyGroup<Cell>(borrow(complex), p).is_boundary(z);
}

template <class Cell>
bool classes_equal(const Chain<Cell>& a, const Chain<Cell>& b, const CellComplex<Cell>& complex,
                   int p) {
    return is_boundary(a + b, complex, p);
}

template <class Cell>
std::vector<std::size_t> betti_numbers(const CellComplex<Cell>& complex, int max_p) {
    std::vector<std::size_t> out;
    for (int p = 0; p <= max_p; ++p) out.push_back(HomologyGroup<Cell>(borrow(complex), p).rank());
    return out;
}

template HomologyBasis<Simplex> homology_basis(const SimplicialComplex&, int);
template HomologyBasis<Bisimplex> homology_basis(const Bicomplex&, int);
template bool is_boundary(const SimplexChain&, const SimplicialComplex&, int);
template bool is_boundary(const BisimplexChain&, const Bicomplex&, int);
template bool classes_equal(const SimplexChain&, const SimplexChain&, const SimplicialComplex&, int);
template bool classes_equal(const BisimplexChain&, const BisimplexChain&, const Bicomplex&, int);
template std::vector<std::size_t> betti_numbers(const SimplicialComplex&, int);
template std::vector<std::size_t> betti_numbers(const Bicomplex&, int);

std::size_t rank_z2(std::vector<Column> columns) {
    std::map<std::uint32_t, std::size_t> pivot;
    Column scratch;
    std::size_t rank = 0;
    for (std::size_t j = 0; j < columns.size(); ++j) {
        auto& col = columns[j];
        while (!col.empty()) {
            auto it = pivot.find(col.back());
            if (it == pivot.end()) {
                pivot.emplace(col.back(), j);
                ++rank;
                break;
            }
            add_column(col, columns[it->second], scratch);
        }
    }
    return rank;
}

const std::vector<PersistencePair>& PersistenceIntervals::intervals(int p) const {
    static const std::vector<PersistencePair> none;
    if (p < 0 || p >= static_cast<int>(by_dim.size())) return none;
    return by_dim[p];
}

PersistenceIntervals persistent_homology(const FilteredComplex& filtered) {
    const std::size_t n = filtered.cells.size();
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& [sa, va] = filtered.cells[a];
        const auto& [sb, vb] = filtered.cells[b];
        if (va != vb) return va < vb;
        if (sa.dim() != sb.dim()) return sa.dim() < sb.dim();
        return sa < sb;
    });

    // simplex -> position in filtration order
    std::vector<std::pair<Simplex, std::uint32_t>> lookup;
    lookup.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        lookup.emplace_back(filtered.cells[order[k]].first, static_cast<std::uint32_t>(k));
    std::sort(lookup.begin(), lookup.end());
    for (std::size_t k = 1; k < n; ++k)
        if (lookup[k].first == lookup[k - 1].first)
            throw std::invalid_argument("persistent_homology: repeated simplex");

    int max_dim = -1;
    std::vector<Column> cols(n);
    for (std::size_t k = 0; k < n; ++k) {
        const auto& [s, v] = filtered.cells[order[k]];
        max_dim = std::max(max_dim, s.dim());
        for (const auto& f : s.facets()) {
            auto it = std::lower_bound(lookup.begin(), lookup.end(), f,
                                       [](const auto& e, const Simplex& x) { return e.first < x; });
            if (it == lookup.end() || !(it->first == f))
                throw std::invalid_argument("persistent_homology: missing face");
            if (filtered.cells[order[it->second]].second > v)
                throw std::invalid_argument("persistent_homology: filtration is not monotone");
            cols[k].push_back(it->second);
        }
        std::sort(cols[k].begin(), cols[k].end());
    }

    PersistenceIntervals out;
    out.by_dim.resize(std::max(max_dim + 1, 0));
    out.zero_length.assign(out.by_dim.size(), 0);
    std::vector<std::int32_t> pivot(n, -1);
    std::vector<bool> paired(n, false);
    Column scratch;
    for (std::size_t j = 0; j < n; ++j) {
        auto& col = cols[j];
        while (!col.empty() && pivot[col.back()] >= 0) add_column(col, cols[pivot[col.back()]], scratch);
        if (col.empty()) continue;
        const auto low = col.back();
        pivot[low] = static_cast<std::int32_t>(j);
        paired[low] = paired[j] = true;
        const double birth = filtered.cells[order[low]].second;
        const double death = filtered.cells[order[j]].second;
        const int d = filtered.cells[order[low]].first.dim();
        if (death > birth)
            out.by_dim[d].push_back({birth, death});
        else
            ++out.zero_length[d];
    }
    for (std::size_t j = 0; j < n; ++j)
        if (!paired[j]) {
            const int d = filtered.cells[order[j]].first.dim();
            out.by_dim[d].push_back({filtered.cells[order[j]].second, infinity});
        }
    for (auto& v : out.by_dim)
        std::sort(v.begin(), v.end(), [](const PersistencePair& a, const PersistencePair& b) {
            return a.birth != b.birth ? a.birth < b.birth : a.death < b.death;
        });
    return out;
}

}  // namespace zzp
