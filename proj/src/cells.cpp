#include "zzp/cells.hpp"

#include <stdexcept>

namespace zzp {

Simplex::Simplex(std::vector<Index> v) : vertices(std::move(v)) {
    if (vertices.empty()) throw std::invalid_argument("simplex: no vertices");
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw std::invalid_argument("simplex: repeated vertex");
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (vertices.size() < 2) return out;
    out.reserve(vertices.size());
    // dropping the last vertex first gives lexicographic order
    for (std::size_t drop = vertices.size(); drop-- > 0;) {
        Simplex f;
        f.vertices.reserve(vertices.size() - 1);
        for (std::size_t k = 0; k < vertices.size(); ++k)
            if (k != drop) f.vertices.push_back(vertices[k]);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<Simplex> Simplex::faces() const {
    std::vector<Simplex> out;
    const std::size_t n = vertices.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        Simplex f;
        for (std::size_t k = 0; k < n; ++k)
            if (mask & (std::size_t{1} << k)) f.vertices.push_back(vertices[k]);
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bisimplex> Bisimplex::facets() const {
    std::vector<Bisimplex> out;
    for (auto& f : left.facets()) out.push_back({std::move(f), right});
    for (auto& f : right.facets()) out.push_back({left, std::move(f)});
    return out;
}

std::vector<Bisimplex> Bisimplex::faces() const {
    std::vector<Bisimplex> out;
    const auto lf = left.faces();
    const auto rf = right.faces();
    for (const auto& a : lf)
        for (const auto& b : rf) out.push_back({a, b});
    std::sort(out.begin(), out.end());
    return out;
}

std::ostream& operator<<(std::ostream& os, const Simplex& s) {
    for (std::size_t k = 0; k < s.vertices.size(); ++k) os << (k ? " " : "") << s.vertices[k];
    return os;
}

std::ostream& operator<<(std::ostream& os, const Bisimplex& b) {
    return os << '(' << b.left << " | " << b.right << ')';
}

template <class Cell>
Chain<Cell>::Chain(std::vector<Cell> cells) : cells_(std::move(cells)) {
    std::sort(cells_.begin(), cells_.end());
    std::vector<Cell> kept;
    kept.reserve(cells_.size());
    for (std::size_t i = 0; i < cells_.size();) {
        std::size_t j = i;
        while (j < cells_.size() && cells_[j] == cells_[i]) ++j;
        if ((j - i) % 2 == 1) kept.push_back(std::move(cells_[i]));
        i = j;
    }
    cells_ = std::move(kept);
}

template <class Cell>
std::optional<int> Chain<Cell>::dimension() const {
    if (cells_.empty()) return std::nullopt;
    if (!homogeneous()) throw std::invalid_argument("chain is not homogeneous");
    return cells_.front().dim();
}

template <class Cell>
bool Chain<Cell>::homogeneous() const {
    return std::all_of(cells_.begin(), cells_.end(),
                       [&](const Cell& c) { return c.dim() == cells_.front().dim(); });
}

template <class Cell>
Chain<Cell>& Chain<Cell>::operator+=(const Chain& other) {
    std::vector<Cell> out;
    out.reserve(cells_.size() + other.cells_.size());
    std::set_symmetric_difference(cells_.begin(), cells_.end(), other.cells_.begin(),
                                  other.cells_.end(), std::back_inserter(out));
    cells_ = std::move(out);
    return *this;
}

SimplexChain boundary(const Simplex& s) { return SimplexChain(s.facets()); }

BisimplexChain boundary(const Bisimplex& b) { return BisimplexChain(b.facets()); }

template <class Cell>
Chain<Cell> boundary(const Chain<Cell>& c) {
    std::vector<Cell> all;
    for (const auto& cell : c) {
        auto f = cell.facets();
        all.insert(all.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
    }
    return Chain<Cell>(std::move(all));
}

template SimplexChain boundary(const SimplexChain&);
template BisimplexChain boundary(const BisimplexChain&);

template <class Cell>
CellComplex<Cell>::CellComplex(std::vector<Cell> cells) {
    for (auto& c : cells) {
        const int d = c.dim();
        if (d < 0) throw std::invalid_argument("complex: cell of negative dimension");
        if (static_cast<int>(grades_.size()) <= d) grades_.resize(d + 1);
        grades_[d].push_back(std::move(c));
    }
    for (auto& g : grades_) {
        std::sort(g.begin(), g.end());
        g.erase(std::unique(g.begin(), g.end()), g.end());
    }
}

template <class Cell>
std::size_t CellComplex<Cell>::size() const {
    std::size_t n = 0;
    for (const auto& g : grades_) n += g.size();
    return n;
}

template <class Cell>
std::size_t CellComplex<Cell>::count(int dim) const {
    if (dim < 0 || dim > max_dim()) return 0;
    return grades_[dim].size();
}

template <class Cell>
const std::vector<Cell>& CellComplex<Cell>::cells(int dim) const {
    static const std::vector<Cell> none;
    if (dim < 0 || dim > max_dim()) return none;
    return grades_[dim];
}

template <class Cell>
std::optional<std::size_t> CellComplex<Cell>::index_of(const Cell& c) const {
    const auto& g = cells(c.dim());
    auto it = std::lower_bound(g.begin(), g.end(), c);
    if (it == g.end() || !(*it == c)) return std::nullopt;
    return static_cast<std::size_t>(it - g.begin());
}

template <class Cell>
bool CellComplex<Cell>::includes(const CellComplex& other) const {
    for (int d = 0; d <= other.max_dim(); ++d) {
        const auto& mine = cells(d);
        const auto& theirs = other.cells(d);
        if (!std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end())) return false;
    }
    return true;
}

template <class Cell>
bool CellComplex<Cell>::is_face_closed() const {
    for (int d = 1; d <= max_dim(); ++d)
        for (const auto& c : grades_[d])
            for (const auto& f : c.facets())
                if (!contains(f)) return false;
    return true;
}

template <class Cell>
void CellComplex<Cell>::write(std::ostream& os) const {
    for (int d = 0; d <= max_dim(); ++d)
        for (const auto& c : grades_[d]) os << d << ": " << c << '\n';
}

template class Chain<Simplex>;
template class Chain<Bisimplex>;
template class CellComplex<Simplex>;
template class CellComplex<Bisimplex>;

}  // namespace zzp
