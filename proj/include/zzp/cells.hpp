#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "zzp/metric.hpp"

namespace zzp {

/// Sorted list of distinct vertices.
struct Simplex {
    std::vector<Index> vertices;

    Simplex() = default;
    /// Sorts; throws on repeated vertices or an empty list.
    explicit Simplex(std::vector<Index> v);
    Simplex(std::initializer_list<Index> v) : Simplex(std::vector<Index>(v)) {}

    int dim() const { return static_cast<int>(vertices.size()) - 1; }
    /// Codimension-one faces, in lexicographic order.
    std::vector<Simplex> facets() const;
    /// Every nonempty face, the simplex itself included.
    std::vector<Simplex> faces() const;

    friend auto operator<=>(const Simplex&, const Simplex&) = default;
    friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Product cell (left, right); left vertices come from one landmark set,
/// right vertices from another.
struct Bisimplex {
    Simplex left;
    Simplex right;

    int dim() const { return left.dim() + right.dim(); }
    std::vector<Bisimplex> facets() const;
    /// Every subcell (faces taken independently in each factor).
    std::vector<Bisimplex> faces() const;

    friend auto operator<=>(const Bisimplex&, const Bisimplex&) = default;
    friend bool operator==(const Bisimplex&, const Bisimplex&) = default;
};

std::ostream& operator<<(std::ostream& os, const Simplex& s);
std::ostream& operator<<(std::ostream& os, const Bisimplex& b);

/// Finite Z/2 chain: a set of cells of one dimension. Adding a cell twice
/// cancels it.
template <class Cell>
class Chain {
public:
    Chain() = default;
    /// Duplicates cancel in pairs.
    explicit Chain(std::vector<Cell> cells);
    Chain(std::initializer_list<Cell> cells) : Chain(std::vector<Cell>(cells)) {}

    bool empty() const { return cells_.empty(); }
    std::size_t size() const { return cells_.size(); }
    auto begin() const { return cells_.begin(); }
    auto end() const { return cells_.end(); }
    const std::vector<Cell>& cells() const { return cells_; }

    /// Dimension of the cells, or nullopt for the zero chain.
    /// Throws if the chain is inhomogeneous.
    std::optional<int> dimension() const;
    bool homogeneous() const;

    Chain& operator+=(const Chain& other);
    friend Chain operator+(Chain a, const Chain& b) { return a += b; }
    friend bool operator==(const Chain&, const Chain&) = default;

private:
    std::vector<Cell> cells_;
};

using SimplexChain = Chain<Simplex>;
using BisimplexChain = Chain<Bisimplex>;

SimplexChain boundary(const Simplex& s);
BisimplexChain boundary(const Bisimplex& b);
template <class Cell>
Chain<Cell> boundary(const Chain<Cell>& c);

/// Cells graded by dimension, each grade kept in lexicographic order.
template <class Cell>
class CellComplex {
public:
    CellComplex() = default;
    /// Deduplicates. Does not add missing faces; see is_face_closed().
    explicit CellComplex(std::vector<Cell> cells);

    int max_dim() const { return static_cast<int>(grades_.size()) - 1; }
    std::size_t size() const;
    std::size_t count(int dim) const;
    const std::vector<Cell>& cells(int dim) const;

    /// Position of the cell within its grade.
    std::optional<std::size_t> index_of(const Cell& c) const;
    bool contains(const Cell& c) const { return index_of(c).has_value(); }
    /// Every cell of `other` is also a cell of this complex.
    bool includes(const CellComplex& other) const;
    bool is_face_closed() const;

    /// Dump format: one cell per line, `dim: cell`.
    void write(std::ostream& os) const;

private:
    std::vector<std::vector<Cell>> grades_;
};

using SimplicialComplex = CellComplex<Simplex>;
using Bicomplex = CellComplex<Bisimplex>;

extern template class Chain<Simplex>;
extern template class Chain<Bisimplex>;
extern template class CellComplex<Simplex>;
extern template class CellComplex<Bisimplex>;

}  // namespace zzp
