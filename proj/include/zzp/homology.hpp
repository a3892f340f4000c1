#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <vector>

#include "zzp/cells.hpp"
#include "zzp/complexes.hpp"
#include "zzp/gf2.hpp"

namespace zzp {

/// Sparse Z/2 column, sorted row indices.
using Column = std::vector<std::uint32_t>;

/// target += source (mod 2).
void add_column(Column& target, const Column& source, Column& scratch);

/// Columns indexed by the p-cells, rows by the (p-1)-cells, in the complex's
/// lexicographic cell order.
template <class Cell>
std::vector<Column> boundary_matrix(const CellComplex<Cell>& complex, int p);

/// H_p of one complex over Z/2, with a chosen basis of cycle representatives.
///
/// Boundaries of (p+1)-cells are column-reduced once; the p-cycles come from
/// reducing ∂_p while tracking column operations. Unpaired zero columns give
/// the representatives. Any p-cycle can then be written in that basis by
/// reducing it against both tables.
template <class Cell>
class HomologyGroup {
public:
    HomologyGroup(std::shared_ptr<const CellComplex<Cell>> complex, int p);

    int dimension() const { return p_; }
    std::size_t rank() const { return reps_.size(); }
    const CellComplex<Cell>& complex() const { return *complex_; }
    const std::shared_ptr<const CellComplex<Cell>>& complex_ptr() const { return complex_; }

    /// Current basis of representatives.
    const std::vector<Chain<Cell>>& representatives() const { return reps_; }

    /// Coordinates of the class of z in the current basis; nullopt if z is
    /// not a cycle. Throws if z has cells outside the complex or of the wrong
    /// dimension.
    std::optional<Bits> coordinates(const Chain<Cell>& z) const;

    /// Throws std::invalid_argument if z is not a cycle.
    bool is_boundary(const Chain<Cell>& z) const;

    /// Replaces the basis: new_k = Σ_i combos[k][i] old_i. The combos must be
    /// linearly independent and rank() many.
    void rebase(const std::vector<Bits>& combos);

private:
    Column to_column(const Chain<Cell>& z) const;
    Chain<Cell> to_chain(const Column& c) const;

    std::shared_ptr<const CellComplex<Cell>> complex_;
    int p_;
    // reduced boundary columns of (p+1)-cells, keyed by pivot row
    std::vector<Column> bd_cols_;
    std::vector<std::int32_t> bd_pivot_;
    // cycle representatives keyed by their pivot (the cell that created them)
    std::vector<Column> rep_cols_;
    std::vector<std::int32_t> rep_pivot_;
    std::vector<Chain<Cell>> orig_reps_;
    // current basis expressed in the original representatives
    std::vector<Bits> basis_in_orig_;
    std::optional<Echelon> change_;
    std::vector<Chain<Cell>> reps_;
};

using SimplicialHomology = HomologyGroup<Simplex>;
using BicomplexHomology = HomologyGroup<Bisimplex>;

extern template class HomologyGroup<Simplex>;
extern template class HomologyGroup<Bisimplex>;

template <class Cell>
struct HomologyBasis {
    int dimension = 0;
    std::vector<Chain<Cell>> representatives;
    std::size_t rank() const { return representatives.size(); }
};

template <class Cell>
HomologyBasis<Cell> homology_basis(const CellComplex<Cell>& complex, int p);

template <class Cell>
bool is_boundary(const Chain<Cell>& z, const CellComplex<Cell>& complex, int p);

template <class Cell>
bool classes_equal(const Chain<Cell>& a, const Chain<Cell>& b, const CellComplex<Cell>& complex,
                   int p);

/// Betti numbers of dimensions 0..max_p.
template <class Cell>
std::vector<std::size_t> betti_numbers(const CellComplex<Cell>& complex, int max_p);

/// Rank of a sparse Z/2 matrix by Gaussian elimination.
std::size_t rank_z2(std::vector<Column> columns);

struct PersistencePair {
    double birth;
    double death;  // +inf for essential classes
};

struct PersistenceIntervals {
    /// by_dim[p] holds positive-length intervals, sorted by (birth, death).
    std::vector<std::vector<PersistencePair>> by_dim;
    /// Number of intervals of length zero dropped from by_dim, per dimension.
    std::vector<std::size_t> zero_length;

    const std::vector<PersistencePair>& intervals(int p) const;
};

/// Standard Z/2 persistence pairing. Throws if a face is missing or has a
/// larger value than its coface.
PersistenceIntervals persistent_homology(const FilteredComplex& filtered);

constexpr double infinity = std::numeric_limits<double>::infinity();

}  // namespace zzp
