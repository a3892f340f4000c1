#pragma once

#include <utility>
#include <vector>

#include "zzp/cells.hpp"
#include "zzp/metric.hpp"

namespace zzp {

/// Flag complex of the epsilon-neighbourhood graph on `subset`, truncated at
/// max_dim. Vertices keep their global indices, so A ⊆ B gives VR(A) ⊆ VR(B).
SimplicialComplex vietoris_rips(const Metric& metric, const IndexSet& subset, double epsilon,
                                int max_dim);

/// Simplices with their filtration value (the diameter, for Rips).
struct FilteredComplex {
    std::vector<std::pair<Simplex, double>> cells;
};

/// Rips filtration of `subset` up to scale max_epsilon.
FilteredComplex vietoris_rips_filtration(const Metric& metric, const IndexSet& subset,
                                         double max_epsilon, int max_dim);

/// Flag complex on the landmarks in which [a,b] is an edge iff some witness x
/// has max(d(x,a), d(x,b)) <= epsilon.
SimplicialComplex lazy_witness_complex(const Metric& metric, const IndexSet& witnesses,
                                       const IndexSet& landmarks, double epsilon, int max_dim);

struct WitnessOptions {
    /// Only points outside the landmark set(s) may witness.
    bool exclude_landmark_witnesses = false;
};

/// Weak witness complex W(X; L): simplices on L all of whose faces have a
/// weak witness among `witnesses`.
SimplicialComplex weak_witness_complex(const Metric& metric, const IndexSet& witnesses,
                                       const IndexSet& landmarks, int max_dim,
                                       WitnessOptions opts = {});

/// Weak biwitness complex W(X; L, M), truncated at total dimension max_total_dim.
Bicomplex biwitness_complex(const Metric& metric, const IndexSet& witnesses, const IndexSet& left,
                            const IndexSet& right, int max_total_dim, WitnessOptions opts = {});

enum class Side { left, right };

/// Keeps the terms whose `side` factor has dimension p and maps each to that
/// factor, mod 2. The chain must be homogeneous of dimension p.
SimplexChain project_chain(const BisimplexChain& chain, Side side, int p);

/// Projection of every cell of a bicomplex onto one factor.
SimplicialComplex project_cells(const Bicomplex& bc, Side side);

}  // namespace zzp
