#pragma once

#include "spectra/lattices/enumerate.hpp"

namespace spectra::lattices {

/// One orthogonal summand: an integer basis expressed in coordinates of the
/// input basis, together with the induced Gram form.
struct Summand {
    std::vector<std::vector<Int>> basis_coords;
    GramMatrix gram;
};

struct OrthogonalDecomposition {
    std::vector<Summand> summands;
    Int norm_bound_used;
    int count() const { return static_cast<int>(summands.size()); }
};

/// Splits the lattice of an integer positive definite Gram into orthogonal
/// summands. A generating set of short vectors (norm bounded by the max
/// diagonal of a size-reduced Gram) is partitioned into connected components
/// of the non-orthogonality graph; if the vectors fail to span, the bound is
/// doubled, up to three retries, after which a std::runtime_error suggests a
/// larger norm bound.
OrthogonalDecomposition orthogonal_decompose(const GramMatrix& g);

}  // namespace spectra::lattices
