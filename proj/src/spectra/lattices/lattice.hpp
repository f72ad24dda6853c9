#pragma once

#include "spectra/core/ratmat.hpp"

#include <vector>

namespace spectra::lattices {

/// Full-rank lattice basis. Column j of the matrix is basis vector j.
struct LatticeBasis {
    int n = 0;
    RatMat columns;  // n x n, column j = basis vector j

    /// Validates rank; throws std::domain_error on a singular or empty basis.
    static LatticeBasis from_matrix(RatMat m);
};

/// Symmetric positive definite Gram form Q = B^T B.
struct GramMatrix {
    int n = 0;
    RatMat entries;

    /// Checks symmetry and positive definiteness exactly (all leading
    /// principal minors > 0); throws std::domain_error naming the failing
    /// minor otherwise.
    static GramMatrix from_matrix(RatMat m);
};

GramMatrix gram_of_basis(const LatticeBasis& b);

/// Basis of the dual lattice {g : g . d in Z for all lattice vectors d},
/// i.e. the inverse transpose of the basis matrix.
LatticeBasis dual_basis(const LatticeBasis& b);

/// True iff all entries are integers and all diagonal entries are even.
bool is_even(const GramMatrix& g);

/// Smallest N >= 1 such that N * G^{-1} is an even integer matrix.
/// Requires an integer, even, positive definite Gram.
Int level(const GramMatrix& g);

/// mu0(N) = N * prod_{p prime, p | N} (1 + 1/p), exact. Requires N >= 1.
Rational mu0(const Int& n);

/// Milnor's basis matrix A_{4m} for the lattice E_{4m}: (1,1) entry 2,
/// unit diagonal in between, superdiagonal -1, last column all 1/2.
/// Every column is validated against the E_{4m} membership test
/// (coordinates all integer or all half-integer, coordinate sum even).
LatticeBasis milnor_basis(int m);

LatticeBasis e8_basis();
LatticeBasis e16_basis();
/// Block diagonal basis of two copies of A_8.
LatticeBasis e8xe8_basis();

}  // namespace spectra::lattices
